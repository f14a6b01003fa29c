#ifndef UNIVALENT_LEGENDRE_HPP
#define UNIVALENT_LEGENDRE_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <univalent/series.hpp>

namespace univalent
{

using Rational = boost::multiprecision::cpp_rational;

inline constexpr int max_legendre_degree = 64;

/// Polynomial with exact rational coefficients, lowest degree first.
class RationalPoly
{
public:
    RationalPoly() = default;
    explicit RationalPoly(std::vector<Rational> coeffs);

    int degree() const noexcept
    {
        return static_cast<int>(coeffs_.size()) - 1;
    }
    const std::vector<Rational> &coeffs() const noexcept
    {
        return coeffs_;
    }
    Rational coefficient(int k) const;

    RationalPoly derivative(int times = 1) const;
    Rational operator()(const Rational &x) const;
    double operator()(double x) const;
    Complex operator()(Complex z) const;

    friend bool operator==(const RationalPoly &, const RationalPoly &) = default;

private:
    std::vector<Rational> coeffs_;
};

/// P_n with exact coefficients; P_n(1) = 1, parity of n.
struct LegendrePoly {
    int degree = 0;
    RationalPoly poly;

    double operator()(double x) const
    {
        return poly(x);
    }
};

/// P_n from Bonnet's recurrence (n+1) P_{n+1} = (2n+1) x P_n - n P_{n-1}.
/// The table up to max_legendre_degree is built once and shared.
const LegendrePoly &legendre_poly(int n);

/// P_n = (1/(2^n n!)) d^n/dx^n (x^2 - 1)^n, built independently of the recurrence.
LegendrePoly legendre_rodrigues(int n);

/// P_n from sum_s (-1)^s (2n-2s)! / (2^n s! (n-s)! (n-2s)!) x^{n-2s}.
LegendrePoly legendre_explicit_sum(int n);

/// Associated Legendre function with the Condon-Shortley phase:
///   P_n^m(x) = (-1)^m (1-x^2)^{m/2} d^m/dx^m P_n(x),  m >= 0,
///   P_n^{-m} = (-1)^m (n-m)!/(n+m)! P_n^m.
double assoc_legendre(int n, int m, double x);

/// (n-m)!/(n+m)! as a double, 0 <= m <= n.
double factorial_ratio(int n, int m);

/// sum_{n=0}^{N} P_n(x) t^n.
double generating_partial_sum(double x, double t, int n_terms);

/// (1/2 pi i) oint (xi^2-1)^n / (2^n (xi-z)^{n+1}) dxi on |xi - z| = rho by the
/// trapezoid rule. Throws QuadratureUnderresolved when the result disagrees
/// with the exact polynomial by more than 1e-6.
Complex schlafli_coeff(int n, Complex z, std::size_t nodes = 512, double rho = 1.0);

/// (1-x^2) P_n'' - 2x P_n' + n(n+1) P_n evaluated at x.
double ode_residual(int n, double x);

/// |P_n(cos a cos b + sin a sin b cos phi)
///   - [P_n(cos a) P_n(cos b) + 2 sum_{k=1}^{n} (-1)^k P_n^{-k}(cos a) P_n^k(cos b) cos(k phi)]|.
double addition_theorem_residual(double theta1, double theta2, double phi, int n);

/// "-1/2" style rendering of an exact rational.
std::string to_string(const Rational &q);

} // namespace univalent

#endif
