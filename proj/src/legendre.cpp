#include <univalent/legendre.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace univalent
{

namespace
{

using boost::multiprecision::cpp_int;

cpp_int factorial(int n)
{
    cpp_int f = 1;
    for (int i = 2; i <= n; ++i) {
        f *= i;
    }
    return f;
}

cpp_int binomial(int n, int k)
{
    return factorial(n) / (factorial(k) * factorial(n - k));
}

void require_degree(int n)
{
    if (n < 0 || n > max_legendre_degree) {
        throw Error(Errc::DegreeTooLarge, "Legendre degree " + std::to_string(n) + " outside [0, 64]");
    }
}

} // namespace

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    while (coeffs_.size() > 1 && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
    if (coeffs_.empty()) {
        coeffs_.emplace_back(0);
    }
}

Rational RationalPoly::coefficient(int k) const
{
    return (k >= 0 && k <= degree()) ? coeffs_[static_cast<std::size_t>(k)] : Rational(0);
}

RationalPoly RationalPoly::derivative(int times) const
{
    std::vector<Rational> c = coeffs_;
    for (int t = 0; t < times; ++t) {
        if (c.size() <= 1) {
            return RationalPoly({Rational(0)});
        }
        std::vector<Rational> d(c.size() - 1);
        for (std::size_t k = 1; k < c.size(); ++k) {
            d[k - 1] = c[k] * static_cast<int>(k);
        }
        c = std::move(d);
    }
    return RationalPoly(std::move(c));
}

Rational RationalPoly::operator()(const Rational &x) const
{
    Rational acc = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * x + coeffs_[i];
    }
    return acc;
}

double RationalPoly::operator()(double x) const
{
    long double acc = 0.0L;
    const long double xl = x;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * xl + coeffs_[i].convert_to<long double>();
    }
    return static_cast<double>(acc);
}

Complex RationalPoly::operator()(Complex z) const
{
    std::complex<long double> acc = 0.0L;
    const std::complex<long double> zl(z.real(), z.imag());
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * zl + coeffs_[i].convert_to<long double>();
    }
    return {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
}

const LegendrePoly &legendre_poly(int n)
{
    require_degree(n);
    static const std::vector<LegendrePoly> table = [] {
        std::vector<LegendrePoly> t;
        t.reserve(max_legendre_degree + 1);
        t.push_back({0, RationalPoly({Rational(1)})});
        t.push_back({1, RationalPoly({Rational(0), Rational(1)})});
        for (int k = 1; k < max_legendre_degree; ++k) {
            const auto &pk = t[static_cast<std::size_t>(k)].poly;
            const auto &pkm1 = t[static_cast<std::size_t>(k - 1)].poly;
            std::vector<Rational> next(static_cast<std::size_t>(k + 2));
            for (int i = 0; i <= k; ++i) {
                next[static_cast<std::size_t>(i + 1)] += Rational(2 * k + 1) * pk.coefficient(i);
            }
            for (int i = 0; i <= k - 1; ++i) {
                next[static_cast<std::size_t>(i)] -= Rational(k) * pkm1.coefficient(i);
            }
            for (auto &c : next) {
                c /= (k + 1);
            }
            t.push_back({k + 1, RationalPoly(std::move(next))});
        }
        return t;
    }();
    return table[static_cast<std::size_t>(n)];
}

LegendrePoly legendre_rodrigues(int n)
{
    require_degree(n);
    // (x^2 - 1)^n = sum_j C(n,j) (-1)^{n-j} x^{2j}
    std::vector<Rational> c(static_cast<std::size_t>(2 * n + 1));
    for (int j = 0; j <= n; ++j) {
        Rational term(binomial(n, j));
        if ((n - j) % 2 != 0) {
            term = -term;
        }
        c[static_cast<std::size_t>(2 * j)] = term;
    }
    RationalPoly d = RationalPoly(std::move(c)).derivative(n);
    const Rational scale = Rational(1) / Rational(cpp_int(1) << n) / Rational(factorial(n));
    std::vector<Rational> scaled = d.coeffs();
    for (auto &q : scaled) {
        q *= scale;
    }
    return {n, RationalPoly(std::move(scaled))};
}

LegendrePoly legendre_explicit_sum(int n)
{
    require_degree(n);
    std::vector<Rational> c(static_cast<std::size_t>(n + 1));
    for (int s = 0; 2 * s <= n; ++s) {
        Rational term(factorial(2 * n - 2 * s),
                      (cpp_int(1) << n) * factorial(s) * factorial(n - s) * factorial(n - 2 * s));
        if (s % 2 != 0) {
            term = -term;
        }
        c[static_cast<std::size_t>(n - 2 * s)] = term;
    }
    return {n, RationalPoly(std::move(c))};
}

double factorial_ratio(int n, int m)
{
    double r = 1.0;
    for (int j = n - m + 1; j <= n + m; ++j) {
        r /= static_cast<double>(j);
    }
    return r;
}

double assoc_legendre(int n, int m, double x)
{
    require_degree(n);
    if (std::abs(m) > n) {
        throw Error(Errc::OrderOutOfRange, "|m| = " + std::to_string(std::abs(m)) + " > n = " + std::to_string(n));
    }
    if (!(std::abs(x) <= 1.0)) {
        throw Error(Errc::ParamOutOfRange, "assoc_legendre needs |x| <= 1");
    }
    const int am = std::abs(m);
    const double sign = (am % 2 == 0) ? 1.0 : -1.0;
    const double radial = std::pow(std::max(0.0, 1.0 - x * x), 0.5 * am);
    const double positive = sign * radial * legendre_poly(n).poly.derivative(am)(x);
    if (m >= 0) {
        return positive;
    }
    return sign * factorial_ratio(n, am) * positive;
}

double generating_partial_sum(double x, double t, int n_terms)
{
    if (!(std::abs(x) <= 1.0) || !(std::abs(t) < 1.0)) {
        throw Error(Errc::ParamOutOfRange, "generating_partial_sum needs |x| <= 1, |t| < 1");
    }
    if (n_terms < 0) {
        throw Error(Errc::ParamOutOfRange, "negative term count");
    }
    // Values by the recurrence in double; the exact table stops at degree 64.
    double acc = 1.0;
    double pm1 = 1.0;
    double p = x;
    double tn = 1.0;
    for (int n = 1; n <= n_terms; ++n) {
        tn *= t;
        acc += p * tn;
        const double next = ((2.0 * n + 1.0) * x * p - n * pm1) / (n + 1.0);
        pm1 = p;
        p = next;
    }
    return acc;
}

Complex schlafli_coeff(int n, Complex z, std::size_t nodes, double rho)
{
    require_degree(n);
    if (nodes < 512) {
        throw Error(Errc::ParamOutOfRange, "schlafli_coeff needs at least 512 nodes");
    }
    if (!(rho > 0.0)) {
        throw Error(Errc::ParamOutOfRange, "contour radius must be positive");
    }
    const double two_n = std::ldexp(1.0, n);
    Complex acc{};
    for (std::size_t j = 0; j < nodes; ++j) {
        const Complex e = std::polar(rho, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nodes));
        const Complex xi = z + e;
        acc += std::pow(xi * xi - 1.0, n) / (two_n * std::pow(e, n));
    }
    const Complex value = acc / static_cast<double>(nodes);
    const Complex exact = legendre_poly(n).poly(z);
    if (std::abs(value - exact) > 1e-6 * std::max(1.0, std::abs(exact))) {
        throw Error(Errc::QuadratureUnderresolved, "Schlafli quadrature off by " + std::to_string(std::abs(value - exact)));
    }
    return value;
}

double ode_residual(int n, double x)
{
    const auto &p = legendre_poly(n).poly;
    const RationalPoly d1 = p.derivative(1);
    const RationalPoly d2 = p.derivative(2);
    return (1.0 - x * x) * d2(x) - 2.0 * x * d1(x) + static_cast<double>(n) * (n + 1) * p(x);
}

double addition_theorem_residual(double theta1, double theta2, double phi, int n)
{
    const double c1 = std::cos(theta1);
    const double c2 = std::cos(theta2);
    const double arg = std::clamp(c1 * c2 + std::sin(theta1) * std::sin(theta2) * std::cos(phi), -1.0, 1.0);
    const auto &p = legendre_poly(n);
    const double lhs = p(arg);
    double rhs = p(c1) * p(c2);
    for (int k = 1; k <= n; ++k) {
        const double sign = (k % 2 == 0) ? 1.0 : -1.0;
        rhs += 2.0 * sign * assoc_legendre(n, -k, c1) * assoc_legendre(n, k, c2) * std::cos(k * phi);
    }
    return std::abs(lhs - rhs);
}

std::string to_string(const Rational &q)
{
    return q.str();
}

} // namespace univalent
