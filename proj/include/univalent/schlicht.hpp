#ifndef UNIVALENT_SCHLICHT_HPP
#define UNIVALENT_SCHLICHT_HPP

#include <string>
#include <variant>
#include <vector>

#include <univalent/series.hpp>

namespace univalent
{

// Tolerance for the c_0 = 0, c_1 = 1 normalization on construction.
inline constexpr double normalization_tolerance = 1e-10;

/// Truncated member of the class S: f(z) = z + a_2 z^2 + ... + a_N z^N.
///
/// Construction checks the normalization (within normalization_tolerance) and
/// then pins c_0 and c_1 to exactly 0 and 1. Univalence itself is not checked.
class ClassSFunction
{
public:
    explicit ClassSFunction(PowerSeries series, std::string label = "custom");

    const PowerSeries &series() const noexcept
    {
        return series_;
    }
    const std::string &label() const noexcept
    {
        return label_;
    }
    std::size_t order() const noexcept
    {
        return series_.order();
    }
    /// a_n, zero beyond the truncation order.
    Complex coefficient(std::size_t n) const
    {
        return n <= order() ? series_[n] : Complex{};
    }

    Complex operator()(Complex z) const
    {
        return ps_eval(series_, z);
    }

private:
    PowerSeries series_;
    std::string label_;
};

/// g(z) = z + b_0 + b_1/z + ... + b_N/z^N on |z| > 1.
struct SigmaFunction {
    Complex b0;
    std::vector<Complex> tail; // b_1 .. b_N

    Complex operator()(Complex z) const;
};

ClassSFunction koebe(std::size_t order);
ClassSFunction identity_function(std::size_t order);

struct Conjugation {
};
struct Rotation {
    double theta;
};
struct Dilation {
    double r;
};
struct DiskAutomorphism {
    Complex a;
};
using Transform = std::variant<Conjugation, Rotation, Dilation, DiskAutomorphism>;

std::string describe(const Transform &kind);

/// Elementary transformations preserving S:
///   conjugation        conj(f(conj z))
///   rotation(theta)    e^{-i theta} f(e^{i theta} z)
///   dilation(r)        f(r z) / r,  0 < r < 1
///   disk_automorphism  [f((z+a)/(1+conj(a) z)) - f(a)] / [(1-|a|^2) f'(a)],  |a| < 1
ClassSFunction transform(const ClassSFunction &f, const Transform &kind);

/// g(z) = 1/f(1/z). For f of order N the tail holds b_1 .. b_{N-2}.
SigmaFunction to_sigma(const ClassSFunction &f);
/// Inverse of to_sigma: f(u) = u / (1 + b_0 u + b_1 u^2 + ...), of order tail.size() + 2.
ClassSFunction from_sigma(const SigmaFunction &g);

/// h(z) = sqrt(f(z^2)), odd with h'(0) = 1, same order as f.
ClassSFunction odd_sqrt_transform(const ClassSFunction &f);

} // namespace univalent

#endif
