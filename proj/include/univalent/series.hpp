#ifndef UNIVALENT_SERIES_HPP
#define UNIVALENT_SERIES_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <json.hpp>

#include <univalent/error.hpp>

namespace univalent
{

using Complex = std::complex<double>;

// Threshold below which a leading coefficient is treated as zero by div and
// revert.
inline constexpr double unit_threshold = 1e-12;

// Default evaluation radius for class-S semantics.
inline constexpr double default_eval_radius = 0.99;

/// Truncated complex power series c_0 + c_1 z + ... + c_N z^N.
///
/// The truncation order N is part of the value: binary operations require
/// equal orders and never look past it. Instances are immutable.
class PowerSeries
{
public:
    /// Zero series of the given order.
    explicit PowerSeries(std::size_t order);
    /// Takes ownership of the coefficients; order = coeffs.size() - 1.
    /// Throws ParamOutOfRange on empty input or non-finite entries.
    explicit PowerSeries(std::vector<Complex> coeffs);

    static PowerSeries constant(std::size_t order, Complex c);
    /// The series z (zero when order == 0).
    static PowerSeries identity(std::size_t order);
    static PowerSeries monomial(std::size_t order, std::size_t degree, Complex c = 1.0);

    std::size_t order() const noexcept
    {
        return coeffs_.size() - 1;
    }
    const Complex &operator[](std::size_t n) const
    {
        return coeffs_.at(n);
    }
    std::span<const Complex> coeffs() const noexcept
    {
        return coeffs_;
    }

    /// Term-wise derivative. The result keeps the order; its top coefficient
    /// is zero because the input carries no information beyond degree N.
    PowerSeries derivative() const;
    PowerSeries scaled(Complex factor) const;
    /// Coefficients conjugated.
    PowerSeries conjugated() const;
    /// c_n -> c_n * lambda^n, i.e. the series of f(lambda z).
    PowerSeries dilated(Complex lambda) const;
    /// Truncate or zero-pad to a new order.
    PowerSeries with_order(std::size_t order) const;
    /// (f - c_0) / z as a series of order N - 1. Requires N >= 1.
    PowerSeries divided_by_z() const;
    /// z f as a series of order N + 1.
    PowerSeries times_z() const;

    friend bool operator==(const PowerSeries &, const PowerSeries &) = default;

private:
    std::vector<Complex> coeffs_;
};

enum class ArithOp { add, sub, mul, div };

/// Coefficient arithmetic at a common order. mul is the truncated Cauchy
/// product; div is long division and needs |b_0| >= unit_threshold.
PowerSeries ps_arith(const PowerSeries &a, const PowerSeries &b, ArithOp op);

PowerSeries operator+(const PowerSeries &a, const PowerSeries &b);
PowerSeries operator-(const PowerSeries &a, const PowerSeries &b);
PowerSeries operator*(const PowerSeries &a, const PowerSeries &b);
PowerSeries operator/(const PowerSeries &a, const PowerSeries &b);

enum class Transcendental { exp, log, sqrt };

/// exp needs c_0 = 0; log and sqrt need c_0 = 1 (principal branch).
/// exp uses n*beta_n = sum_{k<n} (n-k) alpha_{n-k} beta_k.
PowerSeries ps_transcendental(const PowerSeries &a, Transcendental fn);

PowerSeries series_exp(const PowerSeries &a);
PowerSeries series_log(const PowerSeries &a);
PowerSeries series_sqrt(const PowerSeries &a);

/// outer(inner(z)) truncated at the common order; inner must vanish at 0.
PowerSeries ps_compose(const PowerSeries &outer, const PowerSeries &inner);

/// Compositional inverse b with a(b(z)) = z, solved degree by degree.
PowerSeries ps_revert(const PowerSeries &a);

enum class EvalMode { polynomial, class_s };

/// Horner evaluation. In class_s mode |z| must not exceed r_max.
Complex ps_eval(const PowerSeries &a, Complex z, EvalMode mode = EvalMode::polynomial,
                double r_max = default_eval_radius);

// {"order": N, "coeffs": [[re, im], ...]}
nlohmann::json to_json(const PowerSeries &a);
PowerSeries series_from_json(const nlohmann::json &j);

} // namespace univalent

#endif
