#include <univalent/series.hpp>

#include <cmath>
#include <limits>
#include <string>
#include <utility>

namespace univalent
{

namespace
{

bool finite(Complex c)
{
    return std::isfinite(c.real()) && std::isfinite(c.imag());
}

void require_same_order(const PowerSeries &a, const PowerSeries &b)
{
    if (a.order() != b.order()) {
        throw Error(Errc::OrderMismatch,
                    "orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
    }
}

} // namespace

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1, Complex{}) {}

PowerSeries::PowerSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw Error(Errc::ParamOutOfRange, "power series needs at least one coefficient");
    }
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        if (!finite(coeffs_[n])) {
            throw Error(Errc::ParamOutOfRange, "non-finite coefficient at degree " + std::to_string(n));
        }
    }
}

PowerSeries PowerSeries::constant(std::size_t order, Complex c)
{
    return monomial(order, 0, c);
}

PowerSeries PowerSeries::identity(std::size_t order)
{
    return monomial(order, 1, 1.0);
}

PowerSeries PowerSeries::monomial(std::size_t order, std::size_t degree, Complex c)
{
    std::vector<Complex> v(order + 1);
    if (degree <= order) {
        v[degree] = c;
    }
    return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::derivative() const
{
    std::vector<Complex> v(coeffs_.size());
    for (std::size_t n = 1; n < coeffs_.size(); ++n) {
        v[n - 1] = static_cast<double>(n) * coeffs_[n];
    }
    return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::scaled(Complex factor) const
{
    auto v = coeffs_;
    for (auto &c : v) {
        c *= factor;
    }
    return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::conjugated() const
{
    auto v = coeffs_;
    for (auto &c : v) {
        c = std::conj(c);
    }
    return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::dilated(Complex lambda) const
{
    auto v = coeffs_;
    Complex power = 1.0;
    for (auto &c : v) {
        c *= power;
        power *= lambda;
    }
    return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::with_order(std::size_t order) const
{
    std::vector<Complex> v(order + 1);
    for (std::size_t n = 0; n <= std::min(order, this->order()); ++n) {
        v[n] = coeffs_[n];
    }
    return PowerSeries(std::move(v));
}

PowerSeries PowerSeries::divided_by_z() const
{
    if (order() == 0) {
        throw Error(Errc::OrderOutOfRange, "cannot divide an order-0 series by z");
    }
    return PowerSeries(std::vector<Complex>(coeffs_.begin() + 1, coeffs_.end()));
}

PowerSeries PowerSeries::times_z() const
{
    std::vector<Complex> v(coeffs_.size() + 1);
    std::copy(coeffs_.begin(), coeffs_.end(), v.begin() + 1);
    return PowerSeries(std::move(v));
}

PowerSeries ps_arith(const PowerSeries &a, const PowerSeries &b, ArithOp op)
{
    require_same_order(a, b);
    const std::size_t n_max = a.order();
    std::vector<Complex> out(n_max + 1);
    switch (op) {
        case ArithOp::add:
            for (std::size_t n = 0; n <= n_max; ++n) {
                out[n] = a[n] + b[n];
            }
            break;
        case ArithOp::sub:
            for (std::size_t n = 0; n <= n_max; ++n) {
                out[n] = a[n] - b[n];
            }
            break;
        case ArithOp::mul:
            for (std::size_t n = 0; n <= n_max; ++n) {
                Complex acc{};
                for (std::size_t i = 0; i <= n; ++i) {
                    acc += a[i] * b[n - i];
                }
                out[n] = acc;
            }
            break;
        case ArithOp::div: {
            if (std::abs(b[0]) < unit_threshold) {
                throw Error(Errc::DivisionByNonUnit, "|b_0| = " + std::to_string(std::abs(b[0])));
            }
            const Complex inv = 1.0 / b[0];
            for (std::size_t n = 0; n <= n_max; ++n) {
                Complex acc = a[n];
                for (std::size_t i = 0; i < n; ++i) {
                    acc -= out[i] * b[n - i];
                }
                out[n] = acc * inv;
            }
            break;
        }
    }
    return PowerSeries(std::move(out));
}

PowerSeries operator+(const PowerSeries &a, const PowerSeries &b)
{
    return ps_arith(a, b, ArithOp::add);
}
PowerSeries operator-(const PowerSeries &a, const PowerSeries &b)
{
    return ps_arith(a, b, ArithOp::sub);
}
PowerSeries operator*(const PowerSeries &a, const PowerSeries &b)
{
    return ps_arith(a, b, ArithOp::mul);
}
PowerSeries operator/(const PowerSeries &a, const PowerSeries &b)
{
    return ps_arith(a, b, ArithOp::div);
}

PowerSeries series_exp(const PowerSeries &a)
{
    if (std::abs(a[0]) > unit_threshold) {
        throw Error(Errc::BranchPointAtOrigin, "exp requires c_0 = 0");
    }
    const std::size_t n_max = a.order();
    std::vector<Complex> beta(n_max + 1);
    beta[0] = 1.0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Complex acc{};
        for (std::size_t k = 0; k < n; ++k) {
            acc += static_cast<double>(n - k) * a[n - k] * beta[k];
        }
        beta[n] = acc / static_cast<double>(n);
    }
    return PowerSeries(std::move(beta));
}

PowerSeries series_log(const PowerSeries &a)
{
    if (std::abs(a[0] - 1.0) > unit_threshold) {
        throw Error(Errc::BranchPointAtOrigin, "log requires c_0 = 1");
    }
    // a' = a L'  =>  n a_n = sum_{k=1}^{n} k L_k a_{n-k}
    const std::size_t n_max = a.order();
    std::vector<Complex> l(n_max + 1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        Complex acc{};
        for (std::size_t k = 1; k < n; ++k) {
            acc += static_cast<double>(k) * l[k] * a[n - k];
        }
        l[n] = a[n] - acc / static_cast<double>(n);
    }
    return PowerSeries(std::move(l));
}

PowerSeries series_sqrt(const PowerSeries &a)
{
    if (std::abs(a[0] - 1.0) > unit_threshold) {
        throw Error(Errc::BranchPointAtOrigin, "sqrt requires c_0 = 1");
    }
    const std::size_t n_max = a.order();
    std::vector<Complex> s(n_max + 1);
    s[0] = 1.0;
    for (std::size_t n = 1; n <= n_max; ++n) {
        Complex acc{};
        for (std::size_t k = 1; k < n; ++k) {
            acc += s[k] * s[n - k];
        }
        s[n] = (a[n] - acc) / 2.0;
    }
    return PowerSeries(std::move(s));
}

PowerSeries ps_transcendental(const PowerSeries &a, Transcendental fn)
{
    switch (fn) {
        case Transcendental::exp:
            return series_exp(a);
        case Transcendental::log:
            return series_log(a);
        case Transcendental::sqrt:
            return series_sqrt(a);
    }
    throw Error(Errc::ParamOutOfRange, "unknown transcendental function");
}

PowerSeries ps_compose(const PowerSeries &outer, const PowerSeries &inner)
{
    require_same_order(outer, inner);
    if (std::abs(inner[0]) > unit_threshold) {
        throw Error(Errc::InnerNotVanishing, "inner series must vanish at the origin");
    }
    // Horner in the series ring: (((o_N) g + o_{N-1}) g + ...) + o_0.
    const std::size_t n_max = outer.order();
    PowerSeries acc = PowerSeries::constant(n_max, outer[n_max]);
    for (std::size_t i = n_max; i-- > 0;) {
        acc = acc * inner + PowerSeries::constant(n_max, outer[i]);
    }
    return acc;
}

PowerSeries ps_revert(const PowerSeries &a)
{
    const std::size_t n_max = a.order();
    if (n_max == 0 || std::abs(a[0]) > unit_threshold || std::abs(a[1]) < unit_threshold) {
        throw Error(Errc::NotInvertibleAtOrigin, "revert requires c_0 = 0 and c_1 != 0");
    }
    // powers[j][m] = [z^m] b(z)^j. For j >= 2 the degree-m entry only involves
    // b_1..b_{m-1}, so a_1 b_m is the single unknown at degree m.
    std::vector<std::vector<Complex>> powers(n_max + 1, std::vector<Complex>(n_max + 1));
    std::vector<Complex> b(n_max + 1);
    for (std::size_t m = 1; m <= n_max; ++m) {
        Complex rest{};
        for (std::size_t j = 2; j <= m; ++j) {
            Complex acc{};
            for (std::size_t i = 1; i + (j - 1) <= m; ++i) {
                acc += b[i] * powers[j - 1][m - i];
            }
            powers[j][m] = acc;
            rest += a[j] * acc;
        }
        const Complex target = (m == 1) ? Complex{1.0} : Complex{};
        b[m] = (target - rest) / a[1];
        powers[1][m] = b[m];
    }
    return PowerSeries(std::move(b));
}

Complex ps_eval(const PowerSeries &a, Complex z, EvalMode mode, double r_max)
{
    if (mode == EvalMode::class_s && std::abs(z) > r_max * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())) {
        throw Error(Errc::RadiusExceeded, "|z| = " + std::to_string(std::abs(z)) + " > " + std::to_string(r_max));
    }
    const auto c = a.coeffs();
    Complex acc{};
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * z + c[i];
    }
    return acc;
}

nlohmann::json to_json(const PowerSeries &a)
{
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto &c : a.coeffs()) {
        coeffs.push_back({c.real(), c.imag()});
    }
    return {{"order", a.order()}, {"coeffs", std::move(coeffs)}};
}

PowerSeries series_from_json(const nlohmann::json &j)
{
    try {
        const auto order = j.at("order").get<std::size_t>();
        const auto &arr = j.at("coeffs");
        if (arr.size() != order + 1) {
            throw Error(Errc::ParamOutOfRange, "coeffs length does not match order");
        }
        std::vector<Complex> v;
        v.reserve(arr.size());
        for (const auto &c : arr) {
            if (c.is_number()) {
                v.emplace_back(c.get<double>(), 0.0);
            } else {
                v.emplace_back(c.at(0).get<double>(), c.at(1).get<double>());
            }
        }
        return PowerSeries(std::move(v));
    } catch (const nlohmann::json::exception &e) {
        throw Error(Errc::ParamOutOfRange, std::string("malformed series JSON: ") + e.what());
    }
}

} // namespace univalent
