#include <univalent/schlicht.hpp>

#include <cmath>
#include <sstream>
#include <utility>

namespace univalent
{

ClassSFunction::ClassSFunction(PowerSeries series, std::string label)
    : series_(std::move(series)), label_(std::move(label))
{
    if (series_.order() < 1) {
        throw Error(Errc::NotNormalized, label_ + ": class-S series needs order >= 1");
    }
    if (std::abs(series_[0]) > normalization_tolerance || std::abs(series_[1] - 1.0) > normalization_tolerance) {
        std::ostringstream os;
        os << label_ << ": expected c0 = 0, c1 = 1, got c0 = " << series_[0] << ", c1 = " << series_[1];
        throw Error(Errc::NotNormalized, os.str());
    }
    std::vector<Complex> v(series_.coeffs().begin(), series_.coeffs().end());
    v[0] = 0.0;
    v[1] = 1.0;
    series_ = PowerSeries(std::move(v));
}

Complex SigmaFunction::operator()(Complex z) const
{
    const Complex inv = 1.0 / z;
    Complex acc{};
    for (std::size_t i = tail.size(); i-- > 0;) {
        acc = (acc + tail[i]) * inv;
    }
    return z + b0 + acc;
}

ClassSFunction koebe(std::size_t order)
{
    if (order < 1) {
        throw Error(Errc::ParamOutOfRange, "koebe needs order >= 1");
    }
    std::vector<Complex> v(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        v[n] = static_cast<double>(n);
    }
    return ClassSFunction(PowerSeries(std::move(v)), "koebe");
}

ClassSFunction identity_function(std::size_t order)
{
    return ClassSFunction(PowerSeries::identity(order), "identity");
}

std::string describe(const Transform &kind)
{
    std::ostringstream os;
    os.precision(17);
    std::visit(
        [&os](const auto &k) {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Conjugation>) {
                os << "conjugation";
            } else if constexpr (std::is_same_v<K, Rotation>) {
                os << "rotation(" << k.theta << ")";
            } else if constexpr (std::is_same_v<K, Dilation>) {
                os << "dilation(" << k.r << ")";
            } else {
                os << "disk_automorphism(" << k.a.real() << "," << k.a.imag() << ")";
            }
        },
        kind);
    return os.str();
}

namespace
{

// Coefficients of f(a + h) in powers of h (Taylor shift of the polynomial).
PowerSeries taylor_shift(const PowerSeries &f, Complex a)
{
    std::vector<Complex> c(f.coeffs().begin(), f.coeffs().end());
    const std::size_t n = c.size();
    // Repeated synthetic division by (x - a).
    for (std::size_t k = 0; k + 1 < n; ++k) {
        for (std::size_t i = n - 1; i > k; --i) {
            c[i - 1] += a * c[i];
        }
    }
    return PowerSeries(std::move(c));
}

ClassSFunction disk_automorphism(const ClassSFunction &f, Complex a)
{
    const std::size_t n = f.order();
    const double m = 1.0 - std::norm(a);
    // h(z) = (z + a)/(1 + conj(a) z) - a = m z / (1 + conj(a) z)
    std::vector<Complex> h(n + 1);
    Complex power = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        h[k] = m * power;
        power *= -std::conj(a);
    }
    const PowerSeries shifted = taylor_shift(f.series(), a);
    const PowerSeries composed = ps_compose(shifted, PowerSeries(std::move(h)));
    const Complex fa = shifted[0];
    const Complex dfa = shifted[1];
    if (std::abs(dfa) < unit_threshold) {
        throw Error(Errc::ParamOutOfRange, "f'(a) vanishes");
    }
    const PowerSeries centered = composed - PowerSeries::constant(n, fa);
    return ClassSFunction(centered.scaled(1.0 / (m * dfa)), f.label() + "|" + describe(Transform{DiskAutomorphism{a}}));
}

} // namespace

ClassSFunction transform(const ClassSFunction &f, const Transform &kind)
{
    const std::string label = f.label() + "|" + describe(kind);
    return std::visit(
        [&](const auto &k) -> ClassSFunction {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, Conjugation>) {
                return ClassSFunction(f.series().conjugated(), label);
            } else if constexpr (std::is_same_v<K, Rotation>) {
                const Complex e = std::polar(1.0, k.theta);
                return ClassSFunction(f.series().dilated(e).scaled(std::conj(e)), label);
            } else if constexpr (std::is_same_v<K, Dilation>) {
                if (!(k.r > 0.0 && k.r < 1.0)) {
                    throw Error(Errc::ParamOutOfRange, "dilation needs 0 < r < 1");
                }
                return ClassSFunction(f.series().dilated(k.r).scaled(1.0 / k.r), label);
            } else {
                if (!(std::abs(k.a) < 1.0)) {
                    throw Error(Errc::ParamOutOfRange, "disk automorphism needs |a| < 1");
                }
                return disk_automorphism(f, k.a);
            }
        },
        kind);
}

SigmaFunction to_sigma(const ClassSFunction &f)
{
    if (f.order() < 2) {
        throw Error(Errc::OrderOutOfRange, "to_sigma needs order >= 2");
    }
    // 1/f(1/z) = z * R(1/z) with R = u / f(u) = 1 + r_1 u + r_2 u^2 + ...
    const PowerSeries q = f.series().divided_by_z();
    const PowerSeries r = PowerSeries::constant(q.order(), 1.0) / q;
    SigmaFunction g;
    g.b0 = r[1];
    for (std::size_t n = 2; n <= r.order(); ++n) {
        g.tail.push_back(r[n]);
    }
    return g;
}

ClassSFunction from_sigma(const SigmaFunction &g)
{
    const std::size_t order = g.tail.size() + 1;
    std::vector<Complex> r(order + 1);
    r[0] = 1.0;
    r[1] = g.b0;
    for (std::size_t n = 0; n < g.tail.size(); ++n) {
        r[n + 2] = g.tail[n];
    }
    const PowerSeries rs(std::move(r));
    const PowerSeries q = PowerSeries::constant(order, 1.0) / rs;
    return ClassSFunction(q.times_z(), "from_sigma");
}

ClassSFunction odd_sqrt_transform(const ClassSFunction &f)
{
    // h(z) = z * sqrt(q(z^2)), q = f(u)/u; degrees up to N need q up to N - 1.
    const PowerSeries q = f.series().divided_by_z();
    const std::size_t n = q.order();
    std::vector<Complex> sq(n + 1);
    for (std::size_t m = 0; 2 * m <= n; ++m) {
        sq[2 * m] = q[m];
    }
    return ClassSFunction(series_sqrt(PowerSeries(std::move(sq))).times_z(), f.label() + "|odd_sqrt");
}

} // namespace univalent
