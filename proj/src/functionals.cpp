#include <univalent/functionals.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

namespace univalent
{

namespace
{

std::string point_id(Complex z)
{
    std::ostringstream os;
    os.precision(6);
    os << std::fixed << "z=(" << z.real() << "," << z.imag() << ")";
    return os.str();
}

std::string index_id(const char *prefix, std::size_t n)
{
    std::ostringstream os;
    os << prefix;
    os.width(3);
    os.fill('0');
    os << n;
    return os.str();
}

} // namespace

double area_sum(const SigmaFunction &g, std::size_t n_terms)
{
    if (n_terms > g.tail.size()) {
        throw Error(Errc::OrderOutOfRange, "area_sum: only " + std::to_string(g.tail.size()) + " coefficients available");
    }
    double acc = 0.0;
    for (std::size_t n = 1; n <= n_terms; ++n) {
        acc += static_cast<double>(n) * std::norm(g.tail[n - 1]);
    }
    return acc;
}

BoundReport coefficient_report(const ClassSFunction &f, std::size_t n_max, double tolerance)
{
    if (n_max > f.order()) {
        throw Error(Errc::OrderOutOfRange, "coefficient_report beyond truncation order");
    }
    BoundReport report("coefficients:" + f.label(), tolerance);
    for (std::size_t n = 2; n <= n_max; ++n) {
        const double a = std::abs(f.coefficient(n));
        report.add(index_id("bieberbach/n=", n), a, static_cast<double>(n));
        report.add(index_id("littlewood/n=", n), a, std::numbers::e * static_cast<double>(n));
    }
    return report;
}

double integral_mean(const ClassSFunction &f, double p, double r, std::size_t nodes, double r_max)
{
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw Error(Errc::ParamOutOfRange, "integral_mean needs 0 < p < inf");
    }
    if (!(r > 0.0) || r > r_max) {
        throw Error(Errc::RadiusExceeded, "integral_mean radius " + std::to_string(r));
    }
    if (nodes < 256) {
        throw Error(Errc::ParamOutOfRange, "integral_mean needs at least 256 nodes");
    }
    double acc = 0.0;
    for (std::size_t j = 0; j < nodes; ++j) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nodes);
        acc += std::pow(std::abs(ps_eval(f.series(), std::polar(r, theta), EvalMode::class_s, r_max)), p);
    }
    return std::pow(acc / static_cast<double>(nodes), 1.0 / p);
}

BoundReport littlewood_report(const ClassSFunction &f, std::span<const std::size_t> indices, std::size_t nodes,
                              double tolerance)
{
    BoundReport report("littlewood:" + f.label(), tolerance);
    for (const std::size_t n : indices) {
        if (n < 2 || n > f.order()) {
            throw Error(Errc::OrderOutOfRange, "littlewood index " + std::to_string(n));
        }
        const double nd = static_cast<double>(n);
        const double r = 1.0 - 1.0 / nd;
        const double m1 = integral_mean(f, 1.0, r, nodes, r);
        const double cauchy = m1 / std::pow(r, nd);
        const double optimum = 1.0 / ((1.0 - r) * std::pow(r, nd - 1.0));
        const double closed = nd * std::pow(1.0 + 1.0 / (nd - 1.0), nd - 1.0);
        const std::string tag = index_id("n=", n);
        report.add(tag + "/M1<=r/(1-r)", m1, r / (1.0 - r));
        report.add(tag + "/|a_n|<=M1/r^n", std::abs(f.coefficient(n)), cauchy);
        report.add(tag + "/M1/r^n<=optimum", cauchy, optimum);
        report.add_verdict(tag + "/optimum==n(1+1/(n-1))^(n-1)", optimum, closed,
                           std::abs(optimum - closed) <= tolerance * closed);
        report.add(tag + "/optimum<e*n", closed, std::numbers::e * nd);
    }
    return report;
}

BoundReport pointwise_bounds_check(const ClassSFunction &f, std::span<const Complex> grid, double rel_tolerance,
                                   double r_max)
{
    BoundReport report("pointwise:" + f.label(), rel_tolerance);
    const PowerSeries d1 = f.series().derivative();
    const PowerSeries d2 = d1.derivative();
    auto check = [&](const std::string &id, double lhs, double rhs) {
        const double slack = rel_tolerance * std::max(1.0, std::abs(rhs));
        report.add_verdict(id, lhs, rhs, std::isfinite(lhs) && lhs <= rhs + slack);
    };
    for (const Complex z : grid) {
        const double r = std::abs(z);
        if (r == 0.0) {
            continue;
        }
        const Complex fz = ps_eval(f.series(), z, EvalMode::class_s, r_max);
        const Complex f1 = ps_eval(d1, z, EvalMode::class_s, r_max);
        const Complex f2 = ps_eval(d2, z, EvalMode::class_s, r_max);
        const std::string id = point_id(z);

        check(id + "/distortion_lower", (1.0 - r) / std::pow(1.0 + r, 3), std::abs(f1));
        check(id + "/distortion_upper", std::abs(f1), (1.0 + r) / std::pow(1.0 - r, 3));
        check(id + "/growth_lower", r / ((1.0 + r) * (1.0 + r)), std::abs(fz));
        check(id + "/growth_upper", std::abs(fz), r / ((1.0 - r) * (1.0 - r)));
        const double q = std::abs(z * f1 / fz);
        check(id + "/zf'/f_lower", (1.0 - r) / (1.0 + r), q);
        check(id + "/zf'/f_upper", q, (1.0 + r) / (1.0 - r));
        const double centre = 2.0 * r * r / (1.0 - r * r);
        check(id + "/zf''/f'_disk", std::abs(z * f2 / f1 - centre), 4.0 * r / (1.0 - r * r));
    }
    return report;
}

std::vector<double> robertson_sums(const ClassSFunction &f, std::size_t n)
{
    if (n == 0 || 2 * n - 1 > f.order()) {
        throw Error(Errc::OrderOutOfRange, "robertson_sums needs 2n-1 <= order");
    }
    const ClassSFunction h = odd_sqrt_transform(f);
    std::vector<double> sums(n);
    double acc = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        acc += std::norm(h.coefficient(2 * k - 1));
        sums[k - 1] = acc;
    }
    return sums;
}

LogCoefficients log_coefficients(const ClassSFunction &f, std::size_t n)
{
    if (n == 0 || n >= f.order()) {
        throw Error(Errc::OrderOutOfRange, "log_coefficients needs 1 <= N < order");
    }
    const PowerSeries l = series_log(f.series().divided_by_z());
    LogCoefficients out{{}, f.label()};
    out.gamma.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        out.gamma.push_back(0.5 * l[k]);
    }
    return out;
}

MilinValue milin_functional(std::span<const Complex> gamma, std::size_t n)
{
    if (n > gamma.size()) {
        throw Error(Errc::OrderOutOfRange, "milin_functional needs n <= #gamma");
    }
    MilinValue v;
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t k = 1; k <= m; ++k) {
            const double kd = static_cast<double>(k);
            v.milin += kd * std::norm(gamma[k - 1]) - 1.0 / kd;
        }
    }
    for (std::size_t k = 1; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        const double ck2 = 4.0 * std::norm(gamma[k - 1]);
        v.weinstein_form += (4.0 / kd - kd * ck2) * static_cast<double>(n - k + 1);
    }
    return v;
}

MilinValue milin_functional(const ClassSFunction &f, std::size_t n)
{
    const auto lc = log_coefficients(f, n);
    return milin_functional(lc.gamma, n);
}

LebedevMilin lebedev_milin_check(std::span<const Complex> alpha, std::size_t n)
{
    if (n > alpha.size()) {
        throw Error(Errc::OrderOutOfRange, "lebedev_milin_check needs n <= #alpha");
    }
    std::vector<Complex> a(n + 1);
    for (std::size_t k = 1; k <= n; ++k) {
        a[k] = alpha[k - 1];
    }
    const PowerSeries beta = series_exp(PowerSeries(std::move(a)));
    LebedevMilin out;
    for (std::size_t k = 0; k <= n; ++k) {
        out.lhs += std::norm(beta[k]);
    }
    double inner = 0.0;
    for (std::size_t m = 1; m <= n; ++m) {
        for (std::size_t k = 1; k <= m; ++k) {
            const double kd = static_cast<double>(k);
            inner += kd * std::norm(alpha[k - 1]) - 1.0 / kd;
        }
    }
    double weighted = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double kd = static_cast<double>(k);
        weighted += static_cast<double>(n + 1 - k) * (kd * std::norm(alpha[k - 1]) - 1.0 / kd);
    }
    const double np1 = static_cast<double>(n + 1);
    out.exponent = inner / np1;
    out.exponent_weighted = weighted / np1;
    out.rhs = np1 * std::exp(out.exponent);
    return out;
}

} // namespace univalent
