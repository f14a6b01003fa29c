#include <univalent/loewner.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <sstream>

namespace univalent
{

namespace
{

constexpr double unit_circle_tolerance = 1e-12;
constexpr double singular_denominator = 1e-6;
constexpr double time_difference_step = 1e-4;

void require_unit(Complex kappa)
{
    if (std::abs(std::abs(kappa) - 1.0) > unit_circle_tolerance) {
        std::ostringstream os;
        os << "driving value " << kappa << " is off the unit circle";
        throw Error(Errc::ParamOutOfRange, os.str());
    }
}

double parse_double(const std::string &s)
{
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception &) {
        throw Error(Errc::ParamOutOfRange, "not a number: '" + s + "'");
    }
    if (pos != s.size()) {
        throw Error(Errc::ParamOutOfRange, "not a number: '" + s + "'");
    }
    return v;
}

Complex koebe_derivative(Complex z)
{
    const Complex one_minus = 1.0 - z;
    return (1.0 + z) / (one_minus * one_minus * one_minus);
}

// d/dw of the radial right-hand side.
Complex loewner_velocity_derivative(Complex w, Complex kappa)
{
    const Complex d = 1.0 - kappa * w;
    return -(1.0 + 2.0 * kappa * w - kappa * kappa * w * w) / (d * d);
}

} // namespace

DrivingFunction::DrivingFunction(std::vector<double> times, std::vector<Complex> values)
    : times_(std::move(times)), values_(std::move(values))
{
    if (values_.empty() || times_.size() != values_.size()) {
        throw Error(Errc::ParamOutOfRange, "driving function needs matching, non-empty times and values");
    }
    for (std::size_t i = 1; i < times_.size(); ++i) {
        if (!(times_[i] > times_[i - 1])) {
            throw Error(Errc::ParamOutOfRange, "driving times must be strictly increasing");
        }
    }
    for (const auto &v : values_) {
        require_unit(v);
    }
}

DrivingFunction DrivingFunction::constant(Complex kappa)
{
    return DrivingFunction({0.0}, {kappa});
}

DrivingFunction DrivingFunction::sampled(std::vector<double> times, std::vector<Complex> values)
{
    return DrivingFunction(std::move(times), std::move(values));
}

DrivingFunction DrivingFunction::parse(const std::string &spec)
{
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw Error(Errc::ParamOutOfRange, "driving spec needs a kind prefix: '" + spec + "'");
    }
    const std::string kind = spec.substr(0, colon);
    const std::string body = spec.substr(colon + 1);
    if (kind == "const") {
        const auto comma = body.find(',');
        if (comma == std::string::npos) {
            return constant({parse_double(body), 0.0});
        }
        return constant({parse_double(body.substr(0, comma)), parse_double(body.substr(comma + 1))});
    }
    if (kind == "angle") {
        return constant(std::polar(1.0, parse_double(body)));
    }
    if (kind == "steps") {
        std::vector<double> times;
        std::vector<Complex> values;
        std::stringstream ss(body);
        std::string item;
        while (std::getline(ss, item, ';')) {
            const auto c = item.find(':');
            if (c == std::string::npos) {
                throw Error(Errc::ParamOutOfRange, "steps entries are <t>:<theta>");
            }
            times.push_back(parse_double(item.substr(0, c)));
            values.push_back(std::polar(1.0, parse_double(item.substr(c + 1))));
        }
        return sampled(std::move(times), std::move(values));
    }
    throw Error(Errc::ParamOutOfRange, "unknown driving kind '" + kind + "'");
}

Complex DrivingFunction::operator()(double t) const
{
    const auto it = std::upper_bound(times_.begin(), times_.end(), t);
    if (it == times_.begin()) {
        return values_.front();
    }
    return values_[static_cast<std::size_t>(std::distance(times_.begin(), it)) - 1];
}

std::vector<double> DrivingFunction::breakpoints(double s, double t) const
{
    std::vector<double> out;
    for (std::size_t i = 1; i < times_.size(); ++i) {
        if (times_[i] > s && times_[i] < t) {
            out.push_back(times_[i]);
        }
    }
    return out;
}

std::string DrivingFunction::describe() const
{
    std::ostringstream os;
    os.precision(17);
    if (values_.size() == 1) {
        os << "const:" << values_[0].real() << "," << values_[0].imag();
        return os.str();
    }
    os << "steps:";
    for (std::size_t i = 0; i < values_.size(); ++i) {
        os << (i ? ";" : "") << times_[i] << ":" << std::arg(values_[i]);
    }
    return os.str();
}

Complex koebe_value(Complex z)
{
    const Complex one_minus = 1.0 - z;
    return z / (one_minus * one_minus);
}

Complex koebe_inverse(Complex u)
{
    // u w^2 - (2u+1) w + u = 0 has reciprocal roots; the disk root is
    // 2u / ((2u+1) + s) with the sign of s = sqrt(4u+1) that maximizes the
    // denominator, which also avoids cancellation as u -> 0.
    const Complex b = 2.0 * u + 1.0;
    const Complex s = std::sqrt(4.0 * u + 1.0);
    const Complex den = (std::abs(b + s) >= std::abs(b - s)) ? b + s : b - s;
    if (den == Complex{}) {
        throw Error(Errc::BranchSelectionFailure, "degenerate quadratic in koebe_inverse");
    }
    const Complex w = 2.0 * u / den;
    if (!(std::abs(w) < 1.0)) {
        std::ostringstream os;
        os << "no root inside the disk for u = " << u;
        throw Error(Errc::BranchSelectionFailure, os.str());
    }
    return w;
}

Complex koebe_transition(double t, Complex z)
{
    if (!(t >= 0.0) || !(std::abs(z) < 1.0)) {
        throw Error(Errc::ParamOutOfRange, "koebe_transition needs t >= 0 and |z| < 1");
    }
    const Complex u = std::exp(-t) * koebe_value(z);
    const Complex w = koebe_inverse(u);
    if (std::abs(koebe_value(w) - u) > 1e-10 * std::max(1.0, std::abs(u))) {
        throw Error(Errc::BranchSelectionFailure, "k(w) does not reproduce e^{-t} k(z)");
    }
    return w;
}

PowerSeries koebe_transition_series(double t, std::size_t order)
{
    if (!(t >= 0.0)) {
        throw Error(Errc::ParamOutOfRange, "koebe_transition_series needs t >= 0");
    }
    // With s = (1 + w)/(1 - w), k(w) = (s^2 - 1)/4, so s_t^2 = 1 + e^{-t}(s_0^2 - 1).
    // Reverting k directly loses digits to Catalan-sized coefficients.
    std::vector<Complex> s0(order + 1, 2.0);
    s0[0] = 1.0;
    const PowerSeries s0s(std::move(s0));
    const double e = std::exp(-t);
    const PowerSeries one = PowerSeries::constant(order, 1.0);
    const PowerSeries st = series_sqrt((s0s * s0s).scaled(e) + one.scaled(1.0 - e));
    return (st - one) / (st + one);
}

Complex transition_velocity(Complex w)
{
    if (std::abs(1.0 + w) < unit_threshold) {
        throw Error(Errc::PoleAtMinusOne, "transition velocity has a pole at w = -1");
    }
    return (w * w - w) / (1.0 + w);
}

Complex loewner_velocity(Complex f, Complex kappa)
{
    const Complex d = 1.0 - kappa * f;
    if (std::abs(d) < singular_denominator) {
        std::ostringstream os;
        os << "|1 - kappa f| = " << std::abs(d) << " at f = " << f;
        throw Error(Errc::StepRejected, os.str());
    }
    return -f * (1.0 + kappa * f) / d;
}

FlowValue loewner_flow(const DrivingFunction &kappa, Complex z, double s, double t, double h)
{
    if (!(h > 0.0)) {
        throw Error(Errc::ParamOutOfRange, "step must be positive");
    }
    if (t < s) {
        throw Error(Errc::ParamOutOfRange, "loewner_flow integrates forward only");
    }
    std::vector<double> cuts{s};
    for (double b : kappa.breakpoints(s, t)) {
        cuts.push_back(b);
    }
    cuts.push_back(t);

    Complex w = z;
    Complex dw = 1.0;
    for (std::size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
        const double len = cuts[seg + 1] - cuts[seg];
        if (len <= 0.0) {
            continue;
        }
        const auto steps = static_cast<std::size_t>(std::ceil(len / h - 1e-9));
        const double dt = len / static_cast<double>(steps);
        const Complex k = kappa(0.5 * (cuts[seg] + cuts[seg + 1]));
        for (std::size_t i = 0; i < steps; ++i) {
            const Complex k1 = loewner_velocity(w, k);
            const Complex d1 = loewner_velocity_derivative(w, k) * dw;
            const Complex w2 = w + 0.5 * dt * k1;
            const Complex g2 = dw + 0.5 * dt * d1;
            const Complex k2 = loewner_velocity(w2, k);
            const Complex d2 = loewner_velocity_derivative(w2, k) * g2;
            const Complex w3 = w + 0.5 * dt * k2;
            const Complex g3 = dw + 0.5 * dt * d2;
            const Complex k3 = loewner_velocity(w3, k);
            const Complex d3 = loewner_velocity_derivative(w3, k) * g3;
            const Complex w4 = w + dt * k3;
            const Complex g4 = dw + dt * d3;
            const Complex k4 = loewner_velocity(w4, k);
            const Complex d4 = loewner_velocity_derivative(w4, k) * g4;
            w += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            dw += dt / 6.0 * (d1 + 2.0 * d2 + 2.0 * d3 + d4);
            if (!(std::abs(w) < 1.0)) {
                std::ostringstream os;
                os << "trajectory from z = " << z << " reached |f| = " << std::abs(w);
                throw Error(Errc::TrajectoryEscaped, os.str());
            }
        }
    }
    return {w, dw};
}

Complex Evolution::scaled(std::size_t i, std::size_t j) const
{
    return std::exp(times.at(i)) * values.at(i).at(j);
}

void Evolution::write_csv(std::ostream &os) const
{
    const auto old_precision = os.precision(17);
    os << "t,z_re,z_im,f_re,f_im,etf_re,etf_im\n";
    for (std::size_t i = 0; i < times.size(); ++i) {
        for (std::size_t j = 0; j < points.size(); ++j) {
            const Complex f = values[i][j];
            const Complex e = scaled(i, j);
            os << times[i] << ',' << points[j].real() << ',' << points[j].imag() << ',' << f.real() << ','
               << f.imag() << ',' << e.real() << ',' << e.imag() << '\n';
        }
    }
    os.precision(old_precision);
}

Evolution loewner_solve(const DrivingFunction &kappa, std::span<const Complex> grid, double horizon, double step,
                        std::size_t sample_every)
{
    if (!(step > 0.0) || step > 1e-2) {
        throw Error(Errc::ParamOutOfRange, "loewner_solve needs 0 < h <= 1e-2");
    }
    if (!(horizon >= 0.0) || horizon > 20.0) {
        throw Error(Errc::ParamOutOfRange, "loewner_solve needs 0 <= T <= 20");
    }
    for (const auto z : grid) {
        if (!(std::abs(z) < 1.0)) {
            throw Error(Errc::ParamOutOfRange, "grid points must lie in the open unit disk");
        }
    }
    sample_every = std::max<std::size_t>(sample_every, 1);

    // Global step grid; every kappa jump becomes a grid node.
    std::vector<double> nodes{0.0};
    {
        std::vector<double> cuts{0.0};
        for (double b : kappa.breakpoints(0.0, horizon)) {
            cuts.push_back(b);
        }
        cuts.push_back(horizon);
        for (std::size_t seg = 0; seg + 1 < cuts.size(); ++seg) {
            const double len = cuts[seg + 1] - cuts[seg];
            const auto steps = static_cast<std::size_t>(std::ceil(len / step - 1e-9));
            for (std::size_t i = 1; i <= steps; ++i) {
                nodes.push_back(i == steps ? cuts[seg + 1]
                                           : cuts[seg] + len * static_cast<double>(i) / static_cast<double>(steps));
            }
        }
    }

    Evolution ev;
    ev.points.assign(grid.begin(), grid.end());
    ev.horizon = horizon;
    ev.step = step;
    ev.driving = kappa.describe();

    std::vector<Complex> state(grid.begin(), grid.end());
    ev.times.push_back(0.0);
    ev.values.push_back(state);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
        for (auto &w : state) {
            // One step of the same fourth-order scheme.
            w = loewner_flow(kappa, w, nodes[i - 1], nodes[i], nodes[i] - nodes[i - 1] + 1e-15).value;
        }
        if (i % sample_every == 0 || i + 1 == nodes.size()) {
            ev.times.push_back(nodes[i]);
            ev.values.push_back(state);
        }
    }
    return ev;
}

PowerSeries fit_circle_series(std::span<const Complex> samples, double radius, std::size_t order)
{
    const std::size_t m = samples.size();
    if (m < order + 1) {
        throw Error(Errc::ParamOutOfRange, "not enough samples for the requested fit order");
    }
    std::vector<Complex> a(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
        Complex acc{};
        for (std::size_t j = 0; j < m; ++j) {
            const double angle = -2.0 * std::numbers::pi * static_cast<double>(n * j % m) / static_cast<double>(m);
            acc += samples[j] * std::polar(1.0, angle);
        }
        a[n] = acc / (static_cast<double>(m) * std::pow(radius, static_cast<double>(n)));
    }
    return PowerSeries(std::move(a));
}

LoewnerChain::LoewnerChain(Kind kind, double theta, DrivingFunction kappa, double horizon, double step)
    : kind_(kind), theta_(theta), kappa_(std::move(kappa)), horizon_(horizon), step_(step)
{
}

LoewnerChain LoewnerChain::koebe(double theta)
{
    return LoewnerChain(Kind::koebe, theta, DrivingFunction::constant(-std::polar(1.0, -theta)), 0.0, 0.0);
}

LoewnerChain LoewnerChain::trivial()
{
    return LoewnerChain(Kind::trivial, 0.0, DrivingFunction::constant(1.0), 0.0, 0.0);
}

LoewnerChain LoewnerChain::numeric(DrivingFunction kappa, double horizon, double step)
{
    if (!(horizon > 1.0) || horizon > 40.0 || !(step > 0.0) || step > 1e-2) {
        throw Error(Errc::ParamOutOfRange, "numeric chain needs 1 < horizon <= 40 and 0 < h <= 1e-2");
    }
    return LoewnerChain(Kind::numeric, 0.0, std::move(kappa), horizon, step);
}

std::string LoewnerChain::label() const
{
    std::ostringstream os;
    os.precision(17);
    switch (kind_) {
        case Kind::koebe:
            os << "koebe-chain(theta=" << theta_ << ")";
            break;
        case Kind::trivial:
            os << "trivial-chain";
            break;
        case Kind::numeric:
            os << "numeric-chain(" << kappa_.describe() << ",H=" << horizon_ << ",h=" << step_ << ")";
            break;
    }
    return os.str();
}

double LoewnerChain::horizon() const noexcept
{
    // Numeric chains keep a margin below the construction horizon so the
    // limit e^H phi(z, t, H) stays meaningful.
    return kind_ == Kind::numeric ? horizon_ - 1.0 : std::numeric_limits<double>::infinity();
}

void LoewnerChain::require_time(double t) const
{
    if (!(t >= 0.0) || t > horizon()) {
        throw Error(Errc::ParamOutOfRange, "time " + std::to_string(t) + " outside the chain horizon");
    }
}

Complex LoewnerChain::value(Complex z, double t) const
{
    switch (kind_) {
        case Kind::koebe: {
            const Complex e = std::polar(1.0, theta_);
            return std::exp(t) * std::conj(e) * koebe_value(e * z);
        }
        case Kind::trivial:
            return std::exp(t) * z;
        case Kind::numeric:
            // t may dip below 0 by the difference step; kappa is extended constantly.
            return std::exp(horizon_) * loewner_flow(kappa_, z, t, horizon_, step_).value;
    }
    return {};
}

Complex LoewnerChain::z_derivative(Complex z, double t) const
{
    switch (kind_) {
        case Kind::koebe:
            return std::exp(t) * koebe_derivative(std::polar(1.0, theta_) * z);
        case Kind::trivial:
            return std::exp(t);
        case Kind::numeric:
            return std::exp(horizon_) * loewner_flow(kappa_, z, t, horizon_, step_).z_derivative;
    }
    return {};
}

Complex LoewnerChain::t_derivative(Complex z, double t) const
{
    if (kind_ != Kind::numeric) {
        return value(z, t); // f_t = e^t g
    }
    const double d = time_difference_step;
    return (value(z, t + d) - value(z, t - d)) / (2.0 * d);
}

Complex LoewnerChain::transition(Complex z, double s, double t) const
{
    if (t < s) {
        throw Error(Errc::ParamOutOfRange, "transition needs s <= t");
    }
    switch (kind_) {
        case Kind::koebe: {
            const Complex e = std::polar(1.0, theta_);
            return std::conj(e) * koebe_transition(t - s, e * z);
        }
        case Kind::trivial:
            return std::exp(s - t) * z;
        case Kind::numeric:
            return loewner_flow(kappa_, z, s, t, step_).value;
    }
    return {};
}

PowerSeries LoewnerChain::series(double t, std::size_t order) const
{
    require_time(t);
    if (kind_ == Kind::numeric) {
        const std::size_t m = std::max(fit_nodes, 2 * (order + 1));
        std::vector<Complex> samples(m);
        for (std::size_t j = 0; j < m; ++j) {
            const Complex z = std::polar(fit_radius, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
            samples[j] = value(z, t);
        }
        return fit_circle_series(samples, fit_radius, order);
    }
    std::vector<Complex> c(order + 1);
    const double et = std::exp(t);
    if (kind_ == Kind::trivial) {
        if (order >= 1) {
            c[1] = et;
        }
    } else {
        for (std::size_t n = 1; n <= order; ++n) {
            c[n] = et * static_cast<double>(n) * std::polar(1.0, theta_ * static_cast<double>(n - 1));
        }
    }
    return PowerSeries(std::move(c));
}

PowerSeries LoewnerChain::t_derivative_series(double t, std::size_t order) const
{
    if (kind_ != Kind::numeric) {
        return series(t, order);
    }
    require_time(t);
    const double d = time_difference_step;
    const std::size_t m = std::max(fit_nodes, 2 * (order + 1));
    std::vector<Complex> samples(m);
    for (std::size_t j = 0; j < m; ++j) {
        const Complex z = std::polar(fit_radius, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(m));
        samples[j] = (value(z, t + d) - value(z, t - d)) / (2.0 * d);
    }
    return fit_circle_series(samples, fit_radius, order);
}

Complex herglotz_p(const LoewnerChain &chain, Complex z, double t)
{
    if (!(std::abs(z) < 1.0)) {
        throw Error(Errc::ParamOutOfRange, "herglotz_p needs |z| < 1");
    }
    if (!(t >= 0.0) || t > chain.horizon()) {
        throw Error(Errc::ParamOutOfRange, "herglotz_p time outside the chain horizon");
    }
    if (z == Complex{}) {
        if (chain.kind() != LoewnerChain::Kind::numeric) {
            return chain.t_derivative_series(t, 1)[1] / chain.series(t, 1)[1];
        }
        const double d = time_difference_step;
        const Complex a1 = chain.z_derivative(0.0, t);
        const Complex da1 = (chain.z_derivative(0.0, t + d) - chain.z_derivative(0.0, t - d)) / (2.0 * d);
        return da1 / a1;
    }
    const Complex denom = z * chain.z_derivative(z, t);
    if (std::abs(denom) < 1e-14) {
        throw Error(Errc::DerivativeUnderflow, "|z f'(z)| below 1e-14");
    }
    return chain.t_derivative(z, t) / denom;
}

PowerSeries herglotz_series(const LoewnerChain &chain, double t, std::size_t order)
{
    // p = (df/dt / z) / f'
    const PowerSeries f = chain.series(t, order + 1);
    const PowerSeries ft = chain.t_derivative_series(t, order + 1);
    const PowerSeries num = ft.divided_by_z();
    const PowerSeries den = f.derivative().with_order(order);
    return num / den;
}

ChainLogCoefficients chain_log_coeffs(const LoewnerChain &chain, double t, std::size_t n, std::size_t nodes,
                                      double radius)
{
    if (n == 0) {
        throw Error(Errc::ParamOutOfRange, "chain_log_coeffs needs N >= 1");
    }
    ChainLogCoefficients out;
    const double et = std::exp(t);

    const PowerSeries f = chain.series(t, n + 1);
    const PowerSeries logs = series_log(f.scaled(1.0 / et).divided_by_z());
    for (std::size_t k = 1; k <= n; ++k) {
        out.series_route.push_back(logs[k]);
    }

    // Cauchy route with a continuously tracked logarithm.
    std::vector<Complex> z(nodes);
    std::vector<Complex> l(nodes);
    double previous = 0.0;
    for (std::size_t j = 0; j <= nodes; ++j) {
        const std::size_t jj = j % nodes;
        const Complex zj = std::polar(radius, 2.0 * std::numbers::pi * static_cast<double>(jj) / static_cast<double>(nodes));
        const Complex principal = std::log(chain.value(zj, t) / (et * zj));
        double im = principal.imag();
        if (j > 0) {
            im += 2.0 * std::numbers::pi * std::round((previous - im) / (2.0 * std::numbers::pi));
            if (std::abs(im - previous) > 0.5 * std::numbers::pi) {
                throw Error(Errc::BranchTrackingFailure, "logarithm jumps between quadrature nodes");
            }
        }
        previous = im;
        if (j == nodes) {
            if (std::abs(im - l[0].imag()) > 0.5 * std::numbers::pi) {
                throw Error(Errc::BranchTrackingFailure, "logarithm winds around the circle");
            }
            break;
        }
        z[j] = zj;
        l[j] = {principal.real(), im};
    }
    for (std::size_t k = 1; k <= n; ++k) {
        Complex acc{};
        for (std::size_t j = 0; j < nodes; ++j) {
            acc += l[j] * std::pow(z[j], -static_cast<int>(k));
        }
        out.cauchy_route.push_back(acc / static_cast<double>(nodes));
    }
    for (std::size_t k = 0; k < n; ++k) {
        out.max_discrepancy = std::max(out.max_discrepancy, std::abs(out.series_route[k] - out.cauchy_route[k]));
    }
    return out;
}

BoundReport lipschitz_bound_check(const LoewnerChain &chain, Complex z, double s, double t,
                                  std::span<const double> u_values, double tolerance)
{
    if (!(0.0 <= s && s <= t) || t > chain.horizon()) {
        throw Error(Errc::ParamOutOfRange, "lipschitz_bound_check needs 0 <= s <= t <= horizon");
    }
    if (std::abs(z) > 0.9) {
        throw Error(Errc::ParamOutOfRange, "lipschitz_bound_check needs |z| <= 0.9");
    }
    BoundReport report("lipschitz:" + chain.label(), tolerance);
    const double r = std::abs(z);
    std::ostringstream tag;
    tag.precision(6);
    tag << std::fixed << "z=(" << z.real() << "," << z.imag() << ")/s=" << s << "/t=" << t;

    const double lhs = std::abs(chain.value(z, t) - chain.value(z, s));
    report.add(tag.str() + "/chain", lhs, 8.0 * r * (std::exp(t) - std::exp(s)) / std::pow(1.0 - r, 4));

    std::vector<double> us(u_values.begin(), u_values.end());
    if (us.empty()) {
        us.push_back(t);
    }
    for (const double u : us) {
        if (u < t || u > chain.horizon()) {
            throw Error(Errc::ParamOutOfRange, "transition time u must satisfy t <= u <= horizon");
        }
        const double lhs_u = std::abs(chain.transition(z, t, u) - chain.transition(z, s, u));
        std::ostringstream id;
        id.precision(6);
        id << std::fixed << tag.str() << "/transition/u=" << u;
        report.add(id.str(), lhs_u, 2.0 * r * (1.0 - std::exp(s - t)) / ((1.0 - r) * (1.0 - r)));
    }
    return report;
}

} // namespace univalent
