#include "suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "registry.hpp"

#include <univalent/functionals.hpp>
#include <univalent/legendre.hpp>
#include <univalent/loewner.hpp>
#include <univalent/sampling.hpp>
#include <univalent/weinstein.hpp>

namespace univalent::cli
{

namespace
{

constexpr std::size_t boundary_order = 512;
constexpr std::size_t angles_per_radius = 16;

std::string tag(const std::string &prefix, std::size_t i)
{
    std::ostringstream os;
    os << prefix;
    os.width(4);
    os.fill('0');
    os << i;
    return os.str();
}

std::string real_tag(const std::string &prefix, double v)
{
    std::ostringstream os;
    os.precision(3);
    os << std::fixed << prefix << v;
    return os.str();
}

// Suites use independent streams so that running one alone or inside "all"
// gives the same cases.
std::mt19937_64 stream(const SuiteConfig &c, std::uint64_t salt)
{
    std::seed_seq seq{static_cast<std::uint32_t>(c.seed), static_cast<std::uint32_t>(c.seed >> 32),
                      static_cast<std::uint32_t>(salt)};
    return std::mt19937_64(seq);
}

ClassSFunction subject(const SuiteConfig &c, std::size_t order)
{
    return make_function(c.function, order);
}

// Closed forms are rebuilt at a high order for evaluations near the boundary.
ClassSFunction boundary_subject(const SuiteConfig &c)
{
    return is_closed_form(c.function) ? make_function(c.function, std::max(c.order, boundary_order))
                                      : make_function(c.function, c.order);
}

std::vector<Complex> polar_grid(const std::vector<double> &radii)
{
    std::vector<Complex> pts;
    for (const double r : radii) {
        for (std::size_t j = 0; j < angles_per_radius; ++j) {
            pts.push_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / angles_per_radius));
        }
    }
    return pts;
}

BoundReport area_suite(const SuiteConfig &c)
{
    BoundReport rep("area", c.tolerance);
    const auto f = subject(c, c.order);
    const auto g = to_sigma(f);
    rep.add(c.function + "/sum", area_sum(g, g.tail.size()), 1.0);

    auto rng = stream(c, 1);
    const std::size_t order = std::min<std::size_t>(c.order, 32);
    for (std::size_t i = 0; i < 50; ++i) {
        const auto gi = to_sigma(random_schlicht(rng, order));
        rep.add(tag("random/", i), area_sum(gi, gi.tail.size()), 1.0);
    }
    return rep;
}

BoundReport bounds_suite(const SuiteConfig &c)
{
    BoundReport rep("bounds", c.tolerance);
    const auto f = subject(c, c.order);
    rep.merge(coefficient_report(f, f.order(), c.tolerance), c.function + "/");
    const double r_max = *std::max_element(c.radii.begin(), c.radii.end());
    const auto grid = polar_grid(c.radii);
    rep.merge(pointwise_bounds_check(boundary_subject(c), grid, c.tolerance, r_max), c.function + "/");

    auto rng = stream(c, 2);
    for (std::size_t i = 0; i < 10; ++i) {
        const auto fi = random_schlicht(rng, 128);
        rep.merge(coefficient_report(fi, fi.order(), c.tolerance), tag("random/", i) + "/");
        rep.merge(pointwise_bounds_check(fi, grid, c.tolerance, r_max), tag("random/", i) + "/");
    }
    return rep;
}

BoundReport littlewood_suite(const SuiteConfig &c)
{
    BoundReport rep("littlewood", 1e-8);
    std::vector<std::size_t> idx{4, 8, 16};
    if (c.n) {
        idx = {static_cast<std::size_t>(*c.n)};
    }
    rep.merge(littlewood_report(boundary_subject(c), idx, c.quadrature, 1e-8), c.function + "/");
    return rep;
}

BoundReport robertson_suite(const SuiteConfig &c)
{
    BoundReport rep("robertson", c.tolerance);
    const auto f = subject(c, c.order);
    const std::size_t cap = (f.order() + 1) / 2;
    const std::size_t n = c.n ? std::min<std::size_t>(static_cast<std::size_t>(*c.n), cap) : std::min<std::size_t>(30, cap);
    const auto s = robertson_sums(f, n);
    for (std::size_t k = 1; k <= n; ++k) {
        rep.add(tag(c.function + "/S/n=", k), s[k - 1], static_cast<double>(k));
    }
    auto rng = stream(c, 3);
    for (std::size_t i = 0; i < 20; ++i) {
        const auto si = robertson_sums(random_schlicht(rng, 41), 21);
        for (std::size_t k = 1; k <= 21; ++k) {
            rep.add(tag(tag("random/", i) + "/S/n=", k), si[k - 1], static_cast<double>(k));
        }
    }
    return rep;
}

BoundReport milin_suite(const SuiteConfig &c)
{
    BoundReport rep("milin", c.tolerance);
    const auto f = subject(c, c.order);
    const std::size_t n = c.n ? static_cast<std::size_t>(*c.n) : std::min<std::size_t>(30, f.order() - 1);
    for (std::size_t m = 1; m <= n; ++m) {
        const auto v = milin_functional(f, m);
        rep.add(tag(c.function + "/milin/n=", m), v.milin, 0.0);
        rep.add_verdict(tag(c.function + "/weinstein-form/n=", m), v.weinstein_form, -4.0 * v.milin,
                        std::abs(v.weinstein_form + 4.0 * v.milin) <= 1e-10 * std::max(1.0, std::abs(v.milin)));
    }
    auto rng = stream(c, 4);
    for (std::size_t i = 0; i < 100; ++i) {
        const auto v = milin_functional(random_schlicht(rng, 21), 20);
        rep.add(tag("random/", i) + "/milin/n=20", v.milin, 0.0);
    }
    return rep;
}

BoundReport lebedev_milin_suite(const SuiteConfig &c)
{
    BoundReport rep("lebedev-milin", c.tolerance);
    const int n_max = c.n.value_or(16);
    auto rng = stream(c, 5);
    std::uniform_int_distribution<int> degree(1, n_max);
    for (std::size_t i = 0; i < 1000; ++i) {
        const auto n = static_cast<std::size_t>(degree(rng));
        const auto alpha = random_alpha(rng, n, 2.0);
        const auto v = lebedev_milin_check(alpha, n);
        rep.add_verdict(tag("random/", i), v.lhs, v.rhs, v.lhs <= v.rhs * (1.0 + 1e-12) + c.tolerance);
    }
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (std::size_t i = 0; i < 5; ++i) {
        const Complex gamma = std::polar(1.0, i == 0 ? 0.0 : angle(rng));
        const auto n = static_cast<std::size_t>(n_max);
        std::vector<Complex> alpha(n);
        for (std::size_t k = 1; k <= n; ++k) {
            alpha[k - 1] = std::pow(gamma, static_cast<double>(k)) / static_cast<double>(k);
        }
        const auto v = lebedev_milin_check(alpha, n);
        const double target = static_cast<double>(n + 1);
        rep.add_verdict(tag("equality/", i), v.lhs, v.rhs,
                        std::abs(v.lhs - target) <= 1e-10 && std::abs(v.rhs - target) <= 1e-10);
    }
    return rep;
}

BoundReport legendre_suite(const SuiteConfig &c)
{
    BoundReport rep("legendre", 0.0);
    const int n_max = c.n.value_or(10);
    const int exact_max = std::max(n_max, 20);
    for (int n = 0; n <= exact_max; ++n) {
        const bool same = legendre_poly(n).poly == legendre_rodrigues(n).poly &&
                          legendre_poly(n).poly == legendre_explicit_sum(n).poly;
        rep.add_verdict(tag("exact/n=", static_cast<std::size_t>(n)), same ? 0.0 : 1.0, 0.0, same);
        const double schlafli = std::abs(schlafli_coeff(n, 0.37, std::max<std::size_t>(c.quadrature, 512)) -
                                         legendre_poly(n)(0.37));
        rep.add(tag("schlafli/n=", static_cast<std::size_t>(n)), schlafli, 1e-8);
    }
    for (const double x : {-0.9, -0.3, 0.0, 0.3, 0.9}) {
        for (const double t : {0.1, 0.5}) {
            const double closed = 1.0 / std::sqrt(1.0 - 2.0 * x * t + t * t);
            rep.add(real_tag(real_tag("generating/x=", x) + "/t=", t),
                    std::abs(generating_partial_sum(x, t, 60) - closed), 1e-10);
        }
    }
    const double thetas[] = {0.1, 0.7, 1.3, 2.0, 2.9};
    for (int n = 0; n <= n_max; ++n) {
        double worst_addition = 0.0;
        for (const double a : thetas) {
            for (const double b : thetas) {
                for (int j = 0; j < 8; ++j) {
                    worst_addition = std::max(worst_addition,
                                              addition_theorem_residual(a, b, 2.0 * std::numbers::pi * j / 8.0, n));
                }
            }
        }
        rep.add(tag("addition/n=", static_cast<std::size_t>(n)), worst_addition, 1e-9);
        double worst_ode = 0.0;
        for (int i = 0; i <= 20; ++i) {
            worst_ode = std::max(worst_ode, std::abs(ode_residual(n, -1.0 + 0.1 * i)));
        }
        rep.add(tag("ode/n=", static_cast<std::size_t>(n)), worst_ode, 1e-9);
    }
    return rep;
}

BoundReport loewner_suite(const SuiteConfig &c)
{
    BoundReport rep("loewner", 0.0);
    const auto minus_one = DrivingFunction::constant(-1.0);
    const Complex targets[] = {0.3, 0.5, Complex(0.0, 0.5)};
    const auto ev = loewner_solve(minus_one, targets, c.horizon, 1e-3, 1000);
    const std::size_t last = ev.times.size() - 1;
    for (std::size_t j = 0; j < 3; ++j) {
        const Complex closed = std::exp(c.horizon) * koebe_transition(c.horizon, targets[j]);
        std::ostringstream id;
        id.precision(2);
        id << std::fixed << "trace/z=(" << targets[j].real() << "," << targets[j].imag() << ")";
        rep.add(id.str(), std::abs(ev.scaled(last, j) - closed), 1e-8 * std::abs(closed));
    }

    const Complex z(0.0, 0.5);
    const Complex exact = koebe_transition(1.0, z);
    const double e1 = std::abs(loewner_flow(minus_one, z, 0.0, 1.0, 1e-2).value - exact);
    const double e2 = std::abs(loewner_flow(minus_one, z, 0.0, 1.0, 5e-3).value - exact);
    const double ratio = e1 / e2;
    rep.add_verdict("order/ratio", ratio, 16.0, ratio >= 12.0 && ratio <= 20.0);

    const auto chain = LoewnerChain::numeric(minus_one);
    auto rng = stream(c, 6);
    std::uniform_real_distribution<double> time(0.0, 5.0);
    const auto pts = random_disk_points(rng, 100, 0.95);
    double min_re = INFINITY;
    for (const Complex p : pts) {
        min_re = std::min(min_re, herglotz_p(chain, p, time(rng)).real());
    }
    rep.add_verdict("herglotz/min-re-p", min_re, 0.0, min_re > 0.0);

    const auto koebe_chain = LoewnerChain::koebe();
    const double us[] = {1.0, 3.0};
    for (const Complex zz : {Complex(0.5), Complex(-0.3, 0.6), Complex(0.0, -0.9)}) {
        for (const auto &[s, t] : {std::pair{0.0, 0.1}, std::pair{0.2, 1.0}, std::pair{0.5, 0.5}}) {
            rep.merge(lipschitz_bound_check(koebe_chain, zz, s, t, us), "koebe/");
            rep.merge(lipschitz_bound_check(chain, zz, s, t, us, 1e-9), "numeric/");
        }
    }

    const auto logs = chain_log_coeffs(chain, 1.0, 4);
    rep.add("log-coefficients/route-discrepancy", logs.max_discrepancy, 1e-8);
    rep.add("log-coefficients/c1-vs-closed-form", std::abs(logs.series_route[0] - 2.0), 1e-4);
    return rep;
}

BoundReport weinstein_suite(const SuiteConfig &c)
{
    BoundReport rep("weinstein", 0.0);
    const int n_max = c.n.value_or(12);
    const double t = c.t;
    const auto table = lambda_table(t, n_max);
    rep.add("lambda/min", -table.min_value(), 1e-12);
    double fourier = 0.0;
    double legendre = 0.0;
    double min_summand = INFINITY;
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            if (n <= max_lambda_oracle_degree) {
                fourier = std::max(fourier, std::abs(table(k, n) - lambda_fourier_oracle(t, k, n, c.quadrature)));
            }
            if (n <= max_legendre_route_degree) {
                const auto route = legendre_route_check(t, n, k);
                legendre = std::max(legendre, std::abs(table(k, n) - route.value));
                min_summand = std::min(min_summand, route.min_summand);
            }
        }
    }
    rep.add("oracle/fourier-max-discrepancy", fourier, 1e-8);
    rep.add("oracle/legendre-max-discrepancy", legendre, 1e-8);
    rep.add("oracle/legendre-min-summand", -min_summand, 0.0);
    for (int k = 1; k <= n_max; ++k) {
        rep.add(tag("decay/k=", static_cast<std::size_t>(k)), std::abs(table(k, k) - std::exp(-k * t)), 1e-10);
    }

    const auto f = subject(c, c.order);
    const std::size_t generating_n = std::min<std::size_t>(40, f.order() - 1);
    const Complex samples[] = {0.0, 0.3, Complex(-0.2, 0.4), Complex(0.0, -0.5)};
    rep.merge(milin_generating_identity(f, generating_n, samples), c.function + "/generating/");

    try {
        const auto chain = chain_for(c.function);
        DecompositionOptions options;
        options.horizon = c.horizon;
        options.radii = c.ladder;
        const int n = std::min(n_max, 8);
        const auto d = milin_decomposition_check(f, chain, n, options);
        rep.merge(d.report, c.function + "/");
        for (int k = 1; k <= n; ++k) {
            rep.add(tag(c.function + "/A_k-limit-nonnegative/k=", static_cast<std::size_t>(k)),
                    -a_k_moments(chain, k, t, 1.0), 1e-8);
        }
    } catch (const Error &e) {
        if (e.code() != Errc::ChainUnavailable) {
            throw;
        }
    }
    return rep;
}

} // namespace

void SuiteConfig::validate() const
{
    if (!(tolerance > 0.0)) {
        throw Error(Errc::ParamOutOfRange, "tolerance must be positive");
    }
    if (order < 4) {
        throw Error(Errc::ParamOutOfRange, "order must be at least 4");
    }
    if (radii.empty() || ladder.empty()) {
        throw Error(Errc::ParamOutOfRange, "radius lists must not be empty");
    }
    if (n && *n < 1) {
        throw Error(Errc::ParamOutOfRange, "n must be positive");
    }
}

nlohmann::json SuiteConfig::to_json() const
{
    nlohmann::json j;
    j["suite"] = suite;
    j["function"] = function;
    j["n"] = n ? nlohmann::json(*n) : nlohmann::json(nullptr);
    j["order"] = order;
    j["tolerance"] = tolerance;
    j["radius"] = radii;
    j["ladder"] = ladder;
    j["quadrature"] = quadrature;
    j["seed"] = seed;
    j["t"] = t;
    j["T"] = horizon;
    j["format"] = format;
    return j;
}

const std::vector<std::string> &suite_names()
{
    static const std::vector<std::string> names{"area",          "bounds",   "littlewood", "robertson", "milin",
                                                "lebedev-milin", "legendre", "loewner",    "weinstein"};
    return names;
}

std::vector<BoundReport> run_suite(const SuiteConfig &config)
{
    config.validate();
    auto one = [&](const std::string &name) -> BoundReport {
        if (name == "area") {
            return area_suite(config);
        }
        if (name == "bounds") {
            return bounds_suite(config);
        }
        if (name == "littlewood") {
            return littlewood_suite(config);
        }
        if (name == "robertson") {
            return robertson_suite(config);
        }
        if (name == "milin") {
            return milin_suite(config);
        }
        if (name == "lebedev-milin") {
            return lebedev_milin_suite(config);
        }
        if (name == "legendre") {
            return legendre_suite(config);
        }
        if (name == "loewner") {
            return loewner_suite(config);
        }
        if (name == "weinstein") {
            return weinstein_suite(config);
        }
        throw Error(Errc::UnknownSuite, "unknown suite '" + name + "'");
    };
    std::vector<BoundReport> out;
    if (config.suite == "all") {
        for (const auto &name : suite_names()) {
            out.push_back(one(name));
        }
    } else {
        out.push_back(one(config.suite));
    }
    return out;
}

} // namespace univalent::cli
