#include <univalent/weinstein.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <univalent/functionals.hpp>
#include <univalent/legendre.hpp>

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

// c_1 .. c_k of log(f_t(z) / (e^t z)).
std::vector<Complex> chain_c(const LoewnerChain &chain, double t, int k)
{
    const auto order = static_cast<std::size_t>(k) + 1;
    const PowerSeries l = series_log(chain.series(t, order).scaled(std::exp(-t)).divided_by_z());
    std::vector<Complex> c(static_cast<std::size_t>(k));
    for (int l_index = 1; l_index <= k; ++l_index) {
        c[static_cast<std::size_t>(l_index - 1)] = l[static_cast<std::size_t>(l_index)];
    }
    return c;
}

// q_0 .. q_k of 2 C_0^k - k c_k z^k.
std::vector<Complex> weight_coefficients(std::span<const Complex> c, int k)
{
    std::vector<Complex> q(static_cast<std::size_t>(k) + 1);
    q[0] = 2.0;
    for (int l = 1; l < k; ++l) {
        q[static_cast<std::size_t>(l)] = 2.0 * static_cast<double>(l) * c[static_cast<std::size_t>(l - 1)];
    }
    q[static_cast<std::size_t>(k)] = static_cast<double>(k) * c[static_cast<std::size_t>(k - 1)];
    return q;
}

void require_k(int k)
{
    if (k < 1 || k > 10) {
        throw Error(Errc::ParamOutOfRange, "A_k needs 1 <= k <= 10");
    }
}

} // namespace

double LambdaTable::min_value() const
{
    double m = std::numeric_limits<double>::infinity();
    for (const auto &row : values) {
        for (const double v : row) {
            m = std::min(m, v);
        }
    }
    return m;
}

LambdaTable lambda_table(double t, int max_n)
{
    if (!(t >= 0.0) || max_n < 0) {
        throw Error(Errc::ParamOutOfRange, "lambda_table needs t >= 0 and N >= 0");
    }
    const auto order = static_cast<std::size_t>(max_n) + 1;
    const PowerSeries w = koebe_transition_series(t, order);
    const PowerSeries one = PowerSeries::constant(order, 1.0);
    PowerSeries current = (w / (one - w * w)).scaled(std::exp(t));

    LambdaTable table;
    table.t = t;
    table.max_n = max_n;
    table.max_k = max_n;
    for (int k = 0; k <= max_n; ++k) {
        std::vector<double> row(static_cast<std::size_t>(max_n) + 1);
        for (int n = 0; n <= max_n; ++n) {
            const Complex v = current[static_cast<std::size_t>(n) + 1];
            if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v.real()))) {
                throw Error(Errc::ParamOutOfRange, "Lambda coefficient has an imaginary residue");
            }
            row[static_cast<std::size_t>(n)] = v.real();
        }
        table.values.push_back(std::move(row));
        current = current * w;
    }
    return table;
}

std::vector<double> lambda_series(double t, int k, int n_max)
{
    if (k < 0 || k > n_max) {
        throw Error(Errc::ParamOutOfRange, "lambda_series needs 0 <= k <= N");
    }
    return lambda_table(t, n_max).values[static_cast<std::size_t>(k)];
}

double lambda_fourier_oracle(double t, int k, int n, std::size_t nodes)
{
    if (!(t >= 0.0) || k < 0 || n < 0 || n > max_lambda_oracle_degree || nodes < 1024) {
        throw Error(Errc::ParamOutOfRange, "lambda_fourier_oracle needs t >= 0, 0 <= k, 0 <= n <= 20, Q >= 1024");
    }
    const double e = std::exp(-t);
    double acc = 0.0;
    for (std::size_t j = 0; j < nodes; ++j) {
        const double phi = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nodes);
        const double x = 1.0 - e + e * std::cos(phi);
        if (x < 1.0 - 2.0 * e - 1e-15 || x > 1.0 + 1e-15) {
            throw Error(Errc::ParamOutOfRange, "cos(delta) left [1 - 2e^{-t}, 1]");
        }
        double u_prev = 1.0;
        double u = 2.0 * x;
        if (n == 0) {
            u = 1.0;
        }
        for (int m = 1; m < n; ++m) {
            const double next = 2.0 * x * u - u_prev;
            u_prev = u;
            u = next;
        }
        acc += u * std::cos(static_cast<double>(k) * phi);
    }
    return acc / static_cast<double>(nodes);
}

LegendreRoute legendre_route_check(double t, int n, int k)
{
    if (!(t >= 0.0) || n < 0 || n > max_legendre_route_degree || k < 0) {
        throw Error(Errc::ParamOutOfRange, "legendre_route_check needs t >= 0, 0 <= n <= 12, k >= 0");
    }
    const double c = std::sqrt(1.0 - std::exp(-t));

    // alpha[i][m]: cos(m phi) coefficient of P_i(cos delta).
    std::vector<std::vector<double>> alpha(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        auto &row = alpha[static_cast<std::size_t>(i)];
        const double p = legendre_poly(i)(c);
        row.push_back(p * p);
        for (int m = 1; m <= i; ++m) {
            const double pm = assoc_legendre(i, m, c);
            row.push_back(2.0 * factorial_ratio(i, m) * pm * pm);
        }
    }

    LegendreRoute out;
    double coefficient = 0.0;
    double min_summand = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n; ++i) {
        const int j = n - i;
        const auto &a = alpha[static_cast<std::size_t>(i)];
        const auto &b = alpha[static_cast<std::size_t>(j)];
        for (int m = 0; m <= i; ++m) {
            for (int mm = 0; mm <= j; ++mm) {
                const double half = 0.5 * a[static_cast<std::size_t>(m)] * b[static_cast<std::size_t>(mm)];
                for (const int target : {m + mm, std::abs(m - mm)}) {
                    if (target == k) {
                        coefficient += half;
                        min_summand = std::min(min_summand, half);
                        ++out.summands;
                    }
                }
            }
        }
    }
    out.value = (k == 0) ? coefficient : 0.5 * coefficient;
    out.min_summand = out.summands ? min_summand : 0.0;
    return out;
}

BoundReport milin_generating_identity(const ClassSFunction &f, std::size_t n_max, std::span<const Complex> samples,
                                      double tolerance)
{
    if (n_max == 0 || n_max > 40) {
        throw Error(Errc::ParamOutOfRange, "milin_generating_identity needs 1 <= N <= 40");
    }
    const auto gamma = log_coefficients(f, n_max).gamma;
    std::vector<double> d(n_max + 1);
    for (std::size_t k = 1; k <= n_max; ++k) {
        const double kd = static_cast<double>(k);
        d[k] = 4.0 / kd - kd * 4.0 * std::norm(gamma[k - 1]);
    }

    BoundReport report("generating-identity:" + f.label(), tolerance);
    for (const Complex z : samples) {
        const double r = std::abs(z);
        if (r > 0.5) {
            throw Error(Errc::RadiusExceeded, "generating identity samples need |z| <= 0.5");
        }
        Complex lhs{};
        Complex zp = z; // z^{n+1}
        for (std::size_t n = 1; n <= n_max; ++n) {
            zp *= z;
            double inner = 0.0;
            for (std::size_t k = 1; k <= n; ++k) {
                inner += d[k] * static_cast<double>(n - k + 1);
            }
            lhs += inner * zp;
        }
        Complex dz{};
        Complex zk = 1.0;
        for (std::size_t k = 1; k <= n_max; ++k) {
            zk *= z;
            dz += d[k] * zk;
        }
        const Complex rhs = koebe_value(z) * dz;

        // Terms of k(z) D_N(z) beyond z^{N+1}: sum_k |d_k| r^k sum_{j >= N+2-k} j r^j.
        double tail = 0.0;
        if (r > 0.0) {
            for (std::size_t k = 1; k <= n_max; ++k) {
                const double jj = static_cast<double>(n_max + 2 - k);
                const double geometric = std::pow(r, jj) * (jj - (jj - 1.0) * r) / ((1.0 - r) * (1.0 - r));
                tail += std::abs(d[k]) * std::pow(r, static_cast<double>(k)) * geometric;
            }
        }
        report.add(point_id(z), std::abs(lhs - rhs), tail);
    }
    return report;
}

AkQuadrature a_k_integral(const LoewnerChain &chain, int k, double t, double r, std::size_t nodes)
{
    require_k(k);
    if (!(r >= 0.9 && r <= 0.999)) {
        throw Error(Errc::RadiusExceeded, "a_k_integral needs 0.9 <= r <= 0.999");
    }
    nodes = std::max(nodes, static_cast<std::size_t>(std::ceil(64.0 / (1.0 - r))));
    const auto q = weight_coefficients(chain_c(chain, t, k), k);

    AkQuadrature out;
    out.nodes = nodes;
    out.min_integrand = std::numeric_limits<double>::infinity();
    double acc = 0.0;
    for (std::size_t j = 0; j < nodes; ++j) {
        const Complex z = std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nodes));
        Complex weight{};
        for (std::size_t l = q.size(); l-- > 0;) {
            weight = weight * z + q[l];
        }
        const double integrand = herglotz_p(chain, z, t).real() * std::norm(weight);
        out.min_integrand = std::min(out.min_integrand, integrand);
        acc += integrand;
    }
    out.value = acc / static_cast<double>(nodes);
    return out;
}

double a_k_moments(std::span<const Complex> p, std::span<const Complex> c, int k, double r)
{
    require_k(k);
    if (p.size() < static_cast<std::size_t>(k) + 1 || c.size() < static_cast<std::size_t>(k)) {
        throw Error(Errc::OrderOutOfRange, "a_k_moments needs p_0..p_k and c_1..c_k");
    }
    if (!(r > 0.0 && r <= 1.0)) {
        throw Error(Errc::RadiusExceeded, "a_k_moments needs 0 < r <= 1");
    }
    const auto q = weight_coefficients(c, k);
    // mu_d = mean of Re p(r e^{i theta}) e^{i d theta}
    auto mu = [&](int d) -> Complex {
        if (d == 0) {
            return p[0].real();
        }
        const auto ad = static_cast<std::size_t>(std::abs(d));
        const double rd = std::pow(r, static_cast<double>(ad));
        return d > 0 ? 0.5 * std::conj(p[ad]) * rd : 0.5 * p[ad] * rd;
    };
    Complex acc{};
    for (int l = 0; l <= k; ++l) {
        for (int m = 0; m <= k; ++m) {
            acc += q[static_cast<std::size_t>(l)] * std::conj(q[static_cast<std::size_t>(m)]) *
                   std::pow(r, static_cast<double>(l + m)) * mu(l - m);
        }
    }
    return acc.real();
}

double a_k_moments(const LoewnerChain &chain, int k, double t, double r)
{
    require_k(k);
    const PowerSeries p = herglotz_series(chain, t, static_cast<std::size_t>(k));
    const auto c = chain_c(chain, t, k);
    return a_k_moments(p.coeffs(), c, k, r);
}

DecompositionResult milin_decomposition_check(const ClassSFunction &f, const LoewnerChain &chain, int n,
                                              const DecompositionOptions &options)
{
    if (n < 1 || n > 8) {
        throw Error(Errc::ParamOutOfRange, "milin_decomposition_check needs 1 <= n <= 8");
    }
    if (!(options.horizon > 0.0) || options.horizon > 10.0 || !(options.dt > 0.0)) {
        throw Error(Errc::ParamOutOfRange, "milin_decomposition_check needs 0 < T <= 10 and dt > 0");
    }
    if (options.horizon > chain.horizon()) {
        throw Error(Errc::ChainUnavailable, "chain horizon shorter than T");
    }
    const auto order = static_cast<std::size_t>(n) + 1;
    {
        const PowerSeries start = chain.series(0.0, order);
        double gap = 0.0;
        for (std::size_t j = 1; j <= order; ++j) {
            gap = std::max(gap, std::abs(start[j] - f.coefficient(j)));
        }
        if (gap > 1e-6) {
            throw Error(Errc::ChainUnavailable, "chain " + chain.label() + " does not start at " + f.label());
        }
    }

    DecompositionResult out;
    out.lhs = milin_functional(f, static_cast<std::size_t>(n)).weinstein_form;
    out.radii = options.radii;
    out.rhs_by_radius.assign(options.radii.size(), 0.0);

    const auto steps = static_cast<std::size_t>(std::ceil(options.horizon / options.dt - 1e-9));
    const double dt = options.horizon / static_cast<double>(steps);
    out.min_g = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i <= steps; ++i) {
        const double t = dt * static_cast<double>(i);
        const double weight = (i == 0 || i == steps) ? 0.5 * dt : dt;
        const LambdaTable lambda = lambda_table(t, n);
        const PowerSeries p = herglotz_series(chain, t, static_cast<std::size_t>(n));
        const auto c = chain_c(chain, t, n);

        double g = 0.0;
        std::vector<double> g_r(options.radii.size(), 0.0);
        for (int k = 1; k <= n; ++k) {
            const double lam = lambda(k, n);
            g += lam * a_k_moments(p.coeffs(), c, k, 1.0);
            for (std::size_t ri = 0; ri < options.radii.size(); ++ri) {
                g_r[ri] += lam * a_k_moments(p.coeffs(), c, k, options.radii[ri]);
            }
        }
        out.times.push_back(t);
        out.g.push_back(g);
        out.min_g = std::min({out.min_g, g});
        out.rhs_limit += weight * g;
        for (std::size_t ri = 0; ri < options.radii.size(); ++ri) {
            out.min_g = std::min(out.min_g, g_r[ri]);
            out.rhs_by_radius[ri] += weight * g_r[ri];
        }
    }
    // Lambda_k^n decays at least like e^{-t} for k >= 1.
    out.tail_estimate = std::max(0.0, out.g.back());

    std::ostringstream name;
    name << "decomposition:" << chain.label() << "/n=" << n;
    out.report = BoundReport(name.str(), 0.0);
    const double allowed = options.tolerance * std::max(1.0, std::abs(out.lhs)) + out.tail_estimate;
    out.report.add_verdict("lhs-vs-rhs", out.lhs, out.rhs_limit, std::abs(out.lhs - out.rhs_limit) <= allowed);
    out.report.add("min-g", -out.min_g, 1e-8);
    return out;
}

LoewnerChain chain_for(const std::string &name)
{
    if (name == "koebe") {
        return LoewnerChain::koebe();
    }
    if (name == "identity") {
        return LoewnerChain::trivial();
    }
    if (name.rfind("koebe-rot:", 0) == 0) {
        try {
            std::size_t pos = 0;
            const std::string body = name.substr(10);
            const double theta = std::stod(body, &pos);
            if (pos == body.size()) {
                return LoewnerChain::koebe(theta);
            }
        } catch (const std::exception &) {
        }
        throw Error(Errc::ChainUnavailable, "bad rotation angle in '" + name + "'");
    }
    if (name.rfind("numeric:", 0) == 0) {
        return LoewnerChain::numeric(DrivingFunction::parse(name.substr(8)));
    }
    throw Error(Errc::ChainUnavailable, "no Loewner chain known for '" + name + "'");
}

} // namespace univalent
