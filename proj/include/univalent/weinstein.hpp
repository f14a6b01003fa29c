#ifndef UNIVALENT_WEINSTEIN_HPP
#define UNIVALENT_WEINSTEIN_HPP

#include <span>
#include <string>
#include <vector>

#include <univalent/loewner.hpp>
#include <univalent/report.hpp>
#include <univalent/schlicht.hpp>

namespace univalent
{

inline constexpr int max_lambda_oracle_degree = 20;
inline constexpr int max_legendre_route_degree = 12;

/// Lambda_k^0 .. Lambda_k^N, where Lambda_k^n(t) is the coefficient of
/// z^{n+1} in e^t w_t(z)^{k+1} / (1 - w_t(z)^2).
std::vector<double> lambda_series(double t, int k, int n_max);

struct LambdaTable {
    double t = 0.0;
    int max_n = 0;
    int max_k = 0;
    std::vector<std::vector<double>> values; // values[k][n]

    double operator()(int k, int n) const
    {
        return values.at(static_cast<std::size_t>(k)).at(static_cast<std::size_t>(n));
    }
    double min_value() const;
};

/// All Lambda_k^n(t) for 0 <= k, n <= max_n from one transition series.
LambdaTable lambda_table(double t, int max_n);

/// (1/2pi) int U_n(1 - e^{-t} + e^{-t} cos phi) cos(k phi) dphi by the
/// trapezoid rule, U_n the Chebyshev polynomials of the second kind.
double lambda_fourier_oracle(double t, int k, int n, std::size_t nodes = 1024);

struct LegendreRoute {
    double value = 0.0;
    double min_summand = 0.0;
    std::size_t summands = 0;
};

/// Lambda_k^n(t) from U_n = sum_{i+j=n} P_i P_j, each factor expanded by the
/// addition theorem at cos(theta) = sqrt(1 - e^{-t}). Every summand is a
/// product of squares with positive weights.
LegendreRoute legendre_route_check(double t, int n, int k);

/// sum_n (sum_k d_k (n-k+1)) z^{n+1} against (z/(1-z)^2) sum_k d_k z^k,
/// d_k = 4/k - k|c_k|^2, c_k = 2 gamma_k. Each sample passes when the
/// discrepancy is below the truncation tail plus `tolerance`.
BoundReport milin_generating_identity(const ClassSFunction &f, std::size_t n_max, std::span<const Complex> samples,
                                      double tolerance = 1e-10);

struct AkQuadrature {
    double value = 0.0;
    double min_integrand = 0.0;
    std::size_t nodes = 0;
};

/// (1/2pi) int Re p(z,t) |2 C_0^k - k c_k z^k|^2 dtheta on |z| = r, with
/// C_0^k = 1 + sum_{l<=k} l c_l z^l. The node count is raised to at least
/// ceil(64 / (1 - r)).
AkQuadrature a_k_integral(const LoewnerChain &chain, int k, double t, double r, std::size_t nodes = 1024);

/// Same integral from the Taylor coefficients of p and log(f_t/(e^t z)); the
/// result is a polynomial in r, so r = 1 gives the boundary limit.
double a_k_moments(const LoewnerChain &chain, int k, double t, double r);

/// Moment form on precomputed data: p_0..p_k and c_1..c_k.
double a_k_moments(std::span<const Complex> p, std::span<const Complex> c, int k, double r);

struct DecompositionOptions {
    double horizon = 8.0;
    double dt = 0.02;
    std::vector<double> radii{0.9, 0.99, 0.999};
    double tolerance = 1e-2;
};

struct DecompositionResult {
    double lhs = 0.0;
    double rhs_limit = 0.0;
    std::vector<double> radii;
    std::vector<double> rhs_by_radius;
    double tail_estimate = 0.0;
    double min_g = 0.0;
    std::vector<double> times;
    std::vector<double> g;
    BoundReport report{"decomposition", 0.0};
};

/// sum_k (4/k - k|c_k(0)|^2)(n-k+1) against int_0^T g_n(t) dt with
/// g_n = sum_{k=1}^n Lambda_k^n A_k. A_k is taken at the boundary limit; the
/// radius ladder is reported alongside.
DecompositionResult milin_decomposition_check(const ClassSFunction &f, const LoewnerChain &chain, int n,
                                              const DecompositionOptions &options = {});

/// Loewner chain for a named function: "koebe", "koebe-rot:<theta>",
/// "identity", "numeric:<driving spec>". Throws ChainUnavailable otherwise.
LoewnerChain chain_for(const std::string &name);

} // namespace univalent

#endif
