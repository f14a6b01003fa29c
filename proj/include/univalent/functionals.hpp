#ifndef UNIVALENT_FUNCTIONALS_HPP
#define UNIVALENT_FUNCTIONALS_HPP

#include <span>
#include <string>
#include <vector>

#include <univalent/report.hpp>
#include <univalent/schlicht.hpp>

namespace univalent
{

inline constexpr std::size_t default_quadrature_nodes = 1024;

/// sum_{n=1}^{N} n |b_n|^2 (the area-theorem sum).
double area_sum(const SigmaFunction &g, std::size_t n_terms);

/// Per index n = 2..N: |a_n| <= n and |a_n| <= e n.
BoundReport coefficient_report(const ClassSFunction &f, std::size_t n_max, double tolerance = 1e-9);

/// M_p(r, f) = { (1/2pi) int |f(r e^{i theta})|^p dtheta }^{1/p} by the
/// uniform trapezoid rule with `nodes` points.
double integral_mean(const ClassSFunction &f, double p, double r, std::size_t nodes = default_quadrature_nodes,
                     double r_max = default_eval_radius);

/// The Cauchy-estimate chain at the optimal radius r = 1 - 1/n:
///   M_1(r) <= r/(1-r),  |a_n| <= M_1(r)/r^n <= 1/((1-r) r^{n-1}) = n(1 + 1/(n-1))^{n-1} < e n.
BoundReport littlewood_report(const ClassSFunction &f, std::span<const std::size_t> indices,
                              std::size_t nodes = default_quadrature_nodes, double tolerance = 1e-8);

/// Growth, distortion, |z f'/f| and |z f''/f' - 2r^2/(1-r^2)| envelopes at each
/// grid point. Lower bounds are recorded as (bound, value), upper ones as
/// (value, bound). The tolerance is relative to the bound's magnitude.
BoundReport pointwise_bounds_check(const ClassSFunction &f, std::span<const Complex> grid, double rel_tolerance = 1e-9,
                                   double r_max = default_eval_radius);

/// Partial sums S_1..S_n of |c_{2k-1}|^2 for the odd square-root transform.
std::vector<double> robertson_sums(const ClassSFunction &f, std::size_t n);

struct LogCoefficients {
    std::vector<Complex> gamma; // gamma_1 .. gamma_N
    std::string source;
};

/// log(f(z)/z) = 2 sum gamma_k z^k, k = 1..N (N < f.order()).
LogCoefficients log_coefficients(const ClassSFunction &f, std::size_t n);

struct MilinValue {
    double milin = 0.0;          // sum_{m<=n} sum_{k<=m} (k|gamma_k|^2 - 1/k)
    double weinstein_form = 0.0; // sum_{k<=n} (4/k - k|c_k|^2)(n-k+1), c_k = 2 gamma_k
};

MilinValue milin_functional(std::span<const Complex> gamma, std::size_t n);
MilinValue milin_functional(const ClassSFunction &f, std::size_t n);

struct LebedevMilin {
    double lhs = 0.0;
    double rhs = 0.0;
    double exponent = 0.0;          // double-sum form of the exponent
    double exponent_weighted = 0.0; // sum_k (n+1-k)(k|alpha_k|^2 - 1/k) / (n+1)
};

/// alpha holds alpha_1 .. alpha_L (L >= n); beta = exp(sum alpha_k z^k).
/// lhs = sum_{k=0}^{n} |beta_k|^2, rhs = (n+1) exp{(1/(n+1)) sum_{m=1}^{n} sum_{k=1}^{m} (k|alpha_k|^2 - 1/k)}.
LebedevMilin lebedev_milin_check(std::span<const Complex> alpha, std::size_t n);

} // namespace univalent

#endif
