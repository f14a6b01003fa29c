#ifndef UNIVALENT_LOEWNER_HPP
#define UNIVALENT_LOEWNER_HPP

#include <span>
#include <string>
#include <vector>

#include <univalent/report.hpp>
#include <univalent/series.hpp>

namespace univalent
{

/// Unit-circle valued control kappa(t), either constant or piecewise constant
/// on [times[i], times[i+1]). Outside the sampled range the nearest end value
/// is used.
class DrivingFunction
{
public:
    static DrivingFunction constant(Complex kappa);
    static DrivingFunction sampled(std::vector<double> times, std::vector<Complex> values);
    /// "const:<re>[,<im>]", "angle:<theta>", or "steps:<t0>:<theta0>;<t1>:<theta1>;...".
    static DrivingFunction parse(const std::string &spec);

    Complex operator()(double t) const;
    /// Interior jump times in (s, t).
    std::vector<double> breakpoints(double s, double t) const;
    std::string describe() const;

private:
    DrivingFunction(std::vector<double> times, std::vector<Complex> values);

    std::vector<double> times_;
    std::vector<Complex> values_;
};

/// k(z) = z / (1 - z)^2.
Complex koebe_value(Complex z);
/// Branch of k^{-1} that maps the slit plane into the unit disk.
Complex koebe_inverse(Complex u);

/// w_t(z) = k^{-1}(e^{-t} k(z)).
Complex koebe_transition(double t, Complex z);
/// Series of w_t at the given order: revert(k) composed with e^{-t} k.
PowerSeries koebe_transition_series(double t, std::size_t order);
/// dw/dt = (w^2 - w) / (1 + w).
Complex transition_velocity(Complex w);

/// Right-hand side -f (1 + kappa f) / (1 - kappa f) of the radial equation.
Complex loewner_velocity(Complex f, Complex kappa);

struct FlowValue {
    Complex value;
    Complex z_derivative; // d/dz of the flow map, from the variational equation
};

/// Integrates the radial equation from time s (value z) to time t with a
/// classical fourth-order step of size at most h; jumps of kappa fall on step
/// boundaries.
FlowValue loewner_flow(const DrivingFunction &kappa, Complex z, double s, double t, double h);

struct Evolution {
    std::vector<double> times;
    std::vector<Complex> points;
    std::vector<std::vector<Complex>> values; // values[i][j] = f_{times[i]}(points[j])
    double horizon = 0.0;
    double step = 0.0;
    std::string driving;

    /// e^{t_i} f_{t_i}(z_j)
    Complex scaled(std::size_t i, std::size_t j) const;
    /// CSV with columns t,z_re,z_im,f_re,f_im,etf_re,etf_im.
    void write_csv(std::ostream &os) const;
};

/// Solves df/dt = -f (1 + kappa f)/(1 - kappa f), f_0(z) = z, on [0, T] for
/// every grid point. States are recorded every `sample_every` steps (and at T).
Evolution loewner_solve(const DrivingFunction &kappa, std::span<const Complex> grid, double horizon, double step,
                        std::size_t sample_every = 1);

/// Least-squares fit of sum_{n<=order} a_n z^n to samples taken at
/// z_j = radius e^{2 pi i j / M}. On equispaced nodes the normal equations are
/// diagonal, so a_n = (1/M) sum_j f_j z_j^{-n}.
PowerSeries fit_circle_series(std::span<const Complex> samples, double radius, std::size_t order);

inline constexpr double fit_radius = 0.4;
inline constexpr std::size_t fit_nodes = 64;

/// A Loewner chain f_t(z) = e^t z + a_2(t) z^2 + ..., t >= 0.
///
/// koebe: f_t(z) = e^t e^{-i theta} k(e^{i theta} z)
/// trivial: f_t(z) = e^t z
/// numeric: f_s(z) = e^H phi(z, s, H), phi the flow of the radial equation,
///          H the construction horizon.
class LoewnerChain
{
public:
    enum class Kind { koebe, trivial, numeric };

    static LoewnerChain koebe(double theta = 0.0);
    static LoewnerChain trivial();
    static LoewnerChain numeric(DrivingFunction kappa, double horizon = 20.0, double step = 1e-3);

    Kind kind() const noexcept
    {
        return kind_;
    }
    std::string label() const;
    /// Largest t for which the chain may be evaluated.
    double horizon() const noexcept;

    Complex value(Complex z, double t) const;
    Complex z_derivative(Complex z, double t) const;
    /// Exact for closed forms, central difference (step 1e-4) for numeric chains.
    Complex t_derivative(Complex z, double t) const;
    /// phi(z, s, t) with f_s = f_t o phi(., s, t).
    Complex transition(Complex z, double s, double t) const;

    /// Taylor series of f_t. Closed forms are exact; numeric chains are fitted
    /// on |z| = fit_radius.
    PowerSeries series(double t, std::size_t order) const;
    PowerSeries t_derivative_series(double t, std::size_t order) const;

private:
    LoewnerChain(Kind kind, double theta, DrivingFunction kappa, double horizon, double step);
    void require_time(double t) const;

    Kind kind_;
    double theta_;
    DrivingFunction kappa_;
    double horizon_;
    double step_;
};

/// p(z, t) = (d f_t/dt) / (z d f_t/dz); p(0, t) is the limit a_1'(t)/a_1(t).
Complex herglotz_p(const LoewnerChain &chain, Complex z, double t);

/// Taylor coefficients p_0 .. p_order of p(., t).
PowerSeries herglotz_series(const LoewnerChain &chain, double t, std::size_t order);

struct ChainLogCoefficients {
    std::vector<Complex> series_route; // c_1 .. c_N via the series logarithm
    std::vector<Complex> cauchy_route; // c_1 .. c_N by quadrature on |z| = 0.5
    double max_discrepancy = 0.0;
};

/// log(f_t(z) / (e^t z)) = sum c_k(t) z^k, by two independent routes.
ChainLogCoefficients chain_log_coeffs(const LoewnerChain &chain, double t, std::size_t n,
                                      std::size_t nodes = 256, double radius = 0.5);

/// Lipschitz bounds in time:
///   |f(z,t) - f(z,s)| <= 8|z| (e^t - e^s) / (1-|z|)^4
///   |phi(z,t,u) - phi(z,s,u)| <= 2|z| (1 - e^{s-t}) / (1-|z|)^2   for each u in `u_values` (u >= t)
BoundReport lipschitz_bound_check(const LoewnerChain &chain, Complex z, double s, double t,
                                  std::span<const double> u_values = {}, double tolerance = 1e-12);

} // namespace univalent

#endif
