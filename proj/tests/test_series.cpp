#include <doctest.h>

#include <cmath>
#include <random>

#include <univalent/series.hpp>

using namespace univalent;

namespace
{

PowerSeries koebe_series(std::size_t order)
{
    std::vector<Complex> c(order + 1);
    for (std::size_t n = 1; n <= order; ++n) {
        c[n] = static_cast<double>(n);
    }
    return PowerSeries(std::move(c));
}

PowerSeries from(std::initializer_list<Complex> c)
{
    return PowerSeries(std::vector<Complex>(c));
}

double max_diff(const PowerSeries &a, const PowerSeries &b)
{
    double m = 0.0;
    for (std::size_t n = 0; n <= std::min(a.order(), b.order()); ++n) {
        m = std::max(m, std::abs(a[n] - b[n]));
    }
    return m;
}

PowerSeries random_series(std::mt19937_64 &rng, std::size_t order, double c0, bool decay)
{
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<Complex> c(order + 1);
    c[0] = c0;
    for (std::size_t n = 1; n <= order; ++n) {
        const double s = decay ? 1.0 / static_cast<double>(n) : 1.0;
        c[n] = Complex(u(rng), u(rng)) * (s / std::sqrt(2.0));
    }
    return PowerSeries(std::move(c));
}

// Binomial coefficient as a double; exact for the sizes used here.
double choose(int n, int k)
{
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

} // namespace

TEST_CASE("construction validates coefficients")
{
    CHECK_THROWS_AS(PowerSeries(std::vector<Complex>{}), Error);
    CHECK_THROWS_AS(PowerSeries(std::vector<Complex>{1.0, std::nan("")}), Error);
    CHECK(PowerSeries(3).order() == 3);
    CHECK(PowerSeries::identity(0)[0] == Complex{});
    CHECK(PowerSeries::monomial(4, 2, 3.0)[2] == Complex{3.0});
}

TEST_CASE("orders must match")
{
    try {
        (void)(PowerSeries(2) + PowerSeries(3));
        FAIL("expected OrderMismatch");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::OrderMismatch);
    }
}

TEST_CASE("multiplication")
{
    CHECK(from({1, 1, 0}) * from({1, 1, 0}) == from({1, 2, 1}));

    const auto k = koebe_series(8);
    const auto prod = k * from({1, -2, 1, 0, 0, 0, 0, 0, 0});
    CHECK(prod == PowerSeries::identity(8));
}

TEST_CASE("division")
{
    const auto q = PowerSeries::identity(10) / from({1, -2, 1, 0, 0, 0, 0, 0, 0, 0, 0});
    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(q[n] == Complex(static_cast<double>(n)));
    }
    try {
        (void)(PowerSeries::identity(3) / PowerSeries::identity(3));
        FAIL("expected DivisionByNonUnit");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::DivisionByNonUnit);
    }
}

TEST_CASE("transcendental functions")
{
    const auto e = series_exp(PowerSeries(6));
    CHECK(e == PowerSeries::constant(6, 1.0));

    // 1/(1-z)^2 = sum (n+1) z^n
    std::vector<Complex> c(13);
    for (std::size_t n = 0; n <= 12; ++n) {
        c[n] = static_cast<double>(n + 1);
    }
    const auto l = series_log(PowerSeries(c));
    CHECK(l[0] == Complex{});
    for (std::size_t k = 1; k <= 12; ++k) {
        CHECK(std::abs(l[k] - 2.0 / static_cast<double>(k)) < 1e-14);
    }

    CHECK(max_diff(series_sqrt(from({1, 2, 1})), from({1, 1, 0})) < 1e-15);

    try {
        (void)series_log(PowerSeries::identity(3));
        FAIL("expected BranchPointAtOrigin");
    } catch (const Error &err) {
        CHECK(err.code() == Errc::BranchPointAtOrigin);
    }
    CHECK_THROWS_AS(series_exp(PowerSeries::constant(3, 1.0)), Error);
}

TEST_CASE("composition")
{
    const auto a = from({0.5, 1, -2, 3, 0.25});
    CHECK(max_diff(ps_compose(a, PowerSeries::identity(4)), a) < 1e-15);

    const auto k2 = ps_compose(koebe_series(12), PowerSeries::monomial(12, 2));
    for (std::size_t n = 0; n <= 12; ++n) {
        const double expected = (n % 2 == 0) ? static_cast<double>(n / 2) : 0.0;
        CHECK(k2[n] == Complex(expected));
    }

    // -log(1 - z) at z/2
    const auto minus_log = from({0, 1, 0.5, 1.0 / 3.0, 0.25});
    const auto r = ps_compose(minus_log, from({0, 0.5, 0, 0, 0}));
    CHECK(max_diff(r, from({0, 0.5, 0.125, 1.0 / 24.0, 1.0 / 64.0})) < 1e-15);

    CHECK_THROWS_AS(ps_compose(a, PowerSeries::constant(4, 1.0)), Error);
}

TEST_CASE("reversion")
{
    CHECK(ps_revert(PowerSeries::identity(6)) == PowerSeries::identity(6));

    const auto rk = ps_revert(koebe_series(10));
    for (int n = 1; n <= 10; ++n) {
        const double catalan = choose(2 * n, n) / (n + 1);
        const double sign = (n % 2 == 1) ? 1.0 : -1.0;
        CHECK(std::abs(rk[static_cast<std::size_t>(n)] - sign * catalan) < 1e-9 * catalan);
    }
    CHECK(max_diff(ps_compose(koebe_series(10), rk), PowerSeries::identity(10)) < 1e-9);

    const auto rq = ps_revert(from({0, 1, 1, 0, 0}));
    CHECK(max_diff(rq, from({0, 1, -1, 2, -5})) < 1e-14);

    CHECK_THROWS_AS(ps_revert(from({0, 0, 1})), Error);
}

TEST_CASE("evaluation")
{
    const auto k = koebe_series(64);
    CHECK(std::abs(ps_eval(k, 0.5, EvalMode::class_s) - 2.0) < 1e-9 * 2.0);
    CHECK(ps_eval(from({3, 1, 1}), 0.0) == Complex(3.0));
    CHECK(ps_eval(from({1, 1}), Complex(0, 1)) == Complex(1, 1));
    try {
        (void)ps_eval(k, 0.995, EvalMode::class_s);
        FAIL("expected RadiusExceeded");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::RadiusExceeded);
    }
    CHECK_NOTHROW(ps_eval(k, 0.995, EvalMode::polynomial));
}

TEST_CASE("ring axioms at fixed order")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(rng, 16, 0.3, false);
        const auto b = random_series(rng, 16, -0.7, false);
        const auto c = random_series(rng, 16, 1.1, false);
        CHECK(max_diff(a * b, b * a) < 1e-12);
        CHECK(max_diff((a * b) * c, a * (b * c)) < 1e-12 * 50);
        CHECK(max_diff(a * (b + c), a * b + a * c) < 1e-12 * 50);
    }
}

TEST_CASE("exp and log are inverse")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(rng, 32, 0.0, true);
        CHECK(max_diff(series_log(series_exp(a)), a) < 1e-10);
    }
}

TEST_CASE("revert round trip")
{
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> c1(0.5, 2.0);
    for (int trial = 0; trial < 20; ++trial) {
        auto raw = random_series(rng, 12, 0.0, true);
        std::vector<Complex> c(raw.coeffs().begin(), raw.coeffs().end());
        c[1] = c1(rng);
        const PowerSeries a(std::move(c));
        CHECK(max_diff(ps_compose(a, ps_revert(a)), PowerSeries::identity(12)) < 1e-9);
    }
}

TEST_CASE("exp coefficients satisfy the Cauchy-Schwarz step")
{
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_series(rng, 16, 0.0, false);
        const auto b = series_exp(a);
        for (std::size_t n = 1; n <= 16; ++n) {
            double s_alpha = 0.0;
            double s_beta = 0.0;
            for (std::size_t k = 1; k <= n; ++k) {
                s_alpha += static_cast<double>(k * k) * std::norm(a[k]);
            }
            for (std::size_t k = 0; k < n; ++k) {
                s_beta += std::norm(b[k]);
            }
            const double lhs = static_cast<double>(n * n) * std::norm(b[n]);
            CHECK(lhs <= s_alpha * s_beta * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("json round trip")
{
    const auto a = from({1, Complex(0.5, -2), 0.125});
    const auto j = to_json(a);
    CHECK(j["order"] == 2);
    CHECK(series_from_json(j) == a);
    CHECK_THROWS_AS(series_from_json(nlohmann::json{{"order", 3}, {"coeffs", {{1, 0}}}}), Error);
}

TEST_CASE("derivative and shifts")
{
    const auto a = from({1, 2, 3, 4});
    CHECK(a.derivative() == from({2, 6, 12, 0}));
    CHECK(a.divided_by_z() == from({2, 3, 4}));
    CHECK(a.times_z() == from({0, 1, 2, 3, 4}));
    CHECK(a.dilated(0.5) == from({1, 1, 0.75, 0.5}));
    CHECK(a.with_order(1) == from({1, 2}));
}
