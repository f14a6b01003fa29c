#include <doctest.h>

#include <cmath>

#include <univalent/functionals.hpp>
#include <univalent/weinstein.hpp>

using namespace univalent;

TEST_CASE("Lambda series")
{
    for (const double t : {0.0, 0.3, 2.0}) {
        CHECK(std::abs(lambda_series(t, 0, 4)[0] - 1.0) < 1e-15);
    }
    for (int k = 1; k <= 10; ++k) {
        for (const double t : {0.0, 0.5, 1.0, 2.0}) {
            CHECK(std::abs(lambda_series(t, k, 10)[static_cast<std::size_t>(k)] - std::exp(-k * t)) < 1e-10);
        }
    }
    const auto zero = lambda_series(0.0, 0, 12);
    for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(std::abs(zero[n] - (n % 2 == 0 ? 1.0 : 0.0)) < 1e-12);
    }
    CHECK_THROWS_AS(lambda_series(0.5, 4, 3), Error);
}

TEST_CASE("Lambda table structure")
{
    for (const double t : {0.0, 0.5, 1.0, 2.0}) {
        const auto table = lambda_table(t, 12);
        CHECK(table.min_value() >= -1e-12);
        for (int k = 1; k <= 12; ++k) {
            for (int n = 0; n < k; ++n) {
                CHECK(std::abs(table(k, n)) < 1e-12);
            }
        }
    }
}

TEST_CASE("Fourier oracle")
{
    CHECK(std::abs(lambda_fourier_oracle(0.0, 0, 2) - 1.0) < 1e-12);
    CHECK(std::abs(lambda_fourier_oracle(0.5, 3, 3) - std::exp(-1.5)) < 1e-8);
    CHECK(std::abs(lambda_fourier_oracle(0.7, 5, 3)) < 1e-10);
    CHECK_THROWS_AS(lambda_fourier_oracle(0.5, 1, 21), Error);
    CHECK_THROWS_AS(lambda_fourier_oracle(0.5, 1, 4, 512), Error);
}

TEST_CASE("Legendre route")
{
    const auto base = legendre_route_check(1.0, 0, 0);
    CHECK(base.value == doctest::Approx(1.0).epsilon(1e-15));
    for (const double t : {0.25, 1.0, 3.0}) {
        const auto table = lambda_table(t, 5);
        for (int n = 0; n <= 5; ++n) {
            for (int k = 0; k <= 5; ++k) {
                const auto route = legendre_route_check(t, n, k);
                CHECK(std::abs(route.value - table(k, n)) < 1e-8);
                CHECK(route.min_summand >= 0.0);
            }
        }
    }
    CHECK_THROWS_AS(legendre_route_check(0.5, 13, 1), Error);
}

TEST_CASE("oracle triangle")
{
    double worst = 0.0;
    for (const double t : {0.0, 0.5, 1.0, 2.0}) {
        const auto table = lambda_table(t, 12);
        for (int n = 0; n <= 12; ++n) {
            for (int k = 0; k <= n; ++k) {
                const double s = table(k, n);
                worst = std::max(worst, std::abs(s - lambda_fourier_oracle(t, k, n)));
                worst = std::max(worst, std::abs(s - legendre_route_check(t, n, k).value));
            }
        }
    }
    CHECK(worst < 1e-8);
}

TEST_CASE("series route stays accurate up to the oracle ceiling")
{
    for (const double t : {0.5, 4.0}) {
        const auto table = lambda_table(t, max_lambda_oracle_degree);
        for (int k = 0; k <= max_lambda_oracle_degree; k += 5) {
            for (int n = 13; n <= max_lambda_oracle_degree; ++n) {
                CHECK(std::abs(table(k, n) - lambda_fourier_oracle(t, k, n)) < 1e-10);
            }
        }
    }
}

TEST_CASE("generating identity")
{
    const Complex samples[] = {0.0, 0.3, Complex(-0.2, 0.4), 0.5};
    const auto rk = milin_generating_identity(koebe(41), 40, samples);
    CHECK(rk.all_pass());
    for (const auto &c : rk.cases()) {
        CHECK(c.lhs < 1e-12);
    }
    const Complex at[] = {0.3};
    const auto ri = milin_generating_identity(identity_function(41), 40, at);
    CHECK(ri.all_pass());
    CHECK(ri.cases()[0].lhs < 1e-10);
    const auto r0 = milin_generating_identity(identity_function(8), 6, std::span<const Complex>(samples, 1));
    CHECK(r0.cases()[0].lhs == 0.0);
    const Complex far[] = {0.6};
    CHECK_THROWS_AS(milin_generating_identity(koebe(8), 6, far), Error);
}

TEST_CASE("A_k integrals")
{
    const auto trivial = LoewnerChain::trivial();
    CHECK(std::abs(a_k_integral(trivial, 1, 0.7, 0.95).value - 4.0) < 1e-12);
    CHECK(std::abs(a_k_moments(trivial, 1, 0.7, 1.0) - 4.0) < 1e-12);

    const auto k = LoewnerChain::koebe();
    for (int j = 1; j <= 6; ++j) {
        double previous = INFINITY;
        for (const double r : {0.9, 0.99, 0.999}) {
            const auto q = a_k_integral(k, j, 0.4, r);
            CHECK(q.min_integrand >= 0.0);
            CHECK(q.value >= -1e-8);
            CHECK(q.value < previous);
            CHECK(std::abs(q.value - a_k_moments(k, j, 0.4, r)) < 1e-9);
            previous = q.value;
        }
        CHECK(std::abs(a_k_moments(k, j, 0.4, 1.0)) < 1e-12);
    }
    // Closed form for k = 1 on the Koebe chain: 4(1 - r^2).
    CHECK(std::abs(a_k_moments(k, 1, 0.0, 0.99) - 4.0 * (1.0 - 0.99 * 0.99)) < 1e-12);

    CHECK(a_k_integral(k, 2, 0.0, 0.95, 64).nodes >= 1280);
    CHECK_THROWS_AS(a_k_integral(k, 2, 0.0, 0.5), Error);
    CHECK_THROWS_AS(a_k_integral(k, 11, 0.0, 0.95), Error);
}

TEST_CASE("A_k on a numeric chain matches quadrature")
{
    const auto chain = LoewnerChain::numeric(DrivingFunction::parse("steps:0:0.4;1:2.5"), 6.0);
    for (const int j : {1, 3}) {
        const auto q = a_k_integral(chain, j, 0.5, 0.9, 1024);
        CHECK(q.min_integrand >= 0.0);
        CHECK(std::abs(q.value - a_k_moments(chain, j, 0.5, 0.9)) < 1e-4 * std::max(1.0, q.value));
    }
}

TEST_CASE("decomposition on closed-form chains")
{
    for (int n = 1; n <= 8; ++n) {
        const auto kr = milin_decomposition_check(koebe(12), LoewnerChain::koebe(), n);
        CHECK(kr.report.all_pass());
        CHECK(std::abs(kr.lhs) < 1e-12);
        CHECK(std::abs(kr.rhs_limit) < 1e-2);
        CHECK(kr.min_g >= -1e-8);
        for (std::size_t i = 1; i < kr.radii.size(); ++i) {
            CHECK(kr.rhs_by_radius[i] < kr.rhs_by_radius[i - 1]);
        }

        const auto ir = milin_decomposition_check(identity_function(12), LoewnerChain::trivial(), n);
        double lhs = 0.0;
        for (int j = 1; j <= n; ++j) {
            lhs += 4.0 / j * (n - j + 1);
        }
        CHECK(ir.lhs == doctest::Approx(lhs).epsilon(1e-14));
        CHECK(ir.report.all_pass());
        for (const double g : ir.g) {
            CHECK(g >= 0.0);
        }
    }
    const auto rot = milin_decomposition_check(transform(koebe(10), Rotation{0.9}), LoewnerChain::koebe(0.9), 5);
    CHECK(rot.report.all_pass());
}

TEST_CASE("decomposition requires a matching chain")
{
    try {
        (void)milin_decomposition_check(koebe(10), LoewnerChain::trivial(), 3);
        FAIL("expected ChainUnavailable");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::ChainUnavailable);
    }
    CHECK_THROWS_AS(chain_for("dilated-koebe"), Error);
    CHECK(chain_for("koebe-rot:0.5").label().find("0.5") != std::string::npos);
    CHECK(chain_for("identity").kind() == LoewnerChain::Kind::trivial);
}
