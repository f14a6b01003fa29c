#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <univalent/functionals.hpp>
#include <univalent/sampling.hpp>

using namespace univalent;

namespace
{

std::vector<Complex> polar_grid(std::size_t radial, std::size_t angular, double r_max)
{
    std::vector<Complex> pts;
    for (std::size_t i = 1; i <= radial; ++i) {
        const double r = r_max * static_cast<double>(i) / static_cast<double>(radial);
        for (std::size_t j = 0; j < angular; ++j) {
            pts.push_back(std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(angular)));
        }
    }
    return pts;
}

} // namespace

TEST_CASE("area sum")
{
    CHECK(area_sum(to_sigma(koebe(24)), 22) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(area_sum(to_sigma(identity_function(10)), 8) == 0.0);
    const double dilated = area_sum(to_sigma(transform(koebe(40), Dilation{0.9})), 38);
    CHECK(dilated >= 0.0);
    CHECK(dilated <= 1.0);
    CHECK_THROWS_AS(area_sum(to_sigma(koebe(6)), 5), Error);
}

TEST_CASE("coefficient report")
{
    const auto rk = coefficient_report(koebe(20), 20);
    CHECK(rk.all_pass());
    for (const auto &c : rk.cases()) {
        if (c.id.rfind("bieberbach", 0) == 0) {
            CHECK(c.lhs == c.rhs);
        }
    }
    CHECK(coefficient_report(identity_function(10), 10).all_pass());
    const auto half = transform(koebe(12), Dilation{0.5});
    for (std::size_t n = 2; n <= 12; ++n) {
        CHECK(std::abs(half.coefficient(n)) == doctest::Approx(static_cast<double>(n) * std::pow(0.5, n - 1.0)));
    }
    CHECK(coefficient_report(half, 12).all_pass());

    const ClassSFunction too_big(PowerSeries(std::vector<Complex>{0, 1, 2.5}));
    CHECK_FALSE(coefficient_report(too_big, 2).all_pass());
}

TEST_CASE("integral means")
{
    CHECK(integral_mean(identity_function(4), 1.0, 0.37) == doctest::Approx(0.37).epsilon(1e-14));
    CHECK(integral_mean(identity_function(4), 3.5, 0.8) == doctest::Approx(0.8).epsilon(1e-14));
    CHECK(integral_mean(koebe(64), 1.0, 0.5) <= 1.0);

    double parseval = 0.0;
    for (int n = 1; n <= 64; ++n) {
        parseval += n * n * std::pow(0.3, 2.0 * n);
    }
    CHECK(std::abs(integral_mean(koebe(64), 2.0, 0.3) - std::sqrt(parseval)) < 1e-8);

    try {
        (void)integral_mean(koebe(8), 1.0, 0.995);
        FAIL("expected RadiusExceeded");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::RadiusExceeded);
    }
    CHECK_THROWS_AS(integral_mean(koebe(8), 1.0, 0.5, 128), Error);
}

TEST_CASE("Parseval ties quadrature to coefficients")
{
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = random_schlicht(rng, 32);
        for (const double r : {0.2, 0.5, 0.7}) {
            double sum = 0.0;
            for (std::size_t n = 1; n <= 32; ++n) {
                sum += std::norm(f.coefficient(n)) * std::pow(r, 2.0 * static_cast<double>(n));
            }
            const double m2 = integral_mean(f, 2.0, r);
            CHECK(std::abs(m2 * m2 - sum) < 1e-8);
        }
    }
}

TEST_CASE("Littlewood chain")
{
    const std::size_t idx[] = {4, 8, 16};
    const auto rep = littlewood_report(koebe(256), idx);
    CHECK(rep.all_pass());
    CHECK(rep.cases().size() == 15);
}

TEST_CASE("pointwise bounds")
{
    const auto k = koebe(512);
    const Complex pts[] = {0.5};
    const auto rep = pointwise_bounds_check(k, pts);
    CHECK(rep.all_pass());
    for (const auto &c : rep.cases()) {
        if (c.id.find("distortion_upper") != std::string::npos) {
            CHECK(c.lhs == doctest::Approx(12.0).epsilon(1e-9));
            CHECK(c.rhs == doctest::Approx(12.0).epsilon(1e-15));
        }
        if (c.id.find("growth_upper") != std::string::npos) {
            CHECK(c.lhs == doctest::Approx(2.0).epsilon(1e-9));
        }
    }

    const auto grid = polar_grid(6, 8, 0.9);
    CHECK(pointwise_bounds_check(identity_function(4), grid).all_pass());
}

TEST_CASE("pointwise bounds on generated functions")
{
    std::mt19937_64 rng(29);
    const auto grid = polar_grid(8, 8, 0.95);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = random_schlicht(rng, 128);
        const auto rep = pointwise_bounds_check(f, grid);
        CHECK_MESSAGE(rep.all_pass(), f.label());
    }
}

TEST_CASE("Robertson sums")
{
    const auto s = robertson_sums(koebe(61), 31);
    for (std::size_t n = 1; n <= 31; ++n) {
        CHECK(s[n - 1] == doctest::Approx(static_cast<double>(n)).epsilon(1e-12));
    }
    for (const double v : robertson_sums(identity_function(11), 6)) {
        CHECK(v == 1.0);
    }
    const auto d = robertson_sums(transform(koebe(21), Dilation{0.8}), 11);
    for (std::size_t n = 2; n <= 11; ++n) {
        CHECK(d[n - 1] < static_cast<double>(n));
    }
    CHECK_THROWS_AS(robertson_sums(koebe(8), 5), Error);
}

TEST_CASE("logarithmic coefficients")
{
    const auto gk = log_coefficients(koebe(16), 15).gamma;
    for (std::size_t k = 1; k <= 15; ++k) {
        CHECK(std::abs(gk[k - 1] - 1.0 / static_cast<double>(k)) < 1e-13);
    }
    for (const auto g : log_coefficients(identity_function(8), 7).gamma) {
        CHECK(g == Complex{});
    }
    const double theta = 0.7;
    const auto gr = log_coefficients(transform(koebe(16), Rotation{theta}), 15).gamma;
    for (std::size_t k = 1; k <= 15; ++k) {
        const Complex expected = std::polar(1.0 / static_cast<double>(k), theta * static_cast<double>(k));
        CHECK(std::abs(gr[k - 1] - expected) < 1e-12);
    }
    CHECK_THROWS_AS(log_coefficients(koebe(8), 8), Error);
}

TEST_CASE("Milin functional")
{
    for (std::size_t n = 1; n <= 30; ++n) {
        const auto v = milin_functional(koebe(31), n);
        CHECK(std::abs(v.milin) < 1e-10);
        CHECK(std::abs(v.weinstein_form) < 1e-10);
    }
    CHECK(milin_functional(identity_function(4), 1).milin == -1.0);
    CHECK(milin_functional(transform(koebe(11), Dilation{0.9}), 10).milin < 0.0);

    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const auto f = random_schlicht(rng, 21);
        const auto v = milin_functional(f, 20);
        CHECK(v.milin <= 1e-9);
        CHECK(std::abs(v.weinstein_form + 4.0 * v.milin) < 1e-10 * std::max(1.0, std::abs(v.milin)));
    }
}

TEST_CASE("Lebedev-Milin inequality")
{
    const Complex zero[] = {0.0};
    const auto z = lebedev_milin_check(zero, 1);
    CHECK(z.lhs == 1.0);
    CHECK(z.rhs == doctest::Approx(2.0 * std::exp(-0.5)).epsilon(1e-15));

    const Complex eq[] = {1.0, 0.5};
    const auto e = lebedev_milin_check(eq, 2);
    CHECK(std::abs(e.lhs - 3.0) < 1e-10);
    CHECK(std::abs(e.rhs - 3.0) < 1e-10);

    std::mt19937_64 rng(37);
    for (int trial = 0; trial < 50; ++trial) {
        const auto alpha = random_alpha(rng, 8, 2.0);
        const auto v = lebedev_milin_check(alpha, 8);
        CHECK(v.lhs <= v.rhs * (1.0 + 1e-12));
    }
}

TEST_CASE("Lebedev-Milin exponent forms")
{
    // The double sum equals the (n+1-k)-weighted single sum.
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const auto alpha = random_alpha(rng, 12, 1.5);
        const auto v = lebedev_milin_check(alpha, 12);
        CHECK(std::abs(v.exponent - v.exponent_weighted) < 1e-12 * std::max(1.0, std::abs(v.exponent)));
    }
}
