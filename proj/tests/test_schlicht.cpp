#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <univalent/schlicht.hpp>

using namespace univalent;

TEST_CASE("koebe coefficients")
{
    const auto k = koebe(3);
    CHECK(k.series() == PowerSeries(std::vector<Complex>{0, 1, 2, 3}));
    CHECK(std::abs(ps_eval(koebe(64).series(), 0.5, EvalMode::class_s) - 2.0) < 2e-9);

    const auto k8 = koebe(8);
    const PowerSeries square(std::vector<Complex>{1, -2, 1, 0, 0, 0, 0, 0, 0});
    CHECK(k8.series() * square == PowerSeries::identity(8));
}

TEST_CASE("normalization is enforced")
{
    try {
        ClassSFunction bad(PowerSeries(std::vector<Complex>{0, 2, 1}));
        FAIL("expected NotNormalized");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::NotNormalized);
    }
    CHECK_THROWS_AS(ClassSFunction(PowerSeries(std::vector<Complex>{0.1, 1, 1})), Error);
    const ClassSFunction nearly(PowerSeries(std::vector<Complex>{1e-13, 1.0 + 1e-13, 0.5}));
    CHECK(nearly.coefficient(0) == Complex{});
    CHECK(nearly.coefficient(1) == Complex{1.0});
    CHECK(nearly.coefficient(7) == Complex{});
}

TEST_CASE("elementary transformations")
{
    const auto k = koebe(10);
    const auto rot = transform(k, Rotation{std::numbers::pi});
    for (std::size_t n = 1; n <= 10; ++n) {
        const double expected = (n % 2 == 1 ? 1.0 : -1.0) * static_cast<double>(n);
        CHECK(std::abs(rot.coefficient(n) - expected) < 1e-12 * static_cast<double>(n));
    }

    const auto id = identity_function(6);
    CHECK(transform(id, Dilation{0.3}).series() == id.series());

    const auto f = transform(k, Dilation{0.7});
    const auto same = transform(f, DiskAutomorphism{0.0});
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(std::abs(same.coefficient(n) - f.coefficient(n)) < 1e-14);
    }

    const auto conj = transform(transform(k, Rotation{0.4}), Conjugation{});
    CHECK(std::abs(conj.coefficient(3) - 3.0 * std::polar(1.0, -0.8)) < 1e-12);

    CHECK_THROWS_AS(transform(k, Dilation{1.0}), Error);
    CHECK_THROWS_AS(transform(k, DiskAutomorphism{Complex(0.8, 0.8)}), Error);
}

TEST_CASE("disk automorphism of the identity")
{
    const auto f = transform(identity_function(12), DiskAutomorphism{Complex(0.3, -0.2)});
    // Normalized, it is z / (1 + conj(a) z).
    for (std::size_t n = 1; n <= 12; ++n) {
        const Complex expected = std::pow(-std::conj(Complex(0.3, -0.2)), static_cast<double>(n - 1));
        CHECK(std::abs(f.coefficient(n) - expected) < 1e-12);
    }
}

TEST_CASE("to_sigma")
{
    const auto g = to_sigma(koebe(12));
    CHECK(std::abs(g.b0 + 2.0) < 1e-14);
    CHECK(std::abs(g.tail[0] - 1.0) < 1e-14);
    for (std::size_t n = 1; n < g.tail.size(); ++n) {
        CHECK(std::abs(g.tail[n]) < 1e-12);
    }

    const auto gi = to_sigma(identity_function(8));
    CHECK(gi.b0 == Complex{});
    for (const auto b : gi.tail) {
        CHECK(b == Complex{});
    }

    const ClassSFunction f(PowerSeries(std::vector<Complex>{0, 1, 0, Complex(0.3, 0.1), 0}));
    const auto gf = to_sigma(f);
    CHECK(std::abs(gf.b0) < 1e-15);
    CHECK(std::abs(gf.tail[0] + Complex(0.3, 0.1)) < 1e-15);
    CHECK(std::abs(gf(Complex(2.0, 0)) - (2.0 + gf.tail[0] / 2.0 + gf.tail[1] / 4.0)) < 1e-15);
}

TEST_CASE("to_sigma round trip")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> theta(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> radius(0.2, 0.9);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = transform(transform(koebe(16), Dilation{radius(rng)}), Rotation{theta(rng)});
        const auto back = from_sigma(to_sigma(f));
        REQUIRE(back.order() == 16);
        for (std::size_t n = 0; n <= 16; ++n) {
            CHECK(std::abs(back.coefficient(n) - f.coefficient(n)) < 1e-9);
        }
    }
}

TEST_CASE("odd square-root transform")
{
    const auto h = odd_sqrt_transform(koebe(15));
    for (std::size_t n = 0; n <= 15; ++n) {
        const double expected = (n % 2 == 1) ? 1.0 : 0.0;
        CHECK(std::abs(h.coefficient(n) - expected) < 1e-12);
    }
    CHECK(odd_sqrt_transform(identity_function(9)).series() == identity_function(9).series());

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> theta(0.0, 2.0 * std::numbers::pi);
    std::uniform_real_distribution<double> radius(0.2, 0.9);
    for (int trial = 0; trial < 10; ++trial) {
        const auto f = transform(transform(koebe(20), Dilation{radius(rng)}), Rotation{theta(rng)});
        const auto hf = odd_sqrt_transform(f);
        for (std::size_t n = 0; n <= 20; n += 2) {
            CHECK(std::abs(hf.coefficient(n)) < 1e-12);
        }
        const auto squared = hf.series() * hf.series();
        const auto substituted = ps_compose(f.series(), PowerSeries::monomial(20, 2));
        for (std::size_t n = 0; n <= 20; ++n) {
            CHECK(std::abs(squared[n] - substituted[n]) < 1e-10);
        }
    }
}
