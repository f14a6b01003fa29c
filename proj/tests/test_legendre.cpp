#include <doctest.h>

#include <cmath>
#include <numbers>

#include <univalent/legendre.hpp>

using namespace univalent;

TEST_CASE("low-degree polynomials")
{
    CHECK(legendre_poly(0).poly == RationalPoly({Rational(1)}));
    CHECK(legendre_poly(1).poly == RationalPoly({Rational(0), Rational(1)}));
    CHECK(legendre_poly(2).poly == RationalPoly({Rational(-1, 2), Rational(0), Rational(3, 2)}));
    CHECK(to_string(legendre_poly(2).poly.coefficient(0)) == "-1/2");
    CHECK(legendre_poly(2)(0.5) == -0.125);
    CHECK_THROWS_AS(legendre_poly(65), Error);
    CHECK_THROWS_AS(legendre_poly(-1), Error);
}

TEST_CASE("value at one and parity")
{
    for (int n = 0; n <= 20; ++n) {
        const auto &p = legendre_poly(n).poly;
        CHECK(p(Rational(1)) == 1);
        for (int k = 0; k <= n; ++k) {
            if ((n - k) % 2 != 0) {
                CHECK(p.coefficient(k) == 0);
            }
        }
    }
}

TEST_CASE("recurrence matches independent constructions exactly")
{
    for (int n = 0; n <= 20; ++n) {
        CHECK(legendre_poly(n).poly == legendre_rodrigues(n).poly);
        CHECK(legendre_poly(n).poly == legendre_explicit_sum(n).poly);
    }
}

TEST_CASE("orthogonality")
{
    // Composite Simpson on [-1, 1].
    const int m = 20000;
    const double h = 2.0 / m;
    for (int a = 0; a <= 12; ++a) {
        for (int b = a; b <= 12; ++b) {
            double acc = 0.0;
            for (int i = 0; i <= m; ++i) {
                const double x = -1.0 + h * i;
                const double w = (i == 0 || i == m) ? 1.0 : (i % 2 ? 4.0 : 2.0);
                acc += w * legendre_poly(a)(x) * legendre_poly(b)(x);
            }
            acc *= h / 3.0;
            const double expected = (a == b) ? 2.0 / (2 * a + 1) : 0.0;
            CHECK(std::abs(acc - expected) < 1e-9);
        }
    }
}

TEST_CASE("associated functions")
{
    CHECK(assoc_legendre(2, 1, 0.6) == doctest::Approx(-1.44).epsilon(1e-14));
    CHECK(assoc_legendre(2, -1, 0.6) == doctest::Approx(0.24).epsilon(1e-14));
    for (int n = 0; n <= 10; ++n) {
        for (const double x : {-0.9, -0.2, 0.0, 0.45, 1.0}) {
            CHECK(assoc_legendre(n, 0, x) == legendre_poly(n)(x));
        }
    }
    for (int n = 1; n <= 10; ++n) {
        for (int m = 1; m <= n; ++m) {
            for (int i = 0; i < 50; ++i) {
                const double x = -1.0 + 2.0 * (i + 0.5) / 50.0;
                const double sign = (m % 2 == 0) ? 1.0 : -1.0;
                const double expected = sign * factorial_ratio(n, m) * assoc_legendre(n, m, x);
                CHECK(std::abs(assoc_legendre(n, -m, x) - expected) < 1e-10);
            }
        }
    }
    try {
        (void)assoc_legendre(3, 4, 0.1);
        FAIL("expected OrderOutOfRange");
    } catch (const Error &e) {
        CHECK(e.code() == Errc::OrderOutOfRange);
    }
    CHECK_THROWS_AS(assoc_legendre(3, 1, 1.5), Error);
}

TEST_CASE("generating function partial sums")
{
    CHECK(std::abs(generating_partial_sum(0.3, 0.2, 30) - 1.0 / std::sqrt(0.92)) < 1e-10);
    CHECK(generating_partial_sum(0.7, 0.0, 10) == 1.0);
    CHECK(std::abs(generating_partial_sum(1.0, 0.5, 40) - 2.0) < 1e-10);
}

TEST_CASE("Schlafli integral")
{
    CHECK(std::abs(schlafli_coeff(2, 0.5) - (-0.125)) < 1e-8);
    CHECK(std::abs(schlafli_coeff(0, Complex(0.2, 0.3)) - 1.0) < 1e-12);
    CHECK(std::abs(schlafli_coeff(5, 0.9) - legendre_poly(5)(0.9)) < 1e-8);
    CHECK_THROWS_AS(schlafli_coeff(3, 0.1, 256), Error);
}

TEST_CASE("differential equation")
{
    CHECK(ode_residual(1, 0.3) == 0.0);
    CHECK(std::abs(ode_residual(4, 0.7)) < 1e-9);
    CHECK(std::abs(ode_residual(10, -0.2)) < 1e-9);
}

TEST_CASE("addition theorem")
{
    CHECK(addition_theorem_residual(0.8, 0.8, 0.0, 6) < 1e-10);
    CHECK(addition_theorem_residual(std::numbers::pi / 3, std::numbers::pi / 3, 1.1, 2) < 1e-10);
    CHECK(addition_theorem_residual(0.4, 1.2, 2.5, 7) < 1e-9);
}
