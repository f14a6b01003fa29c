#include <univalent/sampling.hpp>

#include <cmath>
#include <numbers>

namespace univalent
{

namespace
{

Complex disk_point(std::mt19937_64 &rng, double r_max)
{
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double r = r_max * std::sqrt(u(rng));
    const double theta = 2.0 * std::numbers::pi * u(rng);
    return std::polar(r, theta);
}

} // namespace

ClassSFunction random_schlicht(std::mt19937_64 &rng, std::size_t order)
{
    std::uniform_real_distribution<double> radius(0.5, 0.95);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    std::bernoulli_distribution coin(0.5);

    const double r = radius(rng);
    const double theta = angle(rng);
    const bool use_automorphism = coin(rng);
    const Complex a = disk_point(rng, 0.3);
    const bool conjugate = coin(rng);

    ClassSFunction f = transform(koebe(4 * order), Dilation{r});
    f = transform(f, Rotation{theta});
    if (use_automorphism) {
        f = transform(f, DiskAutomorphism{a});
    }
    if (conjugate) {
        f = transform(f, Conjugation{});
    }
    std::string label = "random(r=" + std::to_string(r) + ",theta=" + std::to_string(theta);
    if (use_automorphism) {
        label += ",a=(" + std::to_string(a.real()) + "," + std::to_string(a.imag()) + ")";
    }
    label += conjugate ? ",conj)" : ")";
    return ClassSFunction(f.series().with_order(order), label);
}

std::vector<Complex> random_alpha(std::mt19937_64 &rng, std::size_t n, double bound)
{
    std::vector<Complex> alpha(n);
    for (auto &a : alpha) {
        a = disk_point(rng, bound);
    }
    return alpha;
}

std::vector<Complex> random_disk_points(std::mt19937_64 &rng, std::size_t count, double r_max)
{
    std::vector<Complex> pts(count);
    for (auto &z : pts) {
        z = disk_point(rng, r_max);
    }
    return pts;
}

} // namespace univalent
