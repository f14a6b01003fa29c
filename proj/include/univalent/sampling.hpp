#ifndef UNIVALENT_SAMPLING_HPP
#define UNIVALENT_SAMPLING_HPP

#include <random>
#include <string>
#include <vector>

#include <univalent/schlicht.hpp>

namespace univalent
{

/// A seeded member of S: Koebe at four times the target order, then a
/// dilation (r in [0.5, 0.95]), a rotation, an optional disk automorphism
/// (|a| <= 0.3) and an optional conjugation, truncated to `order`.
/// Coefficients up to `order` are those of the untruncated function.
ClassSFunction random_schlicht(std::mt19937_64 &rng, std::size_t order);

/// alpha_1 .. alpha_n with |alpha_k| <= bound, uniform in the disk.
std::vector<Complex> random_alpha(std::mt19937_64 &rng, std::size_t n, double bound);

/// Uniform points in the disk |z| <= r_max.
std::vector<Complex> random_disk_points(std::mt19937_64 &rng, std::size_t count, double r_max);

} // namespace univalent

#endif
