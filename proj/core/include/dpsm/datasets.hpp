#pragma once

#include "dpsm/point_set.hpp"

#include <cstdint>
#include <string>

namespace dpsm {

enum class DatasetShape { circles, moons };

DatasetShape parse_shape(const std::string& name); // throws input_error

/// Labeled 2-d benchmark generators, deterministic per seed (the RNG and
/// Gaussian sampling are implemented here so files are byte-identical
/// across platforms).
///
/// circles: two concentric rings (radii 1.0 and 0.5, half the points
/// each) sampled on an even angular grid with Gaussian noise on the
/// radius. moons: two interleaved half-circles offset by (1, 0.5),
/// sampled on an even arc grid with Gaussian noise along each arc's
/// normal. Throws input_error when n < 4.
PointSet generate_points(DatasetShape shape, std::size_t n, double noise, std::uint64_t seed);

} // namespace dpsm
