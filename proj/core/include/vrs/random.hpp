#pragma once

#include "vrs/metric.hpp"

#include <cstdint>
#include <random>

namespace vrs {

/// Uniform samples in the unit cube of the given ambient dimension,
/// drawn from a seeded mt19937_64 (the PRNG fixed for reproducible
/// benchmarks and property runs).
inline point_cloud random_unit_cube_cloud(std::size_t n, std::size_t ambient_dim,
                                          std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	std::uniform_real_distribution<value_t> unit(0.0, 1.0);
	point_cloud pc;
	pc.points.resize(n);
	for (auto& p : pc.points) {
		p.resize(ambient_dim);
		for (auto& x : p) x = unit(rng);
	}
	return pc;
}

} // namespace vrs
