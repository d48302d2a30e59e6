#pragma once

#include "vrs/metric.hpp"
#include "vrs/random.hpp"
#include "vrs/simplex.hpp"

#include <random>
#include <vector>

namespace vrstest {

// The eight-points-on-a-circle fixture, as literal two-decimal values.
inline vrs::distance_matrix circle8() {
	const double row[8][8] = {
	    {0.00, 0.77, 1.41, 1.85, 2.00, 1.85, 1.41, 0.77},
	    {0.77, 0.00, 0.77, 1.41, 1.85, 2.00, 1.85, 1.41},
	    {1.41, 0.77, 0.00, 0.77, 1.41, 1.85, 2.00, 1.85},
	    {1.85, 1.41, 0.77, 0.00, 0.77, 1.41, 1.85, 2.00},
	    {2.00, 1.85, 1.41, 0.77, 0.00, 0.77, 1.41, 1.85},
	    {1.85, 2.00, 1.85, 1.41, 0.77, 0.00, 0.77, 1.41},
	    {1.41, 1.85, 2.00, 1.85, 1.41, 0.77, 0.00, 0.77},
	    {0.77, 1.41, 1.85, 2.00, 1.85, 1.41, 0.77, 0.00},
	};
	vrs::distance_matrix m(8);
	for (vrs::vertex_t i = 0; i < 8; ++i)
		for (vrs::vertex_t j = 0; j < i; ++j) m.set(i, j, row[i][j]);
	return m;
}

inline vrs::distance_matrix random_cloud_matrix(std::size_t n, std::size_t ambient_dim,
                                                std::uint64_t seed) {
	return vrs::distance_matrix_from_points(vrs::random_unit_cube_cloud(n, ambient_dim, seed));
}

// Symmetric matrix with distances from a tiny discrete set; exercises the
// exact-equality tie handling that generic clouds never hit.
inline vrs::distance_matrix random_tie_rich_matrix(std::size_t n, std::uint64_t seed) {
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<int> level(1, 3);
	vrs::distance_matrix m(n);
	for (vrs::vertex_t i = 0; i < static_cast<vrs::vertex_t>(n); ++i)
		for (vrs::vertex_t j = 0; j < i; ++j) m.set(i, j, static_cast<vrs::value_t>(level(rng)));
	return m;
}

inline vrs::simplex make(std::initializer_list<vrs::vertex_t> vs, const vrs::distance_matrix& m) {
	return vrs::make_simplex(std::vector<vrs::vertex_t>(vs), m);
}

} // namespace vrstest
