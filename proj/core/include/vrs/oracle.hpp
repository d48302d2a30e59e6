#pragma once

#include "vrs/metric.hpp"
#include "vrs/simplex.hpp"

#include <utility>
#include <vector>

namespace vrs::oracle {

// Brute-force references for verification. These deliberately avoid the
// neighborhood lists, lead edges, and case logic of the fast paths; only
// full pair scans over the distance matrix.

/// All (dim+1)-subsets with max pairwise distance <= threshold, sorted
/// by canonical_cmp.
std::vector<simplex> brute_simplices(const distance_matrix& m, int dim, value_t threshold);

/// All w outside sigma with diam(sigma+w) <= threshold, sorted by
/// (diameter, vertex).
std::vector<std::pair<vertex_t, value_t>>
brute_cofacets(const simplex& sigma, const distance_matrix& m, value_t threshold);

/// Among facets of equal diameter, the minimal one under lexicographic
/// comparison of descending vertex tuples. Requires dim >= 2.
simplex brute_first_full_diameter_facet(const simplex& tau, const distance_matrix& m);

/// All apparent pairs (sigma of the given dimension, tau = sigma+w) with
/// shared diameter <= threshold.
std::vector<std::pair<simplex, simplex>>
brute_apparent_pairs(const distance_matrix& m, int dim, value_t threshold);

} // namespace vrs::oracle
