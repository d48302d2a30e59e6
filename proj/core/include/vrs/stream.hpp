#pragma once

#include "vrs/cofacets.hpp"
#include "vrs/metric.hpp"
#include "vrs/simplex.hpp"

#include <cstdint>
#include <deque>
#include <memory>
#include <optional>
#include <vector>

namespace vrs {

struct stream_stats {
	std::vector<std::uint64_t> emitted_per_dim;
	std::size_t max_stack_depth = 0;
	std::uint64_t candidate_checks = 0;
	std::uint64_t apparent_skipped = 0;

	void count_emission(int dim);
};

/// Vertices 0..n-1 ascending, diameter 0.
std::vector<simplex> vertex_stream(const distance_matrix& m);

/// All edges with length <= threshold, sorted by canonical_cmp.
std::vector<simplex> edge_stream(const distance_matrix& m, value_t threshold);

/// Lazy per-dimension stream: for each edge in filtration order, a
/// depth-first search over same-diameter cofacet chains emits every
/// simplex of the target dimension exactly once, with non-decreasing
/// diameters. Live state is one enumerator per stack level, at most
/// target_dim - 1 deep.
class simplex_stream {
public:
	simplex_stream(const distance_matrix& m, const neighborhood_lists& nl, int target_dim,
	               value_t threshold, bool skip_apparent = false);

	std::optional<simplex> next();

	const stream_stats& stats() const { return stats_; }

private:
	const distance_matrix* m_;
	const neighborhood_lists* nl_;
	int target_dim_;
	bool skip_apparent_;
	std::vector<simplex> edges_;
	std::size_t edge_pos_ = 0;
	std::vector<same_diameter_cofacets> stack_;
	stream_stats stats_;
};

/// All vertices, edges, and dim-2..max_dim simplices merged into one
/// sequence totally ordered by canonical_cmp (faces before cofaces).
class full_filtration_stream {
public:
	full_filtration_stream(const distance_matrix& m, const neighborhood_lists& nl,
	                       int max_dim, value_t threshold);
	~full_filtration_stream();

	std::optional<simplex> next();

	struct source;

private:
	std::vector<std::unique_ptr<source>> sources_;
};

/// Generate-then-sort baseline: expands each layer from the previous one
/// via reverse-colexicographic cofacets, then sorts canonically.
std::vector<simplex> baseline_simplex_stream(const distance_matrix& m, int target_dim,
                                             value_t threshold);

} // namespace vrs
