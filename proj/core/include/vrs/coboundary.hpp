#pragma once

#include "vrs/metric.hpp"
#include "vrs/simplex.hpp"

#include <cstdint>
#include <optional>
#include <queue>
#include <unordered_map>
#include <vector>

namespace vrs {

struct coboundary_stats {
	std::uint64_t init_pops = 0;       // pops up to and including the apparent candidate
	std::uint64_t baseline_visits = 0; // index-scan cost n - candidate_vertex
	std::uint64_t emissions = 0;
};

struct cofacet_emission {
	vertex_t vertex;
	value_t diameter;
};

/// Generates all cofacets of a simplex in non-decreasing diameter order
/// using the sorted neighborhood lists. Phases:
///   1. walk each neighbor list prefix with distance strictly below the
///      diameter, pushing vertices into a priority queue;
///   2. drain the queue in descending vertex order, counting sightings;
///      the first non-member reaching full count is the apparent-pair
///      candidate;
///   3. emit remaining full-count vertices as same-diameter cofacets;
///   4. advance whichever list pointer has the smallest next distance
///      (ties: largest member vertex first), emitting each vertex on its
///      final sighting, whose distance is the cofacet diameter.
class coboundary_enumerator {
public:
	coboundary_enumerator(simplex sigma, const neighborhood_lists& nl,
	                      const distance_matrix& m,
	                      std::optional<value_t> threshold = std::nullopt);

	std::optional<cofacet_emission> next();

	/// Runs phases 1-2 only; the returned vertex is the candidate for an
	/// apparent pair, absent when the queue drains without one.
	std::optional<vertex_t> apparent_candidate();

	const coboundary_stats& stats() const { return stats_; }

	/// The pointer table P, indexed like sigma's vertex tuple.
	const std::vector<std::size_t>& pointers() const { return pointers_; }

private:
	enum class phase { init, same_diameter, expanding, done };

	void run_init();                 // phases 1-2
	void finish_same_diameter();     // drain the queue, collect full counts
	std::optional<cofacet_emission> advance_expanding();

	simplex sigma_;
	const neighborhood_lists* nl_;
	const distance_matrix* m_;
	std::optional<value_t> threshold_;
	phase phase_ = phase::init;

	std::vector<std::size_t> pointers_;             // P
	std::unordered_map<vertex_t, int> counts_;      // V
	std::priority_queue<vertex_t> queue_;           // V_L1, largest vertex first
	std::optional<vertex_t> candidate_;
	std::vector<vertex_t> pending_;                 // same-diameter emissions, ascending
	std::size_t pending_pos_ = 0;
	coboundary_stats stats_;
};

/// Fast path for apparent-pair detection: phases 1-2 of the enumerator.
std::optional<std::pair<vertex_t, coboundary_stats>>
apparent_candidate(const simplex& sigma, const neighborhood_lists& nl,
                   const distance_matrix& m);

/// Exact predicate: sigma and tau = sigma+w form an apparent pair iff
/// they share a diameter, sigma is tau's lexicographically first
/// full-diameter facet, and w is the maximal vertex whose addition
/// preserves the diameter (closed neighborhoods). Throws if sigma is
/// not a facet of tau.
bool is_apparent_pair(const simplex& sigma, const simplex& tau, const distance_matrix& m);

/// The apparent-pair partner of sigma, when one exists: adds the maximal
/// diameter-preserving vertex and confirms with the exact predicate.
std::optional<simplex> apparent_cofacet(const simplex& sigma, const neighborhood_lists& nl,
                                        const distance_matrix& m);

} // namespace vrs
