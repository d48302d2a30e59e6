#pragma once

#include "vrs/metric.hpp"
#include "vrs/simplex.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace vrs {

/// True iff (sigma, v) is the responsibility pair of the same-diameter
/// cofacet sigma+v, i.e. sigma is the lexicographically first
/// full-diameter facet of sigma+v. Throws if v is a vertex of sigma.
bool is_responsible(const simplex& sigma, vertex_t v, const distance_matrix& m);

/// Enumerates the vertices v for which (sigma, v) is a responsibility
/// pair, emitting (v, sigma+v) with the lead edge inherited. Candidates
/// are drawn from the intersection of the closed alpha-neighborhoods of
/// sigma's vertices. Emission order: case-1 vertices ascending, then
/// case-2 ascending, then case-3 ascending.
class same_diameter_cofacets {
public:
	/// Root enumerator: materializes the neighborhood intersection from
	/// the shortest member list of nl, confirmed against the matrix.
	same_diameter_cofacets(simplex sigma, const neighborhood_lists& nl,
	                       const distance_matrix& m);

	/// Child enumerator: filters the parent's intersection against the
	/// closed alpha-neighborhood of the newly added vertex.
	same_diameter_cofacets(simplex sigma, const std::vector<vertex_t>& parent_neighborhood,
	                       vertex_t added, const distance_matrix& m);

	std::optional<std::pair<vertex_t, simplex>> next();

	/// The intersection N, ascending by vertex (includes sigma's own
	/// vertices).
	const std::vector<vertex_t>& neighborhood() const { return nbhd_; }

	/// Candidate vertices examined so far.
	std::uint64_t candidates_checked() const { return checked_; }

	const simplex& sigma() const { return sigma_; }

private:
	enum class phase { case1, case2, case3, done };

	void init_ranges();
	std::optional<vertex_t> advance();

	simplex sigma_;
	const distance_matrix* m_;
	std::vector<vertex_t> nbhd_;
	phase phase_ = phase::case1;
	std::size_t pos_ = 0, end_ = 0;
	bool case2_enabled_ = false, case3_enabled_ = false;
	std::uint64_t checked_ = 0;
};

/// Ripser-style baseline: all cofacets sigma+v with v greater than every
/// vertex of sigma and diameter within the threshold, in descending v
/// order (reverse colexicographic), with diameters computed from scratch.
class baseline_cofacets_colex {
public:
	baseline_cofacets_colex(simplex sigma, const distance_matrix& m, value_t threshold);

	std::optional<std::pair<vertex_t, simplex>> next();

private:
	simplex sigma_;
	const distance_matrix* m_;
	value_t threshold_;
	vertex_t v_;
};

} // namespace vrs
