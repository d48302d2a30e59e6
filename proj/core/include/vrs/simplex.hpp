#pragma once

#include "vrs/metric.hpp"

#include <optional>
#include <span>
#include <vector>

namespace vrs {

/// An edge with its endpoints in descending order (s > t).
/// Edge order: (a,b) precedes (a',b') iff a < a', or a = a' and b < b'.
struct edge {
	vertex_t s;
	vertex_t t;
	value_t length;

	friend bool operator==(const edge& a, const edge& b) {
		return a.s == b.s && a.t == b.t;
	}
};

inline bool edge_precedes(const edge& a, const edge& b) {
	return a.s < b.s || (a.s == b.s && a.t < b.t);
}

/// A simplex as a strictly descending vertex tuple with its diameter and,
/// for dimension >= 1, the first full-length edge under the edge order.
class simplex {
public:
	simplex(std::vector<vertex_t> descending_vertices, value_t diameter,
	        std::optional<edge> lead_edge)
	    : vertices_(std::move(descending_vertices)), diameter_(diameter),
	      lead_edge_(lead_edge) {}

	int dim() const { return static_cast<int>(vertices_.size()) - 1; }
	value_t diameter() const { return diameter_; }
	const std::optional<edge>& lead_edge() const { return lead_edge_; }
	const std::vector<vertex_t>& vertices() const { return vertices_; }

	/// k-th largest vertex: (*this)[0] is v_d, [dim()] is v_0.
	vertex_t operator[](int k) const { return vertices_[static_cast<std::size_t>(k)]; }

	bool contains(vertex_t v) const;

	bool operator==(const simplex& other) const { return vertices_ == other.vertices_; }

private:
	std::vector<vertex_t> vertices_;
	value_t diameter_;
	std::optional<edge> lead_edge_;
};

/// Builds a simplex from distinct vertices in any order, computing the
/// diameter and lead edge by pair scan. Throws data_error on duplicates
/// or out-of-range vertices.
simplex make_simplex(std::span<const vertex_t> vertices, const distance_matrix& m);

enum class ordering { less, equal, greater };

/// Total order: diameter ascending, then dimension ascending, then
/// lexicographic on the ascending-written vertex tuple.
ordering canonical_cmp(const simplex& a, const simplex& b);

inline bool canonical_less(const simplex& a, const simplex& b) {
	return canonical_cmp(a, b) == ordering::less;
}

enum class facet_case { case1, case2, case3 };

struct facet_classification {
	facet_case case_id;
	simplex facet;
};

/// Locates the lexicographically first full-diameter facet of a simplex
/// of dimension >= 2 via its lead edge: case 1 removes v_d, case 2
/// removes v_{d-1}, case 3 removes v_{d-2}.
facet_classification classify_first_full_diameter_facet(const simplex& tau,
                                                        const distance_matrix& m);

/// All d+1 facets with recomputed diameters and lead edges, in order of
/// removed vertex v_d, ..., v_0.
std::vector<simplex> facets(const simplex& sigma, const distance_matrix& m);

/// The cofacet sigma+v of a same-diameter responsibility pair keeps
/// sigma's lead edge; no distances are recomputed. Throws if the
/// diameter would grow.
edge inherit_lead_edge(const simplex& sigma, vertex_t v, const distance_matrix& m);

/// Textual rendering `dim diameter v_d,...,v_0`.
std::string format_simplex(const simplex& s);

} // namespace vrs
