#include "vrs/simplex.hpp"

#include <algorithm>
#include <functional>

namespace vrs {

bool simplex::contains(vertex_t v) const {
	// vertices_ is descending
	return std::binary_search(vertices_.begin(), vertices_.end(), v, std::greater<vertex_t>());
}

simplex make_simplex(std::span<const vertex_t> vertices, const distance_matrix& m) {
	if (vertices.empty()) throw data_error("a simplex needs at least one vertex");
	std::vector<vertex_t> vs(vertices.begin(), vertices.end());
	std::sort(vs.begin(), vs.end(), std::greater<vertex_t>());
	if (std::adjacent_find(vs.begin(), vs.end()) != vs.end())
		throw data_error("duplicate vertex in simplex");
	if (vs.front() >= static_cast<vertex_t>(m.size()) || vs.back() < 0)
		throw data_error("vertex out of range");

	value_t diameter = 0;
	std::optional<edge> lead;
	for (std::size_t i = 0; i < vs.size(); ++i)
		for (std::size_t j = i + 1; j < vs.size(); ++j) {
			value_t d = m(vs[i], vs[j]);
			edge e{vs[i], vs[j], d};
			if (d > diameter) {
				diameter = d;
				lead = e;
			} else if (d == diameter && (!lead || edge_precedes(e, *lead))) {
				lead = e;
			}
		}
	return simplex(std::move(vs), diameter, lead);
}

ordering canonical_cmp(const simplex& a, const simplex& b) {
	if (a.diameter() != b.diameter())
		return a.diameter() < b.diameter() ? ordering::less : ordering::greater;
	if (a.dim() != b.dim()) return a.dim() < b.dim() ? ordering::less : ordering::greater;
	// lexicographic on the ascending-written tuple = reversed storage order
	const auto& va = a.vertices();
	const auto& vb = b.vertices();
	if (std::lexicographical_compare(va.rbegin(), va.rend(), vb.rbegin(), vb.rend()))
		return ordering::less;
	if (std::lexicographical_compare(vb.rbegin(), vb.rend(), va.rbegin(), va.rend()))
		return ordering::greater;
	return ordering::equal;
}

facet_classification classify_first_full_diameter_facet(const simplex& tau,
                                                        const distance_matrix& m) {
	if (tau.dim() < 2) throw data_error("classification requires dimension >= 2");
	const edge& lead = *tau.lead_edge();
	int remove; // position of the removed vertex in the descending tuple
	facet_case id;
	if (lead.s != tau[0]) {
		id = facet_case::case1;
		remove = 0;
	} else if (lead.t != tau[1]) {
		id = facet_case::case2;
		remove = 1;
	} else {
		id = facet_case::case3;
		remove = 2;
	}
	std::vector<vertex_t> vs;
	vs.reserve(static_cast<std::size_t>(tau.dim()));
	for (int k = 0; k <= tau.dim(); ++k)
		if (k != remove) vs.push_back(tau[k]);
	return {id, make_simplex(vs, m)};
}

std::vector<simplex> facets(const simplex& sigma, const distance_matrix& m) {
	std::vector<simplex> result;
	result.reserve(static_cast<std::size_t>(sigma.dim()) + 1);
	for (int remove = 0; remove <= sigma.dim(); ++remove) {
		std::vector<vertex_t> vs;
		vs.reserve(static_cast<std::size_t>(sigma.dim()));
		for (int k = 0; k <= sigma.dim(); ++k)
			if (k != remove) vs.push_back(sigma[k]);
		result.push_back(make_simplex(vs, m));
	}
	return result;
}

edge inherit_lead_edge(const simplex& sigma, vertex_t v, const distance_matrix& m) {
	value_t grown = sigma.diameter();
	for (int k = 0; k <= sigma.dim(); ++k) grown = std::max(grown, m(v, sigma[k]));
	if (grown != sigma.diameter())
		throw data_error("not a same-diameter pair: diameter would grow");
	return *sigma.lead_edge();
}

std::string format_simplex(const simplex& s) {
	std::string out = std::to_string(s.dim());
	out += ' ';
	out += format_value(s.diameter());
	out += ' ';
	for (int k = 0; k <= s.dim(); ++k) {
		if (k > 0) out += ',';
		out += std::to_string(s[k]);
	}
	return out;
}

} // namespace vrs
