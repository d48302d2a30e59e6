#include "vrs/oracle.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace vrs::oracle {

namespace {

value_t pair_scan_diameter(const std::vector<vertex_t>& vs, const distance_matrix& m) {
	value_t diameter = 0;
	for (std::size_t i = 0; i < vs.size(); ++i)
		for (std::size_t j = i + 1; j < vs.size(); ++j)
			diameter = std::max(diameter, m(vs[i], vs[j]));
	return diameter;
}

void enumerate_subsets(std::size_t n, std::size_t k,
                       const std::function<void(const std::vector<vertex_t>&)>& visit) {
	std::vector<vertex_t> pick(k);
	// odometer over ascending k-subsets of 0..n-1
	for (std::size_t i = 0; i < k; ++i) pick[i] = static_cast<vertex_t>(i);
	if (k > n) return;
	while (true) {
		visit(pick);
		std::size_t i = k;
		while (i-- > 0) {
			if (pick[i] < static_cast<vertex_t>(n - k + i)) {
				++pick[i];
				for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
				break;
			}
			if (i == 0) return;
		}
	}
}

} // namespace

std::vector<simplex> brute_simplices(const distance_matrix& m, int dim, value_t threshold) {
	std::vector<simplex> out;
	enumerate_subsets(m.size(), static_cast<std::size_t>(dim) + 1,
	                  [&](const std::vector<vertex_t>& vs) {
		                  if (pair_scan_diameter(vs, m) <= threshold)
			                  out.push_back(make_simplex(vs, m));
	                  });
	std::sort(out.begin(), out.end(), canonical_less);
	return out;
}

std::vector<std::pair<vertex_t, value_t>>
brute_cofacets(const simplex& sigma, const distance_matrix& m, value_t threshold) {
	std::vector<std::pair<vertex_t, value_t>> out;
	for (vertex_t w = 0; w < static_cast<vertex_t>(m.size()); ++w) {
		if (sigma.contains(w)) continue;
		std::vector<vertex_t> vs(sigma.vertices());
		vs.push_back(w);
		value_t diameter = pair_scan_diameter(vs, m);
		if (diameter <= threshold) out.emplace_back(w, diameter);
	}
	std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
		return a.second < b.second || (a.second == b.second && a.first < b.first);
	});
	return out;
}

simplex brute_first_full_diameter_facet(const simplex& tau, const distance_matrix& m) {
	if (tau.dim() < 2) throw data_error("needs dimension >= 2");
	std::optional<std::vector<vertex_t>> best;
	for (int remove = 0; remove <= tau.dim(); ++remove) {
		std::vector<vertex_t> vs;
		for (int k = 0; k <= tau.dim(); ++k)
			if (k != remove) vs.push_back(tau[k]);
		if (pair_scan_diameter(vs, m) != tau.diameter()) continue;
		// minimal under lexicographic comparison of descending tuples
		if (!best || std::lexicographical_compare(vs.begin(), vs.end(), best->begin(),
		                                          best->end()))
			best = std::move(vs);
	}
	return make_simplex(*best, m);
}

std::vector<std::pair<simplex, simplex>>
brute_apparent_pairs(const distance_matrix& m, int dim, value_t threshold) {
	std::vector<std::pair<simplex, simplex>> out;
	for (const auto& sigma : brute_simplices(m, dim, threshold)) {
		// lexicographically last same-diameter cofacet = maximal added vertex
		std::optional<vertex_t> last;
		for (vertex_t w = static_cast<vertex_t>(m.size()) - 1; w >= 0 && !last; --w) {
			if (sigma.contains(w)) continue;
			std::vector<vertex_t> vs(sigma.vertices());
			vs.push_back(w);
			if (pair_scan_diameter(vs, m) == sigma.diameter()) last = w;
		}
		if (!last) continue;
		std::vector<vertex_t> vs(sigma.vertices());
		vs.push_back(*last);
		simplex tau = make_simplex(vs, m);
		// sigma must in turn be tau's lexicographically first same-diameter facet
		if (brute_first_full_diameter_facet(tau, m) == sigma) out.emplace_back(sigma, tau);
	}
	return out;
}

} // namespace vrs::oracle
