#include "vrs/cofacets.hpp"

#include <algorithm>
#include <limits>

namespace vrs {

namespace {

// Appends v to sigma's vertex tuple, keeping descending order.
simplex extend(const simplex& sigma, vertex_t v, value_t diameter, const edge& lead) {
	std::vector<vertex_t> vs;
	vs.reserve(static_cast<std::size_t>(sigma.dim()) + 2);
	int k = 0;
	while (k <= sigma.dim() && sigma[k] > v) vs.push_back(sigma[k++]);
	vs.push_back(v);
	while (k <= sigma.dim()) vs.push_back(sigma[k++]);
	return simplex(std::move(vs), diameter, lead);
}

} // namespace

bool is_responsible(const simplex& sigma, vertex_t v, const distance_matrix& m) {
	if (sigma.contains(v)) throw data_error("candidate vertex is already in the simplex");
	const value_t alpha = sigma.diameter();
	const int d = sigma.dim();
	const edge& lead = *sigma.lead_edge();

	if (v > sigma[0]) {
		// case 1: any non-expanding vertex above v_d
		for (int k = 0; k <= d; ++k)
			if (m(v, sigma[k]) > alpha) return false;
		return true;
	}
	if (v > sigma[1]) {
		// case 2: needs every full-length edge incident to v_d
		if (lead.s != sigma[0]) return false;
		if (m(v, sigma[0]) > alpha) return false;
		for (int k = 1; k <= d; ++k)
			if (m(v, sigma[k]) >= alpha) return false;
		return true;
	}
	// case 3: needs v_d v_{d-1} to be the unique full-length edge, and the
	// candidate strictly between v_{d-1} and v_{d-2} (no lower bound for an
	// edge)
	if (d >= 2 && v < sigma[2]) return false;
	if (lead.s != sigma[0] || lead.t != sigma[1]) return false;
	for (int k = 0; k <= d; ++k)
		if (m(v, sigma[k]) >= alpha) return false;
	return true;
}

same_diameter_cofacets::same_diameter_cofacets(simplex sigma, const neighborhood_lists& nl,
                                               const distance_matrix& m)
    : sigma_(std::move(sigma)), m_(&m) {
	const value_t alpha = sigma_.diameter();
	// Walk the shortest closed-alpha prefix among the member lists and
	// confirm membership in every other closed neighborhood.
	vertex_t base = sigma_[0];
	std::size_t best_len = std::numeric_limits<std::size_t>::max();
	for (int k = 0; k <= sigma_.dim(); ++k) {
		const auto& list = nl[sigma_[k]];
		auto end = std::upper_bound(list.begin(), list.end(), alpha,
		                            [](value_t a, const auto& e) { return a < e.dist; });
		std::size_t len = static_cast<std::size_t>(end - list.begin());
		if (len < best_len) {
			best_len = len;
			base = sigma_[k];
		}
	}
	for (const auto& e : nl[base]) {
		if (e.dist > alpha) break;
		bool inside = true;
		for (int k = 0; inside && k <= sigma_.dim(); ++k)
			inside = (*m_)(e.vertex, sigma_[k]) <= alpha;
		if (inside) nbhd_.push_back(e.vertex);
	}
	std::sort(nbhd_.begin(), nbhd_.end());
	init_ranges();
}

same_diameter_cofacets::same_diameter_cofacets(simplex sigma,
                                               const std::vector<vertex_t>& parent_neighborhood,
                                               vertex_t added, const distance_matrix& m)
    : sigma_(std::move(sigma)), m_(&m) {
	const value_t alpha = sigma_.diameter();
	nbhd_.reserve(parent_neighborhood.size());
	for (vertex_t w : parent_neighborhood)
		if ((*m_)(w, added) <= alpha) nbhd_.push_back(w);
	init_ranges();
}

void same_diameter_cofacets::init_ranges() {
	const edge& lead = *sigma_.lead_edge();
	case2_enabled_ = lead.s == sigma_[0];
	case3_enabled_ = case2_enabled_ && lead.t == sigma_[1];
	// case-1 range: v > v_d
	pos_ = static_cast<std::size_t>(
	    std::upper_bound(nbhd_.begin(), nbhd_.end(), sigma_[0]) - nbhd_.begin());
	end_ = nbhd_.size();
	phase_ = phase::case1;
}

std::optional<vertex_t> same_diameter_cofacets::advance() {
	const value_t alpha = sigma_.diameter();
	const int d = sigma_.dim();
	while (phase_ != phase::done) {
		while (pos_ < end_) {
			vertex_t v = nbhd_[pos_++];
			if (sigma_.contains(v)) continue;
			++checked_;
			// membership in the closed neighborhoods is already certain;
			// only the strictness conditions remain
			switch (phase_) {
			case phase::case1:
				return v;
			case phase::case2: {
				bool ok = true;
				for (int k = 1; ok && k <= d; ++k) ok = (*m_)(v, sigma_[k]) < alpha;
				if (ok) return v;
				break;
			}
			case phase::case3: {
				bool ok = true;
				for (int k = 0; ok && k <= d; ++k) ok = (*m_)(v, sigma_[k]) < alpha;
				if (ok) return v;
				break;
			}
			case phase::done:
				break;
			}
		}
		switch (phase_) {
		case phase::case1:
			phase_ = phase::case2;
			if (!case2_enabled_) {
				pos_ = end_ = 0;
				break;
			}
			// v_d > v > v_{d-1}
			pos_ = static_cast<std::size_t>(
			    std::upper_bound(nbhd_.begin(), nbhd_.end(), sigma_[1]) - nbhd_.begin());
			end_ = static_cast<std::size_t>(
			    std::lower_bound(nbhd_.begin(), nbhd_.end(), sigma_[0]) - nbhd_.begin());
			break;
		case phase::case2:
			phase_ = phase::case3;
			if (!case3_enabled_) {
				pos_ = end_ = 0;
				break;
			}
			// v_{d-1} > v > v_{d-2}; for an edge the lower bound is -infinity
			pos_ = d >= 2 ? static_cast<std::size_t>(std::upper_bound(nbhd_.begin(), nbhd_.end(),
			                                                          sigma_[2]) -
			                                         nbhd_.begin())
			              : 0;
			end_ = static_cast<std::size_t>(
			    std::lower_bound(nbhd_.begin(), nbhd_.end(), sigma_[1]) - nbhd_.begin());
			break;
		case phase::case3:
		case phase::done:
			phase_ = phase::done;
			break;
		}
	}
	return std::nullopt;
}

std::optional<std::pair<vertex_t, simplex>> same_diameter_cofacets::next() {
	auto v = advance();
	if (!v) return std::nullopt;
	return std::make_pair(*v, extend(sigma_, *v, sigma_.diameter(), *sigma_.lead_edge()));
}

baseline_cofacets_colex::baseline_cofacets_colex(simplex sigma, const distance_matrix& m,
                                                 value_t threshold)
    : sigma_(std::move(sigma)), m_(&m), threshold_(threshold),
      v_(static_cast<vertex_t>(m.size()) - 1) {}

std::optional<std::pair<vertex_t, simplex>> baseline_cofacets_colex::next() {
	while (v_ > sigma_[0]) {
		vertex_t v = v_--;
		value_t diameter = sigma_.diameter();
		bool within = true;
		for (int k = 0; within && k <= sigma_.dim(); ++k) {
			value_t d = (*m_)(v, sigma_[k]);
			diameter = std::max(diameter, d);
			within = diameter <= threshold_;
		}
		if (!within) continue;
		auto cofacet = make_simplex([&] {
			std::vector<vertex_t> vs(sigma_.vertices());
			vs.push_back(v);
			return vs;
		}(), *m_);
		return std::make_pair(v, std::move(cofacet));
	}
	return std::nullopt;
}

} // namespace vrs
