#include "vrs/coboundary.hpp"

#include "vrs/simplex.hpp"

#include <algorithm>

namespace vrs {

coboundary_enumerator::coboundary_enumerator(simplex sigma, const neighborhood_lists& nl,
                                             const distance_matrix& m,
                                             std::optional<value_t> threshold)
    : sigma_(std::move(sigma)), nl_(&nl), m_(&m), threshold_(threshold) {
	if (sigma_.dim() < 1) throw data_error("coboundary requires dimension >= 1");
	pointers_.assign(static_cast<std::size_t>(sigma_.dim()) + 1, 0);
}

void coboundary_enumerator::run_init() {
	const value_t alpha = sigma_.diameter();
	// phase 1: strict-prefix traversal of each member's neighbor list
	for (int k = 0; k <= sigma_.dim(); ++k) {
		const auto& list = (*nl_)[sigma_[k]];
		std::size_t i = 0;
		while (i < list.size() && list[i].dist < alpha) queue_.push(list[i++].vertex);
		pointers_[static_cast<std::size_t>(k)] = i;
	}
	// phase 2: pop in descending vertex order until a non-member fills its
	// count; that vertex is the candidate for an apparent pair
	const int full = sigma_.dim() + 1;
	while (!queue_.empty()) {
		vertex_t w = queue_.top();
		queue_.pop();
		++stats_.init_pops;
		if (++counts_[w] == full && !sigma_.contains(w)) {
			candidate_ = w;
			stats_.baseline_visits = static_cast<std::uint64_t>(
			    static_cast<vertex_t>(m_->size()) - w);
			break;
		}
	}
	phase_ = phase::same_diameter;
}

void coboundary_enumerator::finish_same_diameter() {
	// drain the queue entirely, then pick out the full-count non-members;
	// all of these are cofacets of diameter exactly alpha
	const int full = sigma_.dim() + 1;
	while (!queue_.empty()) {
		++counts_[queue_.top()];
		queue_.pop();
	}
	for (auto it = counts_.begin(); it != counts_.end();) {
		if (it->second >= full) {
			if (!sigma_.contains(it->first)) pending_.push_back(it->first);
			it = counts_.erase(it);
		} else {
			++it;
		}
	}
	std::sort(pending_.begin(), pending_.end());
	phase_ = phase::expanding;
}

std::optional<cofacet_emission> coboundary_enumerator::advance_expanding() {
	const int full = sigma_.dim() + 1;
	const std::size_t n = m_->size();
	while (true) {
		// smallest next distance wins; ties go to the largest member vertex,
		// which is the lowest position in the descending tuple
		int pick = -1;
		value_t pick_dist = 0;
		for (int k = 0; k <= sigma_.dim(); ++k) {
			std::size_t p = pointers_[static_cast<std::size_t>(k)];
			if (p >= n) continue;
			value_t d = (*nl_)[sigma_[k]][p].dist;
			if (pick < 0 || d < pick_dist) {
				pick = k;
				pick_dist = d;
			}
		}
		if (pick < 0) {
			phase_ = phase::done;
			return std::nullopt;
		}
		if (threshold_ && pick_dist > *threshold_) {
			phase_ = phase::done;
			return std::nullopt;
		}
		vertex_t w = (*nl_)[sigma_[pick]][pointers_[static_cast<std::size_t>(pick)]].vertex;
		++pointers_[static_cast<std::size_t>(pick)];
		if (++counts_[w] == full) {
			counts_.erase(w);
			if (!sigma_.contains(w)) return cofacet_emission{w, pick_dist};
		}
	}
}

std::optional<vertex_t> coboundary_enumerator::apparent_candidate() {
	if (phase_ == phase::init) run_init();
	return candidate_;
}

std::optional<cofacet_emission> coboundary_enumerator::next() {
	if (threshold_ && *threshold_ < sigma_.diameter()) {
		phase_ = phase::done;
		return std::nullopt;
	}
	if (phase_ == phase::init) run_init();
	if (phase_ == phase::same_diameter) finish_same_diameter();
	if (phase_ == phase::expanding && pending_pos_ < pending_.size()) {
		++stats_.emissions;
		return cofacet_emission{pending_[pending_pos_++], sigma_.diameter()};
	}
	if (phase_ == phase::expanding) {
		auto out = advance_expanding();
		if (out) ++stats_.emissions;
		return out;
	}
	return std::nullopt;
}

std::optional<std::pair<vertex_t, coboundary_stats>>
apparent_candidate(const simplex& sigma, const neighborhood_lists& nl,
                   const distance_matrix& m) {
	coboundary_enumerator e(sigma, nl, m);
	auto w = e.apparent_candidate();
	if (!w) return std::nullopt;
	return std::make_pair(*w, e.stats());
}

namespace {

// The maximal vertex whose addition keeps sigma's diameter, under closed
// neighborhoods; independent of the iterator's strict prefixes.
std::optional<vertex_t> last_same_diameter_vertex(const simplex& sigma,
                                                  const distance_matrix& m) {
	for (vertex_t w = static_cast<vertex_t>(m.size()) - 1; w >= 0; --w) {
		if (sigma.contains(w)) continue;
		bool same = true;
		for (int k = 0; same && k <= sigma.dim(); ++k)
			same = m(w, sigma[k]) <= sigma.diameter();
		if (same) return w;
	}
	return std::nullopt;
}

} // namespace

bool is_apparent_pair(const simplex& sigma, const simplex& tau, const distance_matrix& m) {
	if (tau.dim() != sigma.dim() + 1)
		throw data_error("apparent-pair check requires a facet-cofacet pair");
	vertex_t added = -1;
	int k_tau = 0;
	for (int k = 0; k <= sigma.dim(); ++k, ++k_tau) {
		if (tau[k_tau] != sigma[k]) {
			added = tau[k_tau];
			++k_tau;
			if (tau[k_tau] != sigma[k]) throw data_error("not a facet of the given cofacet");
		}
	}
	if (added < 0) {
		added = tau[tau.dim()];
	}
	if (tau.diameter() != sigma.diameter()) return false;
	auto cls = classify_first_full_diameter_facet(tau, m);
	if (!(cls.facet == sigma)) return false;
	return last_same_diameter_vertex(sigma, m) == std::optional<vertex_t>(added);
}

std::optional<simplex> apparent_cofacet(const simplex& sigma, const neighborhood_lists& nl,
                                        const distance_matrix& m) {
	(void)nl;
	auto w = last_same_diameter_vertex(sigma, m);
	if (!w) return std::nullopt;
	std::vector<vertex_t> vs(sigma.vertices());
	vs.push_back(*w);
	simplex tau = make_simplex(vs, m);
	if (!is_apparent_pair(sigma, tau, m)) return std::nullopt;
	return tau;
}

} // namespace vrs
