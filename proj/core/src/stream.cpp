#include "vrs/stream.hpp"

#include "vrs/coboundary.hpp"

#include <algorithm>
#include <utility>

namespace vrs {

void stream_stats::count_emission(int dim) {
	if (emitted_per_dim.size() <= static_cast<std::size_t>(dim))
		emitted_per_dim.resize(static_cast<std::size_t>(dim) + 1, 0);
	++emitted_per_dim[static_cast<std::size_t>(dim)];
}

std::vector<simplex> vertex_stream(const distance_matrix& m) {
	std::vector<simplex> out;
	out.reserve(m.size());
	for (std::size_t v = 0; v < m.size(); ++v)
		out.emplace_back(std::vector<vertex_t>{static_cast<vertex_t>(v)}, value_t(0),
		                 std::nullopt);
	return out;
}

std::vector<simplex> edge_stream(const distance_matrix& m, value_t threshold) {
	std::vector<simplex> out;
	for (vertex_t s = 1; s < static_cast<vertex_t>(m.size()); ++s)
		for (vertex_t t = 0; t < s; ++t) {
			value_t d = m(s, t);
			if (d <= threshold)
				out.emplace_back(std::vector<vertex_t>{s, t}, d, edge{s, t, d});
		}
	std::sort(out.begin(), out.end(), canonical_less);
	return out;
}

simplex_stream::simplex_stream(const distance_matrix& m, const neighborhood_lists& nl,
                               int target_dim, value_t threshold, bool skip_apparent)
    : m_(&m), nl_(&nl), target_dim_(target_dim), skip_apparent_(skip_apparent),
      edges_(edge_stream(m, threshold)) {
	if (target_dim < 2) throw data_error("stream target dimension must be >= 2");
}

std::optional<simplex> simplex_stream::next() {
	while (true) {
		if (stack_.empty()) {
			if (edge_pos_ == edges_.size()) return std::nullopt;
			stack_.emplace_back(edges_[edge_pos_++], *nl_, *m_);
			stats_.max_stack_depth = std::max(stats_.max_stack_depth, stack_.size());
			continue;
		}
		auto& frame = stack_.back();
		auto produced = frame.next();
		if (!produced) {
			stats_.candidate_checks += frame.candidates_checked();
			stack_.pop_back();
			continue;
		}
		auto& [v, tau] = *produced;
		if (tau.dim() < target_dim_) {
			stack_.emplace_back(std::move(tau), frame.neighborhood(), v, *m_);
			stats_.max_stack_depth = std::max(stats_.max_stack_depth, stack_.size());
			continue;
		}
		if (skip_apparent_ && is_apparent_pair(frame.sigma(), tau, *m_)) {
			++stats_.apparent_skipped;
			continue;
		}
		stats_.count_emission(tau.dim());
		return std::move(tau);
	}
}

struct full_filtration_stream::source {
	virtual ~source() = default;
	virtual std::optional<simplex> pull() = 0;
	std::optional<simplex> head;
};

namespace {

struct vector_source final : full_filtration_stream::source {
	std::vector<simplex> items;
	std::size_t pos = 0;

	explicit vector_source(std::vector<simplex> v) : items(std::move(v)) {}
	std::optional<simplex> pull() override {
		if (pos == items.size()) return std::nullopt;
		return std::move(items[pos++]);
	}
};

// Canonicalizes a diameter-ordered stream: buffers each equal-diameter
// run and sorts it under canonical_cmp, so the merge sees a totally
// ordered input.
struct canonical_runs_source final : full_filtration_stream::source {
	simplex_stream inner;
	std::vector<simplex> run;
	std::size_t run_pos = 0;
	std::optional<simplex> lookahead;

	canonical_runs_source(const distance_matrix& m, const neighborhood_lists& nl, int dim,
	                      value_t threshold)
	    : inner(m, nl, dim, threshold) {}

	std::optional<simplex> pull() override {
		if (run_pos == run.size()) {
			run.clear();
			run_pos = 0;
			auto first = lookahead ? std::exchange(lookahead, std::nullopt) : inner.next();
			if (!first) return std::nullopt;
			value_t diameter = first->diameter();
			run.push_back(std::move(*first));
			while (auto s = inner.next()) {
				if (s->diameter() != diameter) {
					lookahead = std::move(s);
					break;
				}
				run.push_back(std::move(*s));
			}
			std::sort(run.begin(), run.end(), canonical_less);
		}
		return std::move(run[run_pos++]);
	}
};

} // namespace

full_filtration_stream::full_filtration_stream(const distance_matrix& m,
                                               const neighborhood_lists& nl, int max_dim,
                                               value_t threshold) {
	sources_.push_back(std::make_unique<vector_source>(vertex_stream(m)));
	if (max_dim >= 1)
		sources_.push_back(std::make_unique<vector_source>(edge_stream(m, threshold)));
	for (int d = 2; d <= max_dim; ++d)
		sources_.push_back(std::make_unique<canonical_runs_source>(m, nl, d, threshold));
	for (auto& s : sources_) s->head = s->pull();
}

full_filtration_stream::~full_filtration_stream() = default;

std::optional<simplex> full_filtration_stream::next() {
	source* best = nullptr;
	for (auto& s : sources_)
		if (s->head && (!best || canonical_less(*s->head, *best->head))) best = s.get();
	if (!best) return std::nullopt;
	auto out = std::exchange(best->head, std::nullopt);
	best->head = best->pull();
	return out;
}

std::vector<simplex> baseline_simplex_stream(const distance_matrix& m, int target_dim,
                                             value_t threshold) {
	if (target_dim < 2) throw data_error("stream target dimension must be >= 2");
	std::vector<simplex> layer = edge_stream(m, threshold);
	for (int d = 2; d <= target_dim; ++d) {
		std::vector<simplex> next_layer;
		for (const auto& sigma : layer) {
			baseline_cofacets_colex cofacets(sigma, m, threshold);
			while (auto c = cofacets.next()) next_layer.push_back(std::move(c->second));
		}
		layer = std::move(next_layer);
	}
	std::sort(layer.begin(), layer.end(), canonical_less);
	return layer;
}

} // namespace vrs
