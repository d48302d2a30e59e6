#include "vrs/metric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>

namespace vrs {

distance_matrix distance_matrix::from_entries(std::size_t n, std::vector<value_t> entries) {
	if (entries.size() != n * n) throw data_error("entry count does not match matrix size");
	distance_matrix m(n);
	for (std::size_t i = 0; i < n; ++i) {
		for (std::size_t j = 0; j < n; ++j) {
			value_t d = entries[i * n + j];
			if (!std::isfinite(d) || d < 0) throw data_error("distances must be finite and non-negative");
			if (d != entries[j * n + i]) throw data_error("distance matrix is not symmetric");
			if (i == j && d != 0) throw data_error("diagonal must be zero");
		}
	}
	m.entries_ = std::move(entries);
	return m;
}

std::string format_value(value_t x) {
	char buf[32];
	auto res = std::to_chars(buf, buf + sizeof(buf), x);
	return std::string(buf, res.ptr);
}

namespace {

value_t parse_value(std::string_view field, long line) {
	value_t x;
	auto res = std::from_chars(field.data(), field.data() + field.size(), x);
	if (res.ec != std::errc() || res.ptr != field.data() + field.size())
		throw data_error("non-numeric field '" + std::string(field) + "'", line);
	return x;
}

std::string_view trim(std::string_view s) {
	while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
	while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
	return s;
}

} // namespace

point_cloud load_point_cloud(std::istream& in) {
	point_cloud pc;
	std::string raw;
	long line = 0;
	while (std::getline(in, raw)) {
		++line;
		std::string_view rest = trim(raw);
		if (rest.empty()) continue;
		std::vector<value_t> point;
		while (true) {
			auto comma = rest.find(',');
			std::string_view field = trim(rest.substr(0, comma));
			if (field.empty()) throw data_error("empty field", line);
			point.push_back(parse_value(field, line));
			if (comma == std::string_view::npos) break;
			rest.remove_prefix(comma + 1);
		}
		if (!pc.points.empty() && point.size() != pc.points.front().size())
			throw data_error("ragged row: expected " + std::to_string(pc.points.front().size()) +
			                     " coordinates, got " + std::to_string(point.size()),
			                 line);
		pc.points.push_back(std::move(point));
	}
	if (pc.points.empty()) throw data_error("empty point cloud");
	return pc;
}

distance_matrix load_lower_distance_matrix(std::istream& in) {
	std::vector<value_t> entries;
	std::string raw;
	long line = 0;
	while (std::getline(in, raw)) {
		++line;
		for (char& c : raw)
			if (c == ',' || c == '\t' || c == '\r') c = ' ';
		std::istringstream fields(raw);
		std::string field;
		while (fields >> field) entries.push_back(parse_value(field, line));
	}
	// k = n(n-1)/2  =>  n = (1 + sqrt(1 + 8k)) / 2
	std::size_t k = entries.size();
	std::size_t n = static_cast<std::size_t>((1 + std::sqrt(1.0 + 8.0 * static_cast<double>(k))) / 2);
	if (n * (n - 1) / 2 != k)
		throw data_error(std::to_string(k) + " entries do not form a lower triangle");
	distance_matrix m(n);
	std::size_t pos = 0;
	for (std::size_t i = 1; i < n; ++i)
		for (std::size_t j = 0; j < i; ++j) {
			value_t d = entries[pos++];
			if (!std::isfinite(d) || d < 0) throw data_error("distances must be finite and non-negative");
			m.set(static_cast<vertex_t>(i), static_cast<vertex_t>(j), d);
		}
	return m;
}

std::string serialize_lower_distance_matrix(const distance_matrix& m) {
	std::string out;
	for (std::size_t i = 1; i < m.size(); ++i) {
		for (std::size_t j = 0; j < i; ++j) {
			if (j > 0) out += ',';
			out += format_value(m(static_cast<vertex_t>(i), static_cast<vertex_t>(j)));
		}
		out += '\n';
	}
	return out;
}

distance_matrix distance_matrix_from_points(const point_cloud& pc) {
	std::size_t n = pc.size();
	distance_matrix m(n);
	for (std::size_t i = 0; i < n; ++i)
		for (std::size_t j = 0; j < i; ++j) {
			value_t sq = 0;
			for (std::size_t k = 0; k < pc.ambient_dim(); ++k) {
				value_t diff = pc.points[i][k] - pc.points[j][k];
				sq += diff * diff;
			}
			m.set(static_cast<vertex_t>(i), static_cast<vertex_t>(j), std::sqrt(sq));
		}
	return m;
}

neighborhood_lists build_neighborhood_lists(const distance_matrix& m) {
	neighborhood_lists nl;
	std::size_t n = m.size();
	nl.lists.resize(n);
	for (std::size_t v = 0; v < n; ++v) {
		auto& list = nl.lists[v];
		list.reserve(n);
		for (std::size_t w = 0; w < n; ++w)
			list.push_back({m(static_cast<vertex_t>(v), static_cast<vertex_t>(w)),
			                static_cast<vertex_t>(w)});
		std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
			return a.dist < b.dist || (a.dist == b.dist && a.vertex < b.vertex);
		});
	}
	return nl;
}

value_t enclosing_radius(const distance_matrix& m) {
	value_t radius = std::numeric_limits<value_t>::infinity();
	for (std::size_t v = 0; v < m.size(); ++v) {
		value_t row_max = 0;
		for (std::size_t u = 0; u < m.size(); ++u)
			row_max = std::max(row_max, m(static_cast<vertex_t>(v), static_cast<vertex_t>(u)));
		radius = std::min(radius, row_max);
	}
	return m.size() ? radius : 0;
}

} // namespace vrs
