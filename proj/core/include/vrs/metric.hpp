#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace vrs {

using vertex_t = std::int32_t;
using value_t = double;

/// Malformed or inconsistent input data (bad file contents, invalid
/// matrix entries). Carries a 1-based line number when one is known.
class data_error : public std::runtime_error {
public:
	explicit data_error(const std::string& what, long line = 0)
	    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
	      line_(line) {}
	long line() const { return line_; }

private:
	long line_;
};

struct point_cloud {
	std::vector<std::vector<value_t>> points;

	std::size_t size() const { return points.size(); }
	std::size_t ambient_dim() const { return points.empty() ? 0 : points.front().size(); }
};

/// Symmetric finite metric on n indexed vertices; the single source of
/// truth for all distances.
class distance_matrix {
public:
	explicit distance_matrix(std::size_t n) : n_(n), entries_(n * n, 0) {}

	/// Validates symmetry, zero diagonal, and that all entries are
	/// finite and non-negative.
	static distance_matrix from_entries(std::size_t n, std::vector<value_t> entries);

	std::size_t size() const { return n_; }

	value_t operator()(vertex_t i, vertex_t j) const {
		return entries_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)];
	}

	void set(vertex_t i, vertex_t j, value_t d) {
		entries_[static_cast<std::size_t>(i) * n_ + static_cast<std::size_t>(j)] = d;
		entries_[static_cast<std::size_t>(j) * n_ + static_cast<std::size_t>(i)] = d;
	}

	bool operator==(const distance_matrix&) const = default;

private:
	std::size_t n_;
	std::vector<value_t> entries_;
};

/// Per-vertex neighbor lists sorted ascending by (distance, vertex),
/// with the self entry (0, v) at the head.
struct neighborhood_lists {
	struct entry {
		value_t dist;
		vertex_t vertex;
	};
	std::vector<std::vector<entry>> lists;

	std::size_t size() const { return lists.size(); }
	const std::vector<entry>& operator[](vertex_t v) const {
		return lists[static_cast<std::size_t>(v)];
	}
};

/// Parses CSV, one point per line; blank lines are ignored.
point_cloud load_point_cloud(std::istream& in);

/// Parses the strict lower triangle, row by row, separated by commas
/// and/or whitespace; n is inferred from the entry count.
distance_matrix load_lower_distance_matrix(std::istream& in);

/// Writes the strict lower triangle with shortest round-trip decimals,
/// so that load(serialize(m)) == m bitwise.
std::string serialize_lower_distance_matrix(const distance_matrix& m);

/// Euclidean distances with a fixed coordinate summation order.
distance_matrix distance_matrix_from_points(const point_cloud& pc);

neighborhood_lists build_neighborhood_lists(const distance_matrix& m);

/// min over v of max over u of d(u,v); the default threshold.
value_t enclosing_radius(const distance_matrix& m);

/// Shortest decimal representation that round-trips to the same double.
std::string format_value(value_t x);

} // namespace vrs
