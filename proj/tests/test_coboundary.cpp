#include "common.hpp"

#include "vrs/coboundary.hpp"
#include "vrs/oracle.hpp"

#include <doctest.h>

#include <map>

using namespace vrs;
using vrstest::make;

namespace {

std::vector<cofacet_emission> drain(coboundary_enumerator& e) {
	std::vector<cofacet_emission> out;
	while (auto c = e.next()) out.push_back(*c);
	return out;
}

} // namespace

TEST_CASE("the worked coboundary trace, mirrored") {
	auto m = vrstest::circle8();
	auto nl = build_neighborhood_lists(m);

	coboundary_enumerator cob(make({4, 6, 7}, m), nl, m);
	auto out = drain(cob);
	REQUIRE(out.size() == 5);
	const std::vector<std::pair<vertex_t, value_t>> expected = {
	    {5, 1.85}, {1, 1.85}, {3, 2.00}, {2, 2.00}, {0, 2.00}};
	for (std::size_t i = 0; i < expected.size(); ++i) {
		CHECK(out[i].vertex == expected[i].first);
		CHECK(out[i].diameter == expected[i].second);
	}
	// all pointers end at the list ends
	for (std::size_t p : cob.pointers()) CHECK(p == 8);
	CHECK(cob.stats().emissions == 5);
	CHECK(cob.stats().init_pops == 8);
}

TEST_CASE("coboundary with thresholds") {
	auto m = vrstest::circle8();
	auto nl = build_neighborhood_lists(m);

	coboundary_enumerator none(make({0, 1}, m), nl, m, 0.77);
	CHECK(drain(none).empty());

	coboundary_enumerator some(make({0, 1}, m), nl, m, 1.41);
	auto out = drain(some);
	REQUIRE(out.size() == 2);
	CHECK(out[0].diameter == 1.41);
	CHECK(out[1].diameter == 1.41);
	std::vector<vertex_t> vs{out[0].vertex, out[1].vertex};
	std::sort(vs.begin(), vs.end());
	CHECK(vs == std::vector<vertex_t>{2, 7});

	CHECK_THROWS_AS(coboundary_enumerator(make({3}, m), nl, m), data_error);
}

TEST_CASE("apparent candidate") {
	auto m = vrstest::circle8();
	auto nl = build_neighborhood_lists(m);

	auto a = apparent_candidate(make({4, 6, 7}, m), nl, m);
	REQUIRE(a.has_value());
	CHECK(a->first == 5);
	CHECK(a->second.init_pops == 8);
	CHECK(a->second.baseline_visits == 3); // n - w = 8 - 5

	auto b = apparent_candidate(make({5, 7}, m), nl, m);
	REQUIRE(b.has_value());
	CHECK(b->first == 6);

	// diameter 2.00: every other vertex is strictly inside both
	// neighborhoods; 7 pops first under descending priority
	auto c = apparent_candidate(make({0, 4}, m), nl, m);
	REQUIRE(c.has_value());
	CHECK(c->first == 7);
}

TEST_CASE("apparent pair predicate") {
	auto m = vrstest::circle8();
	CHECK(is_apparent_pair(make({5, 7}, m), make({5, 6, 7}, m), m));
	CHECK(!is_apparent_pair(make({4, 6, 7}, m), make({4, 5, 6, 7}, m), m));
	CHECK(is_apparent_pair(make({1, 7}, m), make({0, 1, 7}, m), m));
	CHECK_THROWS_AS(is_apparent_pair(make({0, 1}, m), make({4, 5, 6}, m), m), data_error);
}

TEST_CASE("apparent cofacet") {
	auto m = vrstest::circle8();
	auto nl = build_neighborhood_lists(m);

	auto a = apparent_cofacet(make({5, 7}, m), nl, m);
	REQUIRE(a.has_value());
	CHECK(*a == make({5, 6, 7}, m));

	CHECK(!apparent_cofacet(make({0, 1}, m), nl, m).has_value());
	CHECK(!apparent_cofacet(make({4, 6, 7}, m), nl, m).has_value());
}

TEST_CASE("coboundary completeness and order on random instances") {
	for (std::uint64_t seed = 1; seed <= 8; ++seed) {
		auto m = seed % 2 ? vrstest::random_cloud_matrix(10, 3, seed)
		                  : vrstest::random_tie_rich_matrix(10, seed);
		auto nl = build_neighborhood_lists(m);
		for (int dim = 1; dim <= 4; ++dim)
			for (const auto& sigma : oracle::brute_simplices(m, dim, 1e9)) {
				coboundary_enumerator cob(sigma, nl, m);
				auto out = drain(cob);
				for (std::size_t i = 1; i < out.size(); ++i)
					CHECK(out[i - 1].diameter <= out[i].diameter);
				std::vector<std::pair<vertex_t, value_t>> got;
				for (const auto& e : out) got.emplace_back(e.vertex, e.diameter);
				std::sort(got.begin(), got.end(), [](const auto& a, const auto& b) {
					return a.second < b.second || (a.second == b.second && a.first < b.first);
				});
				CHECK(got == oracle::brute_cofacets(sigma, m, 1e9));
			}
	}
}

TEST_CASE("apparent pairs form a partial matching") {
	for (std::uint64_t seed = 1; seed <= 8; ++seed) {
		auto m = seed % 2 ? vrstest::random_cloud_matrix(10, 3, seed)
		                  : vrstest::random_tie_rich_matrix(10, seed);
		auto nl = build_neighborhood_lists(m);
		std::map<std::vector<vertex_t>, int> used;
		for (int dim = 1; dim <= 3; ++dim)
			for (const auto& sigma : oracle::brute_simplices(m, dim, 1e9))
				if (auto tau = apparent_cofacet(sigma, nl, m)) {
					++used[sigma.vertices()];
					++used[tau->vertices()];
				}
		for (const auto& [vs, count] : used) CHECK(count == 1);
	}
}

TEST_CASE("candidate agrees with the exact cofacet on generic clouds") {
	for (std::uint64_t seed = 1; seed <= 10; ++seed) {
		auto m = vrstest::random_cloud_matrix(11, 3, seed);
		auto nl = build_neighborhood_lists(m);
		for (int dim = 1; dim <= 3; ++dim)
			for (const auto& sigma : oracle::brute_simplices(m, dim, 1e9)) {
				auto fast = apparent_candidate(sigma, nl, m);
				auto exact = apparent_cofacet(sigma, nl, m);
				if (fast && exact) CHECK(exact->contains(fast->first));
			}
	}
}
