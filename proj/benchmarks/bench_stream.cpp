// Microbenchmarks: in-order stream generation vs the generate-then-sort
// baseline, and the apparent-pair fast path vs the index-scan cost.

#include "vrs/coboundary.hpp"
#include "vrs/metric.hpp"
#include "vrs/random.hpp"
#include "vrs/stream.hpp"

#include <benchmark/benchmark.h>

namespace {

struct instance {
	vrs::distance_matrix m;
	vrs::neighborhood_lists nl;
	vrs::value_t threshold;
};

instance make_instance(std::size_t n, std::uint64_t seed) {
	auto m = vrs::distance_matrix_from_points(vrs::random_unit_cube_cloud(n, 3, seed));
	auto nl = vrs::build_neighborhood_lists(m);
	auto threshold = vrs::enclosing_radius(m);
	return {std::move(m), std::move(nl), threshold};
}

void bm_stream_inorder(benchmark::State& state) {
	auto inst = make_instance(static_cast<std::size_t>(state.range(0)), 1);
	int dim = static_cast<int>(state.range(1));
	std::uint64_t emitted = 0;
	for (auto _ : state) {
		vrs::simplex_stream stream(inst.m, inst.nl, dim, inst.threshold);
		while (auto s = stream.next()) {
			benchmark::DoNotOptimize(s->diameter());
			++emitted;
		}
	}
	state.SetItemsProcessed(static_cast<std::int64_t>(emitted));
}

void bm_stream_colex(benchmark::State& state) {
	auto inst = make_instance(static_cast<std::size_t>(state.range(0)), 1);
	int dim = static_cast<int>(state.range(1));
	std::uint64_t emitted = 0;
	for (auto _ : state) {
		auto all = vrs::baseline_simplex_stream(inst.m, dim, inst.threshold);
		benchmark::DoNotOptimize(all.data());
		emitted += all.size();
	}
	state.SetItemsProcessed(static_cast<std::int64_t>(emitted));
}

void bm_apparent_candidate(benchmark::State& state) {
	auto inst = make_instance(static_cast<std::size_t>(state.range(0)), 1);
	vrs::simplex_stream seedstream(inst.m, inst.nl, 2, inst.threshold);
	std::vector<vrs::simplex> triangles;
	for (int i = 0; i < 64; ++i) {
		auto s = seedstream.next();
		if (!s) break;
		triangles.push_back(std::move(*s));
	}
	for (auto _ : state)
		for (const auto& sigma : triangles) {
			auto c = vrs::apparent_candidate(sigma, inst.nl, inst.m);
			benchmark::DoNotOptimize(c);
		}
	state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations()) *
	                        static_cast<std::int64_t>(triangles.size()));
}

BENCHMARK(bm_stream_inorder)->Args({25, 2})->Args({25, 3})->Args({50, 2})->Args({50, 3});
BENCHMARK(bm_stream_colex)->Args({25, 2})->Args({25, 3})->Args({50, 2})->Args({50, 3});
BENCHMARK(bm_apparent_candidate)->Arg(25)->Arg(50)->Arg(100);

} // namespace

BENCHMARK_MAIN();
