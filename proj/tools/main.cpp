// Command-line front end: simplex streams, coboundary queries,
// apparent-pair listing, oracle verification, and the benchmark harness.

#include "vrs/coboundary.hpp"
#include "vrs/cofacets.hpp"
#include "vrs/metric.hpp"
#include "vrs/oracle.hpp"
#include "vrs/random.hpp"
#include "vrs/simplex.hpp"
#include "vrs/stream.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_data = 2;

struct input_options {
	std::string path;
	std::string format = "lower-distance-matrix";
	std::string threshold = "auto";
};

void add_input_flags(CLI::App* cmd, input_options& in, bool required = true) {
	auto* opt = cmd->add_option("--input", in.path, "input file");
	if (required) opt->required();
	cmd->add_option("--format", in.format, "input format")
	    ->check(CLI::IsMember({"point-cloud", "lower-distance-matrix"}));
	cmd->add_option("--threshold", in.threshold, "filtration threshold, or 'auto' for the enclosing radius");
}

vrs::distance_matrix load_matrix(const input_options& in) {
	std::ifstream file(in.path);
	if (!file) throw vrs::data_error("cannot open input file '" + in.path + "'");
	if (in.format == "point-cloud")
		return vrs::distance_matrix_from_points(vrs::load_point_cloud(file));
	return vrs::load_lower_distance_matrix(file);
}

vrs::value_t resolve_threshold(const input_options& in, const vrs::distance_matrix& m) {
	if (in.threshold == "auto") return vrs::enclosing_radius(m);
	try {
		std::size_t used = 0;
		vrs::value_t t = std::stod(in.threshold, &used);
		if (used != in.threshold.size() || t < 0) throw std::invalid_argument(in.threshold);
		return t;
	} catch (const std::exception&) {
		throw CLI::ValidationError("--threshold", "expected 'auto' or a non-negative number");
	}
}

std::string vertices_csv(const vrs::simplex& s) {
	std::string out;
	for (int k = 0; k <= s.dim(); ++k) {
		if (k > 0) out += ',';
		out += std::to_string(s[k]);
	}
	return out;
}

std::vector<vrs::vertex_t> parse_vertex_list(const std::string& text) {
	std::vector<vrs::vertex_t> vs;
	std::stringstream ss(text);
	std::string field;
	while (std::getline(ss, field, ','))
		vs.push_back(static_cast<vrs::vertex_t>(std::stol(field)));
	return vs;
}

std::vector<vrs::simplex> collect_stream(vrs::simplex_stream& stream) {
	std::vector<vrs::simplex> out;
	while (auto s = stream.next()) out.push_back(std::move(*s));
	return out;
}

// ---- stream ----------------------------------------------------------

struct stream_options {
	input_options in;
	int dim = -1;
	int max_dim = -1;
	std::string algorithm = "inorder";
	bool skip_apparent = false;
	bool counts_only = false;
};

int run_stream(const stream_options& opt) {
	auto m = load_matrix(opt.in);
	auto threshold = resolve_threshold(opt.in, m);
	auto nl = vrs::build_neighborhood_lists(m);

	std::vector<std::uint64_t> counts;
	auto emit = [&](const vrs::simplex& s) {
		if (opt.counts_only) {
			if (counts.size() <= static_cast<std::size_t>(s.dim()))
				counts.resize(static_cast<std::size_t>(s.dim()) + 1, 0);
			++counts[static_cast<std::size_t>(s.dim())];
		} else {
			std::cout << vrs::format_simplex(s) << '\n';
		}
	};

	if (opt.max_dim >= 0) {
		vrs::full_filtration_stream stream(m, nl, opt.max_dim, threshold);
		while (auto s = stream.next()) emit(*s);
	} else if (opt.dim == 0) {
		for (const auto& s : vrs::vertex_stream(m)) emit(s);
	} else if (opt.dim == 1) {
		for (const auto& s : vrs::edge_stream(m, threshold)) emit(s);
	} else if (opt.algorithm == "colex") {
		for (const auto& s : vrs::baseline_simplex_stream(m, opt.dim, threshold)) emit(s);
	} else {
		vrs::simplex_stream stream(m, nl, opt.dim, threshold, opt.skip_apparent);
		while (auto s = stream.next()) emit(*s);
	}
	if (opt.counts_only)
		for (std::size_t d = 0; d < counts.size(); ++d)
			if (counts[d] || static_cast<int>(d) == opt.dim)
				std::cout << d << ' ' << counts[d] << '\n';
	return exit_ok;
}

// ---- coboundary ------------------------------------------------------

struct coboundary_options {
	input_options in;
	std::string simplex_text;
	bool stats = false;
};

int run_coboundary(const coboundary_options& opt) {
	auto m = load_matrix(opt.in);
	auto nl = vrs::build_neighborhood_lists(m);
	std::vector<vrs::vertex_t> vs = parse_vertex_list(opt.simplex_text);
	std::sort(vs.begin(), vs.end());
	vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
	if (vs.size() < 2) {
		std::cerr << "coboundary needs a simplex of dimension >= 1\n";
		return exit_usage;
	}
	if (vs.front() < 0 || vs.back() >= static_cast<vrs::vertex_t>(m.size())) {
		std::cerr << "unknown vertex in --simplex\n";
		return exit_usage;
	}
	auto sigma = vrs::make_simplex(vs, m);
	std::optional<vrs::value_t> threshold;
	if (opt.in.threshold != "auto") threshold = resolve_threshold(opt.in, m);

	vrs::coboundary_enumerator cob(sigma, nl, m, threshold);
	while (auto e = cob.next())
		std::cout << e->vertex << ' ' << vrs::format_value(e->diameter) << '\n';
	if (opt.stats)
		std::cout << "init_pops=" << cob.stats().init_pops
		          << " baseline_visits=" << cob.stats().baseline_visits << '\n';
	return exit_ok;
}

// ---- apparent-pairs --------------------------------------------------

int run_apparent_pairs(const input_options& in, int dim) {
	auto m = load_matrix(in);
	auto threshold = resolve_threshold(in, m);
	auto nl = vrs::build_neighborhood_lists(m);

	auto report = [&](const vrs::simplex& sigma) {
		if (auto tau = vrs::apparent_cofacet(sigma, nl, m))
			std::cout << vertices_csv(sigma) << ' ' << vertices_csv(*tau) << ' '
			          << vrs::format_value(sigma.diameter()) << '\n';
	};
	if (dim == 1) {
		for (const auto& sigma : vrs::edge_stream(m, threshold)) report(sigma);
	} else {
		vrs::simplex_stream stream(m, nl, dim, threshold);
		while (auto sigma = stream.next()) report(*sigma);
	}
	return exit_ok;
}

// ---- verify ----------------------------------------------------------

int run_verify(const input_options& in, int max_dim) {
	auto m = load_matrix(in);
	if (m.size() > 25) {
		std::cerr << "verify is limited to n <= 25 (got " << m.size() << ")\n";
		return exit_usage;
	}
	auto threshold = resolve_threshold(in, m);
	auto nl = vrs::build_neighborhood_lists(m);
	bool ok = true;
	auto fail = [&](const std::string& what) {
		std::cerr << "MISMATCH: " << what << '\n';
		ok = false;
	};

	for (int d = 2; d <= max_dim; ++d) {
		auto expected = vrs::oracle::brute_simplices(m, d, threshold);
		vrs::simplex_stream stream(m, nl, d, threshold);
		auto inorder = collect_stream(stream);
		std::sort(inorder.begin(), inorder.end(), vrs::canonical_less);
		auto colex = vrs::baseline_simplex_stream(m, d, threshold);
		if (inorder != expected) fail("inorder stream vs oracle at dim " + std::to_string(d));
		if (colex != expected) fail("colex stream vs oracle at dim " + std::to_string(d));
	}

	// coboundaries and apparent pairs over the lower-dimensional simplices
	for (int d = 1; d < max_dim; ++d) {
		auto apparent = vrs::oracle::brute_apparent_pairs(m, d, threshold);
		for (const auto& sigma : vrs::oracle::brute_simplices(m, d, threshold)) {
			vrs::coboundary_enumerator cob(sigma, nl, m, threshold);
			std::vector<std::pair<vrs::vertex_t, vrs::value_t>> emitted;
			while (auto e = cob.next()) emitted.emplace_back(e->vertex, e->diameter);
			std::sort(emitted.begin(), emitted.end(), [](const auto& a, const auto& b) {
				return a.second < b.second || (a.second == b.second && a.first < b.first);
			});
			if (emitted != vrs::oracle::brute_cofacets(sigma, m, threshold))
				fail("coboundary of " + vertices_csv(sigma));

			auto partner = vrs::apparent_cofacet(sigma, nl, m);
			bool in_oracle = false;
			for (const auto& [s, t] : apparent)
				if (s == sigma) {
					in_oracle = true;
					if (!partner || !(*partner == t))
						fail("apparent cofacet of " + vertices_csv(sigma));
				}
			if (!in_oracle && partner && partner->diameter() <= threshold)
				fail("spurious apparent cofacet of " + vertices_csv(sigma));
		}
	}

	std::cout << (ok ? "verify: all checks passed\n" : "verify: mismatches found\n");
	return ok ? exit_ok : exit_usage;
}

// ---- bench -----------------------------------------------------------

struct bench_options {
	std::string mode = "stream";
	std::vector<std::size_t> sizes{25, 50};
	std::size_t ambient_dim = 3;
	std::vector<int> dims{2, 3};
	int repeat = 1;
	std::uint64_t seed = 1;
};

std::uint64_t derive_seed(const bench_options& opt, std::size_t n, int rep) {
	return opt.seed * 1000003u + n * 97u + static_cast<std::uint64_t>(rep);
}

int run_bench(const bench_options& opt) {
	using clock = std::chrono::steady_clock;
	if (opt.mode == "stream") {
		std::cout << "seed,n,dim,algorithm,seconds,simplices,max_stack_depth,equal\n";
		for (std::size_t n : opt.sizes)
			for (int rep = 0; rep < opt.repeat; ++rep) {
				auto seed = derive_seed(opt, n, rep);
				auto m = vrs::distance_matrix_from_points(
				    vrs::random_unit_cube_cloud(n, opt.ambient_dim, seed));
				auto threshold = vrs::enclosing_radius(m);
				auto nl = vrs::build_neighborhood_lists(m);
				for (int d : opt.dims) {
					auto t0 = clock::now();
					vrs::simplex_stream stream(m, nl, d, threshold);
					auto inorder = collect_stream(stream);
					double secs_inorder = std::chrono::duration<double>(clock::now() - t0).count();

					t0 = clock::now();
					auto colex = vrs::baseline_simplex_stream(m, d, threshold);
					double secs_colex = std::chrono::duration<double>(clock::now() - t0).count();

					std::sort(inorder.begin(), inorder.end(), vrs::canonical_less);
					bool equal = inorder == colex;
					std::cout << seed << ',' << n << ',' << d << ",inorder," << secs_inorder
					          << ',' << inorder.size() << ',' << stream.stats().max_stack_depth
					          << ',' << (equal ? "true" : "false") << '\n';
					std::cout << seed << ',' << n << ',' << d << ",colex," << secs_colex << ','
					          << colex.size() << ",0," << (equal ? "true" : "false") << '\n';
				}
			}
		return exit_ok;
	}

	// mode apparent: one random simplex per cloud, init pops vs the
	// index-scan cost a descending vertex scan would pay
	std::cout << "seed,n,simplex,init_pops,baseline_visits,ratio\n";
	for (std::size_t n : opt.sizes)
		for (int rep = 0; rep < opt.repeat; ++rep) {
			auto seed = derive_seed(opt, n, rep);
			auto m = vrs::distance_matrix_from_points(
			    vrs::random_unit_cube_cloud(n, opt.ambient_dim, seed));
			auto threshold = vrs::enclosing_radius(m);
			auto nl = vrs::build_neighborhood_lists(m);
			std::mt19937_64 rng(seed ^ 0x5eedULL);
			std::uniform_int_distribution<vrs::vertex_t> pick(0, static_cast<vrs::vertex_t>(n) - 1);
			std::optional<vrs::simplex> sigma;
			for (int tries = 0; tries < 1000 && !sigma; ++tries) {
				vrs::vertex_t a = pick(rng), b = pick(rng), c = pick(rng);
				if (a == b || b == c || a == c) continue;
				auto candidate = vrs::make_simplex(std::vector<vrs::vertex_t>{a, b, c}, m);
				if (candidate.diameter() <= threshold) sigma = std::move(candidate);
			}
			if (!sigma) continue;
			auto result = vrs::apparent_candidate(*sigma, nl, m);
			std::cout << seed << ',' << n << ",\"" << vertices_csv(*sigma) << "\",";
			if (result) {
				const auto& stats = result->second;
				std::cout << stats.init_pops << ',' << stats.baseline_visits << ','
				          << (static_cast<double>(stats.init_pops) /
				              static_cast<double>(stats.baseline_visits))
				          << '\n';
			} else {
				std::cout << "0,0,\n";
			}
		}
	return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"Vietoris-Rips simplex streams and coboundaries in filtration order"};
	app.require_subcommand(1);

	stream_options stream_opt;
	auto* stream_cmd = app.add_subcommand("stream", "emit a simplex stream");
	add_input_flags(stream_cmd, stream_opt.in);
	auto* dim_opt = stream_cmd->add_option("--dim", stream_opt.dim, "target dimension");
	auto* max_dim_opt =
	    stream_cmd->add_option("--max-dim", stream_opt.max_dim, "merged stream up to this dimension");
	dim_opt->excludes(max_dim_opt);
	stream_cmd->add_option("--algorithm", stream_opt.algorithm, "enumeration algorithm")
	    ->check(CLI::IsMember({"inorder", "colex"}));
	stream_cmd->add_flag("--skip-apparent", stream_opt.skip_apparent,
	                     "suppress apparent-pair cofacets");
	stream_cmd->add_flag("--counts-only", stream_opt.counts_only, "print per-dimension counts");

	coboundary_options cob_opt;
	auto* cob_cmd = app.add_subcommand("coboundary", "emit the cofacets of one simplex");
	add_input_flags(cob_cmd, cob_opt.in);
	cob_cmd->add_option("--simplex", cob_opt.simplex_text, "comma-separated vertices")->required();
	cob_cmd->add_flag("--stats", cob_opt.stats, "print initiation-phase statistics");

	input_options ap_in;
	int ap_dim = 1;
	auto* ap_cmd = app.add_subcommand("apparent-pairs", "list apparent pairs by facet dimension");
	add_input_flags(ap_cmd, ap_in);
	ap_cmd->add_option("--dim", ap_dim, "facet dimension")->required();

	input_options verify_in;
	int verify_dim = 2;
	auto* verify_cmd = app.add_subcommand("verify", "compare fast paths against the brute-force oracle");
	add_input_flags(verify_cmd, verify_in);
	verify_cmd->add_option("--dim", verify_dim, "verify streams up to this dimension")->required();

	bench_options bench_opt;
	auto* bench_cmd = app.add_subcommand("bench", "benchmark harness, CSV output");
	bench_cmd->add_option("--mode", bench_opt.mode)->check(CLI::IsMember({"stream", "apparent"}));
	bench_cmd->add_option("--n", bench_opt.sizes, "point-cloud sizes")->delimiter(',');
	bench_cmd->add_option("--ambient-dim", bench_opt.ambient_dim);
	bench_cmd->add_option("--dims", bench_opt.dims, "target dimensions")->delimiter(',');
	bench_cmd->add_option("--repeat", bench_opt.repeat);
	bench_cmd->add_option("--seed", bench_opt.seed);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? exit_ok : exit_usage;
	}

	try {
		if (stream_cmd->parsed()) {
			if (stream_opt.dim < 0 && stream_opt.max_dim < 0)
				throw CLI::ValidationError("stream", "one of --dim or --max-dim is required");
			if (stream_opt.algorithm == "colex" && stream_opt.max_dim >= 0)
				throw CLI::ValidationError("stream", "--algorithm colex needs --dim");
			return run_stream(stream_opt);
		}
		if (cob_cmd->parsed()) return run_coboundary(cob_opt);
		if (ap_cmd->parsed()) return run_apparent_pairs(ap_in, ap_dim);
		if (verify_cmd->parsed()) return run_verify(verify_in, verify_dim);
		if (bench_cmd->parsed()) return run_bench(bench_opt);
	} catch (const CLI::Error& e) {
		std::cerr << e.what() << '\n';
		return exit_usage;
	} catch (const vrs::data_error& e) {
		std::cerr << "data error: " << e.what() << '\n';
		return exit_data;
	}
	return exit_usage;
}
