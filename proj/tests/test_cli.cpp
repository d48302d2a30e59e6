// End-to-end checks spawning the installed command-line binary against the
// checked-in fixture file.

#include <doctest.h>

#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

namespace {

struct run_result {
	int exit_code;
	std::string out;
};

run_result run(const std::string& args) {
	std::string cmd = std::string(VRSTREAM_CLI) + " " + args + " 2>/dev/null";
	FILE* pipe = popen(cmd.c_str(), "r");
	REQUIRE(pipe != nullptr);
	std::string out;
	char buf[4096];
	while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
	int status = pclose(pipe);
	return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines(const std::string& text) {
	std::vector<std::string> out;
	std::string cur;
	for (char c : text) {
		if (c == '\n') {
			out.push_back(cur);
			cur.clear();
		} else {
			cur += c;
		}
	}
	if (!cur.empty()) out.push_back(cur);
	return out;
}

const std::string fixture = std::string("--input ") + VRSTREAM_FIXTURE;

} // namespace

TEST_CASE("cli: edge stream golden output") {
	auto r = run("stream " + fixture + " --dim 1");
	CHECK(r.exit_code == 0);
	auto ls = lines(r.out);
	REQUIRE(ls.size() == 28);
	CHECK(ls[0] == "1 0.77 1,0");
	CHECK(ls[1] == "1 0.77 7,0");
	CHECK(ls[2] == "1 0.77 2,1");
	CHECK(ls[27] == "1 2 7,3");
}

TEST_CASE("cli: triangle counts and threshold") {
	auto all = run("stream " + fixture + " --dim 2 --counts-only");
	CHECK(all.exit_code == 0);
	CHECK(all.out == "2 56\n");

	auto tight = run("stream " + fixture + " --dim 2 --threshold 1.41 --counts-only");
	CHECK(tight.out == "2 8\n");

	auto colex = run("stream " + fixture + " --dim 2 --algorithm colex --counts-only");
	CHECK(colex.out == "2 56\n");

	auto merged = run("stream " + fixture + " --max-dim 2 --threshold 1.41 --counts-only");
	CHECK(merged.out == "0 8\n1 16\n2 8\n");
}

TEST_CASE("cli: coboundary trace with stats") {
	auto r = run("coboundary " + fixture + " --simplex 4,6,7 --stats");
	CHECK(r.exit_code == 0);
	auto ls = lines(r.out);
	REQUIRE(ls.size() == 6);
	CHECK(ls[0] == "5 1.85");
	CHECK(ls[1] == "1 1.85");
	CHECK(ls[2] == "3 2");
	CHECK(ls[3] == "2 2");
	CHECK(ls[4] == "0 2");
	CHECK(ls[5] == "init_pops=8 baseline_visits=3");
}

TEST_CASE("cli: apparent pairs listing") {
	auto r = run("apparent-pairs " + fixture + " --dim 1");
	CHECK(r.exit_code == 0);
	auto ls = lines(r.out);
	bool saw_567 = false, saw_017 = false;
	for (const auto& l : ls) {
		if (l == "7,5 7,6,5 1.41") saw_567 = true;
		if (l == "7,1 7,1,0 1.41") saw_017 = true;
	}
	CHECK(saw_567);
	CHECK(saw_017);
}

TEST_CASE("cli: verify passes on the fixture") {
	auto r = run("verify " + fixture + " --dim 3");
	CHECK(r.exit_code == 0);
	CHECK(r.out == "verify: all checks passed\n");
}

TEST_CASE("cli: exit codes") {
	CHECK(run("stream --input /nonexistent --dim 1").exit_code == 2);
	CHECK(run("stream " + fixture).exit_code == 1);          // missing --dim
	CHECK(run("coboundary " + fixture + " --simplex 3").exit_code == 1);
	CHECK(run("coboundary " + fixture + " --simplex 3,99").exit_code == 1);
	CHECK(run("nonsense").exit_code == 1);
	CHECK(run("--help").exit_code == 0);
}

TEST_CASE("cli: bench stream emits well-formed csv") {
	auto r = run("bench --mode stream --n 12 --dims 2 --repeat 1 --seed 7");
	CHECK(r.exit_code == 0);
	auto ls = lines(r.out);
	REQUIRE(ls.size() == 3);
	CHECK(ls[0] == "seed,n,dim,algorithm,seconds,simplices,max_stack_depth,equal");
	CHECK(ls[1].find(",inorder,") != std::string::npos);
	CHECK(ls[2].find(",colex,") != std::string::npos);
	CHECK(ls[1].substr(ls[1].size() - 5) == ",true");
	CHECK(ls[2].substr(ls[2].size() - 5) == ",true");
}
