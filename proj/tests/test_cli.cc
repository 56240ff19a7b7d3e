#include "catch_amalgamated.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "autstruct/cli.hh"

using namespace autstruct;

namespace {

const std::filesystem::path kData = AUTSTRUCT_TEST_DATA;

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run_cli(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return (kData / name).string(); }

std::string scratch(const std::string& name, const std::string& text) {
    auto dir = std::filesystem::temp_directory_path() / "autstruct-cli-test";
    std::filesystem::create_directories(dir);
    auto path = dir / name;
    std::ofstream(path) << text;
    return path.string();
}

} // namespace

TEST_CASE("decide reports the witness and both values") {
    auto r = run_cli({"decide", data("dual2.inst")});
    CHECK(r.status == cli::kExitNotEqual);
    CHECK(r.out == "NOT-EQUAL witness: a a\n  lhs: b b\n  rhs: b a\n");

    r = run_cli({"--porcelain", "decide", data("dual2.inst")});
    CHECK(r.status == cli::kExitNotEqual);
    CHECK(r.out == "NOT-EQUAL 2 a a\n");

    r = run_cli({"decide", data("neutral.inst")});
    CHECK(r.status == cli::kExitOk);
    CHECK(r.out == "EQUAL\nEQUAL\n");
}

TEST_CASE("oracle bounds its answer") {
    auto r = run_cli({"oracle", data("dual2.inst"), "--max-len", "1"});
    CHECK(r.status == cli::kExitOk);
    CHECK(r.out == "EQUAL (up to the length bound)\n");
    r = run_cli({"oracle", data("dual2.inst"), "--max-len", "4"});
    CHECK(r.status == cli::kExitNotEqual);
}

TEST_CASE("check prints property flags") {
    auto r = run_cli({"check", data("fig1.aut")});
    CHECK(r.status == cli::kExitOk);
    CHECK_THAT(r.out, Catch::Matchers::StartsWith("fig1: 3 states, 2 transitions, 3 letters"));
    CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("inverse-deterministic=false"));

    r = run_cli({"--porcelain", "check", "gadget:adding"});
    CHECK(r.out ==
          "adding deterministic=true complete=true inverse-deterministic=true inverse-complete=true "
          "reversible=false bireversible=false s-bar-automaton=true g-automaton=true\n");
}

TEST_CASE("act applies the rightmost state first") {
    auto r = run_cli({"act", "gadget:adding", "--seq", "+1", "--word", "0 1 0"});
    CHECK(r.status == cli::kExitOk);
    CHECK(r.out == "1 1 0\n");
    r = run_cli({"act", data("adding.aut"), "--seq", "+1 +1", "--word", "1 1 0"});
    CHECK(r.out == "1 0 1\n");
    r = run_cli({"act", "gadget:free-partial", "--seq", "b a", "--word", "a a"});
    CHECK(r.out == "undefined at position 0\n");
}

TEST_CASE("gadget instances feed decide") {
    auto r = run_cli({"gadget", "dual-adding", "-n", "3"});
    REQUIRE(r.status == cli::kExitOk);
    auto path = scratch("dual3.inst", r.out);
    r = run_cli({"--porcelain", "decide", path});
    CHECK(r.status == cli::kExitNotEqual);
    CHECK_THAT(r.out, Catch::Matchers::StartsWith("NOT-EQUAL 4 "));

    r = run_cli({"gadget", "dual-adding-prime", "-n", "3"});
    REQUIRE(r.status == cli::kExitOk);
    r = run_cli({"--porcelain", "decide", scratch("dprime3.inst", r.out)});
    CHECK(r.out == "NOT-EQUAL 4 a a a a\n");

    r = run_cli({"gadget", "bireversible"});
    CHECK(r.status == cli::kExitOk);
    CHECK_THAT(r.out, Catch::Matchers::StartsWith("mealy "));
}

TEST_CASE("dfa reductions") {
    auto r = run_cli({"reduce", "dfa-intersection", data("zeros.dfa"), data("ones.dfa")});
    REQUIRE(r.status == cli::kExitOk);
    // 0* and 1* share the empty word
    r = run_cli({"decide", scratch("inter.inst", r.out)});
    CHECK(r.status == cli::kExitNotEqual);

    r = run_cli({"reduce", "dfa-intersection", "--group", data("even_zeros.dfa"), data("odd_zeros.dfa")});
    REQUIRE(r.status == cli::kExitOk);
    r = run_cli({"decide", scratch("parity.inst", r.out)});
    CHECK(r.status == cli::kExitOk);
    CHECK(r.out == "EQUAL\n");

    r = run_cli({"reduce", "dfa-empty", data("ones.dfa")});
    REQUIRE(r.status == cli::kExitOk);
    r = run_cli({"decide", scratch("empty.inst", r.out)});
    CHECK(r.status == cli::kExitNotEqual);
}

TEST_CASE("tm reduction and encoding") {
    auto r = run_cli({"reduce", "tm", data("immediate.tm"), "--input", "a", "--space", "2", "--prune"});
    REQUIRE(r.status == cli::kExitOk);
    CHECK_THAT(r.err, Catch::Matchers::StartsWith("reduced automaton: "));
    auto inst = scratch("tm.inst", r.out);
    r = run_cli({"decide", inst});
    CHECK(r.status == cli::kExitNotEqual);

    r = run_cli({"encode", "tm", data("immediate.tm"), "--input", "a", "--space", "2", "--steps", "1"});
    CHECK(r.status == cli::kExitOk);
    CHECK(r.out == "a@f 0 0 _ 0 0 $ 0 0 $ 0\n");
    CHECK(r.err == "accepts at step 1\n");

    r = run_cli({"encode", "tm", data("find_b.tm"), "--input", "a a", "--space", "3", "--steps", "1"});
    CHECK(r.err == "no final state within 1 steps\n");
}

TEST_CASE("bench separation") {
    auto r = run_cli({"--porcelain", "bench", "separation", "--max-n", "4"});
    CHECK(r.status == cli::kExitOk);
    std::istringstream lines(r.out);
    std::string line;
    unsigned n = 0;
    while (std::getline(lines, line)) {
        ++n;
        std::istringstream fields(line);
        unsigned index = 0;
        std::uint64_t plain = 0;
        std::uint64_t expected = 0;
        std::uint64_t primed = 0;
        fields >> index >> plain >> expected >> primed;
        CHECK(index == n);
        CHECK(plain == expected);
        CHECK(primed == expected);
    }
    CHECK(n == 4);
}

TEST_CASE("exit codes") {
    CHECK(run_cli({}).status == cli::kExitUsage);
    CHECK(run_cli({"decide"}).status == cli::kExitUsage);
    CHECK(run_cli({"frobnicate"}).status == cli::kExitUsage);
    CHECK(run_cli({"bench", "separation", "--max-n", "0"}).status == cli::kExitUsage);
    CHECK(run_cli({"--help"}).status == cli::kExitOk);

    auto r = run_cli({"decide", data("missing.inst")});
    CHECK(r.status == cli::kExitInput);
    CHECK_THAT(r.err, Catch::Matchers::StartsWith("error: "));
    CHECK(run_cli({"check", data("broken.aut")}).status == cli::kExitInput);
    CHECK(run_cli({"check", "gadget:nope"}).status == cli::kExitInput);
    CHECK(run_cli({"act", "gadget:adding", "--seq", "+7", "--word", "0"}).status == cli::kExitInput);
    CHECK(run_cli({"gadget", "adding", "-n", "2"}).status == cli::kExitInput);

    r = run_cli({"gadget", "dual-adding", "-n", "10"});
    auto path = scratch("dual10.inst", r.out);
    CHECK(run_cli({"decide", path, "--max-configs", "5"}).status == cli::kExitBudget);
    CHECK(run_cli({"decide", data("constrained.inst")}).status != cli::kExitBudget);
}
