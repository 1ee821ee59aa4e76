#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "awrpsim/cli.hpp"
#include "awrpsim/report.hpp"

using namespace awrpsim;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result invoke(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_command(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path scratch(const std::string &name) {
    const auto dir = fs::temp_directory_path() / "awrpsim_cli_tests";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path &p) {
    std::ifstream in(p, std::ios::binary);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("gen scan then run LRU") {
    const auto trace = scratch("scan.txt").string();
    auto g = invoke({"gen", "--workload", "scan", "--n", "5", "--universe", "3", "--out", trace});
    REQUIRE(g.code == 0);
    CHECK(g.out.empty());
    CHECK(slurp(trace) == "# scan n=5 universe=3\n0\n1\n2\n0\n1\n");

    auto r = invoke({"run", "--trace", trace, "--format", "plain", "--policy", "LRU", "--capacity", "3", "--emit", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.err.empty());
    CHECK(r.out == "policy,capacity,sets,hits,misses,evictions,hit_ratio\nLRU,3,1,2,3,0,40.00\n");

    auto text = invoke({"run", "--trace", trace, "--policy", "lru", "--capacity", "3"});
    CHECK(text.code == 0);
    CHECK(text.out.find("hit ratio:  40.00") != std::string::npos);
}

TEST_CASE("invalid policy is a usage error naming the token") {
    const auto trace = scratch("scan.txt").string();
    invoke({"gen", "--workload", "scan", "--n", "5", "--universe", "3", "--out", trace});
    auto r = invoke({"run", "--trace", trace, "--policy", "BOGUS", "--capacity", "3"});
    CHECK(r.code == 1);
    CHECK(r.out.empty());
    CHECK(r.err.find("BOGUS") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(invoke({}).code == 1);
    CHECK(invoke({"frobnicate"}).code == 1);
    auto unknown = invoke({"gen", "--workload", "scan", "--n", "5", "--bogus-flag", "1", "--out", "x"});
    CHECK(unknown.code == 1);
    CHECK(unknown.err.find("--bogus-flag") != std::string::npos);
    CHECK(invoke({"gen", "--workload", "spiral", "--n", "5", "--out", scratch("g.txt").string()}).code == 1);
    CHECK(invoke({"run", "--trace", "t", "--policy", "LRU", "--capacity", "3", "--emit", "yaml"}).code == 1);
    CHECK(invoke({"run", "--trace", "t", "--policy", "LRU", "--capacity", "3", "--format", "xml"}).code == 1);
}

TEST_CASE("bad geometry is a usage error") {
    const auto trace = scratch("scan.txt").string();
    invoke({"gen", "--workload", "scan", "--n", "5", "--universe", "3", "--out", trace});
    auto r = invoke({"run", "--trace", trace, "--policy", "LRU", "--capacity", "10", "--sets", "4"});
    CHECK(r.code == 1);
    auto s = invoke({"sweep", "--trace", trace, "--capacities", "30,50", "--sets", "3"});
    CHECK(s.code == 1);
    CHECK(s.err.find("50") != std::string::npos);
}

TEST_CASE("data errors exit 2 with the line number") {
    const auto bad = scratch("bad.txt");
    {
        std::ofstream f(bad);
        f << "1\n2\nnot-a-number\n";
    }
    auto r = invoke({"run", "--trace", bad.string(), "--policy", "LRU", "--capacity", "2"});
    CHECK(r.code == 2);
    CHECK(r.out.empty());
    CHECK(r.err.find("line 3") != std::string::npos);
    CHECK(invoke({"run", "--trace", scratch("missing.txt").string(), "--policy", "LRU", "--capacity", "2"}).code == 2);
}

TEST_CASE("sweep with the default four policies emits a 4x7 csv grid") {
    const auto trace = scratch("zipf.txt").string();
    REQUIRE(invoke({"gen", "--workload", "zipf", "--n", "1000", "--universe", "256", "--s", "0.8", "--seed", "42",
                 "--out", trace})
                .code == 0);
    auto r = invoke({"sweep", "--trace", trace, "--policies", "LRU,FIFO,CAR,AWRP", "--capacities",
                  "30,60,90,120,150,180,210", "--emit", "csv"});
    REQUIRE(r.code == 0);
    const auto table = parse_csv(r.out);
    CHECK(table.policies.size() == 4);
    CHECK(table.capacities == std::vector<std::uint64_t>{30, 60, 90, 120, 150, 180, 210});
    CHECK(r.out.rfind("capacity,LRU,FIFO,CAR,AWRP\n", 0) == 0);

    // Defaults give the same grid.
    CHECK(invoke({"sweep", "--trace", trace, "--emit", "csv"}).out == r.out);
}

TEST_CASE("sweep text and json include gain reports") {
    const auto trace = scratch("zipf.txt").string();
    invoke({"gen", "--workload", "zipf", "--n", "1000", "--universe", "256", "--s", "0.8", "--seed", "42", "--out", trace});
    auto text = invoke({"sweep", "--trace", trace});
    CHECK(text.code == 0);
    CHECK(text.out.find("gain of AWRP over LRU") != std::string::npos);
    CHECK(text.out.find("gain of AWRP over CAR") != std::string::npos);
    auto json = invoke({"sweep", "--trace", trace, "--policies", "lru,opt", "--candidate", "OPT", "--emit", "json"});
    CHECK(json.code == 0);
    CHECK(json.out.find("\"candidate\": \"OPT\"") != std::string::npos);
    CHECK(json.out.find("\"offline_oracle\": true") != std::string::npos);
    CHECK(invoke({"sweep", "--trace", trace, "--policies", "lru", "--candidate", "fifo"}).code == 1);
    auto plot = invoke({"sweep", "--trace", trace, "--emit", "plotdata", "--jobs", "4"});
    CHECK(plot.code == 0);
    CHECK(plot.out.find("# policy: AWRP") != std::string::npos);
}

TEST_CASE("--out writes the artifact to a file") {
    const auto trace = scratch("scan.txt").string();
    invoke({"gen", "--workload", "scan", "--n", "5", "--universe", "3", "--out", trace});
    const auto out = scratch("result.json");
    auto r = invoke({"run", "--trace", trace, "--policy", "AWRP", "--capacity", "2", "--emit", "json", "--out", out.string()});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    CHECK(slurp(out).find("\"policy\": \"AWRP\"") != std::string::npos);
}

TEST_CASE("convert labeled to plain") {
    const auto in = scratch("labeled.txt");
    {
        std::ofstream f(in);
        f << "# sample\nL 0x1F40\nS 0x1F44\nL 0x2000\n";
    }
    const auto out = scratch("plain.txt");
    auto r = invoke({"convert", "--trace", in.string(), "--from", "labeled", "--to", "plain", "--block-bits", "6",
                  "--out", out.string()});
    REQUIRE(r.code == 0);
    const auto body = slurp(out);
    CHECK(body.substr(body.find('\n') + 1) == "125\n125\n128\n");
    CHECK(invoke({"convert", "--trace", in.string(), "--to", "labeled", "--out", out.string()}).code == 1);
}

TEST_CASE("block bits are applied by run") {
    const auto in = scratch("addr.txt");
    {
        std::ofstream f(in);
        f << "L 0x1F40\nS 0x1F44\n";
    }
    auto r = invoke({"run", "--trace", in.string(), "--format", "LABELED", "--policy", "fifo", "--capacity", "1",
                  "--block-bits", "6", "--emit", "csv"});
    CHECK(r.code == 0);
    CHECK(r.out.find("FIFO,1,1,1,1,0,50.00") != std::string::npos);
}

TEST_CASE("help exits 0") {
    auto r = invoke({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("sweep") != std::string::npos);
}
