#include "boxfactor/cli.hpp"
#include "boxfactor/lgr.hpp"
#include "boxfactor/loop_factor.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace boxfactor;

namespace {

const std::string kGolden = BOXFACTOR_GOLDEN_DIR;

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "boxfactor");
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream s;
    s << file.rdbuf();
    return s.str();
}

std::filesystem::path scratch_dir(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / ("boxfactor_cli_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

} // namespace

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"factor"}).code == kExitUsage);
    CHECK(run({"factor", kGolden + "/k2.lgr", "--algorithm", "quantum"}).code == kExitUsage);
    CHECK(run({"factor", kGolden + "/no_such_file.lgr"}).code == kExitUsage);
    CHECK(run({"gen", "--factors", "2"}).code == kExitUsage);
    CHECK(run({"verify", kGolden + "/k2.lgr"}).code == kExitUsage);
    CHECK(run({"bench", "--family", "hypercube-loops", "--from", "5", "--to", "3"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("parse errors exit 3") {
    for (const auto* name : {"bad_record.lgr", "self_edge.lgr", "duplicate.lgr", "out_of_range.lgr", "missing_header.lgr"}) {
        const auto r = run({"factor", kGolden + "/" + name});
        CHECK(r.code == kExitParse);
        CHECK(r.out.empty());
    }
    const auto self = run({"strip", kGolden + "/self_edge.lgr"});
    CHECK(self.err.find("SelfEdgeViaE") != std::string::npos);
    CHECK(run({"strip", "-"}, "n 2\ne 0 0\n").code == kExitParse);
}

TEST_CASE("domain errors exit 4 with the error name") {
    const auto looped = run({"factor", kGolden + "/looped_triangle.lgr"});
    CHECK(looped.code == kExitDomain);
    CHECK(looped.err.find("NoUnloopedVertex") != std::string::npos);
    for (const auto* algorithm : {"linear", "subset", "oracle"}) {
        const auto r = run({"factor", kGolden + "/disconnected.lgr", "--algorithm", algorithm});
        CHECK(r.code == kExitDomain);
        CHECK(r.err.find("Disconnected") != std::string::npos);
    }
    CHECK(run({"factor", "-"}, "n 0\n").err.find("Trivial") != std::string::npos);
}

TEST_CASE("product, factor and strip") {
    const auto product = run({"product", kGolden + "/p3_loop.lgr", kGolden + "/k2.lgr"});
    REQUIRE(product.code == kExitOk);
    const auto g = parse_lgr(product.out);
    CHECK(g.n() == 6);
    CHECK(g.loop_count() == 2);

    const auto factored = run({"factor", "-"}, product.out);
    REQUIRE(factored.code == kExitOk);
    CHECK(factored.out == slurp(kGolden + "/p3loop_x_k2.factor.txt"));
    CHECK(run({"factor", "-"}, product.out).out == factored.out);
    for (const auto* algorithm : {"subset", "oracle"}) {
        CHECK(run({"factor", "-", "--algorithm", algorithm}, product.out).out == factored.out);
    }

    const auto json = run({"factor", "-", "--json"}, product.out);
    CHECK(json.out == slurp(kGolden + "/p3loop_x_k2.factor.json"));

    const auto stripped = run({"strip", kGolden + "/p3_loop.lgr"});
    CHECK(stripped.out == "n 3\ne 0 1\ne 1 2\n");
}

TEST_CASE("gen and verify round trip through files") {
    const auto dir = scratch_dir("gen");
    const auto prefix = (dir / "inst").string();
    const std::vector<std::string> gen_args{"gen", "--factors", "3", "--min-size", "2", "--max-size", "4",
                                            "--loop-prob", "0.3", "--seed", "11", "--prefix", prefix};
    const auto generated = run(gen_args);
    REQUIRE(generated.code == kExitOk);
    CHECK(run(gen_args).out == generated.out);

    std::vector<std::string> verify_args{"verify", prefix + ".lgr"};
    for (int i = 0; i < 3; ++i) {
        verify_args.push_back(prefix + ".gen" + std::to_string(i) + ".lgr");
    }
    verify_args.push_back(prefix + ".coords.tsv");
    const auto ok = run(verify_args);
    CHECK(ok.code == kExitOk);
    CHECK(ok.out == "ok\n");

    const auto fprefix = (dir / "f").string();
    const auto factored = run({"factor", prefix + ".lgr", "--prefix", fprefix});
    REQUIRE(factored.code == kExitOk);
    const auto primes = parse_lgr(slurp(prefix + ".lgr"));
    std::vector<std::string> verify_primes{"verify", prefix + ".lgr"};
    for (std::size_t i = 0; std::filesystem::exists(fprefix + ".prime" + std::to_string(i) + ".lgr"); ++i) {
        verify_primes.push_back(fprefix + ".prime" + std::to_string(i) + ".lgr");
    }
    verify_primes.push_back(fprefix + ".coords.tsv");
    CHECK(run(verify_primes).code == kExitOk);

    // Same tables against the wrong graph.
    std::vector<std::string> wrong = verify_args;
    wrong[1] = kGolden + "/k2.lgr";
    CHECK(run(wrong).code == kExitVerifyFailed);
    std::ofstream(dir / "bad.tsv") << "0\t9\t9\t9\n";
    verify_args.back() = (dir / "bad.tsv").string();
    CHECK(run(verify_args).code == kExitVerifyFailed);
    std::ofstream(dir / "junk.tsv") << "zero\n";
    verify_args.back() = (dir / "junk.tsv").string();
    CHECK(run(verify_args).code == kExitParse);
}

TEST_CASE("bench emits csv rows") {
    const auto r = run({"bench", "--family", "hypercube-loops", "--from", "3", "--to", "4", "--csv"});
    REQUIRE(r.code == kExitOk);
    std::istringstream lines(r.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "n,m,stage,milliseconds");
    std::size_t rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK((line.rfind("8,12,", 0) == 0 || line.rfind("16,32,", 0) == 0));
    }
    CHECK(rows == 6);
}
