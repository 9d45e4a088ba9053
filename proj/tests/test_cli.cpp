#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "bredim/cli.hpp"

using namespace bredim;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

const std::string kDiag = "2 2\n2 0\n0 3\n";
const std::string kTwoCliques = "4 4\n0 1\n1 2\n0 2\n2 3\n";
const std::string kGog = "vertex A rank=2\nvertex B rank=3\nedge A B finite\nacylindrical = true\n";

} // namespace

TEST_CASE("lattice commands") {
    auto r = run({"lattice", "snf"}, kDiag);
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "# bredim lattice snf\n"));
    CHECK(contains(r.out, "invariant_factors = 1 6\n"));

    r = run({"lattice", "hnf", "-"}, "2 2\n2 4\n1 1\n");
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "# hnf\n2 2\n1 1\n0 2\n"));

    r = run({"lattice", "saturate"}, "2 1\n2 4\n");
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "1 2\n"));

    r = run({"lattice", "hnf"}, "2 1\n1 x\n");
    CHECK(r.code == cli::kInputError);
    CHECK(r.err == "input error: line 2: expected an integer, got 'x'\n");
    CHECK(r.out.empty());
}

TEST_CASE("two-file lattice commands read from disk") {
    const std::string big = "bredim_cli_test_M.txt";
    const std::string small = "bredim_cli_test_L.txt";
    std::ofstream(big) << "2 2\n1 0\n0 1\n";
    std::ofstream(small) << kDiag;
    auto r = run({"lattice", "index", small, big});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "index = 6"));
    r = run({"lattice", "index", big, small});
    CHECK(r.code == cli::kInputError);
    r = run({"lattice", "commensurable", small, big});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "commensurable = true"));
    r = run({"lattice", "index", small, "bredim_cli_test_missing.txt"});
    CHECK(r.code == cli::kInputError);
    std::remove(big.c_str());
    std::remove(small.c_str());
}

TEST_CASE("raag commands") {
    auto r = run({"raag", "cd"}, kTwoCliques);
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "cd = 3\n"));

    r = run({"raag", "gd", "--k", "2"}, kTwoCliques);
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "gd = 5\n"));
    CHECK(contains(r.out, "citation: raag-dimension"));

    r = run({"raag", "gd", "--k", "3"}, kTwoCliques);
    CHECK(r.code == cli::kOutOfRange);
    CHECK(contains(r.err, "out of range: "));

    r = run({"raag", "cliques"}, kTwoCliques);
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "clique_number = 3"));

    r = run({"raag", "gd", "--k", "1"}, "2 1\n0 0\n");
    CHECK(r.code == cli::kInputError);
    CHECK(r.err == "input error: line 2: loop at vertex 0\n");
}

TEST_CASE("dims commands") {
    auto r = run({"dims", "braid", "--n", "4", "--k", "1"});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "gd = 4\n"));
    r = run({"dims", "braid", "--n", "4", "--k", "3", "--pure"});
    CHECK(r.code == cli::kOutOfRange);
    r = run({"dims", "vab", "--n", "3", "--k", "3"});
    CHECK(r.code == cli::kOutOfRange);
    CHECK(contains(r.err, "degenerate"));
    r = run({"dims", "out-diamonds", "--d", "2", "--k", "1"});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "gd >= 8\n"));

    r = run({"dims", "derive-zn", "--n", "3", "--k", "1", "--tree"});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "gd <= 4\n"));
    CHECK(contains(r.out, "induction_levels = 2"));
    CHECK(contains(r.out, "[lw-pushout]"));

    r = run({"--format", "structured", "dims", "derive-zn", "--n", "3", "--k", "1", "--tree"});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "gd_lower=0\ngd_upper=4\n"));
    CHECK(contains(r.out, "nodes=6\n"));
    CHECK(contains(r.out, "  node=0 rule=lw-pushout"));
}

TEST_CASE("gog commands") {
    auto r = run({"gog", "gd", "--k", "1"}, kGog);
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "gd = 4\n"));
    r = run({"gog", "bounds", "--k", "1"}, kGog);
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "label=\"cone 2-cell\""));
    r = run({"gog", "gd", "--k", "1"}, "vertex A rank=2\nvertex B rank=1\nedge A B rank=2\n");
    CHECK(r.code == cli::kInputError);
    CHECK(contains(r.err, "it cannot embed"));
    r = run({"gog", "bounds", "--k", "1"}, "vertex A rank=2\n");
    CHECK(r.code == cli::kOutOfRange);
}

TEST_CASE("homology command") {
    const auto r = run({"homology", "--cohomology"}, "degrees 2\n1 1 1\n# boundary 1\n1 1\n0\n# boundary 2\n1 1\n2\n");
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "Z/2"));
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"lattice"}).code == cli::kUsage);
    CHECK(run({"dims", "braid", "--n", "4"}).code == cli::kUsage);
    CHECK(run({"dims", "braid", "--n", "four", "--k", "1"}).code == cli::kUsage);
    CHECK(run({"verify", "nope"}).code == cli::kUsage);
    CHECK(run({"--format", "xml", "raag", "cd"}, kTwoCliques).code == cli::kUsage);
    CHECK(contains(run({"lattice"}).err, "usage error: "));
}

TEST_CASE("output is deterministic and fingerprints the input") {
    const auto a = run({"raag", "salvetti", "--cohomology"}, kTwoCliques);
    const auto b = run({"raag", "salvetti", "--cohomology"}, kTwoCliques);
    CHECK(a.code == cli::kOk);
    CHECK(a.out == b.out);
    const auto c = run({"raag", "salvetti", "--cohomology"}, "4 3\n0 1\n1 2\n0 2\n");
    CHECK(contains(a.out, "# input fnv1a64="));
    CHECK(a.out.substr(0, a.out.find('\n', a.out.find("fnv1a64"))) !=
          c.out.substr(0, c.out.find('\n', c.out.find("fnv1a64"))));
}

TEST_CASE("verify subcommand") {
    auto r = run({"verify", "dims", "--seed", "7"});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "criterion 7 (derivation replay): pass"));
    CHECK(contains(r.out, "seed = 7\n"));
    CHECK(contains(r.out, "verify = pass\n"));
    r = run({"verify", "homology"});
    CHECK(r.code == cli::kOk);
}

TEST_CASE("negative controls") {
    const auto nc = cli::negative_controls();
    CHECK(nc.id == 9);
    CHECK(nc.passed);
    CHECK(nc.checked >= 10);
}
