#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bolsuper/algebra_io.hpp"
#include "bolsuper/command.hpp"
#include "support.hpp"

using namespace bolsuper;

namespace {

const std::string kData = BOLSUPER_TEST_DATA;

CommandResult run(std::vector<std::string> args) { return runCommand(args); }

bool startsWith(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

TEST_CASE("check: exit codes and verdicts") {
    auto r = run({"check", kData + "/L2_3_1.alg", "--kind", "bol"});
    CHECK(r.exitCode == 0);
    CHECK(startsWith(r.out, "PASS"));

    r = run({"check", kData + "/L2_2_2.alg", "--kind", "lie"});
    CHECK(r.exitCode == 1);
    CHECK(startsWith(r.out, "FAIL"));
    CHECK(r.out.find("super_jacobi (e1,e2,e3): -3*e4") != std::string::npos);

    CHECK(run({"check", "L2_2_2_malcev", "--kind", "malcev"}).exitCode == 0);
    CHECK(run({"check", "L2_2_2_malcev", "--kind", "jordan"}).exitCode == 2);
    CHECK(run({"check", "L2_2_2_malcev"}).exitCode == 2);
    CHECK(run({"check", "aff2_lie", "--kind", "bol"}).exitCode == 2);  // no ternary product
    CHECK(run({}).exitCode == 2);
    CHECK(run({"frobnicate"}).exitCode == 2);

    r = run({"check", kData + "/bad_label.alg", "--kind", "lie"});
    CHECK(r.exitCode == 2);
    CHECK(r.err.find("line 3, column 18") != std::string::npos);
    CHECK(run({"check", kData + "/missing.alg", "--kind", "lie"}).exitCode == 2);
}

TEST_CASE("help exits cleanly") {
    const auto r = run({"--help"});
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("killing-ricci") != std::string::npos);
}

TEST_CASE("machine format is sorted key = value lines") {
    const auto r = run({"--format", "machine", "check", "L2_2_2_malcev", "--kind", "lie"});
    CHECK(r.exitCode == 1);
    std::istringstream in(r.out);
    std::string line, prev;
    int n = 0;
    while (std::getline(in, line)) {
        CHECK(line.find(" = ") != std::string::npos);
        const std::string key = line.substr(0, line.find(" = "));
        CHECK(prev <= key);
        prev = key;
        ++n;
    }
    CHECK(n > 5);
    CHECK(r.out.find("result = fail\n") != std::string::npos);
    CHECK(r.out.find("witnesses = 6\n") != std::string::npos);
    // global option after the subcommand
    CHECK(run({"check", "L2_3_1_bol", "--kind", "bol", "--format", "machine"}).out.find("result = pass") !=
          std::string::npos);
}

TEST_CASE("derive-bol prints or writes the derived algebra") {
    auto r = run({"derive-bol", "L2_2_2_malcev"});
    CHECK(r.exitCode == 0);
    CHECK(parseAlgebra(r.out) == catalogEntry("L2_2_2_bol").algebra);

    const auto path = std::filesystem::temp_directory_path() / "bolsuper_derived.alg";
    r = run({"derive-bol", "L2_2_2_malcev", "-o", path.string()});
    CHECK(r.exitCode == 0);
    CHECK(loadAlgebraFile(path.string()) == catalogEntry("L2_2_2_bol").algebra);
    std::filesystem::remove(path);

    // the binary part of L2(3,1) is Malcev and regenerates the listed triple products
    r = run({"derive-bol", kData + "/L2_3_1.alg"});
    CHECK(r.exitCode == 0);
    CHECK(parseAlgebra(r.out).ternary() == catalogEntry("L2_3_1_bol").algebra.ternary());

    r = run({"derive-bol", kData + "/not_malcev.alg"});
    CHECK(r.exitCode == 1);
    CHECK(startsWith(r.out, "FAIL"));
    CHECK(run({"lie-to-lts", "L2_2_2_malcev"}).exitCode == 1);
    CHECK(run({"lie-to-lts", "aff2_lie"}).out.find("ternary [e1,e2,e1] = -e2") != std::string::npos);
}

TEST_CASE("forms and spaces") {
    auto r = run({"killing-ricci", kData + "/L2_3_1.alg", "--method", "both"});
    CHECK(r.exitCode == 0);
    const auto direct = r.out.find("direct:"), restriction = r.out.find("restriction:");
    REQUIRE(direct != std::string::npos);
    REQUIRE(restriction != std::string::npos);
    // the two printed Gram matrices are identical
    auto gram = [&](std::size_t from) {
        const auto start = r.out.find('\n', from) + 1;
        return r.out.substr(start, r.out.find("supersymmetric", start) - start);
    };
    CHECK(gram(direct) == gram(restriction));
    CHECK(r.out.find("routes agree: yes") != std::string::npos);

    CHECK(run({"killing", "aff2_lie"}).exitCode == 0);
    CHECK(run({"killing", "L2_2_2_malcev"}).exitCode == 1);
    CHECK(run({"--format", "machine", "killing", "aff2_lie"}).out.find("killing.gram.e1.e1 = 1\n") !=
          std::string::npos);
    CHECK(run({"center", "abelian_1_1"}).out.find("dim 2") != std::string::npos);
    CHECK(run({"--format", "machine", "envelope", "L2_3_1_bol"}).out.find("dim.total = 8\n") != std::string::npos);
    CHECK(run({"envelope", "L2_3_1_bol", "--maximal"}).exitCode == 0);
    CHECK(run({"envelope", "L2_2_2_malcev"}).exitCode == 2);
    CHECK(run({"pseudo", "L2_3_1_bol", "--max"}).out.find("contains IPS: yes") != std::string::npos);
    CHECK(run({"pseudo", "L2_3_1_bol", "--inner", "--max"}).exitCode == 2);
    r = run({"report", "L2_2_2_bol"});
    CHECK(r.exitCode == 0);
    CHECK(r.out.find("ideals and their orthogonals:") != std::string::npos);
}

TEST_CASE("catalog commands") {
    auto r = run({"catalog", "list"});
    CHECK(r.exitCode == 0);
    for (const auto& k : catalogKeys()) CHECK(r.out.find(k) != std::string::npos);
    r = run({"catalog", "show", "L2_3_1_bol"});
    CHECK(r.exitCode == 0);
    CHECK(parseAlgebra(r.out) == catalogEntry("L2_3_1_bol").algebra);
    CHECK(run({"catalog", "show", "nope"}).exitCode == 2);
    CHECK(run({"catalog"}).exitCode == 2);
}

TEST_CASE("output is deterministic") {
    const std::vector<std::vector<std::string>> cmds = {
        {"report", "L2_3_1_bol"}, {"--format", "machine", "envelope", "L2_2_2_bol", "--maximal"},
        {"check", "L2_2_2_malcev", "--kind", "lie"}, {"pseudo", "L2_2_2_bol", "--max"}};
    for (const auto& c : cmds) {
        const auto a = runCommand(c), b = runCommand(c);
        CHECK(a.out == b.out);
        CHECK(a.err == b.err);
        CHECK(a.exitCode == b.exitCode);
    }
}
