#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "lgt/cli.hpp"
#include "lgt/io.hpp"
#include "lgt/verify.hpp"

using namespace lgt;

namespace {

const std::string kData = LGT_TEST_DATA;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  return Outcome{code, out.str(), err.str()};
}

std::string data(const std::string& file) { return kData + "/" + file; }

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("lgt_cli_" + name);
  std::filesystem::remove_all(p);
  return p;
}

}  // namespace

TEST(Cli, CheckValidFiles) {
  const Outcome r = run({"check", data("chain3.lgt"), data("chain_to_diamond.lgt")});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("OK topology discrete"), std::string::npos);
}

TEST(Cli, CheckCycleIsAParseFailure) {
  const Outcome r = run({"check", data("cycle.lgt")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("CycleError"), std::string::npos);
}

TEST(Cli, CheckMissingJoinIsAValidationFailure) {
  const Outcome r = run({"check", data("missing_b3.lgt")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.out.find("INVALID topology holes NotATopology"), std::string::npos);
  EXPECT_NE(r.out.find("b3"), std::string::npos);
}

TEST(Cli, CheckRejectsNonJoinPreservingMaps) {
  const Outcome r = run({"check", data("not_join_preserving.lgt")});
  EXPECT_EQ(r.code, kExitFailure);
  EXPECT_NE(r.out.find("INVALID map lift NotJoinPreserving"), std::string::npos);
}

TEST(Cli, ClassifyClgNotOlg) {
  const Outcome r = run({"classify", "id", "trivial", "discrete", "-w", data("chain3.lgt")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("CLASSIFY id olg=false clg=true lg=false"), std::string::npos);
}

TEST(Cli, ClassifyIdentityOnEqualTopologies) {
  const Outcome r = run({"classify", "id", "discrete", "discrete", "-w", data("chain3.lgt")});
  EXPECT_EQ(r.out, "CLASSIFY id olg=true clg=true lg=true open=true closed=true\n");
}

TEST(Cli, ClassifyOlgNotClg) {
  const Outcome r = run({"classify", "phi", "tau1", "tau2", "-w", data("chain_to_diamond.lgt")});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("olg=true clg=false"), std::string::npos);
  EXPECT_NE(r.out.find("WITNESS clg closed=b1 adjoint=a1"), std::string::npos);
}

TEST(Cli, InteriorAndClosure) {
  Outcome r = run({"interior", "trivial", "a", "-w", data("chain3.lgt")});
  EXPECT_EQ(r.out, "INTERIOR trivial a = 0\n");
  r = run({"closure", "discrete", "a", "-w", data("chain3.lgt")});
  EXPECT_EQ(r.out, "CLOSURE discrete a = 1\n");
  r = run({"closure", "discrete", "zz", "-w", data("chain3.lgt")});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(Cli, DecomposeWithTopBlock) {
  const Outcome r = run({"construct", "decompose", "trivial", "top", "--name", "D", "-w",
                     data("chain3.lgt")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("lattice D\nelements {} {1}\n"), std::string::npos);
}

TEST(Cli, MhoOfSierpinski) {
  const Outcome r = run({"construct", "mho", "S", "--name", "PS", "-w", data("sierpinski.lgt")});
  EXPECT_EQ(r.code, kExitOk);
  Workspace w;
  w.add_text(r.out, "out");
  w.resolve();
  EXPECT_EQ(w.lattice("PS")->size(), 4U);
  EXPECT_EQ(w.topology("tau_PS").opens().size(), 3U);
}

TEST(Cli, ProductFilesReplayProjectionTheorems) {
  const auto dir = scratch("product");
  const Outcome r = run({"construct", "product", "trivial", "discrete", "--name", "P",
                     "--out-dir", dir.string(), "-w", data("chain3.lgt")});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Outcome again = run({"construct", "product", "trivial", "discrete", "--name", "P", "-w",
                         data("chain3.lgt")});
  // Projections are OLG and open maps.
  for (const char* pi : {"pi1_P", "pi2_P"}) {
    const std::string target = std::string(pi) == "pi1_P" ? "trivial" : "discrete";
    const Outcome c = run({"classify", pi, "tau_P", target, "-w", dir.string(), "-w",
                       data("chain3.lgt")});
    EXPECT_NE(c.out.find("olg=true"), std::string::npos) << c.out << c.err;
    EXPECT_NE(c.out.find("open=true"), std::string::npos) << c.out;
  }
  // Output is byte-deterministic.
  const Outcome third = run({"construct", "product", "trivial", "discrete", "--name", "P", "-w",
                         data("chain3.lgt")});
  EXPECT_EQ(again.out, third.out);
  std::filesystem::remove_all(dir);
}

TEST(Cli, QuotientAndSubspaceAndWeak) {
  Outcome r = run({"construct", "quotient", "id", "discrete", "--name", "q", "-w",
               data("chain3.lgt")});
  EXPECT_EQ(r.out, "topology q on C3\nopen 0 a 1\n\n");
  r = run({"construct", "subspace", "discrete", "a", "--name", "Sa", "-w", data("chain3.lgt")});
  EXPECT_NE(r.out.find("topology tau_Sa on Sa\nopen 0 a\n"), std::string::npos);
  r = run({"construct", "weak", "C3", "id", "trivial", "--name", "wk", "-w",
           data("chain3.lgt")});
  EXPECT_EQ(r.out, "topology wk on C3\nopen 0 1\n\n");
  r = run({"construct", "weak", "C3", "id", "-w", data("chain3.lgt")});
  EXPECT_EQ(r.code, kExitUsage);
}

TEST(Cli, VerifyGoalWritesWitness) {
  const auto dir = scratch("goal");
  const Outcome r = run({"verify", "--goal", "clg-not-olg", "--max-size", "3", "--out-dir",
                     dir.string(), "--format", "machine"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(std::filesystem::exists(dir / "clg-not-olg.witness"));
  const Outcome check = run({"check", (dir / "clg-not-olg.witness").string()});
  EXPECT_EQ(check.code, kExitOk) << check.out;
  std::filesystem::remove_all(dir);
}

TEST(Cli, VerifyExpectedCounterexamplePasses) {
  const auto dir = scratch("only");
  const Outcome r = run({"verify", "--only", "S1.section-identity", "--format", "machine",
                     "--out-dir", dir.string()});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("THEOREM S1.section-identity COUNTEREXAMPLE file="), std::string::npos);
  EXPECT_NE(r.out.find("SUMMARY theorems=1 met=1 unmet=0 skipped=0"), std::string::npos);
  std::filesystem::remove_all(dir);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frob"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--max-size", "9"}).code, kExitUsage);
  EXPECT_EQ(run({"verify", "--only", "S9.none"}).code, kExitUsage);
  EXPECT_EQ(run({"search", "nothing"}).code, kExitUsage);
  EXPECT_EQ(run({"classify", "nope", "a", "b", "-w", data("chain3.lgt")}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, ListsTheorems) {
  const Outcome r = run({"verify", "--list"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("S1.adjunction HOLDS"), std::string::npos);
  EXPECT_NE(r.out.find("goal olg-not-clg"), std::string::npos);
}
