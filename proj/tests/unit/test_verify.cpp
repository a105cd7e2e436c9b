#include <gtest/gtest.h>

#include <set>

#include "fixtures.hpp"
#include "lgt/enumerate.hpp"
#include "lgt/error.hpp"
#include "lgt/verify.hpp"

using namespace lgt;

namespace {

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::ParseError;
}

// Every graph from → to, kept when it preserves joins.
std::vector<std::vector<Elem>> brute_force_maps(const LatticePtr& from, const LatticePtr& to) {
  std::vector<std::vector<Elem>> out;
  std::vector<Elem> g(from->size(), 0);
  while (true) {
    if (LatticeMap::make(from, to, g).is_join_preserving()) out.push_back(g);
    std::size_t k = g.size();
    while (k > 0 && g[k - 1] + 1 == to->size()) g[--k] = 0;
    if (k == 0) break;
    ++g[k - 1];
  }
  return out;
}

bool is_chain(const Lattice& L) {
  for (Elem x = 0; x < L.size(); ++x) {
    for (Elem y = 0; y < L.size(); ++y) {
      if (!L.leq(x, y) && !L.leq(y, x)) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Verify, JoinPreservingMapsMatchBruteForce) {
  std::vector<LatticePtr> frames;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto& f : enumerate_frames(n)) frames.push_back(share(std::move(f)));
  }
  for (const auto& A : frames) {
    for (const auto& B : frames) {
      if (A->size() + B->size() > 9) continue;
      std::vector<std::vector<Elem>> fast;
      for (const auto& m : join_preserving_maps(A, B)) {
        fast.emplace_back(m.graph().begin(), m.graph().end());
      }
      EXPECT_EQ(fast, brute_force_maps(A, B)) << A->name() << " -> " << B->name();
    }
  }
}

TEST(Verify, UniverseShape) {
  const Universe u(4);
  ASSERT_EQ(u.frames().size(), 5U);  // 1 + 1 + 1 + 2
  EXPECT_EQ(u.frames_up_to(3).size(), 3U);
  // Cached tables are stable references.
  EXPECT_EQ(&u.maps(u.frames()[2], u.frames()[3]), &u.maps(u.frames()[2], u.frames()[3]));
  auto outside = fixtures::diamond();
  EXPECT_EQ(u.topologies(outside).size(), all_topologies(outside).size());
  EXPECT_EQ(kind_of([] { Universe(kMaxVerifySize + 1); }), ErrorKind::SizeLimitExceeded);
}

TEST(Verify, RegistryIdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& c : theorem_registry()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.statement.empty());
    if (c.expectation == Expectation::Skipped) {
      EXPECT_FALSE(c.skip_reason.empty());
    } else {
      EXPECT_TRUE(c.family && c.violates) << c.id;
    }
  }
  EXPECT_EQ(kind_of([] { find_theorem("S9.nothing"); }), ErrorKind::UnknownTheoremId);
  EXPECT_EQ(kind_of([] { search_counterexample("nothing", 3); }), ErrorKind::UnknownGoal);
}

TEST(Verify, SuiteMeetsExpectationsAtSizeThree) {
  SuiteOptions options;
  options.max_size = 3;
  const auto reports = run_suite(options);
  ASSERT_EQ(reports.size(), theorem_registry().size());
  for (const auto& r : reports) {
    EXPECT_TRUE(r.met()) << format_report(r, false);
  }
}

TEST(Verify, SuiteIndependentOfJobs) {
  SuiteOptions one;
  one.max_size = 3;
  SuiteOptions many = one;
  many.jobs = 6;
  const auto a = run_suite(one);
  const auto b = run_suite(many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].id, b[i].id);
    EXPECT_EQ(a[i].instances, b[i].instances);
    EXPECT_EQ(a[i].witness_text, b[i].witness_text);
  }
}

TEST(Verify, SectionIdentityWitness) {
  SuiteOptions options;
  options.max_size = 3;
  options.only = {"S1.section-identity"};
  const auto reports = run_suite(options);
  ASSERT_EQ(reports.size(), 1U);
  ASSERT_TRUE(reports[0].counterexample());
  const auto& m = reports[0].witness->maps.at(0);
  EXPECT_EQ(m.source().size(), 2U);
  EXPECT_EQ(m.target().size(), 3U);
  EXPECT_EQ(format_report(reports[0], true),
            "THEOREM S1.section-identity COUNTEREXAMPLE file=- expected=true");
}

TEST(Verify, ClgNotOlgIsThePaperIdentity) {
  const auto r = search_counterexample("clg-not-olg", 3);
  ASSERT_TRUE(r.witness);
  const auto& in = *r.witness;
  const auto& m = in.maps[0];
  EXPECT_EQ(m.source().size(), 3U);
  EXPECT_TRUE(m.same_as(LatticeMap::identity(m.source_ptr())));
  EXPECT_TRUE(in.topologies[0].is_trivial());
  EXPECT_TRUE(in.topologies[1].is_discrete());
}

TEST(Verify, OlgNotClgSmallestWitness) {
  // Smaller than the 4-chain -> diamond example: the 3-chain onto the
  // 2-chain collapsing the middle, discrete source, trivial target.
  const auto r = search_counterexample("olg-not-clg", 5);
  ASSERT_TRUE(r.witness);
  const auto& in = *r.witness;
  const auto& m = in.maps[0];
  EXPECT_EQ(m.source().size(), 3U);
  EXPECT_EQ(m.target().size(), 2U);
  EXPECT_EQ(std::vector<Elem>(m.graph().begin(), m.graph().end()),
            (std::vector<Elem>{0, 0, 1}));
  EXPECT_TRUE(in.topologies[0].is_discrete());
  // Same mechanism as the paper: phi_* lands on a chain atom outside t1*.
  const Elem atom = m.right_adjoint_at(m.target().bottom());
  EXPECT_FALSE(in.topologies[0].is_closed(atom));
}

TEST(Verify, ConverseWitnessesHaveThePaperShape) {
  for (const char* goal : {"converse-discrete-c", "converse-discrete-d"}) {
    const auto r = search_counterexample(goal, 4);
    ASSERT_TRUE(r.witness) << goal;
    const auto& m = r.witness->maps[0];
    EXPECT_TRUE(is_chain(m.source()) && is_chain(m.target())) << goal;
    for (Elem x = 0; x < m.source().size(); ++x) {
      EXPECT_EQ(m(x), x == m.source().top() ? m.target().top() : m.target().bottom());
    }
    EXPECT_TRUE(r.witness->topologies[1].is_trivial());
  }
}

TEST(Verify, EveryGoalWitnessReplays) {
  for (const auto& goal : search_goals()) {
    const auto r = search_counterexample(goal, 4);
    ASSERT_TRUE(r.witness) << goal;
    EXPECT_TRUE(replay_witness(goal, r.witness_text)) << goal;
    // Serialization is deterministic.
    EXPECT_EQ(serialize_instance(goal, *r.witness), r.witness_text);
  }
}

TEST(Verify, SuiteWitnessesReplay) {
  SuiteOptions options;
  options.max_size = 4;
  for (const auto& c : theorem_registry()) {
    if (c.expectation == Expectation::ExpectCounterexample) options.only.push_back(c.id);
  }
  for (const auto& r : run_suite(options)) {
    ASSERT_TRUE(r.counterexample()) << r.id;
    EXPECT_TRUE(replay_witness(r.id, r.witness_text)) << r.id;
  }
}

TEST(Verify, ReplayRejectsAHoldingInstance) {
  auto C = fixtures::chain3();
  Instance in;
  in.maps = {LatticeMap::identity(C)};
  in.topologies = {Topology::discrete(C), Topology::discrete(C)};
  const std::string text = serialize_instance("clg-not-olg", in);
  EXPECT_FALSE(replay_witness("clg-not-olg", text));
  EXPECT_EQ(kind_of([&] { replay_witness("S9.nothing", text); }),
            ErrorKind::UnknownTheoremId);
}

TEST(Verify, MachineLines) {
  VerifyReport r;
  r.id = "x";
  r.instances = 7;
  EXPECT_EQ(format_report(r, true), "THEOREM x PASS instances=7");
  r.expectation = Expectation::ExpectCounterexample;
  EXPECT_EQ(format_report(r, true), "THEOREM x MISSING instances=7");
  EXPECT_EQ(format_summary({r}, true), "SUMMARY theorems=1 met=0 unmet=1 skipped=0");
}
