#include <gtest/gtest.h>

#include <filesystem>
#include <algorithm>

#include "fixtures.hpp"
#include "lgt/constructions.hpp"
#include "lgt/error.hpp"
#include "lgt/io.hpp"

using namespace lgt;
using fixtures::set_of;

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

Workspace load(const std::string& text) {
  Workspace w;
  w.add_text(text, "test");
  w.resolve();
  return w;
}

const char* kPaper = R"(
# the 4-chain and the diamond
lattice F1
elements 0 a1 a2 1
covers 0<a1 a1<a2 a2<1

lattice F2
elements 0 b1 b2 b3 1
covers 0<b1 0<b2 b1<b3 b2<b3 b3<1

topology t1 on F1
open 0 a1 a2 1

map phi from F1 to F2
0 -> 0
a1 -> b1
a2 -> b3
1 -> 1
)";

}  // namespace

TEST(Io, ParsesPaperObjects) {
  const Workspace w = load(kPaper);
  EXPECT_TRUE(w.problems().empty());
  EXPECT_EQ(w.lattice("F2")->size(), 5U);
  EXPECT_TRUE(w.topology("t1").is_discrete());
  EXPECT_TRUE(w.map("phi").same_as(fixtures::paper_phi()));
  EXPECT_EQ(w.carrier_name(ObjectKind::Topology, "t1"), "F1");
  EXPECT_EQ(w.map_endpoints("phi"), std::make_pair(std::string("F1"), std::string("F2")));
  ASSERT_EQ(w.objects().size(), 4U);
  EXPECT_EQ(w.objects()[3].first, ObjectKind::Map);
}

TEST(Io, ReferencesMayPrecedeDeclarations) {
  const Workspace w = load(
      "topology t on C\nopen 0 1\n"
      "lattice C\nelements 0 a 1\ncovers 0<a a<1\n");
  EXPECT_TRUE(w.topology("t").is_trivial());
}

TEST(Io, RoundTripsEveryKind) {
  auto F2 = fixtures::diamond();
  const Topology t = Topology::discrete(F2);
  const LatticeMap phi = fixtures::paper_phi();
  auto B = fixtures::boolean4();
  const Partition blocks = Partition::make(B, set_of(*B, {"p", "q"}), "D");
  const FiniteSpace s = FiniteSpace::make("S", {"p", "q"}, {0b01});
  const PointFunction f{"f", {1, 1}};
  std::string text = write_lattice(phi.source(), "F1") + write_lattice(*F2, "F2") +
                     write_lattice(*B, "B") + write_topology(t, "t", "F2") +
                     write_map(phi, "phi", "F1", "F2") + write_partition(blocks, "D", "B") +
                     write_space(s) + write_function(f, "f", s, s);
  WitnessSpec spec;
  spec.id = "w";
  spec.maps = {"phi"};
  spec.elements = {{"F2", "b3"}};
  spec.subsets = {{"B", {"p", "q"}}};
  spec.params = {3, -1};
  text += write_witness(spec);

  const Workspace w = load(text);
  ASSERT_TRUE(w.problems().empty());
  EXPECT_TRUE(w.lattice("F2")->same_structure(*F2));
  EXPECT_TRUE(w.topology("t").same_as(t));
  EXPECT_TRUE(std::ranges::equal(w.map("phi").graph(), phi.graph()));
  EXPECT_EQ(w.partition("D").blocks(), blocks.blocks());
  EXPECT_EQ(w.space("S").opens(), s.opens());
  EXPECT_EQ(w.function("f").function.image, f.image);
  const WitnessSpec& back = w.witness("w");
  EXPECT_EQ(back.maps, spec.maps);
  EXPECT_EQ(back.elements, spec.elements);
  EXPECT_EQ(back.subsets, spec.subsets);
  EXPECT_EQ(back.params, spec.params);

  // Writing what was read gives the same text.
  EXPECT_EQ(write_lattice(*w.lattice("F2")), write_lattice(*F2, "F2"));
  EXPECT_EQ(write_space(w.space("S")), write_space(s));
}

TEST(Io, StructuralFaultsThrow) {
  EXPECT_EQ(kind_of([] { load("lattice\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { load("open 0 1\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { load("topology t C\nopen 0\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { load("lattice C\nelements 0 a 1\ncovers 0<a a<0 a<1\n"); }),
            ErrorKind::CycleError);
  EXPECT_EQ(kind_of([] { load("topology t on Nope\nopen 0\n"); }), ErrorKind::UnknownObject);
  EXPECT_EQ(kind_of([] {
              load("lattice C\nelements 0 1\ncovers 0<1\ntopology t on C\nopen 0 z 1\n");
            }),
            ErrorKind::UnknownElement);
  EXPECT_EQ(kind_of([] {
              load("lattice C\nelements 0 1\ncovers 0<1\nlattice C\nelements 0 1\ncovers 0<1\n");
            }),
            ErrorKind::DuplicateElement);
}

TEST(Io, SemanticFaultsAreRecorded) {
  // b3 missing: b1 and b2 are open but their join is not.
  const Workspace w = load(std::string(kPaper) +
                           "topology bad on F2\nopen 0 b1 b2 1\n"
                           "map partial from F1 to F2\n0 -> 0\n"
                           "map uses from F1 to F2\n0 -> 0\na1 -> 0\na2 -> 0\n1 -> 1\n"
                           "witness x\ntopologies bad\n");
  ASSERT_EQ(w.problems().size(), 3U);
  EXPECT_EQ(w.problems()[0].name, "bad");
  EXPECT_EQ(w.problems()[0].error, ErrorKind::NotATopology);
  EXPECT_EQ(w.problems()[1].error, ErrorKind::NotTotal);
  EXPECT_EQ(w.problems()[2].kind, ObjectKind::Witness);
  EXPECT_EQ(w.problems()[2].error, ErrorKind::UnknownObject);
  EXPECT_FALSE(w.has(ObjectKind::Topology, "bad"));
  EXPECT_TRUE(w.has(ObjectKind::Map, "uses"));
  EXPECT_EQ(kind_of([&] { w.topology("bad"); }), ErrorKind::UnknownObject);
}

TEST(Io, DirectoriesLoadInNameOrder) {
  const auto dir = std::filesystem::temp_directory_path() / "lgt_io_test_dir";
  std::filesystem::remove_all(dir);
  write_file(dir, "b.lgt", "topology t on C\nopen 0 1\n");
  write_file(dir, "a.lgt", "lattice C\nelements 0 1\ncovers 0<1\n");
  Workspace w;
  w.add_path(dir);
  w.resolve();
  ASSERT_EQ(w.objects().size(), 2U);
  EXPECT_EQ(w.objects()[0].second, "C");
  std::filesystem::remove_all(dir);
}
