#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lgt/enumerate.hpp"
#include "lgt/error.hpp"
#include "lgt/lattice.hpp"

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

}  // namespace

TEST(Lattice, ThreeChainFromCovers) {
  auto L = fixtures::chain3();
  EXPECT_EQ(L->size(), 3u);
  EXPECT_EQ(L->element_name(L->bottom()), "0");
  EXPECT_EQ(L->element_name(L->top()), "1");
  EXPECT_TRUE(L->leq(L->element("0"), L->element("a")));
  EXPECT_FALSE(L->leq(L->element("1"), L->element("a")));
}

TEST(Lattice, DiamondJoinOfAtoms) {
  auto L = fixtures::diamond();
  EXPECT_EQ(L->join(L->element("b1"), L->element("b2")), L->element("b3"));
  EXPECT_EQ(L->join(set_of(*L, {"b1", "b2"})), L->element("b3"));
  EXPECT_FALSE(L->leq(L->element("b1"), L->element("b2")));
}

TEST(Lattice, EmptyJoinAndMeet) {
  auto L = fixtures::diamond();
  EXPECT_EQ(L->join(ElementSet{}), L->bottom());
  EXPECT_EQ(L->meet(ElementSet{}), L->top());
  auto C = fixtures::chain3();
  EXPECT_EQ(C->meet(set_of(*C, {"a", "1"})), C->element("a"));
}

TEST(Lattice, BuildErrors) {
  EXPECT_EQ(kind_of([] {
              Lattice::from_covers("X", {"0", "x", "y"}, {{"0", "x"}, {"0", "y"}});
            }),
            ErrorKind::NoBoundsError);
  EXPECT_EQ(kind_of([] {
              Lattice::from_covers("X", {"0", "a", "b", "1"},
                                   {{"0", "a"}, {"a", "b"}, {"b", "a"}, {"b", "1"}});
            }),
            ErrorKind::CycleError);
  // Two maximal elements below two minimal ones: a, b have two minimal
  // upper bounds c, d.
  EXPECT_EQ(kind_of([] {
              Lattice::from_covers("X", {"0", "a", "b", "c", "d", "1"},
                                   {{"0", "a"}, {"0", "b"}, {"a", "c"}, {"a", "d"},
                                    {"b", "c"}, {"b", "d"}, {"c", "1"}, {"d", "1"}});
            }),
            ErrorKind::NotALattice);
  EXPECT_EQ(kind_of([] { Lattice::from_covers("X", {"0", "0"}, {}); }),
            ErrorKind::DuplicateElement);
  EXPECT_EQ(kind_of([] { Lattice::from_covers("X", {"0", "1"}, {{"0", "2"}}); }),
            ErrorKind::UnknownElement);
  EXPECT_EQ(kind_of([] { fixtures::chain3()->element("zz"); }), ErrorKind::UnknownElement);
}

TEST(Lattice, FrameCertificates) {
  EXPECT_TRUE(fixtures::chain4()->is_frame());
  EXPECT_TRUE(fixtures::diamond()->is_frame());
  auto M = fixtures::m3();
  const auto& cert = M->frame_certificate();
  ASSERT_FALSE(cert.is_frame);
  ASSERT_TRUE(cert.witness.has_value());
  auto [a, b, c] = *cert.witness;
  EXPECT_NE(M->meet(a, M->join(b, c)), M->join(M->meet(a, b), M->meet(a, c)));
  EXPECT_FALSE(cert.is_symmetric);
}

TEST(Lattice, Pseudocomplements) {
  auto D = fixtures::diamond();
  EXPECT_EQ(D->pseudocomplement(D->element("b1")), D->element("b2"));
  EXPECT_EQ(D->pseudocomplement(D->bottom()), D->top());
  auto C = fixtures::chain4();
  EXPECT_EQ(C->pseudocomplement(C->element("a1")), C->bottom());
  EXPECT_EQ(kind_of([] {
              auto M = fixtures::m3();
              M->pseudocomplement(M->bottom());
            }),
            ErrorKind::NotAFrame);
}

TEST(Lattice, Complements) {
  auto P = powerset_frame({"1", "2"});
  EXPECT_EQ(P.complement(1), std::optional<Elem>(2));
  EXPECT_TRUE(P.is_complemented());
  auto C = fixtures::chain3();
  EXPECT_FALSE(C->complement(C->element("a")).has_value());
  EXPECT_FALSE(C->is_complemented());
}

TEST(Lattice, Powersets) {
  auto empty = powerset_frame({});
  EXPECT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty.bottom(), empty.top());
  EXPECT_EQ(powerset_frame({"p"}).size(), 2u);
  auto P = powerset_frame({"p", "q"});
  EXPECT_EQ(P.join(P.element("{p}"), P.element("{q}")), P.element("{p,q}"));
  EXPECT_THROW(powerset_frame({"a", "b", "c", "d", "e", "f", "g"}), Error);
}

TEST(Lattice, Products) {
  std::vector<LatticePtr> two{fixtures::chain2(), fixtures::chain2()};
  auto B = product_lattice(two);
  EXPECT_EQ(B.size(), 4u);
  EXPECT_TRUE(is_isomorphic(B, *fixtures::boolean4()));

  std::vector<LatticePtr> one{fixtures::chain3()};
  EXPECT_TRUE(is_isomorphic(product_lattice(one), *fixtures::chain3()));

  std::vector<LatticePtr> mixed{fixtures::chain2(), fixtures::chain3()};
  auto M = product_lattice(mixed);
  EXPECT_EQ(M.size(), 6u);
  EXPECT_EQ(M.join(M.element("(1,0)"), M.element("(0,a)")), M.element("(1,a)"));
  EXPECT_EQ(M.element_name(M.bottom()), "(0,0)");
  EXPECT_EQ(M.element_name(M.top()), "(1,1)");
}

TEST(Lattice, DownSets) {
  auto C = fixtures::chain4();
  auto sub = down_set_lattice(*C, C->element("a2"));
  EXPECT_TRUE(is_isomorphic(sub, *fixtures::chain3()));
  EXPECT_TRUE(is_isomorphic(down_set_lattice(*C, C->top()), *C));
  auto D = fixtures::diamond();
  EXPECT_TRUE(is_isomorphic(down_set_lattice(*D, D->element("b3")), *fixtures::boolean4()));
}

// Order/lattice laws on every enumerated lattice up to 6 elements.
TEST(LatticeProperties, LawsOnEnumeratedLattices) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& L : enumerate_lattices(n)) {
      for (Elem a = 0; a < n; ++a) {
        EXPECT_TRUE(L.leq(L.bottom(), a));
        EXPECT_TRUE(L.leq(a, L.top()));
        for (Elem b = 0; b < n; ++b) {
          const bool le = L.leq(a, b);
          EXPECT_EQ(le, L.join(a, b) == b);
          EXPECT_EQ(le, L.meet(a, b) == a);
          EXPECT_EQ(L.join(a, b), L.join(b, a));
          EXPECT_EQ(L.meet(a, b), L.meet(b, a));
          EXPECT_EQ(L.join(a, L.meet(a, b)), a);
          EXPECT_EQ(L.meet(a, L.join(a, b)), a);
          for (Elem c = 0; c < n; ++c) {
            EXPECT_EQ(L.join(a, L.join(b, c)), L.join(L.join(a, b), c));
            EXPECT_EQ(L.meet(a, L.meet(b, c)), L.meet(L.meet(a, b), c));
          }
        }
        EXPECT_EQ(L.join(a, a), a);
        EXPECT_EQ(L.meet(a, a), a);
      }
    }
  }
}

TEST(LatticeProperties, PseudocomplementLawsOnFrames) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& F : enumerate_frames(n)) {
      for (Elem a = 0; a < n; ++a) {
        const Elem s = F.pseudocomplement(a);
        EXPECT_EQ(F.meet(a, s), F.bottom());
        EXPECT_TRUE(F.leq(a, F.pseudocomplement(s)));
        EXPECT_EQ(F.pseudocomplement(F.pseudocomplement(s)), s);
        if (auto c = F.complement(a)) EXPECT_EQ(*c, s);
      }
    }
  }
}
