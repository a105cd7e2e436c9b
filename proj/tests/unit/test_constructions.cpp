#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lgt/constructions.hpp"
#include "lgt/enumerate.hpp"
#include "lgt/error.hpp"

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

TEST(Product, SingleFactor) {
  auto C = fixtures::chain3();
  std::vector<Topology> f{Topology::discrete(C)};
  auto p = product_space(f);
  EXPECT_TRUE(is_isomorphic(*p.carrier, *C));
  EXPECT_TRUE(is_isomorphism(projection(p, 0), p.topology, f[0]));
  EXPECT_EQ(kind_of([&] { projection(p, 1); }), ErrorKind::IndexOutOfRange);
}

TEST(Product, TwoDiscreteChains) {
  std::vector<Topology> f{Topology::discrete(fixtures::chain2()),
                          Topology::discrete(fixtures::chain2())};
  auto p = product_space(f);
  EXPECT_TRUE(is_isomorphic(*p.carrier, *fixtures::boolean4()));
  EXPECT_TRUE(p.topology.is_discrete());
  // (π_0)_*(0) = (0, 1).
  EXPECT_EQ(p.carrier->element_name(projection(p, 0).right_adjoint_at(0)), "(0,1)");
}

TEST(Product, MixedTopologies) {
  std::vector<Topology> f{Topology::discrete(fixtures::chain2()),
                          Topology::trivial(fixtures::chain3())};
  auto p = product_space(f);
  EXPECT_EQ(p.topology.opens(), set_of(*p.carrier, {"(0,0)", "(0,1)", "(1,0)", "(1,1)"}));
  for (std::size_t i = 0; i < 2; ++i) {
    auto c = classify(projection(p, i), p.topology, f[i]);
    EXPECT_TRUE(c.olg);
    EXPECT_TRUE(c.open_map);
  }
}

TEST(Product, ErrorsAndBounds) {
  std::vector<Topology> none;
  EXPECT_EQ(kind_of([&] { product_space(none); }), ErrorKind::IndexOutOfRange);
  std::vector<Topology> many(7, Topology::discrete(fixtures::chain2()));
  EXPECT_EQ(kind_of([&] { product_space(many); }), ErrorKind::SizeLimitExceeded);
}

TEST(Product, MapsIntoProduct) {
  auto C = fixtures::chain3();
  auto triv = Topology::trivial(C);
  auto disc = Topology::discrete(C);
  // Diagonal C → C × C.
  std::vector<Topology> f{disc, disc};
  auto p = product_space(f);
  std::vector<Elem> g;
  for (Elem x = 0; x < 3; ++x) {
    std::vector<Elem> coords{x, x};
    g.push_back(p.index.encode(coords));
  }
  auto diag = LatticeMap::make(C, p.carrier, g);
  auto ok = maps_into_product_check(diag, disc, p);
  EXPECT_TRUE(ok.olg);
  EXPECT_TRUE(ok.every_component_olg);
  // With the trivial source topology the first component is the paper's
  // CLG-not-OLG identity.
  auto bad = maps_into_product_check(diag, triv, p);
  EXPECT_FALSE(bad.olg);
  EXPECT_FALSE(bad.every_component_olg);
  EXPECT_EQ(bad.failing_component, std::optional<std::size_t>(0));
}

TEST(Product, ComponentEmbedding) {
  std::vector<Topology> f{Topology::discrete(fixtures::chain2()),
                          Topology::trivial(fixtures::chain3())};
  auto p = product_space(f);
  auto e = component_embedding(p, 1);
  EXPECT_EQ(p.carrier->element_name(e.indicator), "(0,1)");
  EXPECT_TRUE(is_isomorphic(e.subspace.carrier(), *fixtures::chain3()));
  EXPECT_TRUE(is_isomorphism(e.restricted_projection, e.subspace, f[1]));
  std::vector<Topology> one{f[1]};
  auto u = component_embedding(product_space(one), 0);
  EXPECT_EQ(u.subspace.carrier().size(), 3u);
  EXPECT_EQ(kind_of([&] { component_embedding(p, 2); }), ErrorKind::IndexOutOfRange);
}

TEST(Weak, Basics) {
  auto D = fixtures::diamond();
  std::vector<MapIntoSpace> none;
  EXPECT_TRUE(weak_topology(D, none).is_trivial());
  for (const auto& t : all_topologies(D)) {
    std::vector<MapIntoSpace> self{{LatticeMap::identity(D), t}};
    EXPECT_EQ(weak_topology(D, self).opens(), t.opens());
  }
}

TEST(Weak, ProjectionsRealizeProduct) {
  auto C = fixtures::chain3();
  auto B = fixtures::chain2();
  for (const auto& t1 : all_topologies(C)) {
    for (const auto& t2 : all_topologies(B)) {
      std::vector<Topology> f{t1, t2};
      auto p = product_space(f);
      std::vector<MapIntoSpace> fam{{p.projections[0], t1}, {p.projections[1], t2}};
      EXPECT_EQ(weak_topology(p.carrier, fam).opens(), p.topology.opens());
    }
  }
}

TEST(Quotient, IdentityAndErrors) {
  auto D = fixtures::diamond();
  for (const auto& t : all_topologies(D)) {
    auto q = quotient_topology(LatticeMap::identity(D), t);
    EXPECT_EQ(q.topology.opens(), t.opens());
    EXPECT_TRUE(q.greatest);
  }
  auto phi = fixtures::paper_phi();
  EXPECT_EQ(kind_of([&] { quotient_topology(phi, Topology::discrete(phi.source_ptr())); }),
            ErrorKind::NotOnto);
  // Onto and join-preserving, but the adjoint sends 0 to a.
  auto C3 = fixtures::chain3();
  auto C2 = fixtures::chain2();
  auto m = LatticeMap::make(C3, C2, {0, 0, 1});
  EXPECT_EQ(kind_of([&] { quotient_topology(m, Topology::discrete(C3)); }),
            ErrorKind::AdjointNotJoinPreserving);
}

TEST(Quotient, UniversalProperty) {
  auto C = fixtures::chain3();
  auto id = LatticeMap::identity(C);
  auto q = quotient_topology(id, Topology::trivial(C));
  auto same = quotient_universal_check(q, id, Topology::trivial(C));
  EXPECT_TRUE(same.olg && same.composite_olg);
  auto finer = quotient_universal_check(q, id, Topology::discrete(C));
  EXPECT_FALSE(finer.olg);
  EXPECT_FALSE(finer.composite_olg);
}

TEST(Partition, Examples) {
  auto P = share(powerset_frame({"1", "2", "3"}));
  const ElementSet singles = set_of(*P, {"{1}", "{2}", "{3}"});
  EXPECT_TRUE(is_partition(*P, singles));
  auto d = Partition::make(P, singles);
  EXPECT_EQ(block_trace(d, P->element("{1,2}")), set_of(*P, {"{1}", "{2}"}));

  auto D = fixtures::diamond();
  EXPECT_FALSE(is_partition(*D, set_of(*D, {"b1", "b2"})));
  EXPECT_EQ(kind_of([&] { Partition::make(D, set_of(*D, {"b1", "b2"})); }),
            ErrorKind::NotAPartition);
  auto whole = Partition::make(D, set_of(*D, {"1"}));
  for (Elem a = 0; a < D->size(); ++a) {
    EXPECT_EQ(block_trace(whole, a),
              a == D->bottom() ? ElementSet{} : set_of(*D, {"1"}));
  }
}

TEST(Partition, TraceLawOnEnumeratedFrames) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& F : enumerate_frames(n)) {
      auto L = share(F);
      for (const auto& d : all_partitions(L)) {
        const auto blocks = d.block_list();
        for (Elem a = 0; a < n; ++a) {
          const ElementSet ta = block_trace(d, a);
          for (std::uint64_t s = 0; s < (std::uint64_t{1} << blocks.size()); ++s) {
            ElementSet T;
            for (std::size_t k = 0; k < blocks.size(); ++k) {
              if ((s >> k) & 1U) T.insert(blocks[k]);
            }
            EXPECT_EQ(L->leq(a, L->join(T)), ta.is_subset_of(T));
          }
        }
      }
    }
  }
}

TEST(Partition, AllPartitionsMatchesBruteForce) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& F : enumerate_frames(n)) {
      auto L = share(F);
      std::size_t brute = 0;
      for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        brute += is_partition(*L, ElementSet(s));
      }
      EXPECT_EQ(all_partitions(L).size(), brute);
    }
  }
}

TEST(Decomposition, Examples) {
  auto D = fixtures::diamond();
  auto whole = Partition::make(D, set_of(*D, {"1"}));
  auto ds = decomposition_space(Topology::discrete(D), whole);
  EXPECT_EQ(ds.frame->size(), 2u);
  EXPECT_EQ(ds.topology.opens(), ElementSet(0b11));

  auto P = share(powerset_frame({"1", "2"}));
  auto d = Partition::make(P, set_of(*P, {"{1}", "{2}"}));
  auto pd = decomposition_space(Topology::discrete(P), d);
  EXPECT_TRUE(pd.topology.is_discrete());
  EXPECT_TRUE(pd.p.is_bijective());
  EXPECT_TRUE(pd.p.is_join_preserving());
  auto q = quotient_topology(pd.p, Topology::discrete(P));
  EXPECT_EQ(q.topology.opens(), pd.topology.opens());
}

TEST(Mho, Spaces) {
  auto one = mho_space(FiniteSpace::make("X", {"p"}, {}));
  EXPECT_EQ(one.frame->size(), 2u);
  EXPECT_TRUE(one.topology.is_discrete());
  EXPECT_TRUE(one.topology.is_trivial());
  auto s = mho_space(FiniteSpace::make("S", {"p", "q"}, {0b01}));
  EXPECT_EQ(s.frame->size(), 4u);
  EXPECT_EQ(s.topology.opens(), ElementSet(0b1011));
  for (std::size_t n = 0; n <= 3; ++n) {
    for (const auto& x : all_spaces(n)) {
      auto m = mho_space(x);
      EXPECT_TRUE(is_lg_topology(*m.frame, m.topology.opens()));
    }
  }
  EXPECT_EQ(kind_of([] { FiniteSpace::make("B", {"p", "q", "r"}, {0b001, 0b010}); }),
            ErrorKind::NotATopology);
}

TEST(Spaces, Counts) {
  // Number of topologies on 0..4 labeled points.
  const std::size_t expected[] = {1, 1, 4, 29, 355};
  for (std::size_t n = 0; n <= 4; ++n) EXPECT_EQ(all_spaces(n).size(), expected[n]);
  EXPECT_EQ(all_functions(3, 2).size(), 8u);
  EXPECT_EQ(all_functions(0, 2).size(), 1u);
  EXPECT_EQ(all_functions(2, 0).size(), 0u);
}
