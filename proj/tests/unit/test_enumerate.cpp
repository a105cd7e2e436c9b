#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "lattice_oracle.hpp"
#include "lgt/enumerate.hpp"
#include "lgt/error.hpp"

using namespace lgt;

namespace {

oracle::Matrix to_matrix(const Lattice& L) {
  oracle::Matrix m(L.size(), std::vector<bool>(L.size()));
  for (Elem a = 0; a < L.size(); ++a) {
    for (Elem b = 0; b < L.size(); ++b) m[a][b] = L.leq(a, b);
  }
  return m;
}

// Same order with element positions reversed.
Lattice reverse_labels(const Lattice& L) {
  const std::size_t n = L.size();
  std::vector<std::string> names(n);
  std::vector<ElementSet> up(n);
  for (Elem a = 0; a < n; ++a) {
    names[n - 1 - a] = L.element_name(a);
    for (Elem b : L.up_set(a)) up[n - 1 - a].insert(static_cast<Elem>(n - 1 - b));
  }
  return Lattice::from_order("rev", std::move(names), std::move(up));
}

}  // namespace

TEST(Enumerate, KnownSmallCounts) {
  const std::size_t lattices[] = {0, 1, 1, 1, 2, 5, 15};
  const std::size_t frames[] = {0, 1, 1, 1, 2, 3, 5};
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(enumerate_lattices(n).size(), lattices[n]) << "n=" << n;
    EXPECT_EQ(enumerate_frames(n).size(), frames[n]) << "n=" << n;
  }
  EXPECT_EQ(enumerate_lattices(7).size(), 53u);
}

TEST(Enumerate, MatchesOracleClassByClass) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto classes = oracle::lattice_classes(n);
    const auto mine = enumerate_lattices(n);
    ASSERT_EQ(mine.size(), classes.size()) << "n=" << n;
    std::set<oracle::Matrix> seen;
    for (const auto& L : mine) seen.insert(oracle::canonical(to_matrix(L)));
    EXPECT_EQ(seen, classes) << "n=" << n;
    const auto dist = oracle::distributive_classes(n);
    EXPECT_EQ(enumerate_frames(n).size(), dist.size()) << "n=" << n;
  }
}

TEST(Enumerate, PairwiseNonIsomorphicAndKeyIdempotent) {
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto all = enumerate_lattices(n);
    for (std::size_t i = 0; i < all.size(); ++i) {
      const Lattice reversed = reverse_labels(all[i]);
      EXPECT_EQ(canonical_key(all[i]), canonical_key(reversed));
      EXPECT_TRUE(is_isomorphic(all[i], reversed));
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        EXPECT_FALSE(is_isomorphic(all[i], all[j]));
        EXPECT_NE(canonical_key(all[i]), canonical_key(all[j]));
      }
    }
  }
}

TEST(Enumerate, DeterministicOrderAndNames) {
  const auto a = enumerate_lattices(5);
  const auto b = enumerate_lattices(5);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_TRUE(a[i].same_structure(b[i]));
  EXPECT_EQ(a.front().name(), "L5_0");
  EXPECT_EQ(a.front().element_name(0), "0");
  EXPECT_EQ(a.front().element_name(4), "1");
}

TEST(Enumerate, KeysAgreeWithIsomorphism) {
  auto d = fixtures::diamond();
  const auto five = enumerate_lattices(5);
  std::size_t matches = 0;
  for (const auto& L : five) {
    const bool iso = is_isomorphic(L, *d);
    EXPECT_EQ(iso, canonical_key(L) == canonical_key(*d));
    matches += iso;
  }
  EXPECT_EQ(matches, 1u);
}

TEST(Enumerate, BoundEnforced) {
  EXPECT_THROW(enumerate_lattices(kMaxEnumerationBound + 1), Error);
  EXPECT_TRUE(enumerate_lattices(0).empty());
}
