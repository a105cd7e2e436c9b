#include "lgt/enumerate.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "lgt/error.hpp"

namespace lgt {

namespace {

// Order rows of `lattice` relabelled by `order` (order[k] = old element at
// new position k).
CanonicalKey relabelled_rows(const Lattice& L, const std::vector<Elem>& order) {
  const std::size_t n = L.size();
  std::vector<Elem> position(n);
  for (std::size_t k = 0; k < n; ++k) position[order[k]] = static_cast<Elem>(k);
  CanonicalKey rows(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    std::uint64_t row = 0;
    for (Elem j : L.up_set(order[k])) row |= std::uint64_t{1} << position[j];
    rows[k] = row;
  }
  return rows;
}

bool is_transitive(const std::vector<ElementSet>& up) {
  for (std::size_t i = 0; i < up.size(); ++i) {
    for (Elem j : up[i]) {
      if (!up[j].is_subset_of(up[i])) return false;
    }
  }
  return true;
}

// Every pair has a least upper bound and a greatest lower bound.
bool is_lattice_order(const std::vector<ElementSet>& up) {
  const std::size_t n = up.size();
  std::vector<ElementSet> down(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (Elem j : up[i]) down[j].insert(static_cast<Elem>(i));
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const ElementSet upper = up[a] & up[b];
      const ElementSet lower = down[a] & down[b];
      bool lub = false;
      for (Elem u : upper) {
        if (upper.is_subset_of(up[u])) {
          lub = true;
          break;
        }
      }
      bool glb = false;
      for (Elem u : lower) {
        if (lower.is_subset_of(down[u])) {
          glb = true;
          break;
        }
      }
      if (!lub || !glb) return false;
    }
  }
  return true;
}

Lattice from_canonical_key(const CanonicalKey& key, std::size_t n,
                           std::size_t ordinal) {
  std::vector<std::string> names(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (k == 0) {
      names[k] = "0";
    } else if (k + 1 == n) {
      names[k] = "1";
    } else {
      names[k] = "x" + std::to_string(k);
    }
  }
  std::vector<ElementSet> up(n);
  for (std::size_t k = 0; k < n; ++k) up[k] = ElementSet(key[k]);
  return Lattice::from_order(
      "L" + std::to_string(n) + "_" + std::to_string(ordinal), std::move(names),
      std::move(up));
}

}  // namespace

CanonicalKey canonical_key(const Lattice& L) {
  const std::size_t n = L.size();
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::stable_sort(order.begin(), order.end(), [&](Elem a, Elem b) {
    return L.down_set(a).size() < L.down_set(b).size();
  });
  // Boundaries of equal-rank blocks.
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && L.down_set(order[j]).size() == L.down_set(order[i]).size()) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  for (auto [lo, hi] : blocks) std::sort(order.begin() + lo, order.begin() + hi);

  CanonicalKey best = relabelled_rows(L, order);
  // Odometer over the per-block permutations.
  while (true) {
    std::size_t b = 0;
    for (; b < blocks.size(); ++b) {
      auto [lo, hi] = blocks[b];
      if (std::next_permutation(order.begin() + lo, order.begin() + hi)) break;
      // next_permutation wrapped this block back to sorted; carry.
    }
    if (b == blocks.size()) break;
    CanonicalKey rows = relabelled_rows(L, order);
    if (rows < best) best = std::move(rows);
  }
  return best;
}

bool is_isomorphic(const Lattice& a, const Lattice& b) {
  if (a.size() != b.size()) return false;
  // Backtracking over candidate images with matching rank and co-rank.
  const std::size_t n = a.size();
  auto signature = [](const Lattice& L, Elem e) {
    return std::pair{L.down_set(e).size(), L.up_set(e).size()};
  };
  std::vector<Elem> order(n);
  std::iota(order.begin(), order.end(), Elem{0});
  std::sort(order.begin(), order.end(), [&](Elem x, Elem y) {
    return signature(a, x) < signature(a, y);
  });
  std::vector<Elem> image(n, 0);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, std::size_t k) -> bool {
    if (k == n) return true;
    const Elem x = order[k];
    for (Elem y = 0; y < n; ++y) {
      if (used[y] || signature(a, x) != signature(b, y)) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < k && consistent; ++i) {
        const Elem p = order[i];
        consistent = a.leq(p, x) == b.leq(image[p], y) &&
                     a.leq(x, p) == b.leq(y, image[p]);
      }
      if (!consistent) continue;
      used[y] = true;
      image[x] = y;
      if (self(self, k + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

std::vector<Lattice> enumerate_lattices(std::size_t n) {
  if (n > kMaxEnumerationBound) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "enumeration bound " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxEnumerationBound));
  }
  if (n == 0) return {};
  std::map<CanonicalKey, bool> classes;
  if (n == 1) {
    classes.emplace(CanonicalKey{1}, true);
  } else {
    // Naturally labelled orders: 0 is bottom, n-1 is top, and i < j in the
    // order implies i < j as integers. Every finite poset has such a
    // labelling, so every isomorphism class is reached.
    const std::size_t inner = n - 2;
    std::vector<std::pair<Elem, Elem>> pairs;
    for (Elem i = 1; i <= inner; ++i) {
      for (Elem j = i + 1; j <= inner; ++j) pairs.emplace_back(i, j);
    }
    const Elem top = static_cast<Elem>(n - 1);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      std::vector<ElementSet> up(n);
      up[0] = ElementSet::first(n);
      up[top] = ElementSet::singleton(top);
      for (Elem i = 1; i <= inner; ++i) {
        up[i] = ElementSet::singleton(i) | ElementSet::singleton(top);
      }
      for (std::size_t p = 0; p < pairs.size(); ++p) {
        if ((mask >> p) & 1U) up[pairs[p].first].insert(pairs[p].second);
      }
      if (!is_transitive(up) || !is_lattice_order(up)) continue;
      std::vector<std::string> names(n);
      for (std::size_t i = 0; i < n; ++i) names[i] = "e" + std::to_string(i);
      Lattice L = Lattice::from_order("tmp", std::move(names), std::move(up));
      classes.emplace(canonical_key(L), true);
    }
  }
  std::vector<Lattice> out;
  out.reserve(classes.size());
  std::size_t ordinal = 0;
  for (const auto& [key, unused] : classes) {
    out.push_back(from_canonical_key(key, n, ordinal++));
  }
  return out;
}

std::vector<Lattice> enumerate_frames(std::size_t n) {
  std::vector<Lattice> out;
  for (auto& L : enumerate_lattices(n)) {
    if (L.is_frame()) out.push_back(std::move(L));
  }
  return out;
}

}  // namespace lgt
