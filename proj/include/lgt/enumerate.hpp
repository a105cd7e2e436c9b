#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lgt/lattice.hpp"

namespace lgt {

inline constexpr std::size_t kDefaultEnumerationBound = 6;
inline constexpr std::size_t kMaxEnumerationBound = 8;

// Isomorphism-invariant key of a lattice's order. Elements are sorted by
// rank (down-set size); within equal ranks every permutation is tried and
// the lexicographically smallest order matrix wins. Two lattices are
// isomorphic iff their keys are equal.
using CanonicalKey = std::vector<std::uint64_t>;

CanonicalKey canonical_key(const Lattice& lattice);

bool is_isomorphic(const Lattice& a, const Lattice& b);

// One representative per isomorphism class of bounded lattices with exactly
// n elements, in ascending canonical-key order. Elements of a representative
// are named "0" (bottom), "x1".. (inner, by canonical position) and "1"
// (top); the lattice is named "L<n>_<k>". Throws SizeLimitExceeded when n
// exceeds kMaxEnumerationBound.
std::vector<Lattice> enumerate_lattices(std::size_t n);

// The distributive members of enumerate_lattices(n).
std::vector<Lattice> enumerate_frames(std::size_t n);

}  // namespace lgt
