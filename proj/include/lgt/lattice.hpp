#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgt/element_set.hpp"

namespace lgt {

// Outcome of testing the frame law. On a finite carrier every subset join
// is a finite join, so binary distributivity over all triples decides it.
struct FrameCertificate {
  bool is_frame = false;
  bool is_symmetric = false;
  // (a, b, c) with a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c); present iff !is_frame.
  std::optional<std::array<Elem, 3>> witness;
  // (a, b, c) with a ∨ (b ∧ c) != (a ∨ b) ∧ (a ∨ c); present iff !is_symmetric.
  std::optional<std::array<Elem, 3>> symmetric_witness;
};

// A finite bounded lattice. The order is stored as up-sets and down-sets,
// and join/meet are precomputed tables, so every operation after
// construction is a lookup. Instances are immutable.
class Lattice {
 public:
  // Order given as cover pairs (x, y) meaning x < y. The order is the
  // reflexive-transitive closure of the covers.
  // Throws CycleError, NoBoundsError, NotALattice, DuplicateElement,
  // InvalidName, UnknownElement, SizeLimitExceeded.
  static Lattice from_covers(
      std::string name, std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& covers);

  // Order given as up-sets: up_sets[i] = { j : i <= j }. Must already be a
  // partial order (reflexive, antisymmetric, transitive).
  static Lattice from_order(std::string name, std::vector<std::string> elements,
                            std::vector<ElementSet> up_sets);

  const std::string& name() const { return name_; }
  std::size_t size() const { return names_.size(); }
  ElementSet all() const { return ElementSet::first(size()); }

  const std::string& element_name(Elem e) const { return names_.at(e); }
  const std::vector<std::string>& element_names() const { return names_; }
  std::optional<Elem> find(std::string_view name) const;
  // Throws UnknownElement.
  Elem element(std::string_view name) const;

  Elem bottom() const { return bottom_; }
  Elem top() const { return top_; }

  bool leq(Elem a, Elem b) const { return up_[a].contains(b); }
  ElementSet up_set(Elem a) const { return up_[a]; }
  ElementSet down_set(Elem a) const { return down_[a]; }

  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  // Empty join is bottom, empty meet is top.
  Elem join(ElementSet s) const;
  Elem meet(ElementSet s) const;

  // Hasse diagram edges (x, y) with x covered by y, in element order.
  std::vector<std::pair<Elem, Elem>> covers() const;
  // Elements with exactly one lower cover.
  std::vector<Elem> join_irreducibles() const;

  const FrameCertificate& frame_certificate() const { return frame_; }
  bool is_frame() const { return frame_.is_frame; }

  // Join of { x : x ∧ a = 0 }. Throws NotAFrame.
  Elem pseudocomplement(Elem a) const;
  // The unique b with a ∧ b = 0 and a ∨ b = 1, if any. Throws NotAFrame.
  std::optional<Elem> complement(Elem a) const;
  // Throws NotAFrame.
  bool is_complemented() const;

  // Same element names in the same order with the same order relation.
  bool same_structure(const Lattice& other) const;

  Lattice renamed(std::string name) const;

 private:
  Lattice() = default;
  void require_frame(std::string_view operation) const;

  std::string name_;
  std::vector<std::string> names_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
  std::vector<Elem> join_;
  std::vector<Elem> meet_;
  std::vector<Elem> pseudo_;
  Elem bottom_ = 0;
  Elem top_ = 0;
  FrameCertificate frame_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

inline LatticePtr share(Lattice lattice) {
  return std::make_shared<const Lattice>(std::move(lattice));
}

// Element names must be nonempty and free of whitespace, '<', '#'.
bool is_valid_token(std::string_view name);

FrameCertificate is_frame(const Lattice& lattice);

// Subsets of `points` ordered by inclusion. Element i is the subset whose
// bit mask is i, named "{p,q}" with points in the given order.
// At most 6 points. Throws SizeLimitExceeded.
Lattice powerset_frame(const std::vector<std::string>& points,
                       std::string name = "P");

// Name of the powerset element with the given bit mask.
std::string subset_name(const std::vector<std::string>& points,
                        std::uint64_t mask);

// Coordinatewise product. Tuples are ordered lexicographically with the
// first factor most significant; names are "(x,y,...)".
// Throws SizeLimitExceeded (more than 64 elements) or IndexOutOfRange
// (empty factor list).
Lattice product_lattice(std::span<const LatticePtr> factors,
                        std::string name = {});

// Mixed-radix addressing for product elements.
class ProductIndex {
 public:
  explicit ProductIndex(std::vector<std::size_t> radices);

  std::size_t size() const { return total_; }
  std::size_t arity() const { return radices_.size(); }
  Elem encode(std::span<const Elem> coords) const;
  std::vector<Elem> decode(Elem e) const;
  Elem coordinate(Elem e, std::size_t factor) const;

 private:
  std::vector<std::size_t> radices_;
  std::vector<std::size_t> strides_;
  std::size_t total_ = 1;
};

// ↓a with inherited operations. Element k of the result is the k-th member
// of lattice.down_set(a) in ascending position. Throws UnknownElement.
Lattice down_set_lattice(const Lattice& lattice, Elem a);

}  // namespace lgt
