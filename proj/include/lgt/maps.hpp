#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lgt/element_set.hpp"
#include "lgt/lattice.hpp"
#include "lgt/space.hpp"
#include "lgt/topology.hpp"

namespace lgt {

// Result of a preservation test. When it fails, exactly one of `bound`
// (the bound whose image is wrong) or `pair` (a pair whose join/meet is not
// preserved) is set.
struct PreservationReport {
  bool holds = true;
  std::optional<Elem> bound;
  std::optional<std::pair<Elem, Elem>> pair;
};

// A total function between the element sets of two lattices. Preservation
// flags are computed at construction; adjoints are computed on first use
// and shared between copies.
class LatticeMap {
 public:
  // Throws NotTotal if the graph does not assign one valid target element to
  // every source element.
  static LatticeMap make(LatticePtr source, LatticePtr target,
                         std::vector<Elem> graph, std::string name = {});
  static LatticeMap identity(LatticePtr lattice, std::string name = {});

  const Lattice& source() const { return *source_; }
  const Lattice& target() const { return *target_; }
  const LatticePtr& source_ptr() const { return source_; }
  const LatticePtr& target_ptr() const { return target_; }
  const std::string& name() const { return name_; }
  std::span<const Elem> graph() const { return graph_; }

  Elem operator()(Elem x) const { return graph_[x]; }
  ElementSet image() const;
  ElementSet image(ElementSet xs) const;

  // φ(0) = 0 and φ(x ∨ y) = φ(x) ∨ φ(y); on a finite carrier this is
  // preservation of arbitrary joins.
  bool is_join_preserving() const { return join_.holds; }
  bool is_meet_preserving() const { return meet_.holds; }
  const PreservationReport& join_preservation() const { return join_; }
  const PreservationReport& meet_preservation() const { return meet_; }

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }

  // φ_*(b) = ⋁{ x : φ(x) ≤ b }. Throws NotJoinPreserving.
  LatticeMap right_adjoint() const;
  // φ^*(b) = ⋀{ x : b ≤ φ(x) }. Throws NotMeetPreserving.
  LatticeMap left_adjoint() const;
  // Pointwise φ_*(b) by the same formula, for hot loops. Throws
  // NotJoinPreserving.
  Elem right_adjoint_at(Elem b) const;
  std::span<const Elem> right_adjoint_graph() const;

  LatticeMap renamed(std::string name) const;

  // Same endpoints (structurally) and same graph.
  bool same_as(const LatticeMap& other) const;

 private:
  struct AdjointCache;

  LatticeMap() = default;

  LatticePtr source_;
  LatticePtr target_;
  std::string name_;
  std::vector<Elem> graph_;
  PreservationReport join_;
  PreservationReport meet_;
  std::shared_ptr<AdjointCache> cache_;
};

bool same_lattice(const Lattice& a, const Lattice& b);

PreservationReport is_join_preserving(const LatticeMap& m);
PreservationReport is_meet_preserving(const LatticeMap& m);

// m: F1 → F2, n: F2 → F1. True iff m(a) ≤ b ⇔ a ≤ n(b) for every a, b.
// Throws SourceTargetMismatch.
bool check_adjunction(const LatticeMap& m, const LatticeMap& n);

// First b with φ(φ_*(b)) != b, or nullopt if φ ∘ φ_* is the identity.
// Throws NotJoinPreserving.
std::optional<Elem> section_identity_witness(const LatticeMap& m);
bool holds_section_identity(const LatticeMap& m);

// n ∘ m (apply m first). Throws SourceTargetMismatch.
LatticeMap compose(const LatticeMap& n, const LatticeMap& m);

// Inverse of a bijection. Throws NotOnto if m is not bijective.
LatticeMap inverse(const LatticeMap& m);

struct MapClassification {
  bool olg = false;
  bool clg = false;
  bool lg = false;
  bool open_map = false;
  bool closed_map = false;
  // First violation in element order for each false flag.
  std::optional<Elem> olg_witness;     // open u of τ2 with φ_*(u) ∉ τ1
  std::optional<Elem> clg_witness;     // closed f of τ2* with φ_*(f) ∉ τ1*
  std::optional<Elem> open_witness;    // open t of τ1 with φ(t) ∉ τ2
  std::optional<Elem> closed_witness;  // open t of τ1 with φ(t*) ∉ τ2*
};

// Throws NotJoinPreserving, TopologyCarrierMismatch.
MapClassification classify(const LatticeMap& m, const Topology& t1,
                           const Topology& t2);
bool is_olg(const LatticeMap& m, const Topology& t1, const Topology& t2);
bool is_clg(const LatticeMap& m, const Topology& t1, const Topology& t2);
bool is_lg(const LatticeMap& m, const Topology& t1, const Topology& t2);
// φ(t) open for every open t. Needs no preservation property.
bool is_open_map(const LatticeMap& m, const Topology& t1, const Topology& t2);
// φ(t*) closed for every open t.
bool is_closed_map(const LatticeMap& m, const Topology& t1, const Topology& t2);

// φ(cl a) ≤ cl φ(a) for every a of the source.
bool clg_via_closure(const LatticeMap& m, const Topology& t1, const Topology& t2);
// cl φ_*(b) ≤ φ_*(cl b) for every b of the target.
bool clg_via_adjoint_closure(const LatticeMap& m, const Topology& t1,
                             const Topology& t2);
// φ_*(int b) ≤ int φ_*(b) for every b of the target.
bool olg_via_interior(const LatticeMap& m, const Topology& t1, const Topology& t2);

// The restriction of m to ↓a (see down_set_lattice for element order).
// Throws UnknownElement.
LatticeMap restrict(const LatticeMap& m, Elem a);

// m with its target narrowed to ↓a. Requires image(m) = ↓a exactly.
// Throws ImageNotDownSet.
LatticeMap corestrict(const LatticeMap& m, Elem a);

// Bijective, and m and its inverse are both LG. Throws NotJoinPreserving.
bool is_isomorphism(const LatticeMap& m, const Topology& t1, const Topology& t2);

// ℧(f): direct image between the powerset frames of two finite spaces.
// Throws NotTotal.
LatticeMap mho_lift(const PointFunction& f, const FiniteSpace& x,
                    const FiniteSpace& y, LatticePtr source = nullptr,
                    LatticePtr target = nullptr);

}  // namespace lgt
