#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "lgt/element_set.hpp"
#include "lgt/lattice.hpp"

namespace lgt {

struct SubframeViolation {
  enum class Kind { MissingBottom, MissingTop, MeetNotClosed, JoinNotClosed };
  Kind kind;
  // Offending pair for the closure kinds; unused for the bound kinds.
  Elem a = 0;
  Elem b = 0;
};

std::string describe(const Lattice& carrier, const SubframeViolation& v);

// First violation in element order, or nullopt if `opens` is an
// LG-topology (contains bottom and top, closed under binary meet and join).
// Throws NotAFrame.
std::optional<SubframeViolation> check_lg_topology(const Lattice& carrier,
                                                   ElementSet opens);
bool is_lg_topology(const Lattice& carrier, ElementSet opens);

// An LG-topology: a subframe of a frame. Closed elements, interior and
// closure are tabulated at construction. Immutable.
class Topology {
 public:
  // Throws NotAFrame, or NotATopology naming the violated closure.
  static Topology make(LatticePtr carrier, ElementSet opens,
                       std::string name = {});
  static Topology discrete(LatticePtr carrier, std::string name = {});
  static Topology trivial(LatticePtr carrier, std::string name = {});

  const Lattice& carrier() const { return *carrier_; }
  const LatticePtr& carrier_ptr() const { return carrier_; }
  const std::string& name() const { return name_; }

  ElementSet opens() const { return opens_; }
  // τ* = { t* : t open }.
  ElementSet closed() const { return closed_; }
  bool is_open(Elem e) const { return opens_.contains(e); }
  bool is_closed(Elem e) const { return closed_.contains(e); }

  // Largest open below a.
  Elem interior(Elem a) const { return interior_.at(a); }
  // Smallest closed element above a.
  Elem closure(Elem a) const { return closure_.at(a); }
  bool is_dense(Elem a) const { return closure(a) == carrier_->top(); }

  // τ* closed under binary join (meet closure always holds).
  bool is_lt_space() const;
  bool is_discrete() const { return opens_ == carrier_->all(); }
  bool is_trivial() const {
    return opens_ == (ElementSet::singleton(carrier_->bottom()) |
                      ElementSet::singleton(carrier_->top()));
  }

  Topology renamed(std::string name) const;

  // Same carrier structure and same opens.
  bool same_as(const Topology& other) const;

 private:
  Topology() = default;

  LatticePtr carrier_;
  std::string name_;
  ElementSet opens_;
  ElementSet closed_;
  std::vector<Elem> interior_;
  std::vector<Elem> closure_;
};

// Smallest topology containing `subbase`: close subbase ∪ {top} under
// binary meets, then under joins (bottom enters as the empty join).
// Throws NotAFrame.
Topology generate_topology(LatticePtr carrier, ElementSet subbase,
                           std::string name = {});

ElementSet closed_elements(const Topology& t);

// (F_a, τ_a): the down-set ↓a with opens { s ∧ a : s open }.
Topology subspace(const Topology& t, Elem a);

// Every open t equals ⋁{ b ∈ B : b ≤ t }. Throws BaseNotOpen.
bool is_base(const Topology& t, ElementSet base);

// Members join to top. Members must be open (throws NotATopology if not).
bool check_cover(const Topology& t, ElementSet members);

// Greedy: repeatedly take the member that enlarges the running join the
// most (lowest position on ties) until the join is top, then drop members
// that became redundant. Throws NotACover.
ElementSet extract_finite_subcover(const Topology& t, ElementSet members);

struct CompactnessCertificate {
  bool compact = true;
  // Number of covers replayed through extract_finite_subcover.
  std::size_t covers_checked = 0;
  // False when τ was too large to replay every cover; the answer then rests
  // on the carrier being finite.
  bool exhaustive = false;
};

// Every cover by opens has a finite subcover. Always true on a finite
// carrier; the certificate replays the definition over every cover when τ
// has at most 16 opens.
CompactnessCertificate is_compact(const Topology& t);
// On a finite carrier these coincide with compactness.
CompactnessCertificate is_countably_compact(const Topology& t);
CompactnessCertificate is_lindelof(const Topology& t);

// Every LG-topology on the carrier, ordered by open-set bit mask.
// Throws NotAFrame; intended for carriers of at most ~20 elements.
std::vector<Topology> all_topologies(const LatticePtr& carrier);

}  // namespace lgt
