#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lgt/element_set.hpp"
#include "lgt/lattice.hpp"
#include "lgt/maps.hpp"
#include "lgt/space.hpp"
#include "lgt/topology.hpp"

namespace lgt {

inline constexpr std::size_t kMaxProductFactors = 6;

// Finite product of LGT-spaces. Opens are the tuples with every coordinate
// open.
struct ProductSpace {
  std::vector<Topology> factors;
  LatticePtr carrier;
  Topology topology;
  ProductIndex index;
  std::vector<LatticeMap> projections;
};

// Throws SizeLimitExceeded (too many factors or elements), NotAFrame,
// IndexOutOfRange (no factors).
ProductSpace product_space(std::span<const Topology> factors, std::string name = {});

// Throws IndexOutOfRange.
const LatticeMap& projection(const ProductSpace& p, std::size_t index);

struct ProductMapCheck {
  bool olg = false;                 // m is OLG into the product topology
  bool every_component_olg = false;  // every π_α ∘ m is OLG
  std::optional<std::size_t> failing_component;
};

// m: (F, t) → product carrier. Throws NotJoinPreserving,
// TopologyCarrierMismatch.
ProductMapCheck maps_into_product_check(const LatticeMap& m, const Topology& t,
                                        const ProductSpace& p);

struct ComponentEmbedding {
  Elem indicator;      // tuple with top at the index and bottom elsewhere
  Topology subspace;   // the product topology restricted to ↓indicator
  LatticeMap restricted_projection;  // ↓indicator → factor
};

// Throws IndexOutOfRange.
ComponentEmbedding component_embedding(const ProductSpace& p, std::size_t index);

struct MapIntoSpace {
  LatticeMap map;
  Topology target_topology;
};

// Topology on `carrier` generated by { φ_*(t) : t open in φ's target } over
// the family. Throws NotJoinPreserving, TopologyCarrierMismatch.
Topology weak_topology(const LatticePtr& carrier, std::span<const MapIntoSpace> family,
                       std::string name = {});

struct QuotientSpace {
  LatticeMap map;
  Topology source_topology;
  Topology topology;  // τ_φ on the target
  // Every one-element extension of τ_φ (closed back into a topology) makes
  // the map fail OLG.
  bool greatest = false;
};

// Throws NotOnto, NotJoinPreserving, AdjointNotJoinPreserving,
// TopologyCarrierMismatch.
QuotientSpace quotient_topology(const LatticeMap& m, const Topology& source_topology,
                                std::string name = {});

struct QuotientUniversalCheck {
  bool olg = false;            // n OLG from τ_φ
  bool composite_olg = false;  // n ∘ φ OLG from the source topology
};

// Throws NotJoinPreserving, TopologyCarrierMismatch.
QuotientUniversalCheck quotient_universal_check(const QuotientSpace& q,
                                                const LatticeMap& n,
                                                const Topology& target_topology);

// Nonzero, pairwise disjoint elements joining to top.
class Partition {
 public:
  // Throws NotAPartition, UnknownElement.
  static Partition make(LatticePtr carrier, ElementSet blocks, std::string name = {});

  const Lattice& carrier() const { return *carrier_; }
  const LatticePtr& carrier_ptr() const { return carrier_; }
  const std::string& name() const { return name_; }
  ElementSet blocks() const { return blocks_; }
  std::vector<Elem> block_list() const { return blocks_.to_vector(); }

 private:
  Partition() = default;

  LatticePtr carrier_;
  std::string name_;
  ElementSet blocks_;
};

bool is_partition(const Lattice& carrier, ElementSet blocks);

// T_a: the blocks meeting a.
ElementSet block_trace(const Partition& d, Elem a);

// Every partition of the carrier, ordered by block bit mask.
std::vector<Partition> all_partitions(const LatticePtr& carrier);

struct DecompositionSpace {
  LatticePtr frame;  // powerset of the blocks, blocks in carrier order
  Topology topology;  // τ_D = { T : ⋁T open }
  LatticeMap p;       // a ↦ T_a
};

// Element k of the block powerset is the set of blocks whose positions in
// block_list() are the set bits of k. Throws NotAPartition (partition on a
// different carrier), SizeLimitExceeded (more than 6 blocks).
DecompositionSpace decomposition_space(const Topology& t, const Partition& d);

// ⋁T for a block-powerset element T.
Elem block_join(const Partition& d, Elem subset);

struct MhoSpace {
  LatticePtr frame;
  Topology topology;
};

// (P(X), τ): the powerset frame with the point-set opens.
MhoSpace mho_space(const FiniteSpace& x);

}  // namespace lgt
