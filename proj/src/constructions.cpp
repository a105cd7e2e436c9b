#include "lgt/constructions.hpp"

#include <algorithm>

#include "lgt/error.hpp"

namespace lgt {

namespace {

void require_index(std::size_t index, std::size_t count) {
  if (index >= count) {
    throw Error(ErrorKind::IndexOutOfRange, "factor " + std::to_string(index) +
                                                " of a " + std::to_string(count) +
                                                "-factor product");
  }
}

void require_on(const Topology& t, const Lattice& L, const std::string& what) {
  if (!same_lattice(t.carrier(), L)) {
    throw Error(ErrorKind::TopologyCarrierMismatch,
                what + " topology is on " + t.carrier().name() + ", expected " + L.name());
  }
}

}  // namespace

ProductSpace product_space(std::span<const Topology> factors, std::string name) {
  if (factors.empty()) {
    throw Error(ErrorKind::IndexOutOfRange, "a product needs at least one factor");
  }
  if (factors.size() > kMaxProductFactors) {
    throw Error(ErrorKind::SizeLimitExceeded,
                std::to_string(factors.size()) + " factors exceeds " +
                    std::to_string(kMaxProductFactors));
  }
  std::vector<LatticePtr> lattices;
  std::vector<std::size_t> radices;
  for (const auto& t : factors) {
    lattices.push_back(t.carrier_ptr());
    radices.push_back(t.carrier().size());
  }
  auto carrier = share(product_lattice(lattices, name));
  ProductIndex index(radices);
  ElementSet opens;
  for (Elem e = 0; e < carrier->size(); ++e) {
    bool open = true;
    for (std::size_t i = 0; i < factors.size() && open; ++i) {
      open = factors[i].is_open(index.coordinate(e, i));
    }
    if (open) opens.insert(e);
  }
  Topology topology = Topology::make(carrier, opens,
                                     name.empty() ? std::string{} : "tau_" + name);
  std::vector<LatticeMap> projections;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    std::vector<Elem> g(carrier->size());
    for (Elem e = 0; e < g.size(); ++e) g[e] = index.coordinate(e, i);
    projections.push_back(LatticeMap::make(carrier, lattices[i], std::move(g),
                                           "pi" + std::to_string(i)));
  }
  return ProductSpace{std::vector<Topology>(factors.begin(), factors.end()), carrier,
                      std::move(topology), std::move(index), std::move(projections)};
}

const LatticeMap& projection(const ProductSpace& p, std::size_t index) {
  require_index(index, p.projections.size());
  return p.projections[index];
}

ProductMapCheck maps_into_product_check(const LatticeMap& m, const Topology& t,
                                        const ProductSpace& p) {
  ProductMapCheck r;
  r.olg = is_olg(m, t, p.topology);
  r.every_component_olg = true;
  for (std::size_t i = 0; i < p.projections.size(); ++i) {
    if (!is_olg(compose(p.projections[i], m), t, p.factors[i])) {
      r.every_component_olg = false;
      r.failing_component = i;
      break;
    }
  }
  return r;
}

ComponentEmbedding component_embedding(const ProductSpace& p, std::size_t index) {
  require_index(index, p.factors.size());
  std::vector<Elem> coords(p.factors.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    const Lattice& F = p.factors[i].carrier();
    coords[i] = i == index ? F.top() : F.bottom();
  }
  const Elem a = p.index.encode(coords);
  return ComponentEmbedding{a, subspace(p.topology, a), restrict(p.projections[index], a)};
}

Topology weak_topology(const LatticePtr& carrier, std::span<const MapIntoSpace> family,
                       std::string name) {
  ElementSet subbase;
  for (const auto& [map, target_topology] : family) {
    if (!same_lattice(map.source(), *carrier)) {
      throw Error(ErrorKind::TopologyCarrierMismatch,
                  "family map starts at " + map.source().name() + ", not " +
                      carrier->name());
    }
    require_on(target_topology, map.target(), "family");
    auto right = map.right_adjoint_graph();
    for (Elem t : target_topology.opens()) subbase.insert(right[t]);
  }
  return generate_topology(carrier, subbase, std::move(name));
}

QuotientSpace quotient_topology(const LatticeMap& m, const Topology& source_topology,
                                std::string name) {
  require_on(source_topology, m.source(), "source");
  if (!m.is_surjective()) {
    throw Error(ErrorKind::NotOnto, (m.name().empty() ? std::string("map") : m.name()) +
                                        " is not onto");
  }
  const LatticeMap right = m.right_adjoint();
  if (!right.is_join_preserving()) {
    throw Error(ErrorKind::AdjointNotJoinPreserving,
                "right adjoint of " + (m.name().empty() ? std::string("map") : m.name()) +
                    " does not preserve joins");
  }
  ElementSet opens;
  for (Elem t = 0; t < m.target().size(); ++t) {
    if (source_topology.is_open(right(t))) opens.insert(t);
  }
  Topology quotient = Topology::make(m.target_ptr(), opens, std::move(name));
  bool greatest = true;
  for (Elem e : m.target().all() - opens) {
    ElementSet extended = opens;
    extended.insert(e);
    const Topology larger = generate_topology(m.target_ptr(), extended);
    if (is_olg(m, source_topology, larger)) {
      greatest = false;
      break;
    }
  }
  return QuotientSpace{m, source_topology, std::move(quotient), greatest};
}

QuotientUniversalCheck quotient_universal_check(const QuotientSpace& q,
                                                const LatticeMap& n,
                                                const Topology& target_topology) {
  QuotientUniversalCheck r;
  r.olg = is_olg(n, q.topology, target_topology);
  r.composite_olg = is_olg(compose(n, q.map), q.source_topology, target_topology);
  return r;
}

bool is_partition(const Lattice& L, ElementSet blocks) {
  if (!blocks.is_subset_of(L.all())) return false;
  if (blocks.contains(L.bottom())) return false;
  if (L.join(blocks) != L.top()) return false;
  for (Elem a : blocks) {
    for (Elem b : blocks) {
      if (a < b && L.meet(a, b) != L.bottom()) return false;
    }
  }
  return true;
}

Partition Partition::make(LatticePtr carrier, ElementSet blocks, std::string name) {
  const Lattice& L = *carrier;
  if (!blocks.is_subset_of(L.all())) {
    throw Error(ErrorKind::UnknownElement, "partition block outside " + L.name());
  }
  if (!is_partition(L, blocks)) {
    std::string why;
    if (blocks.contains(L.bottom())) {
      why = "contains bottom";
    } else if (L.join(blocks) != L.top()) {
      why = "blocks join to '" + L.element_name(L.join(blocks)) + "', not top";
    } else {
      why = "two blocks overlap";
      for (Elem a : blocks) {
        for (Elem b : blocks) {
          if (a < b && L.meet(a, b) != L.bottom() && why == "two blocks overlap") {
            why = "blocks '" + L.element_name(a) + "' and '" + L.element_name(b) +
                  "' overlap";
          }
        }
      }
    }
    throw Error(ErrorKind::NotAPartition,
                (name.empty() ? std::string("partition") : name) + ": " + why);
  }
  Partition d;
  d.carrier_ = std::move(carrier);
  d.name_ = std::move(name);
  d.blocks_ = blocks;
  return d;
}

ElementSet block_trace(const Partition& d, Elem a) {
  const Lattice& L = d.carrier();
  ElementSet out;
  for (Elem b : d.blocks()) {
    if (L.meet(b, a) != L.bottom()) out.insert(b);
  }
  return out;
}

std::vector<Partition> all_partitions(const LatticePtr& carrier) {
  const Lattice& L = *carrier;
  std::vector<Elem> nonzero;
  for (Elem e = 0; e < L.size(); ++e) {
    if (e != L.bottom()) nonzero.push_back(e);
  }
  std::vector<ElementSet> found;
  // Blocks are pairwise disjoint, so extend only by elements disjoint from
  // everything chosen so far.
  auto extend = [&](auto&& self, std::size_t from, ElementSet chosen, Elem joined) -> void {
    if (joined == L.top() && is_partition(L, chosen)) found.push_back(chosen);
    for (std::size_t i = from; i < nonzero.size(); ++i) {
      const Elem e = nonzero[i];
      if (L.meet(e, joined) != L.bottom()) continue;
      ElementSet next = chosen;
      next.insert(e);
      self(self, i + 1, next, L.join(joined, e));
    }
  };
  extend(extend, 0, ElementSet{}, L.bottom());
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Partition> out;
  for (ElementSet s : found) out.push_back(Partition::make(carrier, s));
  return out;
}

Elem block_join(const Partition& d, Elem subset) {
  const std::vector<Elem> blocks = d.block_list();
  ElementSet chosen;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if ((subset >> k) & 1U) chosen.insert(blocks[k]);
  }
  return d.carrier().join(chosen);
}

DecompositionSpace decomposition_space(const Topology& t, const Partition& d) {
  const Lattice& L = t.carrier();
  if (!same_lattice(L, d.carrier())) {
    throw Error(ErrorKind::NotAPartition,
                "partition is on " + d.carrier().name() + ", topology on " + L.name());
  }
  const std::vector<Elem> blocks = d.block_list();
  if (blocks.size() > 6) {
    throw Error(ErrorKind::SizeLimitExceeded, "more than 6 blocks");
  }
  std::vector<std::string> names;
  for (Elem b : blocks) names.push_back(L.element_name(b));
  const std::string base = d.name().empty() ? std::string("D") : d.name();
  auto frame = share(powerset_frame(names, base + "_P"));
  ElementSet opens;
  for (Elem s = 0; s < frame->size(); ++s) {
    if (t.is_open(block_join(d, s))) opens.insert(s);
  }
  Topology topology = Topology::make(frame, opens, "tau_" + base);
  std::vector<Elem> g(L.size());
  for (Elem a = 0; a < L.size(); ++a) {
    Elem mask = 0;
    for (std::size_t k = 0; k < blocks.size(); ++k) {
      if (L.meet(blocks[k], a) != L.bottom()) mask |= Elem{1} << k;
    }
    g[a] = mask;
  }
  LatticeMap p = LatticeMap::make(t.carrier_ptr(), frame, std::move(g), "P_" + base);
  return DecompositionSpace{std::move(frame), std::move(topology), std::move(p)};
}

MhoSpace mho_space(const FiniteSpace& x) {
  auto frame = share(powerset_frame(x.points(), "P" + x.name()));
  ElementSet opens;
  for (PointSet u : x.opens()) opens.insert(static_cast<Elem>(u));
  Topology topology = Topology::make(frame, opens, "tau_" + x.name());
  return MhoSpace{std::move(frame), std::move(topology)};
}

}  // namespace lgt
