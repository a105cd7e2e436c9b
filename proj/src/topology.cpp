#include "lgt/topology.hpp"

#include <algorithm>

#include "lgt/error.hpp"

namespace lgt {

namespace {

void require_frame(const Lattice& carrier) {
  if (!carrier.is_frame()) {
    throw Error(ErrorKind::NotAFrame,
                "LG-topologies live on frames; " + carrier.name() +
                    " violates distributivity");
  }
}

}  // namespace

std::string describe(const Lattice& L, const SubframeViolation& v) {
  switch (v.kind) {
    case SubframeViolation::Kind::MissingBottom:
      return "bottom '" + L.element_name(L.bottom()) + "' is missing";
    case SubframeViolation::Kind::MissingTop:
      return "top '" + L.element_name(L.top()) + "' is missing";
    case SubframeViolation::Kind::MeetNotClosed:
      return "not closed under meet: " + L.element_name(v.a) + " ∧ " +
             L.element_name(v.b) + " = " + L.element_name(L.meet(v.a, v.b)) +
             " is missing";
    case SubframeViolation::Kind::JoinNotClosed:
      return "not closed under join: " + L.element_name(v.a) + " ∨ " +
             L.element_name(v.b) + " = " + L.element_name(L.join(v.a, v.b)) +
             " is missing";
  }
  return {};
}

std::optional<SubframeViolation> check_lg_topology(const Lattice& L,
                                                   ElementSet opens) {
  require_frame(L);
  using Kind = SubframeViolation::Kind;
  if (!opens.is_subset_of(L.all())) {
    throw Error(ErrorKind::UnknownElement, "open set outside " + L.name());
  }
  if (!opens.contains(L.bottom())) return SubframeViolation{Kind::MissingBottom};
  if (!opens.contains(L.top())) return SubframeViolation{Kind::MissingTop};
  for (Elem a : opens) {
    for (Elem b : opens) {
      if (b <= a) continue;
      if (!opens.contains(L.join(a, b))) {
        return SubframeViolation{Kind::JoinNotClosed, a, b};
      }
      if (!opens.contains(L.meet(a, b))) {
        return SubframeViolation{Kind::MeetNotClosed, a, b};
      }
    }
  }
  return std::nullopt;
}

bool is_lg_topology(const Lattice& L, ElementSet opens) {
  return !check_lg_topology(L, opens).has_value();
}

Topology Topology::make(LatticePtr carrier, ElementSet opens, std::string name) {
  const Lattice& L = *carrier;
  if (auto v = check_lg_topology(L, opens)) {
    throw Error(ErrorKind::NotATopology,
                (name.empty() ? std::string("opens") : name) + " on " + L.name() +
                    ": " + describe(L, *v));
  }
  Topology t;
  t.carrier_ = std::move(carrier);
  t.name_ = std::move(name);
  t.opens_ = opens;
  for (Elem u : opens) t.closed_.insert(L.pseudocomplement(u));
  const std::size_t n = L.size();
  t.interior_.resize(n);
  t.closure_.resize(n);
  for (Elem a = 0; a < n; ++a) {
    t.interior_[a] = L.join(opens & L.down_set(a));
    t.closure_[a] = L.meet(t.closed_ & L.up_set(a));
  }
  return t;
}

Topology Topology::discrete(LatticePtr carrier, std::string name) {
  const ElementSet all = carrier->all();
  return make(std::move(carrier), all, std::move(name));
}

Topology Topology::trivial(LatticePtr carrier, std::string name) {
  const ElementSet bounds = ElementSet::singleton(carrier->bottom()) |
                            ElementSet::singleton(carrier->top());
  return make(std::move(carrier), bounds, std::move(name));
}

bool Topology::is_lt_space() const {
  for (Elem a : closed_) {
    for (Elem b : closed_) {
      if (!closed_.contains(carrier_->join(a, b))) return false;
    }
  }
  return true;
}

Topology Topology::renamed(std::string name) const {
  Topology copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool Topology::same_as(const Topology& other) const {
  return opens_ == other.opens_ &&
         (carrier_ == other.carrier_ || carrier_->same_structure(*other.carrier_));
}

Topology generate_topology(LatticePtr carrier, ElementSet subbase,
                           std::string name) {
  const Lattice& L = *carrier;
  require_frame(L);
  ElementSet s = subbase | ElementSet::singleton(L.top());
  for (bool grew = true; grew;) {
    grew = false;
    for (Elem a : s) {
      for (Elem b : s) {
        const Elem m = L.meet(a, b);
        if (!s.contains(m)) {
          s.insert(m);
          grew = true;
        }
      }
    }
  }
  // Joins of a meet-closed family stay meet-closed in a distributive lattice.
  s.insert(L.bottom());
  for (bool grew = true; grew;) {
    grew = false;
    for (Elem a : s) {
      for (Elem b : s) {
        const Elem j = L.join(a, b);
        if (!s.contains(j)) {
          s.insert(j);
          grew = true;
        }
      }
    }
  }
  return Topology::make(std::move(carrier), s, std::move(name));
}

ElementSet closed_elements(const Topology& t) { return t.closed(); }

Topology subspace(const Topology& t, Elem a) {
  const Lattice& L = t.carrier();
  auto sub = share(down_set_lattice(L, a));
  const std::vector<Elem> members = L.down_set(a).to_vector();
  auto local = [&](Elem parent) {
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (members[k] == parent) return static_cast<Elem>(k);
    }
    return Elem{0};
  };
  ElementSet opens;
  for (Elem s : t.opens()) opens.insert(local(L.meet(s, a)));
  std::string name = t.name().empty() ? std::string{} : t.name() + "_" + L.element_name(a);
  return Topology::make(std::move(sub), opens, std::move(name));
}

bool is_base(const Topology& t, ElementSet base) {
  const Lattice& L = t.carrier();
  if (!base.is_subset_of(t.opens())) {
    const Elem bad = (base - t.opens()).front();
    throw Error(ErrorKind::BaseNotOpen,
                "base member '" + L.element_name(bad) + "' is not open");
  }
  for (Elem u : t.opens()) {
    if (L.join(base & L.down_set(u)) != u) return false;
  }
  return true;
}

bool check_cover(const Topology& t, ElementSet members) {
  if (!members.is_subset_of(t.opens())) {
    const Elem bad = (members - t.opens()).front();
    throw Error(ErrorKind::NotATopology, "cover member '" +
                                             t.carrier().element_name(bad) +
                                             "' is not open");
  }
  return t.carrier().join(members) == t.carrier().top();
}

ElementSet extract_finite_subcover(const Topology& t, ElementSet members) {
  const Lattice& L = t.carrier();
  if (!check_cover(t, members)) {
    throw Error(ErrorKind::NotACover,
                "members join to '" + L.element_name(L.join(members)) +
                    "', not top");
  }
  ElementSet chosen;
  Elem running = L.bottom();
  while (running != L.top()) {
    Elem best = 0;
    std::size_t best_gain = 0;
    for (Elem m : members - chosen) {
      const std::size_t gain = L.down_set(L.join(running, m)).size();
      if (gain > best_gain) {
        best_gain = gain;
        best = m;
      }
    }
    chosen.insert(best);
    running = L.join(running, best);
  }
  for (Elem m : chosen) {
    ElementSet without = chosen;
    without.erase(m);
    if (L.join(without) == L.top()) chosen = without;
  }
  return chosen;
}

CompactnessCertificate is_compact(const Topology& t) {
  CompactnessCertificate cert;
  const ElementSet opens = t.opens();
  if (opens.size() > 16) return cert;
  cert.exhaustive = true;
  const std::vector<Elem> list = opens.to_vector();
  const Lattice& L = t.carrier();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << list.size()); ++mask) {
    ElementSet family;
    for (std::size_t i = 0; i < list.size(); ++i) {
      if ((mask >> i) & 1U) family.insert(list[i]);
    }
    if (L.join(family) != L.top()) continue;
    ++cert.covers_checked;
    const ElementSet sub = extract_finite_subcover(t, family);
    if (!sub.is_subset_of(family) || L.join(sub) != L.top()) cert.compact = false;
  }
  return cert;
}

CompactnessCertificate is_countably_compact(const Topology& t) { return is_compact(t); }

CompactnessCertificate is_lindelof(const Topology& t) { return is_compact(t); }

std::vector<Topology> all_topologies(const LatticePtr& carrier) {
  const Lattice& L = *carrier;
  require_frame(L);
  std::vector<Elem> inner;
  for (Elem e = 0; e < L.size(); ++e) {
    if (e != L.bottom() && e != L.top()) inner.push_back(e);
  }
  if (inner.size() > 20) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "too many elements to enumerate every subframe of " + L.name());
  }
  const ElementSet bounds =
      ElementSet::singleton(L.bottom()) | ElementSet::singleton(L.top());
  std::vector<ElementSet> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner.size()); ++mask) {
    ElementSet s = bounds;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if ((mask >> i) & 1U) s.insert(inner[i]);
    }
    if (is_lg_topology(L, s)) found.push_back(s);
  }
  std::sort(found.begin(), found.end());
  std::vector<Topology> out;
  out.reserve(found.size());
  for (ElementSet s : found) out.push_back(Topology::make(carrier, s));
  return out;
}

}  // namespace lgt
