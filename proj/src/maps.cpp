#include "lgt/maps.hpp"

#include <mutex>

#include "lgt/error.hpp"

namespace lgt {

struct LatticeMap::AdjointCache {
  std::once_flag once;
  std::vector<Elem> right;
};

namespace {

PreservationReport check_join(const Lattice& S, const Lattice& T,
                              const std::vector<Elem>& g) {
  PreservationReport r;
  if (g[S.bottom()] != T.bottom()) {
    r.holds = false;
    r.bound = S.bottom();
    return r;
  }
  for (Elem x = 0; x < S.size(); ++x) {
    for (Elem y = x + 1; y < S.size(); ++y) {
      if (g[S.join(x, y)] != T.join(g[x], g[y])) {
        r.holds = false;
        r.pair = std::pair{x, y};
        return r;
      }
    }
  }
  return r;
}

PreservationReport check_meet(const Lattice& S, const Lattice& T,
                              const std::vector<Elem>& g) {
  PreservationReport r;
  if (g[S.top()] != T.top()) {
    r.holds = false;
    r.bound = S.top();
    return r;
  }
  for (Elem x = 0; x < S.size(); ++x) {
    for (Elem y = x + 1; y < S.size(); ++y) {
      if (g[S.meet(x, y)] != T.meet(g[x], g[y])) {
        r.holds = false;
        r.pair = std::pair{x, y};
        return r;
      }
    }
  }
  return r;
}

void require_join_preserving(const LatticeMap& m) {
  if (!m.is_join_preserving()) {
    throw Error(ErrorKind::NotJoinPreserving,
                (m.name().empty() ? std::string("map") : m.name()) +
                    " does not preserve joins");
  }
}

void require_carriers(const LatticeMap& m, const Topology& t1, const Topology& t2) {
  if (!same_lattice(m.source(), t1.carrier())) {
    throw Error(ErrorKind::TopologyCarrierMismatch,
                "source topology is on " + t1.carrier().name() + ", map source is " +
                    m.source().name());
  }
  if (!same_lattice(m.target(), t2.carrier())) {
    throw Error(ErrorKind::TopologyCarrierMismatch,
                "target topology is on " + t2.carrier().name() + ", map target is " +
                    m.target().name());
  }
}

std::string join_names(const std::string& a, const std::string& b,
                       const std::string& sep) {
  if (a.empty() || b.empty()) return {};
  return a + sep + b;
}

}  // namespace

bool same_lattice(const Lattice& a, const Lattice& b) {
  return &a == &b || a.same_structure(b);
}

LatticeMap LatticeMap::make(LatticePtr source, LatticePtr target,
                            std::vector<Elem> graph, std::string name) {
  if (graph.size() != source->size()) {
    throw Error(ErrorKind::NotTotal,
                "map assigns " + std::to_string(graph.size()) + " of " +
                    std::to_string(source->size()) + " source elements");
  }
  for (Elem x = 0; x < graph.size(); ++x) {
    if (graph[x] >= target->size()) {
      throw Error(ErrorKind::NotTotal, "image of '" + source->element_name(x) +
                                           "' is outside " + target->name());
    }
  }
  LatticeMap m;
  m.join_ = check_join(*source, *target, graph);
  m.meet_ = check_meet(*source, *target, graph);
  m.source_ = std::move(source);
  m.target_ = std::move(target);
  m.graph_ = std::move(graph);
  m.name_ = std::move(name);
  m.cache_ = std::make_shared<AdjointCache>();
  return m;
}

LatticeMap LatticeMap::identity(LatticePtr lattice, std::string name) {
  std::vector<Elem> g(lattice->size());
  for (Elem x = 0; x < g.size(); ++x) g[x] = x;
  return make(lattice, lattice, std::move(g), std::move(name));
}

ElementSet LatticeMap::image() const { return image(source_->all()); }

ElementSet LatticeMap::image(ElementSet xs) const {
  ElementSet out;
  for (Elem x : xs) out.insert(graph_[x]);
  return out;
}

bool LatticeMap::is_injective() const {
  return image().size() == source_->size();
}

bool LatticeMap::is_surjective() const { return image() == target_->all(); }

std::span<const Elem> LatticeMap::right_adjoint_graph() const {
  require_join_preserving(*this);
  std::call_once(cache_->once, [this] {
    const Lattice& S = *source_;
    const Lattice& T = *target_;
    std::vector<Elem> right(T.size());
    for (Elem b = 0; b < T.size(); ++b) {
      ElementSet below;
      for (Elem x = 0; x < S.size(); ++x) {
        if (T.leq(graph_[x], b)) below.insert(x);
      }
      right[b] = S.join(below);
    }
    cache_->right = std::move(right);
  });
  return cache_->right;
}

Elem LatticeMap::right_adjoint_at(Elem b) const { return right_adjoint_graph()[b]; }

LatticeMap LatticeMap::right_adjoint() const {
  auto g = right_adjoint_graph();
  return make(target_, source_, std::vector<Elem>(g.begin(), g.end()),
              name_.empty() ? std::string{} : name_ + "_*");
}

LatticeMap LatticeMap::left_adjoint() const {
  if (!meet_.holds) {
    throw Error(ErrorKind::NotMeetPreserving,
                (name_.empty() ? std::string("map") : name_) +
                    " does not preserve meets");
  }
  const Lattice& S = *source_;
  const Lattice& T = *target_;
  std::vector<Elem> left(T.size());
  for (Elem b = 0; b < T.size(); ++b) {
    ElementSet above;
    for (Elem x = 0; x < S.size(); ++x) {
      if (T.leq(b, graph_[x])) above.insert(x);
    }
    left[b] = S.meet(above);
  }
  return make(target_, source_, std::move(left),
              name_.empty() ? std::string{} : name_ + "^*");
}

LatticeMap LatticeMap::renamed(std::string name) const {
  LatticeMap copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

bool LatticeMap::same_as(const LatticeMap& other) const {
  return graph_ == other.graph_ && same_lattice(*source_, *other.source_) &&
         same_lattice(*target_, *other.target_);
}

PreservationReport is_join_preserving(const LatticeMap& m) {
  return m.join_preservation();
}

PreservationReport is_meet_preserving(const LatticeMap& m) {
  return m.meet_preservation();
}

bool check_adjunction(const LatticeMap& m, const LatticeMap& n) {
  if (!same_lattice(m.source(), n.target()) || !same_lattice(m.target(), n.source())) {
    throw Error(ErrorKind::SourceTargetMismatch,
                "adjunction needs maps F1 -> F2 and F2 -> F1");
  }
  const Lattice& A = m.source();
  const Lattice& B = m.target();
  for (Elem a = 0; a < A.size(); ++a) {
    for (Elem b = 0; b < B.size(); ++b) {
      if (B.leq(m(a), b) != A.leq(a, n(b))) return false;
    }
  }
  return true;
}

std::optional<Elem> section_identity_witness(const LatticeMap& m) {
  auto right = m.right_adjoint_graph();
  for (Elem b = 0; b < m.target().size(); ++b) {
    if (m(right[b]) != b) return b;
  }
  return std::nullopt;
}

bool holds_section_identity(const LatticeMap& m) {
  return !section_identity_witness(m).has_value();
}

LatticeMap compose(const LatticeMap& n, const LatticeMap& m) {
  if (!same_lattice(m.target(), n.source())) {
    throw Error(ErrorKind::SourceTargetMismatch,
                "cannot compose: " + m.target().name() + " is not " +
                    n.source().name());
  }
  std::vector<Elem> g(m.source().size());
  for (Elem x = 0; x < g.size(); ++x) g[x] = n(m(x));
  return LatticeMap::make(m.source_ptr(), n.target_ptr(), std::move(g),
                          join_names(n.name(), m.name(), "_o_"));
}

LatticeMap inverse(const LatticeMap& m) {
  if (!m.is_bijective()) {
    throw Error(ErrorKind::NotOnto,
                (m.name().empty() ? std::string("map") : m.name()) +
                    " is not a bijection");
  }
  std::vector<Elem> g(m.target().size());
  for (Elem x = 0; x < m.source().size(); ++x) g[m(x)] = x;
  return LatticeMap::make(m.target_ptr(), m.source_ptr(), std::move(g),
                          m.name().empty() ? std::string{} : m.name() + "^-1");
}

MapClassification classify(const LatticeMap& m, const Topology& t1,
                           const Topology& t2) {
  require_join_preserving(m);
  require_carriers(m, t1, t2);
  const Lattice& S = m.source();
  auto right = m.right_adjoint_graph();
  MapClassification c;
  for (Elem u : t2.opens()) {
    if (!t1.is_open(right[u])) {
      c.olg_witness = u;
      break;
    }
  }
  for (Elem f : t2.closed()) {
    if (!t1.is_closed(right[f])) {
      c.clg_witness = f;
      break;
    }
  }
  for (Elem t : t1.opens()) {
    if (!t2.is_open(m(t))) {
      c.open_witness = t;
      break;
    }
  }
  for (Elem t : t1.opens()) {
    if (!t2.is_closed(m(S.pseudocomplement(t)))) {
      c.closed_witness = t;
      break;
    }
  }
  c.olg = !c.olg_witness;
  c.clg = !c.clg_witness;
  c.lg = c.olg && c.clg;
  c.open_map = !c.open_witness;
  c.closed_map = !c.closed_witness;
  return c;
}

bool is_olg(const LatticeMap& m, const Topology& t1, const Topology& t2) {
  return classify(m, t1, t2).olg;
}

bool is_clg(const LatticeMap& m, const Topology& t1, const Topology& t2) {
  return classify(m, t1, t2).clg;
}

bool is_lg(const LatticeMap& m, const Topology& t1, const Topology& t2) {
  return classify(m, t1, t2).lg;
}

bool is_open_map(const LatticeMap& m, const Topology& t1, const Topology& t2) {
  require_carriers(m, t1, t2);
  for (Elem t : t1.opens()) {
    if (!t2.is_open(m(t))) return false;
  }
  return true;
}

bool is_closed_map(const LatticeMap& m, const Topology& t1, const Topology& t2) {
  require_carriers(m, t1, t2);
  for (Elem t : t1.opens()) {
    if (!t2.is_closed(m(m.source().pseudocomplement(t)))) return false;
  }
  return true;
}

bool clg_via_closure(const LatticeMap& m, const Topology& t1, const Topology& t2) {
  require_join_preserving(m);
  require_carriers(m, t1, t2);
  const Lattice& T = m.target();
  for (Elem a = 0; a < m.source().size(); ++a) {
    if (!T.leq(m(t1.closure(a)), t2.closure(m(a)))) return false;
  }
  return true;
}

bool clg_via_adjoint_closure(const LatticeMap& m, const Topology& t1,
                             const Topology& t2) {
  require_join_preserving(m);
  require_carriers(m, t1, t2);
  const Lattice& S = m.source();
  auto right = m.right_adjoint_graph();
  for (Elem b = 0; b < m.target().size(); ++b) {
    if (!S.leq(t1.closure(right[b]), right[t2.closure(b)])) return false;
  }
  return true;
}

bool olg_via_interior(const LatticeMap& m, const Topology& t1, const Topology& t2) {
  require_join_preserving(m);
  require_carriers(m, t1, t2);
  const Lattice& S = m.source();
  auto right = m.right_adjoint_graph();
  for (Elem b = 0; b < m.target().size(); ++b) {
    if (!S.leq(right[t2.interior(b)], t1.interior(right[b]))) return false;
  }
  return true;
}

LatticeMap restrict(const LatticeMap& m, Elem a) {
  const Lattice& S = m.source();
  if (a >= S.size()) {
    throw Error(ErrorKind::UnknownElement, "no element at position " + std::to_string(a));
  }
  auto sub = share(down_set_lattice(S, a));
  std::vector<Elem> g;
  for (Elem x : S.down_set(a)) g.push_back(m(x));
  return LatticeMap::make(
      std::move(sub), m.target_ptr(), std::move(g),
      m.name().empty() ? std::string{} : m.name() + "|" + S.element_name(a));
}

LatticeMap corestrict(const LatticeMap& m, Elem a) {
  const Lattice& T = m.target();
  if (a >= T.size()) {
    throw Error(ErrorKind::UnknownElement, "no element at position " + std::to_string(a));
  }
  const ElementSet down = T.down_set(a);
  if (m.image() != down) {
    throw Error(ErrorKind::ImageNotDownSet,
                "image of the map is not the down-set of '" + T.element_name(a) + "'");
  }
  const std::vector<Elem> members = down.to_vector();
  std::vector<Elem> local(T.size(), 0);
  for (Elem k = 0; k < members.size(); ++k) local[members[k]] = k;
  std::vector<Elem> g(m.source().size());
  for (Elem x = 0; x < g.size(); ++x) g[x] = local[m(x)];
  return LatticeMap::make(m.source_ptr(), share(down_set_lattice(T, a)), std::move(g),
                          m.name());
}

bool is_isomorphism(const LatticeMap& m, const Topology& t1, const Topology& t2) {
  require_join_preserving(m);
  if (!m.is_bijective()) return false;
  if (!is_lg(m, t1, t2)) return false;
  const LatticeMap inv = inverse(m);
  if (!inv.is_join_preserving()) return false;
  return is_lg(inv, t2, t1);
}

LatticeMap mho_lift(const PointFunction& f, const FiniteSpace& x,
                    const FiniteSpace& y, LatticePtr source, LatticePtr target) {
  if (f.image.size() != x.size()) {
    throw Error(ErrorKind::NotTotal, "function " + f.name + " assigns " +
                                         std::to_string(f.image.size()) + " of " +
                                         std::to_string(x.size()) + " points");
  }
  for (std::size_t p : f.image) {
    if (p >= y.size()) {
      throw Error(ErrorKind::NotTotal, "function " + f.name + " leaves " + y.name());
    }
  }
  if (!source) source = share(powerset_frame(x.points(), "P" + x.name()));
  if (!target) target = share(powerset_frame(y.points(), "P" + y.name()));
  std::vector<Elem> g(source->size());
  for (Elem s = 0; s < g.size(); ++s) g[s] = static_cast<Elem>(direct_image(f, s));
  return LatticeMap::make(std::move(source), std::move(target), std::move(g),
                          f.name.empty() ? std::string{} : "mho_" + f.name);
}

}  // namespace lgt
