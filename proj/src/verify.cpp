#include "lgt/verify.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "lgt/enumerate.hpp"
#include "lgt/error.hpp"

namespace lgt {

// ---------------------------------------------------------------------------
// Join-preserving maps

std::vector<LatticeMap> join_preserving_maps(const LatticePtr& from, const LatticePtr& to) {
  const Lattice& A = *from;
  const Lattice& B = *to;
  if (!A.is_frame()) {
    throw Error(ErrorKind::NotAFrame, A.name() + " is not distributive");
  }
  const std::vector<Elem> J = A.join_irreducibles();
  std::vector<Elem> g(J.size(), 0);
  std::vector<LatticeMap> out;
  auto emit = [&] {
    std::vector<Elem> graph(A.size(), B.bottom());
    for (Elem x = 0; x < A.size(); ++x) {
      Elem y = B.bottom();
      for (std::size_t k = 0; k < J.size(); ++k) {
        if (A.leq(J[k], x)) y = B.join(y, g[k]);
      }
      graph[x] = y;
    }
    LatticeMap m = LatticeMap::make(from, to, std::move(graph));
    if (!m.is_join_preserving()) {
      throw std::logic_error("join-irreducible extension produced a non-join-preserving map");
    }
    out.push_back(std::move(m));
  };
  auto assign = [&](auto&& self, std::size_t k) -> void {
    if (k == J.size()) return emit();
    for (Elem y = 0; y < B.size(); ++y) {
      bool monotone = true;
      for (std::size_t i = 0; i < k && monotone; ++i) {
        if (A.leq(J[i], J[k]) && !B.leq(g[i], y)) monotone = false;
        if (A.leq(J[k], J[i]) && !B.leq(y, g[i])) monotone = false;
      }
      if (!monotone) continue;
      g[k] = y;
      self(self, k + 1);
    }
  };
  assign(assign, 0);
  std::sort(out.begin(), out.end(), [](const LatticeMap& a, const LatticeMap& b) {
    return std::lexicographical_compare(a.graph().begin(), a.graph().end(),
                                        b.graph().begin(), b.graph().end());
  });
  return out;
}

// ---------------------------------------------------------------------------
// Universe

struct Universe::Tables {
  explicit Tables(std::size_t n)
      : topo_once(new std::once_flag[n]),
        topo(n),
        map_once(new std::once_flag[n * n]),
        maps(n * n) {}

  std::unique_ptr<std::once_flag[]> topo_once;
  std::vector<std::vector<Topology>> topo;
  std::unique_ptr<std::once_flag[]> map_once;
  std::vector<std::vector<LatticeMap>> maps;
  std::once_flag space_once[5];
  std::vector<FiniteSpace> spaces[5];
  std::unordered_map<const Lattice*, std::size_t> index;

  std::mutex foreign_mutex;
  std::map<const Lattice*, std::pair<LatticePtr, std::vector<Topology>>> foreign_topo;
  std::map<std::pair<const Lattice*, const Lattice*>,
           std::pair<std::pair<LatticePtr, LatticePtr>, std::vector<LatticeMap>>>
      foreign_maps;
};

Universe::Universe(std::size_t max_size) : max_size_(max_size) {
  if (max_size > kMaxVerifySize) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "max size " + std::to_string(max_size) + " exceeds " +
                    std::to_string(kMaxVerifySize));
  }
  for (std::size_t n = 1; n <= max_size; ++n) {
    for (auto& f : enumerate_frames(n)) frames_.push_back(share(std::move(f)));
  }
  tables_ = std::make_unique<Tables>(frames_.size());
  for (std::size_t i = 0; i < frames_.size(); ++i) tables_->index[frames_[i].get()] = i;
}

Universe::~Universe() = default;

std::span<const LatticePtr> Universe::frames_up_to(std::size_t n) const {
  std::size_t k = 0;
  while (k < frames_.size() && frames_[k]->size() <= n) ++k;
  return std::span<const LatticePtr>(frames_.data(), k);
}

std::optional<std::size_t> Universe::index_of(const Lattice* l) const {
  auto it = tables_->index.find(l);
  if (it == tables_->index.end()) return std::nullopt;
  return it->second;
}

const std::vector<Topology>& Universe::topologies(const LatticePtr& frame) const {
  if (auto i = index_of(frame.get())) {
    std::call_once(tables_->topo_once[*i],
                   [&] { tables_->topo[*i] = all_topologies(frames_[*i]); });
    return tables_->topo[*i];
  }
  std::lock_guard lock(tables_->foreign_mutex);
  auto& slot = tables_->foreign_topo[frame.get()];
  if (!slot.first) slot = {frame, all_topologies(frame)};
  return slot.second;
}

const std::vector<LatticeMap>& Universe::maps(const LatticePtr& from,
                                              const LatticePtr& to) const {
  auto i = index_of(from.get());
  auto j = index_of(to.get());
  if (i && j) {
    const std::size_t k = *i * frames_.size() + *j;
    std::call_once(tables_->map_once[k], [&] {
      tables_->maps[k] = join_preserving_maps(frames_[*i], frames_[*j]);
    });
    return tables_->maps[k];
  }
  std::lock_guard lock(tables_->foreign_mutex);
  auto& slot = tables_->foreign_maps[{from.get(), to.get()}];
  if (!slot.first.first) slot = {{from, to}, join_preserving_maps(from, to)};
  return slot.second;
}

const std::vector<FiniteSpace>& Universe::spaces(std::size_t points) const {
  if (points > 4) {
    throw Error(ErrorKind::SizeLimitExceeded, "spaces are enumerated up to 4 points");
  }
  std::call_once(tables_->space_once[points],
                 [&] { tables_->spaces[points] = all_spaces(points); });
  return tables_->spaces[points];
}

// ---------------------------------------------------------------------------
// Shared helpers for families and predicates

std::string_view expectation_name(Expectation e) {
  switch (e) {
    case Expectation::Holds: return "HOLDS";
    case Expectation::ExpectCounterexample: return "EXPECT_COUNTEREXAMPLE";
    case Expectation::Skipped: return "SKIPPED";
  }
  return "?";
}

bool VerifyReport::met() const {
  switch (expectation) {
    case Expectation::Holds: return !counterexample();
    case Expectation::ExpectCounterexample: return counterexample();
    case Expectation::Skipped: return true;
  }
  return false;
}

namespace {

using Visit = InstanceVisitor;

// Stops all nested loops once a visitor asks to.
struct Stop {};

void emit(const Visit& visit, const Instance& in) {
  if (!visit(in)) throw Stop{};
}

Instance with_map(const LatticeMap& m) {
  Instance in;
  in.maps = {m};
  return in;
}

Instance with_map_space(const LatticeMap& m, const Topology& t1, const Topology& t2) {
  Instance in;
  in.maps = {m};
  in.topologies = {t1, t2};
  return in;
}

template <class F>
void each_map(const Universe& u, std::size_t n, F&& f) {
  for (const auto& A : u.frames_up_to(n)) {
    for (const auto& B : u.frames_up_to(n)) {
      for (const auto& m : u.maps(A, B)) f(m);
    }
  }
}

template <class F>
void each_map_space(const Universe& u, std::size_t n, F&& f) {
  each_map(u, n, [&](const LatticeMap& m) {
    for (const auto& t1 : u.topologies(m.source_ptr())) {
      for (const auto& t2 : u.topologies(m.target_ptr())) f(m, t1, t2);
    }
  });
}

template <class F>
void each_space(const Universe& u, std::size_t n, F&& f) {
  for (const auto& L : u.frames_up_to(n)) {
    for (const auto& t : u.topologies(L)) f(t);
  }
}

// Subsets of `mask`, from the empty set upward.
template <class F>
void each_subset(ElementSet mask, F&& f) {
  const std::uint64_t m = mask.bits();
  std::uint64_t s = 0;
  while (true) {
    f(ElementSet(s));
    if (s == m) break;
    s = (s - m) & m;
  }
}

ElementSet bounds(const Lattice& L) {
  return ElementSet::singleton(L.bottom()) | ElementSet::singleton(L.top());
}

// F* = { a : a = a** }.
bool is_pseudocomplement(const Lattice& L, Elem a) {
  return L.pseudocomplement(L.pseudocomplement(a)) == a;
}

// Local position of a global element inside ↓a.
Elem local(const Lattice& L, Elem a, Elem x) {
  const ElementSet down = L.down_set(a);
  return static_cast<Elem>(std::popcount(down.bits() & ((std::uint64_t{1} << x) - 1)));
}

Elem global(const Lattice& L, Elem a, Elem k) {
  return L.down_set(a).to_vector().at(k);
}

bool has_join_preserving_adjoint(const LatticeMap& m) {
  return LatticeMap::make(m.target_ptr(), m.source_ptr(),
                          std::vector<Elem>(m.right_adjoint_graph().begin(),
                                            m.right_adjoint_graph().end()))
      .is_join_preserving();
}

// Permutations of the target elements, as bijections from → to.
template <class F>
void each_bijection(const LatticePtr& from, const LatticePtr& to, F&& f) {
  if (from->size() != to->size()) return;
  std::vector<Elem> g(from->size());
  std::iota(g.begin(), g.end(), Elem{0});
  do {
    f(LatticeMap::make(from, to, g));
  } while (std::next_permutation(g.begin(), g.end()));
}

std::vector<Topology> factor_pair(const Topology& a, const Topology& b) { return {a, b}; }

// Every pair of factor spaces on frames with at most k elements.
template <class F>
void each_factor_pair(const Universe& u, std::size_t k, F&& f) {
  each_space(u, k, [&](const Topology& a) {
    each_space(u, k, [&](const Topology& b) { f(a, b); });
  });
}

std::size_t factor_bound(const Universe& u) { return std::min<std::size_t>(u.max_size(), 3); }

// Topology of a product of finite spaces: unions of open boxes.
FiniteSpace product_of_spaces(const FiniteSpace& x, const FiniteSpace& y) {
  std::vector<std::string> points;
  for (const auto& p : x.points()) {
    for (const auto& q : y.points()) points.push_back(p + "." + q);
  }
  std::vector<PointSet> boxes;
  for (PointSet u : x.opens()) {
    for (PointSet v : y.opens()) {
      PointSet box = 0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        for (std::size_t j = 0; j < y.size(); ++j) {
          if (((u >> i) & 1U) && ((v >> j) & 1U)) box |= PointSet{1} << (i * y.size() + j);
        }
      }
      boxes.push_back(box);
    }
  }
  std::vector<PointSet> opens;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << boxes.size()); ++pick) {
    PointSet s = 0;
    for (std::size_t k = 0; k < boxes.size(); ++k) {
      if ((pick >> k) & 1U) s |= boxes[k];
    }
    opens.push_back(s);
  }
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  return FiniteSpace::make(x.name() + "x" + y.name(), points, opens);
}

// ---------------------------------------------------------------------------
// Registry

TheoremCase holds(std::string id, std::string statement, InstanceFamily family,
                  Violation violates) {
  return TheoremCase{std::move(id), std::move(statement), Expectation::Holds, {},
                     std::move(family), std::move(violates)};
}

TheoremCase refuted(std::string id, std::string statement, InstanceFamily family,
                    Violation violates) {
  return TheoremCase{std::move(id),     std::move(statement),
                     Expectation::ExpectCounterexample, {},
                     std::move(family), std::move(violates)};
}

TheoremCase skipped(std::string id, std::string statement, std::string reason) {
  return TheoremCase{std::move(id), std::move(statement), Expectation::Skipped,
                     std::move(reason), nullptr, nullptr};
}

InstanceFamily maps_family(std::function<bool(const LatticeMap&)> keep = nullptr) {
  return [keep](const Universe& u, const Visit& visit) {
    each_map(u, u.max_size(), [&](const LatticeMap& m) {
      if (!keep || keep(m)) emit(visit, with_map(m));
    });
  };
}

using MapSpaceFilter =
    std::function<bool(const LatticeMap&, const Topology&, const Topology&)>;

InstanceFamily map_space_family(MapSpaceFilter keep = nullptr) {
  return [keep](const Universe& u, const Visit& visit) {
    each_map_space(u, u.max_size(),
                   [&](const LatticeMap& m, const Topology& t1, const Topology& t2) {
                     if (!keep || keep(m, t1, t2)) emit(visit, with_map_space(m, t1, t2));
                   });
  };
}

InstanceFamily space_family() {
  return [](const Universe& u, const Visit& visit) {
    each_space(u, u.max_size(), [&](const Topology& t) {
      Instance in;
      in.topologies = {t};
      emit(visit, in);
    });
  };
}

// (φ, τ1, τ2, a) with a ranging over the source.
InstanceFamily restriction_family() {
  return [](const Universe& u, const Visit& visit) {
    each_map_space(u, u.max_size(),
                   [&](const LatticeMap& m, const Topology& t1, const Topology& t2) {
                     for (Elem a = 0; a < m.source().size(); ++a) {
                       Instance in = with_map_space(m, t1, t2);
                       in.lattices = {m.source_ptr()};
                       in.elements = {{0, a}};
                       emit(visit, in);
                     }
                   });
  };
}

// (φ: F1 → F2, ψ: F2 → F3) with topologies on all three.
InstanceFamily composable_family(bool with_topologies) {
  return [with_topologies](const Universe& u, const Visit& visit) {
    const auto frames = u.frames_up_to(u.max_size());
    for (const auto& A : frames) {
      for (const auto& B : frames) {
        for (const auto& C : frames) {
          for (const auto& phi : u.maps(A, B)) {
            for (const auto& psi : u.maps(B, C)) {
              Instance in;
              in.maps = {phi, psi};
              if (!with_topologies) {
                emit(visit, in);
                continue;
              }
              for (const auto& t1 : u.topologies(A)) {
                for (const auto& t2 : u.topologies(B)) {
                  for (const auto& t3 : u.topologies(C)) {
                    in.topologies = {t1, t2, t3};
                    emit(visit, in);
                  }
                }
              }
            }
          }
        }
      }
    }
  };
}

InstanceFamily bijection_family() {
  return [](const Universe& u, const Visit& visit) {
    const auto frames = u.frames_up_to(u.max_size());
    for (const auto& A : frames) {
      for (const auto& B : frames) {
        each_bijection(A, B, [&](const LatticeMap& m) { emit(visit, with_map(m)); });
      }
    }
  };
}

InstanceFamily bijection_space_family() {
  return map_space_family([](const LatticeMap& m, const Topology&, const Topology&) {
    return m.is_bijective();
  });
}

InstanceFamily product_family() {
  return [](const Universe& u, const Visit& visit) {
    each_factor_pair(u, factor_bound(u), [&](const Topology& a, const Topology& b) {
      Instance in;
      in.topologies = factor_pair(a, b);
      emit(visit, in);
    });
  };
}

ProductSpace product_of(const Instance& in, std::size_t first = 0) {
  std::vector<Topology> f(in.topologies.begin() + first, in.topologies.begin() + first + 2);
  return product_space(f);
}

// Finite spaces with at most k points, all functions between them.
InstanceFamily function_family(std::size_t k) {
  return [k](const Universe& u, const Visit& visit) {
    const std::size_t bound = std::min(k, u.max_size());
    for (std::size_t p = 0; p <= bound; ++p) {
      for (std::size_t q = 0; q <= bound; ++q) {
        for (const auto& x : u.spaces(p)) {
          for (const auto& y : u.spaces(q)) {
            for (const auto& f : all_functions(p, q)) {
              Instance in;
              in.spaces = {x.renamed("X"), y.renamed("Y")};
              in.functions = {SpaceFunction{f, 0, 1}};
              emit(visit, in);
            }
          }
        }
      }
    }
  };
}

bool mho_equivalence_violated(const Instance& in) {
  const auto& x = in.spaces[0];
  const auto& y = in.spaces[1];
  const auto& f = in.functions[0].function;
  const MhoSpace mx = mho_space(x);
  const MhoSpace my = mho_space(y);
  const LatticeMap m = mho_lift(f, x, y, mx.frame, my.frame);
  const bool c = is_continuous(f, x, y);
  const MapClassification k = classify(m, mx.topology, my.topology);
  return k.olg != c || k.clg != c || k.lg != c;
}

std::vector<TheoremCase> build_registry() {
  std::vector<TheoremCase> r;

  // §1 --------------------------------------------------------------------
  r.push_back(holds(
      "S1.adjunction",
      "The join formula for the right adjoint satisfies phi(a) <= b iff a <= phi_*(b).",
      maps_family(), [](const Universe&, const Instance& in) {
        const auto& m = in.maps[0];
        return !check_adjunction(m, m.right_adjoint());
      }));
  r.push_back(holds(
      "S1.adjoint-max-formula",
      "phi_*(b) is the largest x with phi(x) <= b.", maps_family(),
      [](const Universe&, const Instance& in) {
        const auto& m = in.maps[0];
        const Lattice& A = m.source();
        const Lattice& B = m.target();
        for (Elem b = 0; b < B.size(); ++b) {
          const Elem r = m.right_adjoint_at(b);
          if (!B.leq(m(r), b)) return true;
          for (Elem x = 0; x < A.size(); ++x) {
            if (B.leq(m(x), b) && !A.leq(x, r)) return true;
          }
        }
        return false;
      }));
  r.push_back(refuted(
      "S1.section-identity",
      "phi(phi_*(b)) = b for every b, for join-preserving phi (checked on top-preserving maps).",
      maps_family([](const LatticeMap& m) { return m(m.source().top()) == m.target().top(); }),
      [](const Universe&, const Instance& in) { return !holds_section_identity(in.maps[0]); }));
  r.push_back(holds(
      "S1.adjoint-composition",
      "A composite of join-preserving maps preserves joins and its right adjoint is the "
      "composite of the right adjoints in reverse order.",
      composable_family(false), [](const Universe&, const Instance& in) {
        const auto& phi = in.maps[0];
        const auto& psi = in.maps[1];
        const LatticeMap c = compose(psi, phi);
        if (!c.is_join_preserving()) return true;
        for (Elem z = 0; z < psi.target().size(); ++z) {
          if (c.right_adjoint_at(z) != phi.right_adjoint_at(psi.right_adjoint_at(z))) {
            return true;
          }
        }
        return false;
      }));
  r.push_back(holds("S1.adjoint-meet-preserving",
                    "The right adjoint of a join-preserving map preserves arbitrary meets.",
                    maps_family(), [](const Universe&, const Instance& in) {
                      return !in.maps[0].right_adjoint().is_meet_preserving();
                    }));
  r.push_back(refuted(
      "S1.double-adjoint",
      "If phi and phi_* both preserve joins then the right adjoint of phi_* is phi.",
      maps_family(has_join_preserving_adjoint), [](const Universe&, const Instance& in) {
        const auto& m = in.maps[0];
        return !m.right_adjoint().right_adjoint().same_as(m);
      }));
  r.push_back(holds(
      "S1.bijection-preservation",
      "For a bijection between frames, preserving joins, preserving meets, and (when defined) "
      "phi_* preserving joins or meets are equivalent, and phi_* is the inverse.",
      bijection_family(), [](const Universe&, const Instance& in) {
        const auto& m = in.maps[0];
        if (m.is_join_preserving() != m.is_meet_preserving()) return true;
        if (!m.is_join_preserving()) return false;
        const LatticeMap adj = m.right_adjoint();
        if (!adj.is_join_preserving() || !adj.is_meet_preserving()) return true;
        return !adj.same_as(inverse(m));
      }));

  // §2 --------------------------------------------------------------------
  auto pair_family = [](const Universe& u, const Visit& visit) {
    for (const auto& L : u.frames_up_to(u.max_size())) {
      for (const auto& t1 : u.topologies(L)) {
        for (const auto& t2 : u.topologies(L)) {
          Instance in;
          in.topologies = {t1, t2};
          emit(visit, in);
        }
      }
    }
  };
  r.push_back(holds("S2.identity-olg-order",
                    "The identity (F, t1) -> (F, t2) is OLG iff t2 is contained in t1.",
                    pair_family, [](const Universe&, const Instance& in) {
                      const auto& t1 = in.topologies[0];
                      const auto& t2 = in.topologies[1];
                      const auto id = LatticeMap::identity(t1.carrier_ptr());
                      return is_olg(id, t1, t2) != t2.opens().is_subset_of(t1.opens());
                    }));
  r.push_back(holds("S2.identity-clg-order",
                    "The identity (F, t1) -> (F, t2) is CLG iff t2* is contained in t1*.",
                    pair_family, [](const Universe&, const Instance& in) {
                      const auto& t1 = in.topologies[0];
                      const auto& t2 = in.topologies[1];
                      const auto id = LatticeMap::identity(t1.carrier_ptr());
                      return is_clg(id, t1, t2) != t2.closed().is_subset_of(t1.closed());
                    }));
  r.push_back(refuted("S2.clg-implies-olg", "Every CLG map is OLG.", map_space_family(),
                      [](const Universe&, const Instance& in) {
                        const auto k = classify(in.maps[0], in.topologies[0], in.topologies[1]);
                        return k.clg && !k.olg;
                      }));
  r.push_back(refuted("S2.olg-implies-clg", "Every OLG map is CLG.", map_space_family(),
                      [](const Universe&, const Instance& in) {
                        const auto k = classify(in.maps[0], in.topologies[0], in.topologies[1]);
                        return k.olg && !k.clg;
                      }));

  // Quantifiers over "every LGT-space (F', t')" range over the universe.
  auto all_from = [](const Universe& u, const Topology& t, bool closed) {
    for (const auto& B : u.frames_up_to(u.max_size())) {
      for (const auto& m : u.maps(t.carrier_ptr(), B)) {
        for (const auto& t2 : u.topologies(B)) {
          if (!(closed ? is_clg(m, t, t2) : is_olg(m, t, t2))) return false;
        }
      }
    }
    return true;
  };
  auto all_into = [](const Universe& u, const Topology& t, bool closed) {
    for (const auto& A : u.frames_up_to(u.max_size())) {
      for (const auto& m : u.maps(A, t.carrier_ptr())) {
        for (const auto& t1 : u.topologies(A)) {
          if (!(closed ? is_clg(m, t1, t) : is_olg(m, t1, t))) return false;
        }
      }
    }
    return true;
  };
  r.push_back(holds("S2.discrete-cor-a",
                    "t is discrete iff every join-preserving map out of (F, t) is OLG.",
                    space_family(), [all_from](const Universe& u, const Instance& in) {
                      const auto& t = in.topologies[0];
                      return t.is_discrete() != all_from(u, t, false);
                    }));
  r.push_back(holds("S2.discrete-cor-b",
                    "t* = F iff every join-preserving map out of (F, t) is CLG.",
                    space_family(), [all_from](const Universe& u, const Instance& in) {
                      const auto& t = in.topologies[0];
                      return (t.closed() == t.carrier().all()) != all_from(u, t, true);
                    }));
  r.push_back(holds("S2.discrete-cor-c",
                    "If every join-preserving map into (F, t) is OLG then t is trivial.",
                    space_family(), [all_into](const Universe& u, const Instance& in) {
                      const auto& t = in.topologies[0];
                      return all_into(u, t, false) && !t.is_trivial();
                    }));
  r.push_back(holds("S2.discrete-cor-d",
                    "If every join-preserving map into (F, t) is CLG then t* = {0, 1}.",
                    space_family(), [all_into](const Universe& u, const Instance& in) {
                      const auto& t = in.topologies[0];
                      return all_into(u, t, true) && t.closed() != bounds(t.carrier());
                    }));
  r.push_back(refuted(
      "S2.discrete-cor-c-converse",
      "If t is trivial then every join-preserving map into (F, t) is OLG.",
      map_space_family([](const LatticeMap&, const Topology&, const Topology& t2) {
        return t2.is_trivial();
      }),
      [](const Universe&, const Instance& in) {
        return !is_olg(in.maps[0], in.topologies[0], in.topologies[1]);
      }));
  r.push_back(refuted(
      "S2.discrete-cor-d-converse",
      "If t* = {0, 1} then every join-preserving map into (F, t) is CLG.",
      map_space_family([](const LatticeMap&, const Topology&, const Topology& t2) {
        return t2.closed() == bounds(t2.carrier());
      }),
      [](const Universe&, const Instance& in) {
        return !is_clg(in.maps[0], in.topologies[0], in.topologies[1]);
      }));
  r.push_back(holds("S2.closed-all-discrete", "If t* = F then t is discrete.", space_family(),
                    [](const Universe&, const Instance& in) {
                      const auto& t = in.topologies[0];
                      return t.closed() == t.carrier().all() && !t.is_discrete();
                    }));
  r.push_back(holds("S2.all-clg-discrete",
                    "If every join-preserving map out of (F, t) is CLG then t is discrete.",
                    space_family(), [all_from](const Universe& u, const Instance& in) {
                      const auto& t = in.topologies[0];
                      return all_from(u, t, true) && !t.is_discrete();
                    }));
  r.push_back(refuted(
      "S2.all-clg-discrete-converse",
      "If t is discrete then every join-preserving map out of (F, t) is CLG.",
      map_space_family([](const LatticeMap&, const Topology& t1, const Topology&) {
        return t1.is_discrete();
      }),
      [](const Universe&, const Instance& in) {
        return !is_clg(in.maps[0], in.topologies[0], in.topologies[1]);
      }));
  r.push_back(holds(
      "S2.pseudocomplement-law-lg",
      "An OLG map with phi_*(a*) = (phi_*(a))* for every a is LG.", map_space_family(),
      [](const Universe&, const Instance& in) {
        const auto& m = in.maps[0];
        const auto& t1 = in.topologies[0];
        const auto& t2 = in.topologies[1];
        if (!is_olg(m, t1, t2)) return false;
        const Lattice& A = m.source();
        const Lattice& B = m.target();
        for (Elem a = 0; a < B.size(); ++a) {
          if (m.right_adjoint_at(B.pseudocomplement(a)) !=
              A.pseudocomplement(m.right_adjoint_at(a))) {
            return false;
          }
        }
        return !is_lg(m, t1, t2);
      }));
  r.push_back(holds(
      "S2.closure-characterization",
      "CLG iff phi(cl a) <= cl phi(a) for all a, iff cl phi_*(b) <= phi_*(cl b) for all b.",
      map_space_family(), [](const Universe&, const Instance& in) {
        const auto& m = in.maps[0];
        const auto& t1 = in.topologies[0];
        const auto& t2 = in.topologies[1];
        const bool c = is_clg(m, t1, t2);
        return c != clg_via_closure(m, t1, t2) || c != clg_via_adjoint_closure(m, t1, t2);
      }));
  r.push_back(holds(
      "S2.dense-image", "An onto CLG map sends dense elements to dense elements.",
      map_space_family([](const LatticeMap& m, const Topology& t1, const Topology& t2) {
        return m.is_surjective() && is_clg(m, t1, t2);
      }),
      [](const Universe&, const Instance& in) {
        const auto& m = in.maps[0];
        for (Elem a = 0; a < m.source().size(); ++a) {
          if (in.topologies[0].is_dense(a) && !in.topologies[1].is_dense(m(a))) return true;
        }
        return false;
      }));
  r.push_back(holds("S2.interior-characterization",
                    "OLG iff phi_*(int b) <= int phi_*(b) for every b.", map_space_family(),
                    [](const Universe&, const Instance& in) {
                      const auto& m = in.maps[0];
                      const auto& t1 = in.topologies[0];
                      const auto& t2 = in.topologies[1];
                      return is_olg(m, t1, t2) != olg_via_interior(m, t1, t2);
                    }));
  auto composition = [](auto test) {
    return [test](const Universe&, const Instance& in) {
      const auto& phi = in.maps[0];
      const auto& psi = in.maps[1];
      const auto& t1 = in.topologies[0];
      const auto& t2 = in.topologies[1];
      const auto& t3 = in.topologies[2];
      return test(phi, t1, t2) && test(psi, t2, t3) && !test(compose(psi, phi), t1, t3);
    };
  };
  r.push_back(holds("S2.composition-olg", "A composite of OLG maps is OLG.",
                    composable_family(true), composition(is_olg)));
  r.push_back(holds("S2.composition-clg", "A composite of CLG maps is CLG.",
                    composable_family(true), composition(is_clg)));
  r.push_back(holds("S2.composition-lg", "A composite of LG maps is LG.",
                    composable_family(true), composition(is_lg)));
  r.push_back(holds("S2.mho-equivalence",
                    "For a function f between spaces, mho(f) OLG, mho(f) CLG, mho(f) LG and "
                    "f continuous are equivalent.",
                    function_family(3), [](const Universe&, const Instance& in) {
                      return mho_equivalence_violated(in);
                    }));
  r.push_back(holds(
      "S2.mho-functor",
      "mho sends identities to identities, composites to composites, and continuous maps "
      "to LG maps.",
      [](const Universe& u, const Visit& visit) {
        const std::size_t bound = std::min<std::size_t>(2, u.max_size());
        for (std::size_t p = 0; p <= bound; ++p) {
          for (std::size_t q = 0; q <= bound; ++q) {
            for (std::size_t s = 0; s <= bound; ++s) {
              for (const auto& x : u.spaces(p)) {
                for (const auto& y : u.spaces(q)) {
                  for (const auto& z : u.spaces(s)) {
                    for (const auto& f : all_functions(p, q)) {
                      for (const auto& g : all_functions(q, s)) {
                        Instance in;
                        in.spaces = {x.renamed("X"), y.renamed("Y"), z.renamed("Z")};
                        in.functions = {SpaceFunction{f, 0, 1}, SpaceFunction{g, 1, 2}};
                        emit(visit, in);
                      }
                    }
                  }
                }
              }
            }
          }
        }
      },
      [](const Universe&, const Instance& in) {
        const auto& x = in.spaces[0];
        const auto& y = in.spaces[1];
        const auto& z = in.spaces[2];
        const auto& f = in.functions[0].function;
        const auto& g = in.functions[1].function;
        const MhoSpace mx = mho_space(x);
        const MhoSpace my = mho_space(y);
        const MhoSpace mz = mho_space(z);
        std::vector<std::size_t> ids(x.size());
        std::iota(ids.begin(), ids.end(), std::size_t{0});
        const LatticeMap id = mho_lift(PointFunction{"id", ids}, x, x, mx.frame, mx.frame);
        if (!id.same_as(LatticeMap::identity(mx.frame))) return true;
        const LatticeMap mf = mho_lift(f, x, y, mx.frame, my.frame);
        const LatticeMap mg = mho_lift(g, y, z, my.frame, mz.frame);
        const LatticeMap mgf = mho_lift(compose(g, f), x, z, mx.frame, mz.frame);
        if (!mgf.same_as(compose(mg, mf))) return true;
        return is_continuous(f, x, y) && !is_lg(mf, mx.topology, my.topology);
      }));

  // §3 --------------------------------------------------------------------
  auto restriction = [](const Instance& in) {
    const auto& m = in.maps[0];
    const Elem a = in.elements[0].second;
    return std::make_pair(restrict(m, a), subspace(in.topologies[0], a));
  };
  r.push_back(holds("S3.restriction-adjoint",
                    "The right adjoint of the restriction to the down-set of a is "
                    "y -> phi_*(y) meet a.",
                    restriction_family(), [](const Universe&, const Instance& in) {
                      const auto& m = in.maps[0];
                      const Lattice& F = m.source();
                      const Elem a = in.elements[0].second;
                      const LatticeMap res = restrict(m, a);
                      for (Elem y = 0; y < m.target().size(); ++y) {
                        const Elem expected = F.meet(m.right_adjoint_at(y), a);
                        if (global(F, a, res.right_adjoint_at(y)) != expected) return true;
                      }
                      return false;
                    }));
  r.push_back(holds("S3.restriction-olg",
                    "The restriction of an OLG map to a subspace is OLG.", restriction_family(),
                    [restriction](const Universe&, const Instance& in) {
                      if (!is_olg(in.maps[0], in.topologies[0], in.topologies[1])) return false;
                      auto [res, sub] = restriction(in);
                      return !is_olg(res, sub, in.topologies[1]);
                    }));
  r.push_back(holds(
      "S3.restriction-clg",
      "The restriction of a CLG map to the subspace at a pseudocomplement a is CLG.",
      restriction_family(), [restriction](const Universe&, const Instance& in) {
        const Elem a = in.elements[0].second;
        if (!is_pseudocomplement(in.maps[0].source(), a)) return false;
        if (!is_clg(in.maps[0], in.topologies[0], in.topologies[1])) return false;
        auto [res, sub] = restriction(in);
        return !is_clg(res, sub, in.topologies[1]);
      }));
  r.push_back(holds(
      "S3.restriction-lg",
      "The restriction of an LG map to the subspace at a pseudocomplement a is LG.",
      restriction_family(), [restriction](const Universe&, const Instance& in) {
        const Elem a = in.elements[0].second;
        if (!is_pseudocomplement(in.maps[0].source(), a)) return false;
        if (!is_lg(in.maps[0], in.topologies[0], in.topologies[1])) return false;
        auto [res, sub] = restriction(in);
        return !is_lg(res, sub, in.topologies[1]);
      }));
  r.push_back(holds(
      "S3.restriction-complemented",
      "On a complemented frame every restriction of an LG map is LG.", restriction_family(),
      [restriction](const Universe&, const Instance& in) {
        if (!in.maps[0].source().is_complemented()) return false;
        if (!is_lg(in.maps[0], in.topologies[0], in.topologies[1])) return false;
        auto [res, sub] = restriction(in);
        return !is_lg(res, sub, in.topologies[1]);
      }));
  auto open_point_family = [](const Universe& u, const Visit& visit) {
    each_space(u, u.max_size(), [&](const Topology& t) {
      for (Elem a : t.opens()) {
        Instance in;
        in.lattices = {t.carrier_ptr()};
        in.topologies = {t};
        in.elements = {{0, a}};
        emit(visit, in);
      }
    });
  };
  r.push_back(holds("S3.subspace-open",
                    "For open a and t <= a: t is open in the subspace at a iff t is open.",
                    open_point_family, [](const Universe&, const Instance& in) {
                      const auto& t = in.topologies[0];
                      const Lattice& F = t.carrier();
                      const Elem a = in.elements[0].second;
                      const Topology sub = subspace(t, a);
                      for (Elem x : F.down_set(a)) {
                        if (sub.is_open(local(F, a, x)) != t.is_open(x)) return true;
                      }
                      return false;
                    }));
  r.push_back(holds(
      "S3.subspace-closed",
      "For open a and b <= a*: b is closed in the subspace at a* iff b is closed.",
      open_point_family, [](const Universe&, const Instance& in) {
        const auto& t = in.topologies[0];
        const Lattice& F = t.carrier();
        const Elem c = F.pseudocomplement(in.elements[0].second);
        const Topology sub = subspace(t, c);
        for (Elem x : F.down_set(c)) {
          if (sub.is_closed(local(F, c, x)) != t.is_closed(x)) return true;
        }
        return false;
      }));
  r.push_back(refuted(
      "S3.subspace-closed-literal",
      "For open a and b <= a*: b is open in the subspace at a* iff b is closed.",
      open_point_family, [](const Universe&, const Instance& in) {
        const auto& t = in.topologies[0];
        const Lattice& F = t.carrier();
        const Elem c = F.pseudocomplement(in.elements[0].second);
        const Topology sub = subspace(t, c);
        for (Elem x : F.down_set(c)) {
          if (sub.is_open(local(F, c, x)) != t.is_closed(x)) return true;
        }
        return false;
      }));
  auto gluing_family = [](bool closed) {
    return [closed](const Universe& u, const Visit& visit) {
      each_map_space(u, u.max_size(),
                     [&](const LatticeMap& m, const Topology& t1, const Topology& t2) {
                       if (closed && (!t1.is_lt_space() || !t2.is_lt_space())) return;
                       const Lattice& F = m.source();
                       const ElementSet pool = closed ? t1.closed() : t1.opens();
                       for (Elem s : pool) {
                         for (Elem t : pool) {
                           if (s > t || F.join(s, t) != F.top()) continue;
                           Instance in = with_map_space(m, t1, t2);
                           in.lattices = {m.source_ptr()};
                           in.elements = {{0, s}, {0, t}};
                           emit(visit, in);
                         }
                       }
                     });
    };
  };
  auto glued = [](auto test) {
    return [test](const Universe&, const Instance& in) {
      const auto& m = in.maps[0];
      const auto& t1 = in.topologies[0];
      const auto& t2 = in.topologies[1];
      for (const auto& [_, s] : in.elements) {
        if (!test(restrict(m, s), subspace(t1, s), t2)) return false;
      }
      return !test(m, t1, t2);
    };
  };
  r.push_back(holds("S3.gluing-olg",
                    "If open s, t join to 1 and both restrictions are OLG, the map is OLG.",
                    gluing_family(false), glued(is_olg)));
  r.push_back(holds("S3.gluing-clg",
                    "Between LT-spaces, if closed a, b join to 1 and both restrictions are "
                    "CLG, the map is CLG.",
                    gluing_family(true), glued(is_clg)));
  r.push_back(holds(
      "S3.corestriction",
      "An OLG map whose image is the down-set of a stays OLG into the subspace at a.",
      map_space_family([](const LatticeMap& m, const Topology& t1, const Topology& t2) {
        return m.image() == m.target().down_set(m(m.source().top())) && is_olg(m, t1, t2);
      }),
      [](const Universe&, const Instance& in) {
        const auto& m = in.maps[0];
        const Elem a = m(m.source().top());
        return !is_olg(corestrict(m, a), in.topologies[0], subspace(in.topologies[1], a));
      }));
  r.push_back(holds(
      "S3.compact-image",
      "An onto OLG map whose adjoint keeps open covers covering carries compactness, "
      "countable compactness and the Lindelof property to the target.",
      map_space_family([](const LatticeMap& m, const Topology& t1, const Topology& t2) {
        if (!m.is_surjective() || !is_olg(m, t1, t2)) return false;
        bool ok = true;
        each_subset(t2.opens(), [&](ElementSet s) {
          if (m.target().join(s) != m.target().top()) return;
          ElementSet back;
          for (Elem u : s) back.insert(m.right_adjoint_at(u));
          if (m.source().join(back) != m.source().top()) ok = false;
        });
        return ok;
      }),
      [](const Universe&, const Instance& in) {
        const auto& t1 = in.topologies[0];
        const auto& t2 = in.topologies[1];
        return (is_compact(t1).compact && !is_compact(t2).compact) ||
               (is_countably_compact(t1).compact && !is_countably_compact(t2).compact) ||
               (is_lindelof(t1).compact && !is_lindelof(t2).compact);
      }));
  r.push_back(skipped("S3.compact-image-counterexample",
                      "An LG image of a compact space need not be compact.",
                      "the example needs a continuum carrier; every finite space is compact"));
  // (φ, τ1, τ2, B) with B a base of τ2.
  auto base_family = [](bool seeded) {
    return [seeded](const Universe& u, const Visit& visit) {
      if (seeded) {
        // Finite analog of the example: a chain segment below two incomparable
        // elements, mapped onto the diamond.
        auto F1 = share(Lattice::from_covers(
            "F1", {"0", "h", "a", "b", "c", "1"},
            {{"0", "h"}, {"h", "a"}, {"h", "b"}, {"a", "c"}, {"b", "c"}, {"c", "1"}}));
        auto F2 = share(Lattice::from_covers(
            "F2", {"0", "d", "e", "f", "1"},
            {{"0", "d"}, {"0", "e"}, {"d", "f"}, {"e", "f"}, {"f", "1"}}));
        const Elem fv = F2->element("f");
        auto m = LatticeMap::make(F1, F2, {0, 0, fv, fv, fv, F2->top()});
        const Topology t1 = Topology::make(F1, ElementSet::of(std::vector<Elem>{0, 1, 5}));
        const Topology t2 = Topology::discrete(F2);
        Instance in = with_map_space(m, t1, t2);
        in.lattices = {F2};
        in.subsets = {{0, ElementSet::of(std::vector<Elem>{0, F2->element("d"),
                                                           F2->element("e"), F2->top()})}};
        emit(visit, in);
      }
      each_map_space(u, u.max_size(),
                     [&](const LatticeMap& m, const Topology& t1, const Topology& t2) {
                       each_subset(t2.opens(), [&](ElementSet b) {
                         if (!is_base(t2, b)) return;
                         Instance in = with_map_space(m, t1, t2);
                         in.lattices = {m.target_ptr()};
                         in.subsets = {{0, b}};
                         emit(visit, in);
                       });
                     });
    };
  };
  auto base_violation = [](bool with_join_hypothesis) {
    return [with_join_hypothesis](const Universe&, const Instance& in) {
      const auto& m = in.maps[0];
      const ElementSet b = in.subsets[0].second;
      for (Elem x : b) {
        if (!in.topologies[0].is_open(m.right_adjoint_at(x))) return false;
      }
      if (with_join_hypothesis) {
        bool preserved = true;
        each_subset(b, [&](ElementSet s) {
          ElementSet back;
          for (Elem x : s) back.insert(m.right_adjoint_at(x));
          if (m.right_adjoint_at(m.target().join(s)) != m.source().join(back)) {
            preserved = false;
          }
        });
        if (!preserved) return false;
      }
      return !is_olg(m, in.topologies[0], in.topologies[1]);
    };
  };
  r.push_back(holds("S3.base-criterion",
                    "If phi_* preserves joins of base elements and sends every base element "
                    "to an open element, phi is OLG.",
                    base_family(false), base_violation(true)));
  r.push_back(refuted("S3.base-criterion-without-join",
                      "If phi_* sends every base element to an open element, phi is OLG.",
                      base_family(true), base_violation(false)));

  // §4 --------------------------------------------------------------------
  r.push_back(holds("S4.projection-olg", "Every product projection is OLG.",
                    product_family(), [](const Universe&, const Instance& in) {
                      const ProductSpace p = product_of(in);
                      for (std::size_t i = 0; i < p.factors.size(); ++i) {
                        if (!is_olg(p.projections[i], p.topology, p.factors[i])) return true;
                        // The adjoint puts the open element at i and top elsewhere.
                        for (Elem t = 0; t < p.factors[i].carrier().size(); ++t) {
                          std::vector<Elem> c;
                          for (std::size_t j = 0; j < p.factors.size(); ++j) {
                            c.push_back(j == i ? t : p.factors[j].carrier().top());
                          }
                          if (p.projections[i].right_adjoint_at(t) != p.index.encode(c)) {
                            return true;
                          }
                        }
                      }
                      return false;
                    }));
  r.push_back(holds(
      "S4.maps-into-product",
      "A join-preserving map into a product is OLG iff every projection of it is OLG.",
      [](const Universe& u, const Visit& visit) {
        each_factor_pair(u, factor_bound(u), [&](const Topology& a, const Topology& b) {
          const ProductSpace p = product_space(factor_pair(a, b));
          for (const auto& F : u.frames_up_to(u.max_size())) {
            for (const auto& m : join_preserving_maps(F, p.carrier)) {
              for (const auto& t : u.topologies(F)) {
                Instance in;
                in.topologies = {t, a, b};
                in.maps = {m};
                emit(visit, in);
              }
            }
          }
        });
      },
      [](const Universe&, const Instance& in) {
        const ProductSpace p = product_of(in, 1);
        const auto& m = in.maps[0];
        const LatticeMap into = LatticeMap::make(
            m.source_ptr(), p.carrier,
            std::vector<Elem>(m.graph().begin(), m.graph().end()));
        const ProductMapCheck c = maps_into_product_check(into, in.topologies[0], p);
        return c.olg != c.every_component_olg;
      }));
  r.push_back(holds(
      "S4.weak-topology",
      "If psi and psi_* preserve joins, psi is OLG into the weak topology iff every "
      "phi_a o psi is OLG.",
      [](const Universe& u, const Visit& visit) {
        const auto frames = u.frames_up_to(u.max_size());
        const auto small = u.frames_up_to(factor_bound(u));
        for (std::size_t width = 1; width <= 2; ++width) {
          const auto targets = width == 1 ? frames : small;
          for (const auto& F : width == 1 ? frames : small) {
            for (const auto& G : frames) {
              for (const auto& psi : u.maps(G, F)) {
                if (!has_join_preserving_adjoint(psi)) continue;
                for (const auto& tg : u.topologies(G)) {
                  auto visit_family = [&](auto&& self, Instance& in) -> void {
                    if (in.maps.size() == width + 1) return emit(visit, in);
                    for (const auto& A : targets) {
                      for (const auto& phi : u.maps(F, A)) {
                        for (const auto& ta : u.topologies(A)) {
                          in.maps.push_back(phi);
                          in.topologies.push_back(ta);
                          self(self, in);
                          in.maps.pop_back();
                          in.topologies.pop_back();
                        }
                      }
                    }
                  };
                  Instance in;
                  in.maps = {psi};
                  in.topologies = {tg};
                  visit_family(visit_family, in);
                }
              }
            }
          }
        }
      },
      [](const Universe&, const Instance& in) {
        const auto& psi = in.maps[0];
        std::vector<MapIntoSpace> family;
        for (std::size_t k = 1; k < in.maps.size(); ++k) {
          family.push_back(MapIntoSpace{in.maps[k], in.topologies[k]});
        }
        const Topology weak = weak_topology(psi.target_ptr(), family);
        bool every = true;
        for (const auto& [phi, ta] : family) {
          every = every && is_olg(compose(phi, psi), in.topologies[0], ta);
        }
        return is_olg(psi, in.topologies[0], weak) != every;
      }));
  r.push_back(holds(
      "S4.weak-mho-product",
      "On the powerset of a product of spaces, the weak topology generated by the lifted "
      "projections is the lifted product topology.",
      [](const Universe& u, const Visit& visit) {
        const std::size_t bound = std::min<std::size_t>(2, u.max_size());
        for (std::size_t p = 1; p <= bound; ++p) {
          for (std::size_t q = 1; q <= bound; ++q) {
            for (const auto& x : u.spaces(p)) {
              for (const auto& y : u.spaces(q)) {
                Instance in;
                in.spaces = {x.renamed("X"), y.renamed("Y")};
                emit(visit, in);
              }
            }
          }
        }
      },
      [](const Universe&, const Instance& in) {
        const auto& x = in.spaces[0];
        const auto& y = in.spaces[1];
        const FiniteSpace xy = product_of_spaces(x, y);
        const MhoSpace m = mho_space(xy);
        const MhoSpace mx = mho_space(x);
        const MhoSpace my = mho_space(y);
        std::vector<std::size_t> first;
        std::vector<std::size_t> second;
        for (std::size_t i = 0; i < x.size(); ++i) {
          for (std::size_t j = 0; j < y.size(); ++j) {
            first.push_back(i);
            second.push_back(j);
          }
        }
        std::vector<MapIntoSpace> family{
            {mho_lift(PointFunction{"p1", first}, xy, x, m.frame, mx.frame), mx.topology},
            {mho_lift(PointFunction{"p2", second}, xy, y, m.frame, my.frame), my.topology}};
        return weak_topology(m.frame, family).opens() != m.topology.opens();
      }));
  auto quotient_family = [](const Universe& u, const Visit& visit) {
    each_map(u, u.max_size(), [&](const LatticeMap& m) {
      if (!m.is_surjective() || !has_join_preserving_adjoint(m)) return;
      for (const auto& t : u.topologies(m.source_ptr())) {
        Instance in;
        in.maps = {m};
        in.topologies = {t};
        emit(visit, in);
      }
    });
  };
  r.push_back(holds(
      "S4.quotient-greatest",
      "For onto phi with phi and phi_* join-preserving, t_phi is the largest LG-topology "
      "making phi OLG.",
      quotient_family, [](const Universe& u, const Instance& in) {
        const auto& m = in.maps[0];
        const QuotientSpace q = quotient_topology(m, in.topologies[0]);
        if (!is_olg(m, in.topologies[0], q.topology) || !q.greatest) return true;
        for (const auto& t : u.topologies(m.target_ptr())) {
          if (is_olg(m, in.topologies[0], t) && !t.opens().is_subset_of(q.topology.opens())) {
            return true;
          }
        }
        return false;
      }));
  r.push_back(holds(
      "S4.quotient-universal",
      "psi is OLG from the quotient topology iff psi o phi is OLG.",
      [quotient_family](const Universe& u, const Visit& visit) {
        quotient_family(u, [&](const Instance& q) {
          const auto& m = q.maps[0];
          for (const auto& C : u.frames_up_to(u.max_size())) {
            for (const auto& psi : u.maps(m.target_ptr(), C)) {
              for (const auto& t3 : u.topologies(C)) {
                Instance in = q;
                in.maps.push_back(psi);
                in.topologies.push_back(t3);
                if (!visit(in)) return false;
              }
            }
          }
          return true;
        });
      },
      [](const Universe&, const Instance& in) {
        const QuotientSpace q = quotient_topology(in.maps[0], in.topologies[0]);
        const QuotientUniversalCheck c = quotient_universal_check(q, in.maps[1], in.topologies[1]);
        return c.olg != c.composite_olg;
      }));
  auto partition_family = [](bool with_topology) {
    return [with_topology](const Universe& u, const Visit& visit) {
      for (const auto& L : u.frames_up_to(u.max_size())) {
        for (const auto& d : all_partitions(L)) {
          Instance in;
          in.lattices = {L};
          in.partitions = {d};
          if (!with_topology) {
            emit(visit, in);
            continue;
          }
          for (const auto& t : u.topologies(L)) {
            in.topologies = {t};
            emit(visit, in);
          }
        }
      }
    };
  };
  r.push_back(holds(
      "S4.partition-trace",
      "For a partition D, a <= join T iff every block meeting a lies in T.",
      [partition_family](const Universe& u, const Visit& visit) {
        partition_family(false)(u, [&](const Instance& base) {
          const auto& d = base.partitions[0];
          for (Elem a = 0; a < d.carrier().size(); ++a) {
            bool go = true;
            each_subset(d.blocks(), [&](ElementSet t) {
              if (!go) return;
              Instance in = base;
              in.elements = {{0, a}};
              in.subsets = {{0, t}};
              go = visit(in);
            });
            if (!go) return false;
          }
          return true;
        });
      },
      [](const Universe&, const Instance& in) {
        const auto& d = in.partitions[0];
        const Lattice& L = d.carrier();
        const Elem a = in.elements[0].second;
        const ElementSet t = in.subsets[0].second;
        return L.leq(a, L.join(t)) != block_trace(d, a).is_subset_of(t);
      }));
  r.push_back(holds(
      "S4.decomposition-topology",
      "The block sets whose join is open form a topology on the partition.",
      partition_family(true), [](const Universe&, const Instance& in) {
        const auto& d = in.partitions[0];
        const auto& t = in.topologies[0];
        const Lattice& L = d.carrier();
        std::vector<ElementSet> family;
        each_subset(d.blocks(), [&](ElementSet s) {
          if (t.is_open(L.join(s))) family.push_back(s);
        });
        auto member = [&](ElementSet s) {
          return std::find(family.begin(), family.end(), s) != family.end();
        };
        if (!member(ElementSet{}) || !member(d.blocks())) return true;
        for (ElementSet a : family) {
          for (ElementSet b : family) {
            if (!member(a | b) || !member(a & b)) return true;
          }
        }
        return false;
      }));
  r.push_back(holds(
      "S4.decomposition-is-quotient",
      "The decomposition topology is the quotient topology of the block-trace map P, and "
      "P_*(T) is the join of T.",
      partition_family(true), [](const Universe&, const Instance& in) {
        const auto& d = in.partitions[0];
        const auto& t = in.topologies[0];
        const DecompositionSpace ds = decomposition_space(t, d);
        if (!ds.p.is_join_preserving() || !ds.p.is_surjective()) return true;
        if (!has_join_preserving_adjoint(ds.p)) return true;
        for (Elem s = 0; s < ds.frame->size(); ++s) {
          if (ds.p.right_adjoint_at(s) != block_join(d, s)) return true;
        }
        return quotient_topology(ds.p, t).topology.opens() != ds.topology.opens();
      }));
  r.push_back(refuted(
      "S4.quotient-is-decomposition",
      "Every quotient LG-topology is a decomposition topology.", space_family(),
      [](const Universe&, const Instance& in) {
        // The identity quotient of a space on a frame that is not a powerset is
        // not a decomposition space, which always lives on a powerset.
        const auto& t = in.topologies[0];
        const QuotientSpace q =
            quotient_topology(LatticeMap::identity(t.carrier_ptr()), t);
        return q.topology.opens() == t.opens() && !t.carrier().is_complemented();
      }));

  // §5 --------------------------------------------------------------------
  auto adjoint_pair = [](const LatticeMap& m, const Topology&, const Topology&) {
    return has_join_preserving_adjoint(m);
  };
  r.push_back(refuted(
      "S5.open-adjoint-olg",
      "If phi and phi_* preserve joins, phi is open iff phi_* is OLG.",
      map_space_family(adjoint_pair), [](const Universe&, const Instance& in) {
        const auto& m = in.maps[0];
        const auto& t1 = in.topologies[0];
        const auto& t2 = in.topologies[1];
        return is_open_map(m, t1, t2) != is_olg(m.right_adjoint(), t2, t1);
      }));
  r.push_back(refuted(
      "S5.closed-adjoint-clg",
      "If phi and phi_* preserve joins, phi is closed iff phi_* is CLG.",
      map_space_family(adjoint_pair), [](const Universe&, const Instance& in) {
        const auto& m = in.maps[0];
        const auto& t1 = in.topologies[0];
        const auto& t2 = in.topologies[1];
        return is_closed_map(m, t1, t2) != is_clg(m.right_adjoint(), t2, t1);
      }));
  r.push_back(holds("S5.projection-open", "Every product projection is an open map.",
                    product_family(), [](const Universe&, const Instance& in) {
                      const ProductSpace p = product_of(in);
                      for (std::size_t i = 0; i < p.factors.size(); ++i) {
                        if (!is_open_map(p.projections[i], p.topology, p.factors[i])) {
                          return true;
                        }
                      }
                      return false;
                    }));
  r.push_back(holds(
      "S5.quotient-recovery",
      "An onto open OLG map with phi and phi_* join-preserving and phi(0) = 0 carries the "
      "quotient topology.",
      map_space_family([](const LatticeMap& m, const Topology& t1, const Topology& t2) {
        return m.is_surjective() && m(m.source().bottom()) == m.target().bottom() &&
               has_join_preserving_adjoint(m) && is_open_map(m, t1, t2) && is_olg(m, t1, t2);
      }),
      [](const Universe&, const Instance& in) {
        return quotient_topology(in.maps[0], in.topologies[0]).topology.opens() !=
               in.topologies[1].opens();
      }));
  r.push_back(holds(
      "S5.bijection-complement",
      "A join-preserving bijection keeps top, its adjoint keeps bottom, and both commute "
      "with pseudocomplements.",
      maps_family([](const LatticeMap& m) { return m.is_bijective(); }),
      [](const Universe&, const Instance& in) {
        const auto& m = in.maps[0];
        const Lattice& A = m.source();
        const Lattice& B = m.target();
        if (m(A.top()) != B.top() || m.right_adjoint_at(B.bottom()) != A.bottom()) return true;
        for (Elem b = 0; b < B.size(); ++b) {
          if (m.right_adjoint_at(B.pseudocomplement(b)) !=
              A.pseudocomplement(m.right_adjoint_at(b))) {
            return true;
          }
        }
        for (Elem a = 0; a < A.size(); ++a) {
          if (m(A.pseudocomplement(a)) != B.pseudocomplement(m(a))) return true;
        }
        return false;
      }));
  r.push_back(holds("S5.bijection-collapse",
                    "For a join-preserving bijection, OLG, LG and phi_* open are equivalent.",
                    bijection_space_family(), [](const Universe&, const Instance& in) {
                      const auto& m = in.maps[0];
                      const auto& t1 = in.topologies[0];
                      const auto& t2 = in.topologies[1];
                      const bool o = is_olg(m, t1, t2);
                      return o != is_lg(m, t1, t2) ||
                             o != is_open_map(m.right_adjoint(), t2, t1);
                    }));
  r.push_back(holds(
      "S5.isomorphism-characterization",
      "For a join-preserving bijection: isomorphism iff open LG iff the inverse is open LG.",
      bijection_space_family(), [](const Universe&, const Instance& in) {
        const auto& m = in.maps[0];
        const auto& t1 = in.topologies[0];
        const auto& t2 = in.topologies[1];
        const bool iso = is_isomorphism(m, t1, t2);
        const LatticeMap inv = inverse(m);
        const bool b = is_open_map(m, t1, t2) && is_lg(m, t1, t2);
        const bool c = is_open_map(inv, t2, t1) && is_lg(inv, t2, t1);
        return iso != b || iso != c;
      }));
  r.push_back(holds(
      "S5.component-embedding",
      "Each factor is isomorphic to the subspace of the product at its indicator tuple.",
      product_family(), [](const Universe&, const Instance& in) {
        const ProductSpace p = product_of(in);
        for (std::size_t i = 0; i < p.factors.size(); ++i) {
          const ComponentEmbedding e = component_embedding(p, i);
          if (!is_isomorphism(e.restricted_projection, e.subspace, p.factors[i])) return true;
        }
        return false;
      }));
  r.push_back(holds(
      "S5.lg-property-compactness",
      "Compactness, countable compactness and the Lindelof property are invariant under "
      "isomorphism.",
      map_space_family([](const LatticeMap& m, const Topology& t1, const Topology& t2) {
        return m.is_bijective() && is_isomorphism(m, t1, t2);
      }),
      [](const Universe&, const Instance& in) {
        const auto& t1 = in.topologies[0];
        const auto& t2 = in.topologies[1];
        return is_compact(t1).compact != is_compact(t2).compact ||
               is_countably_compact(t1).compact != is_countably_compact(t2).compact ||
               is_lindelof(t1).compact != is_lindelof(t2).compact;
      }));
  r.push_back(skipped("S5.lg-property-separation",
                      "The ps-property, T0, T1, T2, regularity and T3 are invariant under "
                      "isomorphism.",
                      "these properties are not defined for LGT-spaces here"));
  return r;
}

std::vector<TheoremCase> build_goals() {
  std::vector<TheoremCase> g;
  auto goal = [&](std::string name, std::string what, InstanceFamily f, Violation v) {
    g.push_back(refuted(std::move(name), std::move(what), std::move(f), std::move(v)));
  };
  auto flags = [](const Instance& in) {
    return classify(in.maps[0], in.topologies[0], in.topologies[1]);
  };
  goal("clg-not-olg", "a CLG map that is not OLG", map_space_family(),
       [flags](const Universe&, const Instance& in) {
         const auto k = flags(in);
         return k.clg && !k.olg;
       });
  goal("olg-not-clg", "an OLG map that is not CLG", map_space_family(),
       [flags](const Universe&, const Instance& in) {
         const auto k = flags(in);
         return k.olg && !k.clg;
       });
  goal("non-olg-non-clg-join-preserving", "a join-preserving map that is neither OLG nor CLG",
       map_space_family(), [flags](const Universe&, const Instance& in) {
         const auto k = flags(in);
         return !k.olg && !k.clg;
       });
  const auto& reg = theorem_registry();
  auto borrow = [&](std::string name, std::string what, std::string_view id) {
    const TheoremCase& c = *std::find_if(reg.begin(), reg.end(),
                                         [&](const TheoremCase& t) { return t.id == id; });
    goal(std::move(name), std::move(what), c.family, c.violates);
  };
  borrow("section-identity-fails", "a top-preserving join-preserving phi with phi o phi_* != id",
         "S1.section-identity");
  borrow("converse-discrete-c", "a map into a trivial space that is not OLG",
         "S2.discrete-cor-c-converse");
  borrow("converse-discrete-d", "a map into a space with closed set {0, 1} that is not CLG",
         "S2.discrete-cor-d-converse");
  borrow("quotient-not-decomposition", "a quotient LG-topology that is no decomposition topology",
         "S4.quotient-is-decomposition");
  return g;
}

const std::vector<TheoremCase>& goal_cases() {
  static const std::vector<TheoremCase> goals = build_goals();
  return goals;
}

const TheoremCase* lookup_case(std::string_view id) {
  for (const auto& c : theorem_registry()) {
    if (c.id == id) return &c;
  }
  for (const auto& c : goal_cases()) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace

const std::vector<TheoremCase>& theorem_registry() {
  static const std::vector<TheoremCase> registry = build_registry();
  return registry;
}

const TheoremCase& find_theorem(std::string_view id) {
  for (const auto& c : theorem_registry()) {
    if (c.id == id) return c;
  }
  throw Error(ErrorKind::UnknownTheoremId, "no theorem '" + std::string(id) + "'");
}

const std::vector<std::string>& search_goals() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : goal_cases()) out.push_back(c.id);
    return out;
  }();
  return names;
}

const TheoremCase& goal_case(std::string_view goal) {
  for (const auto& c : goal_cases()) {
    if (c.id == goal) return c;
  }
  throw Error(ErrorKind::UnknownGoal, "no search goal '" + std::string(goal) + "'");
}

// ---------------------------------------------------------------------------
// Serialization

std::string serialize_instance(const std::string& id, const Instance& in) {
  std::vector<const Lattice*> seen;
  std::vector<LatticePtr> lattices;
  auto note = [&](const LatticePtr& l) {
    if (std::find(seen.begin(), seen.end(), l.get()) != seen.end()) return;
    seen.push_back(l.get());
    lattices.push_back(l);
  };
  for (const auto& l : in.lattices) note(l);
  for (const auto& t : in.topologies) note(t.carrier_ptr());
  for (const auto& m : in.maps) {
    note(m.source_ptr());
    note(m.target_ptr());
  }
  for (const auto& d : in.partitions) note(d.carrier_ptr());
  auto name_of = [&](const Lattice& l) {
    const auto k = std::find(seen.begin(), seen.end(), &l) - seen.begin();
    return "F" + std::to_string(k + 1);
  };
  std::string out;
  WitnessSpec w;
  w.id = id;
  for (const auto& l : lattices) out += write_lattice(*l, name_of(*l)) + "\n";
  for (std::size_t i = 0; i < in.topologies.size(); ++i) {
    const std::string n = "tau" + std::to_string(i + 1);
    out += write_topology(in.topologies[i], n, name_of(in.topologies[i].carrier())) + "\n";
    w.topologies.push_back(n);
  }
  for (std::size_t i = 0; i < in.maps.size(); ++i) {
    const std::string n = "phi" + std::to_string(i + 1);
    const auto& m = in.maps[i];
    out += write_map(m, n, name_of(m.source()), name_of(m.target())) + "\n";
    w.maps.push_back(n);
  }
  for (std::size_t i = 0; i < in.partitions.size(); ++i) {
    const std::string n = "D" + std::to_string(i + 1);
    out += write_partition(in.partitions[i], n, name_of(in.partitions[i].carrier())) + "\n";
    w.partitions.push_back(n);
  }
  std::vector<FiniteSpace> spaces;
  for (std::size_t i = 0; i < in.spaces.size(); ++i) {
    spaces.push_back(in.spaces[i].renamed("X" + std::to_string(i + 1)));
    out += write_space(spaces.back()) + "\n";
    w.spaces.push_back(spaces.back().name());
  }
  for (std::size_t i = 0; i < in.functions.size(); ++i) {
    const std::string n = "f" + std::to_string(i + 1);
    const auto& f = in.functions[i];
    out += write_function(f.function, n, spaces.at(f.from), spaces.at(f.to)) + "\n";
    w.functions.push_back(n);
  }
  for (const auto& l : in.lattices) w.lattices.push_back(name_of(*l));
  for (const auto& [k, e] : in.elements) {
    const Lattice& L = *in.lattices.at(k);
    w.elements.emplace_back(name_of(L), L.element_name(e));
  }
  for (const auto& [k, s] : in.subsets) {
    const Lattice& L = *in.lattices.at(k);
    std::vector<std::string> names;
    for (Elem e : s) names.push_back(L.element_name(e));
    w.subsets.emplace_back(name_of(L), std::move(names));
  }
  w.params = in.params;
  out += write_witness(w);
  return out;
}

Instance load_instance(const Workspace& ws, const std::string& id) {
  const WitnessSpec& w = ws.witness(id);
  Instance in;
  for (const auto& n : w.lattices) in.lattices.push_back(ws.lattice(n));
  for (const auto& n : w.topologies) in.topologies.push_back(ws.topology(n));
  for (const auto& n : w.maps) in.maps.push_back(ws.map(n));
  for (const auto& n : w.partitions) in.partitions.push_back(ws.partition(n));
  for (const auto& n : w.spaces) in.spaces.push_back(ws.space(n));
  auto space_index = [&](const std::string& name) {
    auto it = std::find(w.spaces.begin(), w.spaces.end(), name);
    if (it == w.spaces.end()) {
      throw Error(ErrorKind::UnknownObject,
                  "witness " + id + " does not list space '" + name + "'");
    }
    return static_cast<std::size_t>(it - w.spaces.begin());
  };
  for (const auto& n : w.functions) {
    const NamedFunction& f = ws.function(n);
    in.functions.push_back(SpaceFunction{f.function, space_index(f.from), space_index(f.to)});
  }
  auto lattice_index = [&](const std::string& name) {
    auto it = std::find(w.lattices.begin(), w.lattices.end(), name);
    if (it == w.lattices.end()) {
      throw Error(ErrorKind::UnknownObject,
                  "witness " + id + " does not list lattice '" + name + "'");
    }
    return static_cast<std::size_t>(it - w.lattices.begin());
  };
  for (const auto& [l, e] : w.elements) {
    const std::size_t k = lattice_index(l);
    in.elements.emplace_back(k, in.lattices[k]->element(e));
  }
  for (const auto& [l, es] : w.subsets) {
    const std::size_t k = lattice_index(l);
    ElementSet s;
    for (const auto& e : es) s.insert(in.lattices[k]->element(e));
    in.subsets.emplace_back(k, s);
  }
  in.params = w.params;
  return in;
}

bool replay_witness(const std::string& id, const std::string& text, std::size_t max_size) {
  const TheoremCase* c = lookup_case(id);
  if (c == nullptr) {
    throw Error(ErrorKind::UnknownTheoremId, "no theorem or goal '" + id + "'");
  }
  if (!c->violates) return false;
  Workspace ws;
  ws.add_text(text, id + ".witness");
  ws.resolve();
  const Universe u(max_size);
  return c->violates(u, load_instance(ws, id));
}

// ---------------------------------------------------------------------------
// Running

VerifyReport check_theorem(const TheoremCase& c, const Universe& u) {
  VerifyReport r;
  r.id = c.id;
  r.expectation = c.expectation;
  const auto start = std::chrono::steady_clock::now();
  if (c.expectation != Expectation::Skipped) {
    try {
      c.family(u, [&](const Instance& in) {
        ++r.instances;
        if (c.violates(u, in)) {
          r.witness = in;
          return false;
        }
        return true;
      });
    } catch (const Stop&) {
    }
    if (r.witness) r.witness_text = serialize_instance(c.id, *r.witness);
  }
  r.wall = std::chrono::steady_clock::now() - start;
  return r;
}

std::vector<VerifyReport> run_suite(const SuiteOptions& options) {
  std::vector<const TheoremCase*> selected;
  if (options.only.empty()) {
    for (const auto& c : theorem_registry()) selected.push_back(&c);
  } else {
    for (const auto& id : options.only) selected.push_back(&find_theorem(id));
  }
  const Universe u(options.max_size);
  std::vector<VerifyReport> reports(selected.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  auto worker = [&] {
    while (true) {
      const std::size_t k = next.fetch_add(1);
      if (k >= selected.size()) return;
      try {
        reports[k] = check_theorem(*selected[k], u);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, selected.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  if (options.out_dir) {
    for (auto& r : reports) {
      if (r.witness) {
        r.witness_path = write_file(*options.out_dir, r.id + ".witness", r.witness_text);
      }
    }
  }
  return reports;
}

SearchResult search_counterexample(std::string_view goal, std::size_t max_size) {
  const TheoremCase& c = goal_case(goal);
  const Universe u(max_size);
  const VerifyReport r = check_theorem(c, u);
  return SearchResult{c.id, r.instances, r.witness, r.witness_text};
}

std::string format_report(const VerifyReport& r, bool machine) {
  std::ostringstream out;
  if (machine) {
    out << "THEOREM " << r.id << ' ';
    if (r.expectation == Expectation::Skipped) {
      out << "SKIPPED";
    } else if (r.counterexample()) {
      out << "COUNTEREXAMPLE file="
          << (r.witness_path.empty() ? std::string("-") : r.witness_path.string())
          << " expected=" << (r.met() ? "true" : "false");
    } else if (r.met()) {
      out << "PASS instances=" << r.instances;
    } else {
      out << "MISSING instances=" << r.instances;
    }
    return out.str();
  }
  const TheoremCase* c = lookup_case(r.id);
  out << r.id << ": ";
  if (r.expectation == Expectation::Skipped) {
    out << "skipped (" << (c ? c->skip_reason : std::string{}) << ")";
  } else if (r.counterexample()) {
    out << (r.met() ? "refuted as expected" : "UNEXPECTED COUNTEREXAMPLE") << " after "
        << r.instances << " instances";
    if (!r.witness_path.empty()) out << ", witness in " << r.witness_path.string();
  } else if (r.met()) {
    out << "holds on " << r.instances << " instances";
  } else {
    out << "NO COUNTEREXAMPLE FOUND in " << r.instances << " instances";
  }
  char wall[32];
  std::snprintf(wall, sizeof wall, " [%.2fs]", r.wall.count());
  out << wall;
  if (c) out << "\n    " << c->statement;
  return out.str();
}

std::string format_summary(const std::vector<VerifyReport>& reports, bool machine) {
  std::size_t met = 0;
  std::size_t skipped = 0;
  for (const auto& r : reports) {
    if (r.expectation == Expectation::Skipped) {
      ++skipped;
    } else if (r.met()) {
      ++met;
    }
  }
  const std::size_t unmet = reports.size() - met - skipped;
  std::ostringstream out;
  if (machine) {
    out << "SUMMARY theorems=" << reports.size() << " met=" << met << " unmet=" << unmet
        << " skipped=" << skipped;
  } else {
    out << reports.size() << " theorems: " << met << " met their expectation, " << unmet
        << " did not, " << skipped << " skipped";
  }
  return out.str();
}

}  // namespace lgt
