#include "lgt/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "lgt/error.hpp"

namespace lgt {

bool is_valid_token(std::string_view name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '<' ||
           c == '#';
  });
}

namespace {

void check_names(const std::vector<std::string>& names) {
  if (names.empty()) {
    throw Error(ErrorKind::NoBoundsError, "lattice has no elements");
  }
  if (names.size() > kMaxElements) {
    throw Error(ErrorKind::SizeLimitExceeded,
                std::to_string(names.size()) + " elements exceeds the bound of " +
                    std::to_string(kMaxElements));
  }
  std::unordered_map<std::string_view, std::size_t> seen;
  for (const auto& n : names) {
    if (!is_valid_token(n)) {
      throw Error(ErrorKind::InvalidName, "invalid element name '" + n + "'");
    }
    if (!seen.emplace(n, 0).second) {
      throw Error(ErrorKind::DuplicateElement, "element '" + n + "' listed twice");
    }
  }
}

}  // namespace

Lattice Lattice::from_covers(
    std::string name, std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& covers) {
  check_names(elements);
  const std::size_t n = elements.size();
  auto index_of = [&](const std::string& id) -> Elem {
    auto it = std::find(elements.begin(), elements.end(), id);
    if (it == elements.end()) {
      throw Error(ErrorKind::UnknownElement,
                  "cover mentions unknown element '" + id + "'");
    }
    return static_cast<Elem>(it - elements.begin());
  };

  std::vector<ElementSet> up(n);
  for (Elem i = 0; i < n; ++i) up[i].insert(i);
  for (const auto& [lo, hi] : covers) {
    Elem a = index_of(lo);
    Elem b = index_of(hi);
    if (a == b) {
      throw Error(ErrorKind::CycleError, "cover " + lo + "<" + hi + " is a loop");
    }
    up[a].insert(b);
  }
  // Warshall closure on bit rows.
  for (Elem k = 0; k < n; ++k) {
    for (Elem i = 0; i < n; ++i) {
      if (up[i].contains(k)) up[i] |= up[k];
    }
  }
  for (Elem i = 0; i < n; ++i) {
    for (Elem j : up[i]) {
      if (j != i && up[j].contains(i)) {
        throw Error(ErrorKind::CycleError, "covers induce a cycle through '" +
                                               elements[i] + "' and '" +
                                               elements[j] + "'");
      }
    }
  }
  return from_order(std::move(name), std::move(elements), std::move(up));
}

Lattice Lattice::from_order(std::string name, std::vector<std::string> elements,
                            std::vector<ElementSet> up_sets) {
  check_names(elements);
  const std::size_t n = elements.size();
  if (up_sets.size() != n) {
    throw Error(ErrorKind::NotALattice, "order relation has wrong arity");
  }
  const ElementSet all = ElementSet::first(n);
  Lattice L;
  L.name_ = std::move(name);
  L.names_ = std::move(elements);
  L.up_ = std::move(up_sets);
  L.down_.assign(n, ElementSet{});
  for (Elem i = 0; i < n; ++i) {
    if (!L.up_[i].is_subset_of(all) || !L.up_[i].contains(i)) {
      throw Error(ErrorKind::NotALattice, "order relation is not reflexive at '" +
                                              L.names_[i] + "'");
    }
    for (Elem j : L.up_[i]) L.down_[j].insert(i);
  }
  for (Elem i = 0; i < n; ++i) {
    for (Elem j : L.up_[i]) {
      if (j != i && L.up_[j].contains(i)) {
        throw Error(ErrorKind::CycleError, "order relation is not antisymmetric on '" +
                                               L.names_[i] + "', '" +
                                               L.names_[j] + "'");
      }
      if (!L.up_[j].is_subset_of(L.up_[i])) {
        throw Error(ErrorKind::NotALattice, "order relation is not transitive at '" +
                                                L.names_[i] + "'");
      }
    }
  }

  std::optional<Elem> bottom;
  std::optional<Elem> top;
  for (Elem i = 0; i < n; ++i) {
    if (L.up_[i] == all) bottom = i;
    if (L.down_[i] == all) top = i;
  }
  if (!bottom || !top) {
    throw Error(ErrorKind::NoBoundsError,
                std::string("lattice has no ") + (!bottom ? "bottom" : "top") +
                    " element");
  }
  L.bottom_ = *bottom;
  L.top_ = *top;

  L.join_.assign(n * n, 0);
  L.meet_.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const ElementSet upper = L.up_[a] & L.up_[b];
      const ElementSet lower = L.down_[a] & L.down_[b];
      std::optional<Elem> lub;
      for (Elem u : upper) {
        if (upper.is_subset_of(L.up_[u])) {
          lub = u;
          break;
        }
      }
      std::optional<Elem> glb;
      for (Elem u : lower) {
        if (lower.is_subset_of(L.down_[u])) {
          glb = u;
          break;
        }
      }
      if (!lub || !glb) {
        throw Error(ErrorKind::NotALattice,
                    "pair ('" + L.names_[a] + "', '" + L.names_[b] + "') has no " +
                        (!lub ? "least upper bound" : "greatest lower bound"));
      }
      L.join_[a * n + b] = *lub;
      L.meet_[a * n + b] = *glb;
    }
  }

  L.frame_ = lgt::is_frame(L);
  if (L.frame_.is_frame) {
    L.pseudo_.resize(n);
    for (Elem a = 0; a < n; ++a) {
      ElementSet disjoint;
      for (Elem x = 0; x < n; ++x) {
        if (L.meet(x, a) == L.bottom_) disjoint.insert(x);
      }
      L.pseudo_[a] = L.join(disjoint);
    }
  }
  return L;
}

std::optional<Elem> Lattice::find(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Elem>(it - names_.begin());
}

Elem Lattice::element(std::string_view name) const {
  if (auto e = find(name)) return *e;
  throw Error(ErrorKind::UnknownElement,
              "'" + std::string(name) + "' is not an element of " + name_);
}

Elem Lattice::join(ElementSet s) const {
  Elem acc = bottom_;
  for (Elem e : s) acc = join(acc, e);
  return acc;
}

Elem Lattice::meet(ElementSet s) const {
  Elem acc = top_;
  for (Elem e : s) acc = meet(acc, e);
  return acc;
}

std::vector<std::pair<Elem, Elem>> Lattice::covers() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem x = 0; x < size(); ++x) {
    for (Elem y : up_[x]) {
      if (y == x) continue;
      ElementSet between = up_[x] & down_[y];
      if (between.size() == 2) out.emplace_back(x, y);
    }
  }
  return out;
}

std::vector<Elem> Lattice::join_irreducibles() const {
  std::vector<std::size_t> lower_covers(size(), 0);
  for (auto [x, y] : covers()) ++lower_covers[y];
  std::vector<Elem> out;
  for (Elem e = 0; e < size(); ++e) {
    if (lower_covers[e] == 1) out.push_back(e);
  }
  return out;
}

void Lattice::require_frame(std::string_view operation) const {
  if (!frame_.is_frame) {
    throw Error(ErrorKind::NotAFrame,
                std::string(operation) + " requires a frame; " + name_ +
                    " violates distributivity");
  }
}

Elem Lattice::pseudocomplement(Elem a) const {
  require_frame("pseudocomplement");
  return pseudo_.at(a);
}

std::optional<Elem> Lattice::complement(Elem a) const {
  require_frame("complement");
  for (Elem b = 0; b < size(); ++b) {
    if (meet(a, b) == bottom_ && join(a, b) == top_) return b;
  }
  return std::nullopt;
}

bool Lattice::is_complemented() const {
  require_frame("is_complemented");
  for (Elem a = 0; a < size(); ++a) {
    if (!complement(a)) return false;
  }
  return true;
}

bool Lattice::same_structure(const Lattice& other) const {
  return names_ == other.names_ && up_ == other.up_;
}

Lattice Lattice::renamed(std::string name) const {
  Lattice copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

FrameCertificate is_frame(const Lattice& L) {
  FrameCertificate cert;
  cert.is_frame = true;
  cert.is_symmetric = true;
  const Elem n = static_cast<Elem>(L.size());
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (cert.is_frame &&
            L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) {
          cert.is_frame = false;
          cert.witness = std::array<Elem, 3>{a, b, c};
        }
        if (cert.is_symmetric &&
            L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), L.join(a, c))) {
          cert.is_symmetric = false;
          cert.symmetric_witness = std::array<Elem, 3>{a, b, c};
        }
      }
    }
  }
  return cert;
}

std::string subset_name(const std::vector<std::string>& points,
                        std::uint64_t mask) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if ((mask >> i) & 1U) {
      if (!first) out += ',';
      out += points[i];
      first = false;
    }
  }
  out += '}';
  return out;
}

Lattice powerset_frame(const std::vector<std::string>& points,
                       std::string name) {
  if (points.size() > 6) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "powerset of " + std::to_string(points.size()) +
                    " points exceeds 64 elements");
  }
  const std::size_t n = std::size_t{1} << points.size();
  std::vector<std::string> names;
  names.reserve(n);
  for (std::uint64_t m = 0; m < n; ++m) names.push_back(subset_name(points, m));
  std::vector<ElementSet> up(n);
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = 0; b < n; ++b) {
      if ((a & ~b) == 0) up[a].insert(static_cast<Elem>(b));
    }
  }
  return Lattice::from_order(std::move(name), std::move(names), std::move(up));
}

ProductIndex::ProductIndex(std::vector<std::size_t> radices)
    : radices_(std::move(radices)), strides_(radices_.size(), 1) {
  for (std::size_t i = radices_.size(); i-- > 0;) {
    strides_[i] = total_;
    total_ *= radices_[i];
  }
}

Elem ProductIndex::encode(std::span<const Elem> coords) const {
  std::size_t e = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) e += coords[i] * strides_[i];
  return static_cast<Elem>(e);
}

std::vector<Elem> ProductIndex::decode(Elem e) const {
  std::vector<Elem> coords(radices_.size());
  for (std::size_t i = 0; i < radices_.size(); ++i) coords[i] = coordinate(e, i);
  return coords;
}

Elem ProductIndex::coordinate(Elem e, std::size_t factor) const {
  return static_cast<Elem>((e / strides_[factor]) % radices_[factor]);
}

Lattice product_lattice(std::span<const LatticePtr> factors, std::string name) {
  if (factors.empty()) {
    throw Error(ErrorKind::IndexOutOfRange, "product of an empty family");
  }
  std::vector<std::size_t> radices;
  std::size_t total = 1;
  for (const auto& f : factors) {
    radices.push_back(f->size());
    total *= f->size();
    if (total > kMaxElements) {
      throw Error(ErrorKind::SizeLimitExceeded,
                  "product has more than " + std::to_string(kMaxElements) +
                      " elements");
    }
  }
  ProductIndex index(radices);
  if (name.empty()) {
    name = "prod(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) name += ',';
      name += factors[i]->name();
    }
    name += ')';
  }
  std::vector<std::string> names(total);
  std::vector<ElementSet> up(total);
  std::vector<std::vector<Elem>> coords(total);
  for (Elem e = 0; e < total; ++e) coords[e] = index.decode(e);
  for (Elem e = 0; e < total; ++e) {
    std::string n = "(";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) n += ',';
      n += factors[i]->element_name(coords[e][i]);
    }
    names[e] = n + ")";
    for (Elem f = 0; f < total; ++f) {
      bool below = true;
      for (std::size_t i = 0; i < factors.size() && below; ++i) {
        below = factors[i]->leq(coords[e][i], coords[f][i]);
      }
      if (below) up[e].insert(f);
    }
  }
  return Lattice::from_order(std::move(name), std::move(names), std::move(up));
}

Lattice down_set_lattice(const Lattice& L, Elem a) {
  if (a >= L.size()) {
    throw Error(ErrorKind::UnknownElement,
                "element index " + std::to_string(a) + " not in " + L.name());
  }
  const std::vector<Elem> members = L.down_set(a).to_vector();
  std::vector<std::string> names;
  std::vector<ElementSet> up(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    names.push_back(L.element_name(members[i]));
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (L.leq(members[i], members[j])) up[i].insert(static_cast<Elem>(j));
    }
  }
  return Lattice::from_order(L.name() + "_" + L.element_name(a), std::move(names),
                             std::move(up));
}

}  // namespace lgt
