#include "lgt/space.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "lgt/error.hpp"

namespace lgt {

FiniteSpace FiniteSpace::make(std::string name, std::vector<std::string> points,
                              std::vector<PointSet> opens) {
  if (points.size() > 6) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "space " + name + " has more than 6 points");
  }
  std::unordered_set<std::string> seen;
  for (const auto& p : points) {
    if (!is_valid_token(p) || p.find(',') != std::string::npos ||
        p.find('{') != std::string::npos || p.find('}') != std::string::npos) {
      throw Error(ErrorKind::InvalidName, "invalid point name '" + p + "'");
    }
    if (!seen.insert(p).second) {
      throw Error(ErrorKind::DuplicateElement, "point '" + p + "' listed twice");
    }
  }
  FiniteSpace s;
  s.name_ = std::move(name);
  s.points_ = std::move(points);
  const PointSet all = s.everything();
  std::set<PointSet> family{0, all};
  for (PointSet u : opens) {
    if ((u & ~all) != 0) {
      throw Error(ErrorKind::UnknownElement, "open set outside the points of " + s.name_);
    }
    family.insert(u);
  }
  for (PointSet u : family) {
    for (PointSet v : family) {
      if (!family.contains(u | v)) {
        throw Error(ErrorKind::NotATopology,
                    "opens of " + s.name_ + " not closed under union: " +
                        subset_name(s.points_, u) + " ∪ " + subset_name(s.points_, v));
      }
      if (!family.contains(u & v)) {
        throw Error(ErrorKind::NotATopology,
                    "opens of " + s.name_ + " not closed under intersection: " +
                        subset_name(s.points_, u) + " ∩ " + subset_name(s.points_, v));
      }
    }
  }
  s.opens_.assign(family.begin(), family.end());
  return s;
}

bool FiniteSpace::is_open(PointSet s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s);
}

std::size_t FiniteSpace::point(const std::string& name) const {
  auto it = std::find(points_.begin(), points_.end(), name);
  if (it == points_.end()) {
    throw Error(ErrorKind::UnknownElement, "space " + name_ + " has no point '" + name + "'");
  }
  return static_cast<std::size_t>(it - points_.begin());
}

FiniteSpace FiniteSpace::renamed(std::string name) const {
  FiniteSpace copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

PointSet preimage(const PointFunction& f, PointSet s) {
  PointSet out = 0;
  for (std::size_t i = 0; i < f.image.size(); ++i) {
    if ((s >> f.image[i]) & 1U) out |= PointSet{1} << i;
  }
  return out;
}

PointSet direct_image(const PointFunction& f, PointSet s) {
  PointSet out = 0;
  for (std::size_t i = 0; i < f.image.size(); ++i) {
    if ((s >> i) & 1U) out |= PointSet{1} << f.image[i];
  }
  return out;
}

bool is_continuous(const PointFunction& f, const FiniteSpace& x,
                   const FiniteSpace& y) {
  for (PointSet u : y.opens()) {
    if (!x.is_open(preimage(f, u))) return false;
  }
  return true;
}

std::vector<FiniteSpace> all_spaces(std::size_t points) {
  if (points > 4) {
    throw Error(ErrorKind::SizeLimitExceeded,
                "enumerating every topology is limited to 4 points");
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < points; ++i) names.push_back("p" + std::to_string(i + 1));
  const PointSet all = (PointSet{1} << points) - 1;
  // Candidate opens are the proper nonempty subsets.
  std::vector<PointSet> inner;
  for (PointSet s = 1; s < all; ++s) inner.push_back(s);
  std::vector<FiniteSpace> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << inner.size()); ++mask) {
    std::vector<PointSet> family{0, all};
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if ((mask >> i) & 1U) family.push_back(inner[i]);
    }
    bool ok = true;
    for (std::size_t i = 0; i < family.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < family.size() && ok; ++j) {
        const PointSet u = family[i] | family[j];
        const PointSet v = family[i] & family[j];
        ok = std::find(family.begin(), family.end(), u) != family.end() &&
             std::find(family.begin(), family.end(), v) != family.end();
      }
    }
    if (ok) {
      out.push_back(FiniteSpace::make("X" + std::to_string(points) + "_" +
                                          std::to_string(out.size()),
                                      names, family));
    }
  }
  std::sort(out.begin(), out.end(), [](const FiniteSpace& a, const FiniteSpace& b) {
    return a.opens() < b.opens();
  });
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = out[i].renamed("X" + std::to_string(points) + "_" + std::to_string(i));
  }
  return out;
}

std::vector<PointFunction> all_functions(std::size_t from, std::size_t to) {
  std::vector<PointFunction> out;
  if (to == 0 && from > 0) return out;
  std::vector<std::size_t> image(from, 0);
  while (true) {
    out.push_back(PointFunction{"f" + std::to_string(out.size()), image});
    std::size_t i = from;
    while (i > 0) {
      --i;
      if (++image[i] < to) break;
      image[i] = 0;
      if (i == 0) return out;
    }
    if (from == 0) return out;
  }
}

PointFunction compose(const PointFunction& g, const PointFunction& f) {
  PointFunction out;
  out.name = g.name.empty() || f.name.empty() ? std::string{} : g.name + "_o_" + f.name;
  out.image.resize(f.image.size());
  for (std::size_t i = 0; i < f.image.size(); ++i) out.image[i] = g.image[f.image[i]];
  return out;
}

}  // namespace lgt
