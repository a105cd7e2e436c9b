#pragma once

#include <string>
#include <vector>

#include "lgt/lattice.hpp"
#include "lgt/maps.hpp"
#include "lgt/topology.hpp"

namespace fixtures {

// 0 < a < 1
inline lgt::LatticePtr chain3() {
  return lgt::share(lgt::Lattice::from_covers("C3", {"0", "a", "1"}, {{"0", "a"}, {"a", "1"}}));
}

inline lgt::LatticePtr chain2() {
  return lgt::share(lgt::Lattice::from_covers("C2", {"0", "1"}, {{"0", "1"}}));
}

// 0 < a1 < a2 < 1
inline lgt::LatticePtr chain4() {
  return lgt::share(lgt::Lattice::from_covers(
      "F1", {"0", "a1", "a2", "1"}, {{"0", "a1"}, {"a1", "a2"}, {"a2", "1"}}));
}

// Two atoms b1, b2 joining to b3, then 1 on top.
inline lgt::LatticePtr diamond() {
  return lgt::share(lgt::Lattice::from_covers(
      "F2", {"0", "b1", "b2", "b3", "1"},
      {{"0", "b1"}, {"0", "b2"}, {"b1", "b3"}, {"b2", "b3"}, {"b3", "1"}}));
}

inline lgt::LatticePtr m3() {
  return lgt::share(lgt::Lattice::from_covers(
      "M3", {"0", "x", "y", "z", "1"},
      {{"0", "x"}, {"0", "y"}, {"0", "z"}, {"x", "1"}, {"y", "1"}, {"z", "1"}}));
}

inline lgt::LatticePtr boolean4() {
  return lgt::share(lgt::Lattice::from_covers(
      "B4", {"0", "p", "q", "1"}, {{"0", "p"}, {"0", "q"}, {"p", "1"}, {"q", "1"}}));
}

// The paper's OLG-not-CLG map: 0->0, a1->b1, a2->b3, 1->1.
inline lgt::LatticeMap paper_phi() {
  auto f1 = chain4();
  auto f2 = diamond();
  return lgt::LatticeMap::make(f1, f2,
                               {f2->element("0"), f2->element("b1"), f2->element("b3"),
                                f2->element("1")},
                               "phi");
}

inline lgt::ElementSet set_of(const lgt::Lattice& L, const std::vector<std::string>& names) {
  lgt::ElementSet s;
  for (const auto& n : names) s.insert(L.element(n));
  return s;
}

}  // namespace fixtures
