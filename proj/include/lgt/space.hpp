#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "lgt/lattice.hpp"

namespace lgt {

// Subset of a finite space's points, as a bit mask over point positions.
using PointSet = std::uint64_t;

// A finite point-set topological space. The empty set and the whole space
// are always open. At most 6 points, so that its powerset frame fits.
class FiniteSpace {
 public:
  // Throws NotATopology (opens not closed under union/intersection),
  // DuplicateElement, InvalidName, SizeLimitExceeded.
  static FiniteSpace make(std::string name, std::vector<std::string> points,
                          std::vector<PointSet> opens);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  PointSet everything() const { return (PointSet{1} << points_.size()) - 1; }
  // Sorted ascending by mask.
  const std::vector<PointSet>& opens() const { return opens_; }
  bool is_open(PointSet s) const;
  std::size_t point(const std::string& name) const;  // throws UnknownElement

  FiniteSpace renamed(std::string name) const;

 private:
  FiniteSpace() = default;

  std::string name_;
  std::vector<std::string> points_;
  std::vector<PointSet> opens_;
};

// A total function between the point sets of two spaces.
struct PointFunction {
  std::string name;
  std::vector<std::size_t> image;  // image[i] = target point of source point i
};

// f⁻¹(U) open for every open U.
bool is_continuous(const PointFunction& f, const FiniteSpace& x,
                   const FiniteSpace& y);

PointSet preimage(const PointFunction& f, PointSet s);
PointSet direct_image(const PointFunction& f, PointSet s);

// Every topology on `points` points, ordered by sorted open-set list.
std::vector<FiniteSpace> all_spaces(std::size_t points);

// Every function from a `from`-point set to a `to`-point set, in
// lexicographic order of the image vector.
std::vector<PointFunction> all_functions(std::size_t from, std::size_t to);

PointFunction compose(const PointFunction& g, const PointFunction& f);

}  // namespace lgt
