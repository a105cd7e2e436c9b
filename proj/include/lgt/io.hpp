#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgt/constructions.hpp"
#include "lgt/error.hpp"
#include "lgt/lattice.hpp"
#include "lgt/maps.hpp"
#include "lgt/space.hpp"
#include "lgt/topology.hpp"

namespace lgt {

enum class ObjectKind { Lattice, Topology, Map, Partition, Space, Function, Witness };

std::string_view object_kind_name(ObjectKind kind);

// Roles of a replayable instance, by object name.
struct WitnessSpec {
  std::string id;
  std::vector<std::string> lattices;
  std::vector<std::string> topologies;
  std::vector<std::string> maps;
  std::vector<std::string> partitions;
  std::vector<std::string> spaces;
  std::vector<std::string> functions;
  std::vector<std::pair<std::string, std::string>> elements;  // (lattice, element)
  std::vector<std::pair<std::string, std::vector<std::string>>> subsets;
  std::vector<long long> params;
};

struct NamedFunction {
  PointFunction function;
  std::string from;
  std::string to;
};

struct LoadProblem {
  ObjectKind kind;
  std::string name;
  ErrorKind error;
  std::string message;
};

// Named objects loaded from text. Loading is two-phase: add_text/add_path
// only parse, resolve() builds the objects so references may point across
// files in any order.
//
// Structural faults (syntax, unknown names, cycles, malformed element lists)
// throw. Semantic faults (not a lattice, not a topology, a partial map, ...)
// are recorded in problems() and the object is left out.
class Workspace {
 public:
  // Throws ParseError.
  void add_text(std::string_view text, const std::string& origin);
  // A file, or every regular file of a directory in name order.
  void add_path(const std::filesystem::path& path);
  void resolve();

  LatticePtr lattice(const std::string& name) const;
  const Topology& topology(const std::string& name) const;
  const LatticeMap& map(const std::string& name) const;
  const Partition& partition(const std::string& name) const;
  const FiniteSpace& space(const std::string& name) const;
  const NamedFunction& function(const std::string& name) const;
  const WitnessSpec& witness(const std::string& id) const;

  bool has(ObjectKind kind, const std::string& name) const;

  // Successfully built objects, in the order they were declared.
  const std::vector<std::pair<ObjectKind, std::string>>& objects() const { return order_; }
  const std::vector<LoadProblem>& problems() const { return problems_; }

  // Lattice name of a topology, map endpoint, or partition carrier as
  // written in the source text.
  const std::string& carrier_name(ObjectKind kind, const std::string& name) const;
  std::pair<std::string, std::string> map_endpoints(const std::string& name) const;

 private:
  struct Block {
    ObjectKind kind;
    std::string name;
    std::vector<std::string> header;  // tokens after the name
    std::vector<std::vector<std::string>> lines;
    std::vector<int> line_numbers;
    std::string origin;
    int line = 0;
  };

  void build(const Block& b);
  [[noreturn]] void fail(const Block& b, int line, const std::string& message) const;

  std::vector<Block> blocks_;
  bool resolved_ = false;

  std::map<std::string, LatticePtr> lattices_;
  std::map<std::string, Topology> topologies_;
  std::map<std::string, LatticeMap> maps_;
  std::map<std::string, Partition> partitions_;
  std::map<std::string, FiniteSpace> spaces_;
  std::map<std::string, NamedFunction> functions_;
  std::map<std::string, WitnessSpec> witnesses_;
  std::map<std::pair<ObjectKind, std::string>, std::string> carriers_;
  std::map<std::string, std::pair<std::string, std::string>> endpoints_;
  std::map<std::pair<ObjectKind, std::string>, std::string> invalid_;

  std::vector<std::pair<ObjectKind, std::string>> order_;
  std::vector<LoadProblem> problems_;
};

// Writers. Output is deterministic: elements in carrier order, one object
// per block, trailing newline. Empty names fall back to the object's own.
std::string write_lattice(const Lattice& lattice, std::string_view name = {});
std::string write_topology(const Topology& t, std::string_view name,
                           std::string_view lattice_name);
std::string write_map(const LatticeMap& m, std::string_view name,
                      std::string_view source_name, std::string_view target_name);
std::string write_partition(const Partition& d, std::string_view name,
                            std::string_view lattice_name);
std::string write_space(const FiniteSpace& x, std::string_view name = {});
std::string write_function(const PointFunction& f, std::string_view name,
                           const FiniteSpace& from, const FiniteSpace& to);
std::string write_witness(const WitnessSpec& w);

// Writes `text` to `dir/file`, creating `dir`. Returns the path written.
std::filesystem::path write_file(const std::filesystem::path& dir,
                                 const std::string& file, const std::string& text);

}  // namespace lgt
