#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lgt/constructions.hpp"
#include "lgt/io.hpp"
#include "lgt/lattice.hpp"
#include "lgt/maps.hpp"
#include "lgt/space.hpp"
#include "lgt/topology.hpp"

namespace lgt {

// Largest frame size the suite enumerates.
inline constexpr std::size_t kMaxVerifySize = 6;

// Every join-preserving map from → to. On a finite distributive source a
// join-preserving map is fixed by its values on the join-irreducibles, and
// any monotone assignment there extends; maps come out sorted by graph.
std::vector<LatticeMap> join_preserving_maps(const LatticePtr& from, const LatticePtr& to);

// Every frame with at most max_size elements, by size and then enumeration
// order, with their topologies and the join-preserving maps between them.
// Tables are built on first use and safe to share between threads.
class Universe {
 public:
  // Throws SizeLimitExceeded above kMaxVerifySize.
  explicit Universe(std::size_t max_size);
  ~Universe();
  Universe(const Universe&) = delete;
  Universe& operator=(const Universe&) = delete;

  std::size_t max_size() const { return max_size_; }
  const std::vector<LatticePtr>& frames() const { return frames_; }
  // Frames with at most n elements: a prefix of frames().
  std::span<const LatticePtr> frames_up_to(std::size_t n) const;

  // Lattices outside the universe are handled too, without caching.
  const std::vector<Topology>& topologies(const LatticePtr& frame) const;
  const std::vector<LatticeMap>& maps(const LatticePtr& from, const LatticePtr& to) const;
  // all_spaces(points), points ≤ 4.
  const std::vector<FiniteSpace>& spaces(std::size_t points) const;

 private:
  struct Tables;
  std::optional<std::size_t> index_of(const Lattice* l) const;

  std::size_t max_size_;
  std::vector<LatticePtr> frames_;
  std::unique_ptr<Tables> tables_;
};

struct SpaceFunction {
  PointFunction function;
  std::size_t from = 0;  // index into Instance::spaces
  std::size_t to = 0;
};

// One point of a theorem's instance family. Objects refer to lattices by
// pointer; the serializer names each distinct carrier once.
struct Instance {
  std::vector<LatticePtr> lattices;
  std::vector<Topology> topologies;
  std::vector<LatticeMap> maps;
  std::vector<Partition> partitions;
  std::vector<FiniteSpace> spaces;
  std::vector<SpaceFunction> functions;
  std::vector<std::pair<std::size_t, Elem>> elements;  // (lattice index, element)
  std::vector<std::pair<std::size_t, ElementSet>> subsets;
  std::vector<long long> params;
};

enum class Expectation { Holds, ExpectCounterexample, Skipped };

std::string_view expectation_name(Expectation e);

// Calls visit on each instance in a fixed order until visit returns false.
using InstanceVisitor = std::function<bool(const Instance&)>;
using InstanceFamily = std::function<void(const Universe&, const InstanceVisitor&)>;
// True when the hypothesis holds and the conclusion fails.
using Violation = std::function<bool(const Universe&, const Instance&)>;

struct TheoremCase {
  std::string id;
  std::string statement;
  Expectation expectation = Expectation::Holds;
  std::string skip_reason;
  InstanceFamily family;
  Violation violates;
};

const std::vector<TheoremCase>& theorem_registry();
// Throws UnknownTheoremId.
const TheoremCase& find_theorem(std::string_view id);

struct VerifyReport {
  std::string id;
  Expectation expectation = Expectation::Holds;
  std::size_t instances = 0;
  std::optional<Instance> witness;
  std::string witness_text;          // serialization, when a witness was found
  std::filesystem::path witness_path;  // set when written to disk
  std::chrono::duration<double> wall{0};

  bool counterexample() const { return witness.has_value(); }
  // PASS for HOLDS without witness, EXPECT_COUNTEREXAMPLE with one, SKIPPED.
  bool met() const;
};

// Checks one theorem; stops at the first violation.
VerifyReport check_theorem(const TheoremCase& c, const Universe& u);

struct SuiteOptions {
  std::size_t max_size = 4;
  std::vector<std::string> only;  // empty: the whole registry
  std::size_t jobs = 1;
  std::optional<std::filesystem::path> out_dir;  // witness files go here
};

// Reports in registry order whatever the job count. Throws UnknownTheoremId,
// SizeLimitExceeded.
std::vector<VerifyReport> run_suite(const SuiteOptions& options);

// Serialization of an instance as a self-contained workspace: every object
// plus a witness block naming their roles.
std::string serialize_instance(const std::string& id, const Instance& instance);
// Rebuilds the instance named by a witness block. Throws UnknownObject.
Instance load_instance(const Workspace& w, const std::string& id);

// Reloads `text` and reevaluates the predicate of theorem `id` on it.
// Throws UnknownTheoremId.
bool replay_witness(const std::string& id, const std::string& text,
                    std::size_t max_size = 4);

// Counterexample searches. Each goal names a negated statement; the result
// is the first instance in enumeration order, or nullopt within the bound.
const std::vector<std::string>& search_goals();
// The case a goal searches with. Throws UnknownGoal.
const TheoremCase& goal_case(std::string_view goal);
struct SearchResult {
  std::string goal;
  std::size_t instances = 0;
  std::optional<Instance> witness;
  std::string witness_text;
};
// Throws UnknownGoal, SizeLimitExceeded.
SearchResult search_counterexample(std::string_view goal, std::size_t max_size);

// Report lines. Machine lines have stable field order.
std::string format_report(const VerifyReport& r, bool machine);
std::string format_summary(const std::vector<VerifyReport>& reports, bool machine);

}  // namespace lgt
