#include "lgt/cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <sstream>
#include <thread>

#include "lgt/constructions.hpp"
#include "lgt/error.hpp"
#include "lgt/io.hpp"
#include "lgt/verify.hpp"

namespace lgt {

namespace {

const char* b(bool v) { return v ? "true" : "false"; }

Workspace load(const std::vector<std::string>& paths) {
  Workspace w;
  for (const auto& p : paths) w.add_path(p);
  w.resolve();
  return w;
}

// Problems that make the objects a command asks for unusable surface as
// UnknownObject from the lookups; print them first so the cause is visible.
void report_problems(const Workspace& w, std::ostream& err) {
  for (const auto& p : w.problems()) {
    err << "note: " << object_kind_name(p.kind) << ' ' << p.name << " is invalid: "
        << error_kind_name(p.error) << ": " << p.message << '\n';
  }
}

int cmd_check(const std::vector<std::string>& paths, std::ostream& out) {
  const Workspace w = load(paths);
  bool ok = w.problems().empty();
  for (const auto& [kind, name] : w.objects()) {
    std::string line = std::string("OK ") + std::string(object_kind_name(kind)) + ' ' + name;
    if (kind == ObjectKind::Lattice) {
      const Lattice& L = *w.lattice(name);
      const FrameCertificate c = is_frame(L);
      if (!c.is_frame) {
        const auto [x, y, z] = *c.witness;
        out << "INVALID lattice " << name << " NotAFrame: " << L.element_name(x)
            << " meet (" << L.element_name(y) << " join " << L.element_name(z)
            << ") is not distributed\n";
        ok = false;
        continue;
      }
    }
    if (kind == ObjectKind::Map) {
      const LatticeMap& m = w.map(name);
      const PreservationReport r = is_join_preserving(m);
      if (!r.holds) {
        out << "INVALID map " << name << " NotJoinPreserving: ";
        if (r.bound) {
          out << "bottom '" << m.source().element_name(*r.bound) << "' not sent to bottom\n";
        } else {
          out << "join of '" << m.source().element_name(r.pair->first) << "' and '"
              << m.source().element_name(r.pair->second) << "' not preserved\n";
        }
        ok = false;
        continue;
      }
    }
    out << line << '\n';
  }
  for (const auto& p : w.problems()) {
    out << "INVALID " << object_kind_name(p.kind) << ' ' << p.name << ' '
        << error_kind_name(p.error) << ": " << p.message << '\n';
  }
  return ok ? kExitOk : kExitFailure;
}

int cmd_classify(const Workspace& w, const std::string& map, const std::string& t1,
                 const std::string& t2, std::ostream& out) {
  const LatticeMap& m = w.map(map);
  const Topology& a = w.topology(t1);
  const Topology& c = w.topology(t2);
  const MapClassification k = classify(m, a, c);
  out << "CLASSIFY " << map << " olg=" << b(k.olg) << " clg=" << b(k.clg) << " lg=" << b(k.lg)
      << " open=" << b(k.open_map) << " closed=" << b(k.closed_map) << '\n';
  const Lattice& S = m.source();
  const Lattice& T = m.target();
  if (k.olg_witness) {
    out << "WITNESS olg open=" << T.element_name(*k.olg_witness)
        << " adjoint=" << S.element_name(m.right_adjoint_at(*k.olg_witness)) << '\n';
  }
  if (k.clg_witness) {
    out << "WITNESS clg closed=" << T.element_name(*k.clg_witness)
        << " adjoint=" << S.element_name(m.right_adjoint_at(*k.clg_witness)) << '\n';
  }
  if (k.open_witness) {
    out << "WITNESS open open=" << S.element_name(*k.open_witness)
        << " image=" << T.element_name(m(*k.open_witness)) << '\n';
  }
  if (k.closed_witness) {
    const Elem p = S.pseudocomplement(*k.closed_witness);
    out << "WITNESS closed open=" << S.element_name(*k.closed_witness)
        << " pseudocomplement=" << S.element_name(p) << " image=" << T.element_name(m(p))
        << '\n';
  }
  return kExitOk;
}

int cmd_operator(const Workspace& w, bool interior, const std::string& topology,
                 const std::vector<std::string>& elements, std::ostream& out) {
  const Topology& t = w.topology(topology);
  const Lattice& L = t.carrier();
  std::vector<Elem> es;
  if (elements.empty()) {
    for (Elem e = 0; e < L.size(); ++e) es.push_back(e);
  } else {
    for (const auto& n : elements) es.push_back(L.element(n));
  }
  for (Elem e : es) {
    out << (interior ? "INTERIOR " : "CLOSURE ") << topology << ' ' << L.element_name(e)
        << " = " << L.element_name(interior ? t.interior(e) : t.closure(e)) << '\n';
  }
  return kExitOk;
}

struct Construct {
  std::string kind;
  std::vector<std::string> args;
  std::string name;
  std::string out_dir;
};

void require_args(const Construct& c, std::size_t min, bool exact, const char* usage) {
  if (c.args.size() < min || (exact && c.args.size() != min)) {
    throw CLI::ValidationError("construct " + c.kind, std::string("expects ") + usage);
  }
}

int cmd_construct(const Workspace& w, const Construct& c, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> files;  // (file stem, text)
  const std::string& n = c.name;
  auto add = [&](std::string stem, std::string text) {
    files.emplace_back(std::move(stem), std::move(text));
  };
  if (c.kind == "product") {
    require_args(c, 2, false, "<topology> <topology>...");
    std::vector<Topology> factors;
    for (const auto& a : c.args) factors.push_back(w.topology(a));
    const ProductSpace p = product_space(factors, n);
    add(n, write_lattice(*p.carrier, n));
    add("tau_" + n, write_topology(p.topology, "tau_" + n, n));
    for (std::size_t i = 0; i < p.projections.size(); ++i) {
      const std::string pi = "pi" + std::to_string(i + 1) + "_" + n;
      add(pi, write_map(p.projections[i], pi, n,
                        w.carrier_name(ObjectKind::Topology, c.args[i])));
    }
  } else if (c.kind == "weak") {
    if (c.args.size() < 3 || c.args.size() % 2 == 0) {
      throw CLI::ValidationError("construct weak", "expects <lattice> (<map> <topology>)...");
    }
    const LatticePtr carrier = w.lattice(c.args[0]);
    std::vector<MapIntoSpace> family;
    for (std::size_t i = 1; i < c.args.size(); i += 2) {
      family.push_back(MapIntoSpace{w.map(c.args[i]), w.topology(c.args[i + 1])});
    }
    add(n, write_topology(weak_topology(carrier, family, n), n, c.args[0]));
  } else if (c.kind == "quotient") {
    require_args(c, 2, true, "<map> <topology>");
    const QuotientSpace q = quotient_topology(w.map(c.args[0]), w.topology(c.args[1]));
    add(n, write_topology(q.topology, n, w.map_endpoints(c.args[0]).second));
  } else if (c.kind == "decompose") {
    require_args(c, 2, true, "<topology> <partition>");
    const DecompositionSpace d =
        decomposition_space(w.topology(c.args[0]), w.partition(c.args[1]));
    add(n, write_lattice(*d.frame, n));
    add("tau_" + n, write_topology(d.topology, "tau_" + n, n));
    add("P_" + n, write_map(d.p, "P_" + n, w.carrier_name(ObjectKind::Topology, c.args[0]), n));
  } else if (c.kind == "mho") {
    require_args(c, 1, true, "<space>");
    const MhoSpace m = mho_space(w.space(c.args[0]));
    add(n, write_lattice(*m.frame, n));
    add("tau_" + n, write_topology(m.topology, "tau_" + n, n));
  } else if (c.kind == "subspace") {
    require_args(c, 2, true, "<topology> <element>");
    const Topology& t = w.topology(c.args[0]);
    const Topology s = subspace(t, t.carrier().element(c.args[1]));
    add(n, write_lattice(s.carrier(), n));
    add("tau_" + n, write_topology(s, "tau_" + n, n));
  } else {
    throw CLI::ValidationError("construct", "unknown kind '" + c.kind +
                                                "', expected product|weak|quotient|"
                                                "decompose|mho|subspace");
  }
  for (const auto& [stem, text] : files) {
    if (c.out_dir.empty()) {
      out << text << '\n';
    } else {
      out << "WROTE " << write_file(c.out_dir, stem + ".lgt", text).string() << '\n';
    }
  }
  return kExitOk;
}

struct VerifyArgs {
  std::size_t max_size = 4;
  std::vector<std::string> only;
  std::string goal;
  std::size_t jobs = 0;
  std::string out_dir = "lgt-witnesses";
  std::string format = "human";
};

int run_search(const std::string& goal, const VerifyArgs& v, std::ostream& out) {
  const SearchResult r = search_counterexample(goal, v.max_size);
  const bool machine = v.format == "machine";
  if (!r.witness) {
    out << (machine ? "SEARCH " + goal + " NONE instances=" + std::to_string(r.instances)
                    : goal + ": no witness within size " + std::to_string(v.max_size) +
                          " (" + std::to_string(r.instances) + " instances)")
        << '\n';
    return kExitFailure;
  }
  const auto path = write_file(v.out_dir, goal + ".witness", r.witness_text);
  if (machine) {
    out << "SEARCH " << goal << " FOUND file=" << path.string()
        << " instances=" << r.instances << '\n';
  } else {
    out << goal << ": witness after " << r.instances << " instances, written to "
        << path.string() << "\n\n"
        << r.witness_text;
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& v, std::ostream& out) {
  if (!v.goal.empty()) return run_search(v.goal, v, out);
  SuiteOptions o;
  o.max_size = v.max_size;
  o.only = v.only;
  o.jobs = v.jobs == 0 ? std::max(1U, std::thread::hardware_concurrency()) : v.jobs;
  o.out_dir = v.out_dir;
  const auto reports = run_suite(o);
  const bool machine = v.format == "machine";
  bool ok = true;
  for (const auto& r : reports) {
    out << format_report(r, machine) << '\n';
    ok = ok && r.met();
  }
  out << format_summary(reports, machine) << '\n';
  return ok ? kExitOk : kExitFailure;
}

bool is_usage_kind(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::CycleError:
    case ErrorKind::UnknownObject:
    case ErrorKind::UnknownElement:
    case ErrorKind::DuplicateElement:
    case ErrorKind::InvalidName:
    case ErrorKind::UnknownTheoremId:
    case ErrorKind::UnknownGoal:
    case ErrorKind::SizeLimitExceeded:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lattice generalization topological spaces: checks, classifications, "
               "constructions and the theorem suite.",
               "lgt"};
  app.require_subcommand(1);
  std::vector<std::string> workspace;
  auto add_workspace = [&](CLI::App* sub) {
    sub->add_option("-w,--workspace", workspace, "Files or directories to load")
        ->required()
        ->check(CLI::ExistingPath);
  };

  std::vector<std::string> check_paths;
  auto* check = app.add_subcommand("check", "Validate every object in the given files");
  check->add_option("paths", check_paths, "Files or directories")
      ->required()
      ->check(CLI::ExistingPath);

  std::string map;
  std::string t1;
  std::string t2;
  auto* classify_cmd = app.add_subcommand("classify", "Classify a map between two spaces");
  classify_cmd->add_option("map", map)->required();
  classify_cmd->add_option("source_topology", t1)->required();
  classify_cmd->add_option("target_topology", t2)->required();
  add_workspace(classify_cmd);

  std::string topology;
  std::vector<std::string> elements;
  auto* interior = app.add_subcommand("interior", "Interior of elements (all by default)");
  auto* closure = app.add_subcommand("closure", "Closure of elements (all by default)");
  for (auto* sub : {interior, closure}) {
    sub->add_option("topology", topology)->required();
    sub->add_option("elements", elements);
    add_workspace(sub);
  }

  Construct construct;
  construct.name = "C";
  auto* construct_cmd = app.add_subcommand("construct", "Build a derived space");
  construct_cmd
      ->add_option("kind", construct.kind, "product|weak|quotient|decompose|mho|subspace")
      ->required()
      ->check(CLI::IsMember({"product", "weak", "quotient", "decompose", "mho", "subspace"}));
  construct_cmd->add_option("args", construct.args, "Object names")->required();
  construct_cmd->add_option("--name", construct.name, "Name of the constructed object");
  construct_cmd->add_option("--out-dir", construct.out_dir,
                            "Write one file per object here instead of to stdout");
  add_workspace(construct_cmd);

  VerifyArgs verify_args;
  auto* verify = app.add_subcommand("verify", "Run the theorem suite or a search goal");
  auto* search = app.add_subcommand("search", "Search for a counterexample");
  for (auto* sub : {verify, search}) {
    sub->add_option("--max-size", verify_args.max_size, "Largest frame size")
        ->check(CLI::Range(std::size_t{1}, kMaxVerifySize));
    sub->add_option("--out-dir", verify_args.out_dir, "Directory for witness files");
    sub->add_option("--format", verify_args.format)
        ->check(CLI::IsMember({"human", "machine"}));
  }
  verify->add_option("--only", verify_args.only, "Theorem ids")->delimiter(',');
  verify->add_option("--goal", verify_args.goal, "Search goal instead of the suite");
  verify->add_option("--jobs", verify_args.jobs, "Worker threads (0: one per core)");
  search->add_option("goal", verify_args.goal)->required();
  bool list = false;
  verify->add_flag("--list", list, "List theorem ids and goals");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return cmd_check(check_paths, out);
    if (*verify && list) {
      for (const auto& c : theorem_registry()) {
        out << c.id << ' ' << expectation_name(c.expectation) << '\n';
      }
      for (const auto& g : search_goals()) out << "goal " << g << '\n';
      return kExitOk;
    }
    if (*verify) return cmd_verify(verify_args, out);
    if (*search) return run_search(verify_args.goal, verify_args, out);
    const Workspace w = load(workspace);
    report_problems(w, err);
    if (*classify_cmd) return cmd_classify(w, map, t1, t2, out);
    if (*interior) return cmd_operator(w, true, topology, elements, out);
    if (*closure) return cmd_operator(w, false, topology, elements, out);
    if (*construct_cmd) return cmd_construct(w, construct, out);
  } catch (const CLI::Error& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_usage_kind(e.kind()) ? kExitUsage : kExitFailure;
  }
  return kExitUsage;
}

}  // namespace lgt
