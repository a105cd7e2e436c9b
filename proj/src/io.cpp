#include "lgt/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace lgt {

namespace {

bool is_structural(ErrorKind k) {
  switch (k) {
    case ErrorKind::ParseError:
    case ErrorKind::CycleError:
    case ErrorKind::UnknownObject:
    case ErrorKind::UnknownElement:
    case ErrorKind::DuplicateElement:
    case ErrorKind::InvalidName:
      return true;
    default:
      return false;
  }
}

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

// "a->b", "a ->b", "a-> b" all become {"a", "->", "b"}.
std::vector<std::string> split_arrows(const std::vector<std::string>& tokens) {
  std::vector<std::string> out;
  for (const auto& t : tokens) {
    if (t == "->") {
      out.push_back(t);
      continue;
    }
    std::size_t start = 0;
    std::size_t pos;
    while ((pos = t.find("->", start)) != std::string::npos) {
      if (pos > start) out.push_back(t.substr(start, pos - start));
      out.emplace_back("->");
      start = pos + 2;
    }
    if (start < t.size()) out.push_back(t.substr(start));
  }
  return out;
}

std::optional<ObjectKind> header_kind(const std::string& word) {
  if (word == "lattice") return ObjectKind::Lattice;
  if (word == "topology") return ObjectKind::Topology;
  if (word == "map") return ObjectKind::Map;
  if (word == "partition") return ObjectKind::Partition;
  if (word == "space") return ObjectKind::Space;
  if (word == "function") return ObjectKind::Function;
  if (word == "witness") return ObjectKind::Witness;
  return std::nullopt;
}

std::string join_words(const std::vector<std::string>& words, std::size_t from = 0) {
  std::string out;
  for (std::size_t i = from; i < words.size(); ++i) {
    if (i > from) out += ' ';
    out += words[i];
  }
  return out;
}

}  // namespace

std::string_view object_kind_name(ObjectKind kind) {
  switch (kind) {
    case ObjectKind::Lattice: return "lattice";
    case ObjectKind::Topology: return "topology";
    case ObjectKind::Map: return "map";
    case ObjectKind::Partition: return "partition";
    case ObjectKind::Space: return "space";
    case ObjectKind::Function: return "function";
    case ObjectKind::Witness: return "witness";
  }
  return "object";
}

void Workspace::fail(const Block& b, int line, const std::string& message) const {
  throw Error(ErrorKind::ParseError,
              b.origin + ":" + std::to_string(line) + ": " + message);
}

void Workspace::add_text(std::string_view text, const std::string& origin) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int number = 0;
  std::optional<Block> current;
  std::set<std::pair<ObjectKind, std::string>> names;
  for (const auto& b : blocks_) names.emplace(b.kind, b.name);
  auto flush = [&] {
    if (current) blocks_.push_back(std::move(*current));
    current.reset();
  };
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    auto tokens = split_tokens(raw);
    if (tokens.empty()) continue;
    if (auto kind = header_kind(tokens[0])) {
      flush();
      Block b;
      b.kind = *kind;
      b.origin = origin;
      b.line = number;
      if (tokens.size() < 2) fail(b, number, tokens[0] + " needs a name");
      if (!is_valid_token(tokens[1])) {
        throw Error(ErrorKind::InvalidName, origin + ":" + std::to_string(number) +
                                                ": invalid name '" + tokens[1] + "'");
      }
      b.name = tokens[1];
      b.header.assign(tokens.begin() + 2, tokens.end());
      const auto& h = b.header;
      switch (b.kind) {
        case ObjectKind::Lattice:
        case ObjectKind::Space:
        case ObjectKind::Witness:
          if (!h.empty()) fail(b, number, "unexpected '" + join_words(h) + "'");
          break;
        case ObjectKind::Topology:
        case ObjectKind::Partition:
          if (h.size() != 2 || h[0] != "on") {
            fail(b, number, "expected '" + tokens[0] + " <name> on <lattice>'");
          }
          break;
        case ObjectKind::Map:
        case ObjectKind::Function:
          if (h.size() != 4 || h[0] != "from" || h[2] != "to") {
            fail(b, number, "expected '" + tokens[0] + " <name> from <a> to <b>'");
          }
          break;
      }
      if (!names.emplace(b.kind, b.name).second) {
        throw Error(ErrorKind::DuplicateElement,
                    origin + ":" + std::to_string(number) + ": " +
                        std::string(object_kind_name(b.kind)) + " '" + b.name +
                        "' declared twice");
      }
      current = std::move(b);
      continue;
    }
    if (!current) {
      Block dummy;
      dummy.origin = origin;
      fail(dummy, number, "'" + tokens[0] + "' outside any block");
    }
    const std::string key = tokens[0];
    bool ok = false;
    switch (current->kind) {
      case ObjectKind::Lattice:
        ok = key == "elements" || key == "covers";
        break;
      case ObjectKind::Topology:
        ok = key == "open";
        break;
      case ObjectKind::Partition:
        ok = key == "blocks";
        break;
      case ObjectKind::Space:
        ok = key == "points" || key == "open";
        break;
      case ObjectKind::Map:
      case ObjectKind::Function: {
        tokens = split_arrows(tokens);
        ok = tokens.size() == 3 && tokens[1] == "->";
        if (!ok) fail(*current, number, "expected '<src> -> <dst>'");
        break;
      }
      case ObjectKind::Witness:
        ok = key == "lattices" || key == "topologies" || key == "maps" ||
             key == "partitions" || key == "spaces" || key == "functions" ||
             key == "element" || key == "subset" || key == "param";
        break;
    }
    if (!ok) fail(*current, number, "unexpected '" + key + "' in " +
                                        std::string(object_kind_name(current->kind)));
    current->lines.push_back(std::move(tokens));
    current->line_numbers.push_back(number);
  }
  flush();
  resolved_ = false;
}

void Workspace::add_path(const std::filesystem::path& path) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (fs::is_directory(path, ec)) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) add_path(f);
    return;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::ParseError, "cannot read " + path.string());
  }
  std::ostringstream text;
  text << in.rdbuf();
  add_text(text.str(), path.string());
}

void Workspace::resolve() {
  lattices_.clear();
  topologies_.clear();
  maps_.clear();
  partitions_.clear();
  spaces_.clear();
  functions_.clear();
  witnesses_.clear();
  carriers_.clear();
  endpoints_.clear();
  invalid_.clear();
  order_.clear();
  problems_.clear();
  // Lattices and spaces have no references; everything else may point at
  // them or at each other only through them.
  for (int phase = 0; phase < 2; ++phase) {
    for (const auto& b : blocks_) {
      const bool base = b.kind == ObjectKind::Lattice || b.kind == ObjectKind::Space;
      if (base != (phase == 0)) continue;
      // Witnesses reference maps and topologies; build them last.
      if (b.kind == ObjectKind::Witness) continue;
      build(b);
    }
  }
  for (const auto& b : blocks_) {
    if (b.kind == ObjectKind::Witness) build(b);
  }
  resolved_ = true;
}

void Workspace::build(const Block& b) {
  auto lattice_ref = [&](const std::string& name) -> LatticePtr {
    if (auto it = lattices_.find(name); it != lattices_.end()) return it->second;
    if (invalid_.contains({ObjectKind::Lattice, name})) return nullptr;
    throw Error(ErrorKind::UnknownObject, b.origin + ":" + std::to_string(b.line) +
                                              ": unknown lattice '" + name + "'");
  };
  auto space_ref = [&](const std::string& name) -> const FiniteSpace* {
    if (auto it = spaces_.find(name); it != spaces_.end()) return &it->second;
    if (invalid_.contains({ObjectKind::Space, name})) return nullptr;
    throw Error(ErrorKind::UnknownObject, b.origin + ":" + std::to_string(b.line) +
                                              ": unknown space '" + name + "'");
  };
  auto element = [&](const Lattice& L, const std::string& name, int line) -> Elem {
    if (auto e = L.find(name)) return *e;
    throw Error(ErrorKind::UnknownElement, b.origin + ":" + std::to_string(line) +
                                               ": " + L.name() + " has no element '" +
                                               name + "'");
  };
  auto record = [&](ErrorKind kind, const std::string& message) {
    invalid_[{b.kind, b.name}] = message;
    problems_.push_back(LoadProblem{b.kind, b.name, kind, message});
  };
  auto dependency = [&](const std::string& what) {
    record(ErrorKind::UnknownObject,
           std::string(object_kind_name(b.kind)) + " " + b.name + " depends on invalid " +
               what);
  };
  try {
    switch (b.kind) {
      case ObjectKind::Lattice: {
        std::vector<std::string> elements;
        std::vector<std::pair<std::string, std::string>> covers;
        for (std::size_t i = 0; i < b.lines.size(); ++i) {
          const auto& l = b.lines[i];
          if (l[0] == "elements") {
            elements.insert(elements.end(), l.begin() + 1, l.end());
            continue;
          }
          for (std::size_t k = 1; k < l.size(); ++k) {
            const auto lt = l[k].find('<');
            if (lt == std::string::npos || lt == 0 || lt + 1 == l[k].size() ||
                l[k].find('<', lt + 1) != std::string::npos) {
              fail(b, b.line_numbers[i], "bad cover '" + l[k] + "', expected x<y");
            }
            covers.emplace_back(l[k].substr(0, lt), l[k].substr(lt + 1));
          }
        }
        lattices_.emplace(b.name, share(Lattice::from_covers(b.name, elements, covers)));
        break;
      }
      case ObjectKind::Space: {
        std::vector<std::string> points;
        for (const auto& l : b.lines) {
          if (l[0] == "points") points.insert(points.end(), l.begin() + 1, l.end());
        }
        std::vector<PointSet> opens;
        for (std::size_t i = 0; i < b.lines.size(); ++i) {
          const auto& l = b.lines[i];
          if (l[0] != "open") continue;
          PointSet u = 0;
          for (std::size_t k = 1; k < l.size(); ++k) {
            auto it = std::find(points.begin(), points.end(), l[k]);
            if (it == points.end()) {
              throw Error(ErrorKind::UnknownElement,
                          b.origin + ":" + std::to_string(b.line_numbers[i]) + ": space " +
                              b.name + " has no point '" + l[k] + "'");
            }
            u |= PointSet{1} << (it - points.begin());
          }
          opens.push_back(u);
        }
        spaces_.emplace(b.name, FiniteSpace::make(b.name, points, opens));
        break;
      }
      case ObjectKind::Topology: {
        const std::string& on = b.header[1];
        carriers_[{b.kind, b.name}] = on;
        LatticePtr L = lattice_ref(on);
        if (!L) return dependency("lattice " + on);
        ElementSet opens;
        for (std::size_t i = 0; i < b.lines.size(); ++i) {
          for (std::size_t k = 1; k < b.lines[i].size(); ++k) {
            opens.insert(element(*L, b.lines[i][k], b.line_numbers[i]));
          }
        }
        topologies_.emplace(b.name, Topology::make(L, opens, b.name));
        break;
      }
      case ObjectKind::Partition: {
        const std::string& on = b.header[1];
        carriers_[{b.kind, b.name}] = on;
        LatticePtr L = lattice_ref(on);
        if (!L) return dependency("lattice " + on);
        ElementSet blocks;
        for (std::size_t i = 0; i < b.lines.size(); ++i) {
          for (std::size_t k = 1; k < b.lines[i].size(); ++k) {
            blocks.insert(element(*L, b.lines[i][k], b.line_numbers[i]));
          }
        }
        partitions_.emplace(b.name, Partition::make(L, blocks, b.name));
        break;
      }
      case ObjectKind::Map: {
        const std::string& from = b.header[1];
        const std::string& to = b.header[3];
        endpoints_[b.name] = {from, to};
        LatticePtr A = lattice_ref(from);
        LatticePtr B = lattice_ref(to);
        if (!A) return dependency("lattice " + from);
        if (!B) return dependency("lattice " + to);
        constexpr Elem kUnset = ~Elem{0};
        std::vector<Elem> graph(A->size(), kUnset);
        for (std::size_t i = 0; i < b.lines.size(); ++i) {
          const Elem x = element(*A, b.lines[i][0], b.line_numbers[i]);
          const Elem y = element(*B, b.lines[i][2], b.line_numbers[i]);
          if (graph[x] != kUnset && graph[x] != y) {
            throw Error(ErrorKind::DuplicateElement,
                        b.origin + ":" + std::to_string(b.line_numbers[i]) + ": map " +
                            b.name + " gives '" + b.lines[i][0] + "' two images");
          }
          graph[x] = y;
        }
        for (Elem x = 0; x < graph.size(); ++x) {
          if (graph[x] == kUnset) {
            return record(ErrorKind::NotTotal, "map " + b.name + " has no image for '" +
                                                   A->element_name(x) + "'");
          }
        }
        maps_.emplace(b.name, LatticeMap::make(A, B, std::move(graph), b.name));
        break;
      }
      case ObjectKind::Function: {
        const std::string& from = b.header[1];
        const std::string& to = b.header[3];
        endpoints_[b.name] = {from, to};
        const FiniteSpace* X = space_ref(from);
        const FiniteSpace* Y = space_ref(to);
        if (!X) return dependency("space " + from);
        if (!Y) return dependency("space " + to);
        constexpr std::size_t kUnset = ~std::size_t{0};
        std::vector<std::size_t> image(X->size(), kUnset);
        for (std::size_t i = 0; i < b.lines.size(); ++i) {
          const std::size_t p = X->point(b.lines[i][0]);
          const std::size_t q = Y->point(b.lines[i][2]);
          if (image[p] != kUnset && image[p] != q) {
            throw Error(ErrorKind::DuplicateElement,
                        b.origin + ":" + std::to_string(b.line_numbers[i]) + ": function " +
                            b.name + " gives '" + b.lines[i][0] + "' two images");
          }
          image[p] = q;
        }
        for (std::size_t p = 0; p < image.size(); ++p) {
          if (image[p] == kUnset) {
            return record(ErrorKind::NotTotal, "function " + b.name +
                                                   " has no image for '" +
                                                   X->points()[p] + "'");
          }
        }
        functions_.emplace(b.name, NamedFunction{PointFunction{b.name, image}, from, to});
        break;
      }
      case ObjectKind::Witness: {
        WitnessSpec w;
        w.id = b.name;
        struct InvalidRole {
          std::string what;
        };
        auto need = [&](ObjectKind kind, const std::string& name) {
          if (invalid_.contains({kind, name})) {
            throw InvalidRole{std::string(object_kind_name(kind)) + " " + name};
          }
          if (!has(kind, name)) {
            throw Error(ErrorKind::UnknownObject,
                        b.origin + ":" + std::to_string(b.line) + ": witness " + b.name +
                            " names unknown " + std::string(object_kind_name(kind)) +
                            " '" + name + "'");
          }
        };
        try {
          for (std::size_t i = 0; i < b.lines.size(); ++i) {
            const auto& l = b.lines[i];
            const std::string& key = l[0];
            std::vector<std::string> rest(l.begin() + 1, l.end());
            auto list = [&](ObjectKind kind, std::vector<std::string>& into) {
              for (const auto& n : rest) need(kind, n);
              into.insert(into.end(), rest.begin(), rest.end());
            };
            if (key == "lattices") list(ObjectKind::Lattice, w.lattices);
            if (key == "topologies") list(ObjectKind::Topology, w.topologies);
            if (key == "maps") list(ObjectKind::Map, w.maps);
            if (key == "partitions") list(ObjectKind::Partition, w.partitions);
            if (key == "spaces") list(ObjectKind::Space, w.spaces);
            if (key == "functions") list(ObjectKind::Function, w.functions);
            if (key == "element" || key == "subset") {
              if (rest.empty() || (key == "element" && rest.size() != 2)) {
                fail(b, b.line_numbers[i], "expected '" + key + " <lattice> <element>'");
              }
              need(ObjectKind::Lattice, rest[0]);
              const Lattice& L = *lattices_.at(rest[0]);
              for (std::size_t k = 1; k < rest.size(); ++k) {
                element(L, rest[k], b.line_numbers[i]);
              }
              if (key == "element") {
                w.elements.emplace_back(rest[0], rest[1]);
              } else {
                w.subsets.emplace_back(rest[0],
                                       std::vector<std::string>(rest.begin() + 1, rest.end()));
              }
            }
            if (key == "param") {
              for (const auto& n : rest) {
                long long v = 0;
                auto [p, ec] = std::from_chars(n.data(), n.data() + n.size(), v);
                if (ec != std::errc{} || p != n.data() + n.size()) {
                  fail(b, b.line_numbers[i], "param '" + n + "' is not an integer");
                }
                w.params.push_back(v);
              }
            }
          }
        } catch (const InvalidRole& r) {
          dependency(r.what);
          return;
        }
        witnesses_.emplace(b.name, std::move(w));
        break;
      }
    }
    order_.emplace_back(b.kind, b.name);
  } catch (const Error& e) {
    if (is_structural(e.kind())) throw;
    // what() starts with the kind; problems carry the kind separately.
    std::string message = e.what();
    const std::string prefix = std::string(error_kind_name(e.kind())) + ": ";
    if (message.starts_with(prefix)) message.erase(0, prefix.size());
    record(e.kind(), message);
  }
}

bool Workspace::has(ObjectKind kind, const std::string& name) const {
  switch (kind) {
    case ObjectKind::Lattice: return lattices_.contains(name);
    case ObjectKind::Topology: return topologies_.contains(name);
    case ObjectKind::Map: return maps_.contains(name);
    case ObjectKind::Partition: return partitions_.contains(name);
    case ObjectKind::Space: return spaces_.contains(name);
    case ObjectKind::Function: return functions_.contains(name);
    case ObjectKind::Witness: return witnesses_.contains(name);
  }
  return false;
}

namespace {

template <class Map>
const auto& lookup(const Map& m, const std::string& name, ObjectKind kind,
                   const std::map<std::pair<ObjectKind, std::string>, std::string>& invalid) {
  auto it = m.find(name);
  if (it != m.end()) return it->second;
  if (auto bad = invalid.find({kind, name}); bad != invalid.end()) {
    throw Error(ErrorKind::UnknownObject, std::string(object_kind_name(kind)) + " '" +
                                              name + "' is invalid: " + bad->second);
  }
  throw Error(ErrorKind::UnknownObject,
              "unknown " + std::string(object_kind_name(kind)) + " '" + name + "'");
}

}  // namespace

LatticePtr Workspace::lattice(const std::string& name) const {
  return lookup(lattices_, name, ObjectKind::Lattice, invalid_);
}
const Topology& Workspace::topology(const std::string& name) const {
  return lookup(topologies_, name, ObjectKind::Topology, invalid_);
}
const LatticeMap& Workspace::map(const std::string& name) const {
  return lookup(maps_, name, ObjectKind::Map, invalid_);
}
const Partition& Workspace::partition(const std::string& name) const {
  return lookup(partitions_, name, ObjectKind::Partition, invalid_);
}
const FiniteSpace& Workspace::space(const std::string& name) const {
  return lookup(spaces_, name, ObjectKind::Space, invalid_);
}
const NamedFunction& Workspace::function(const std::string& name) const {
  return lookup(functions_, name, ObjectKind::Function, invalid_);
}
const WitnessSpec& Workspace::witness(const std::string& id) const {
  return lookup(witnesses_, id, ObjectKind::Witness, invalid_);
}

const std::string& Workspace::carrier_name(ObjectKind kind, const std::string& name) const {
  auto it = carriers_.find({kind, name});
  if (it == carriers_.end()) {
    throw Error(ErrorKind::UnknownObject,
                "unknown " + std::string(object_kind_name(kind)) + " '" + name + "'");
  }
  return it->second;
}

std::pair<std::string, std::string> Workspace::map_endpoints(const std::string& name) const {
  auto it = endpoints_.find(name);
  if (it == endpoints_.end()) {
    throw Error(ErrorKind::UnknownObject, "unknown map '" + name + "'");
  }
  return it->second;
}

std::string write_lattice(const Lattice& lattice, std::string_view name) {
  std::string out = "lattice " + std::string(name.empty() ? lattice.name() : name) + "\n";
  out += "elements";
  for (const auto& e : lattice.element_names()) out += " " + e;
  out += "\ncovers";
  for (auto [x, y] : lattice.covers()) {
    out += " " + lattice.element_name(x) + "<" + lattice.element_name(y);
  }
  out += "\n";
  return out;
}

std::string write_topology(const Topology& t, std::string_view name,
                           std::string_view lattice_name) {
  std::string out = "topology " + std::string(name.empty() ? t.name() : name) + " on " +
                    std::string(lattice_name.empty() ? t.carrier().name() : lattice_name) +
                    "\nopen";
  for (Elem e : t.opens()) out += " " + t.carrier().element_name(e);
  out += "\n";
  return out;
}

std::string write_map(const LatticeMap& m, std::string_view name,
                      std::string_view source_name, std::string_view target_name) {
  std::string out =
      "map " + std::string(name.empty() ? m.name() : name) + " from " +
      std::string(source_name.empty() ? m.source().name() : source_name) + " to " +
      std::string(target_name.empty() ? m.target().name() : target_name) + "\n";
  for (Elem x = 0; x < m.source().size(); ++x) {
    out += m.source().element_name(x) + " -> " + m.target().element_name(m(x)) + "\n";
  }
  return out;
}

std::string write_partition(const Partition& d, std::string_view name,
                            std::string_view lattice_name) {
  std::string out =
      "partition " + std::string(name.empty() ? d.name() : name) + " on " +
      std::string(lattice_name.empty() ? d.carrier().name() : lattice_name) + "\nblocks";
  for (Elem b : d.blocks()) out += " " + d.carrier().element_name(b);
  out += "\n";
  return out;
}

std::string write_space(const FiniteSpace& x, std::string_view name) {
  std::string out = "space " + std::string(name.empty() ? x.name() : name) + "\npoints";
  for (const auto& p : x.points()) out += " " + p;
  out += "\n";
  for (PointSet u : x.opens()) {
    if (u == 0 || u == x.everything()) continue;
    out += "open";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if ((u >> i) & 1U) out += " " + x.points()[i];
    }
    out += "\n";
  }
  return out;
}

std::string write_function(const PointFunction& f, std::string_view name,
                           const FiniteSpace& from, const FiniteSpace& to) {
  std::string out = "function " + std::string(name.empty() ? f.name : name) + " from " +
                    from.name() + " to " + to.name() + "\n";
  for (std::size_t i = 0; i < f.image.size(); ++i) {
    out += from.points()[i] + " -> " + to.points()[f.image[i]] + "\n";
  }
  return out;
}

std::string write_witness(const WitnessSpec& w) {
  std::string out = "witness " + w.id + "\n";
  auto list = [&](const char* key, const std::vector<std::string>& names) {
    if (names.empty()) return;
    out += key;
    for (const auto& n : names) out += " " + n;
    out += "\n";
  };
  list("lattices", w.lattices);
  list("topologies", w.topologies);
  list("maps", w.maps);
  list("partitions", w.partitions);
  list("spaces", w.spaces);
  list("functions", w.functions);
  for (const auto& [L, e] : w.elements) out += "element " + L + " " + e + "\n";
  for (const auto& [L, es] : w.subsets) {
    out += "subset " + L;
    for (const auto& e : es) out += " " + e;
    out += "\n";
  }
  if (!w.params.empty()) {
    out += "param";
    for (long long p : w.params) out += " " + std::to_string(p);
    out += "\n";
  }
  return out;
}

std::filesystem::path write_file(const std::filesystem::path& dir, const std::string& file,
                                 const std::string& text) {
  std::filesystem::create_directories(dir);
  const auto path = dir / file;
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path.string());
  out << text;
  return path;
}

}  // namespace lgt
