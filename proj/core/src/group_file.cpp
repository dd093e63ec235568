#include "plh/group_file.hpp"

#include <fstream>
#include <sstream>

#include "plh/error.hpp"

namespace plh {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + what);
}

Rat rat_at(const std::string& text, std::size_t line) {
  try {
    return Rat::parse(text);
  } catch (const Error& e) {
    fail(line, e.what());
  }
}

struct Lines {
  std::vector<std::pair<std::size_t, std::string>> items;

  explicit Lines(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::size_t n = 0;
    for (std::string line; std::getline(in, line);) {
      ++n;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      const auto last = line.find_last_not_of(" \t\r");
      items.emplace_back(n, line.substr(first, last - first + 1));
    }
  }
};

void check_name(const std::string& name, std::size_t line) {
  if (name.empty() || name == "1" || name.find_first_of(".*^:=") != std::string::npos)
    fail(line, "invalid name '" + name + "'");
}

}  // namespace

std::vector<std::string> GroupFile::generators() const {
  return system == SystemKind::None ? maps : system_names;
}

GroupFile parse_group(std::string_view text) {
  GroupFile g;
  const Lines lines(text);
  for (std::size_t i = 0; i < lines.items.size(); ++i) {
    const auto& [n, line] = lines.items[i];
    const auto tok = split_ws(line);
    const std::string& head = tok.front();
    if (head == "map") {
      const bool circle = tok.size() == 4 && tok[2] == "circle" && tok[3].rfind("L=", 0) == 0;
      if (!(tok.size() == 3 && tok[2] == "line") && !circle) fail(n, "expected 'map <name> line|circle L=<rat>'");
      const std::string& name = tok[1];
      check_name(name, n);
      if (g.env.contains(name)) fail(n, "duplicate name " + name);
      const Rat modulus = circle ? rat_at(tok[3].substr(2), n) : Rat(0);
      if (circle && modulus.sign() <= 0) fail(n, "modulus must be positive");
      std::vector<Point> bps;
      Rat left(0), right(0), rot(0);
      bool have_tails = false, have_rot = false, closed = false;
      for (++i; i < lines.items.size(); ++i) {
        const auto& [m, body] = lines.items[i];
        const auto t = split_ws(body);
        if (t[0] == "end" && t.size() == 1) {
          closed = true;
          break;
        }
        if (t[0] == "bp" && t.size() == 2 && t[1].find(':') != std::string::npos) {
          const auto colon = t[1].find(':');
          bps.push_back({rat_at(t[1].substr(0, colon), m), rat_at(t[1].substr(colon + 1), m)});
        } else if (t[0] == "tails" && t.size() == 3 && !circle && !have_tails) {
          left = rat_at(t[1], m);
          right = rat_at(t[2], m);
          have_tails = true;
        } else if (t[0] == "rot" && t.size() == 2 && circle && !have_rot) {
          rot = rat_at(t[1], m);
          have_rot = true;
        } else {
          fail(m, "unexpected '" + body + "' in map " + name);
        }
      }
      if (!closed) fail(n, "map " + name + " has no 'end'");
      try {
        if (!circle) {
          g.env.bind(name, LineMap::from_breakpoints(std::move(bps), left, right));
        } else {
          if (have_rot && !bps.empty()) fail(n, "map " + name + " has both breakpoints and 'rot'");
          g.env.bind(name, bps.empty() ? CircleMap::rotation(modulus, rot)
                                       : CircleMap::from_lift_points(modulus, std::move(bps)));
        }
      } catch (const Error& e) {
        if (e.code() == ErrorCode::ParseError) throw;
        fail(n, "map " + name + ": " + e.what());
      }
      g.maps.push_back(name);
    } else if (head == "define") {
      if (tok.size() < 4 || tok[2] != "=") fail(n, "expected 'define <name> = <word>'");
      check_name(tok[1], n);
      if (g.env.contains(tok[1])) fail(n, "duplicate name " + tok[1]);
      const std::string word_text = line.substr(line.find('=') + 1);
      try {
        const Word w = Word::parse(word_text);
        g.env.bind(tok[1], g.env.eval(w));
        g.defines.emplace_back(tok[1], w);
      } catch (const Error& e) {
        fail(n, e.what());
      }
    } else if (head == "chain" || head == "ring") {
      if (g.system != SystemKind::None) fail(n, "more than one system declaration");
      g.system = head == "chain" ? SystemKind::Chain : SystemKind::Ring;
      g.system_names.assign(tok.begin() + 1, tok.end());
      for (const auto& name : g.system_names)
        if (!g.env.contains(name)) fail(n, "unbound generator " + name);
      if (g.system_names.size() < (head == "chain" ? 2u : 3u)) fail(n, "too few generators for a " + head);
    } else {
      fail(n, "unknown directive '" + head + "'");
    }
  }
  return g;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

GroupFile load_group(const std::filesystem::path& path) { return parse_group(read_file(path)); }

std::string write_map(const std::string& name, const PLMap& map) {
  std::ostringstream out;
  if (const auto* f = std::get_if<LineMap>(&map)) {
    out << "map " << name << " line\n";
    for (const auto& p : f->breakpoints()) out << "bp " << p.x << ":" << p.y << "\n";
    out << "tails " << f->left_tail() << " " << f->right_tail() << "\n";
  } else {
    const auto& c = std::get<CircleMap>(map);
    out << "map " << name << " circle L=" << c.modulus() << "\n";
    for (const auto& p : c.breakpoints()) out << "bp " << p.x << ":" << p.y << "\n";
    if (c.breakpoints().empty()) out << "rot " << c.offset() << "\n";
  }
  out << "end\n";
  return out.str();
}

std::string write_group(const GroupFile& group) {
  std::string out;
  for (const auto& name : group.maps) out += write_map(name, group.env.at(name));
  for (const auto& [name, w] : group.defines) out += "define " + name + " = " + w.str() + "\n";
  if (group.system != SystemKind::None) {
    out += group.system == SystemKind::Chain ? "chain" : "ring";
    for (const auto& name : group.system_names) out += " " + name;
    out += "\n";
  }
  return out;
}

GroupFile group_from_chain(const ChainSystem& chain) {
  GroupFile g;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    g.env.bind(chain.names()[i], chain.maps()[i]);
    g.maps.push_back(chain.names()[i]);
  }
  g.system = SystemKind::Chain;
  g.system_names = chain.names();
  return g;
}

GroupFile group_from_ring(const RingSystem& ring) {
  GroupFile g;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    g.env.bind(ring.names()[i], ring.maps()[i]);
    g.maps.push_back(ring.names()[i]);
  }
  g.system = SystemKind::Ring;
  g.system_names = ring.names();
  return g;
}

GroupFile group_from_kkl() {
  const KklGenerators k = make_kkl_generators();
  GroupFile g;
  g.env.bind("a", k.a);
  g.env.bind("b", k.b);
  g.maps = {"a", "b"};
  return g;
}

GroupFile builtin_group(const std::string& name) {
  if (name == "ring5") return group_from_ring(make_standard_ring5());
  if (name == "kkl") return group_from_kkl();
  if (name.rfind("chain", 0) == 0 && name.size() > 5) {
    try {
      return group_from_chain(make_standard_chain(std::stoi(name.substr(5))));
    } catch (const std::logic_error&) {
    }
  }
  throw Error(ErrorCode::InvalidArgument, "unknown builtin group '" + name + "' (ring5, chain<n>, kkl)");
}

std::variant<ChainSystem, Violation> chain_of(const GroupFile& group) {
  if (group.system != SystemKind::Chain) throw Error(ErrorCode::InvalidArgument, "group declares no chain");
  std::vector<LineMap> maps;
  for (const auto& name : group.system_names) {
    const auto* f = std::get_if<LineMap>(&group.env.at(name));
    if (!f) throw Error(ErrorCode::KindMismatch, name + " is not a line map");
    maps.push_back(*f);
  }
  return validate_chain(maps, group.system_names);
}

std::vector<CircleMap> ring_maps_of(const GroupFile& group) {
  if (group.system != SystemKind::Ring) throw Error(ErrorCode::InvalidArgument, "group declares no ring");
  std::vector<CircleMap> maps;
  for (const auto& name : group.system_names) {
    const auto* f = std::get_if<CircleMap>(&group.env.at(name));
    if (!f) throw Error(ErrorCode::KindMismatch, name + " is not a circle map");
    maps.push_back(*f);
  }
  return maps;
}

WitnessSet parse_witnesses(std::string_view text) {
  WitnessSet w;
  const Lines lines(text);
  for (const auto& [n, line] : lines.items) {
    const auto tok = split_ws(line);
    try {
      if (tok[0] == "edge") {
        if (tok.size() != 4) fail(n, "expected 'edge <si> <sj> <word>'");
        w.edges.push_back({tok[1], tok[2], Word::parse(tok[3])});
      } else if (tok[0] == "class" || tok[0] == "dense") {
        const auto colon = line.find(':');
        if (colon == std::string::npos) fail(n, "missing ':'");
        const auto head = split_ws(line.substr(0, colon));
        if (head.size() != 2) fail(n, "expected '" + tok[0] + " <name>: ...'");
        const auto rest = split_ws(line.substr(colon + 1));
        if (tok[0] == "dense") {
          if (w.dense.count(head[1])) fail(n, "duplicate dense subset for " + head[1]);
          w.dense[head[1]] = rest;
          continue;
        }
        ClassDecl c{head[1], {}, {}};
        bool after_via = false;
        for (const auto& t : rest) {
          if (t == "via" && !after_via) {
            after_via = true;
          } else if (after_via) {
            c.via.push_back(Word::parse(t));
          } else {
            c.members.push_back(t);
          }
        }
        if (c.members.empty()) fail(n, "class " + c.name + " has no members");
        w.classes.push_back(std::move(c));
      } else {
        fail(n, "unknown directive '" + tok[0] + "'");
      }
    } catch (const Error& e) {
      if (std::string(e.what()).rfind("ParseError: line ", 0) == 0) throw;
      fail(n, e.what());
    }
  }
  return w;
}

WitnessSet load_witnesses(const std::filesystem::path& path) { return parse_witnesses(read_file(path)); }

std::string write_witnesses(const WitnessSet& w) {
  std::string out;
  for (const auto& e : w.edges) out += "edge " + e.si + " " + e.sj + " " + e.word.str() + "\n";
  for (const auto& c : w.classes) {
    out += "class " + c.name + ":";
    for (const auto& m : c.members) out += " " + m;
    if (!c.via.empty()) {
      out += " via";
      for (const auto& v : c.via) out += " " + v.str();
    }
    out += "\n";
  }
  for (const auto& [name, members] : w.dense) {
    out += "dense " + name + ":";
    for (const auto& m : members) out += " " + m;
    out += "\n";
  }
  return out;
}

}  // namespace plh
