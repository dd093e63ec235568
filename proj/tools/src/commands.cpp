#include "commands.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "plh/chain.hpp"
#include "plh/cvgraph.hpp"
#include "plh/error.hpp"
#include "plh/group_file.hpp"
#include "plh/higman.hpp"
#include "plh/ring.hpp"

namespace plh::cli {

namespace {

GroupFile load(const GroupSource& src, const std::string& fallback) {
  if (!src.file.empty()) return load_group(src.file);
  return builtin_group(src.builtin.empty() ? fallback : src.builtin);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  f << text;
}

bool is_five_ring(const GroupFile& g) {
  return g.system == SystemKind::Ring && g.system_names.size() == 5;
}

// Binds rp1..rp5 for a valid five-generator ring, unless those names exist.
struct Augmented {
  GenAssignment env;
  std::vector<std::string> rprimes;
};

Augmented augment(const GroupFile& g) {
  Augmented a{g.env, {}};
  if (!is_five_ring(g)) return a;
  auto ring = validate_ring(ring_maps_of(g), g.system_names);
  if (!std::holds_alternative<RingSystem>(ring)) return a;
  for (int i = 1; i <= 5; ++i) {
    RPrime rp = build_rprime(std::get<RingSystem>(ring), i);
    if (a.env.contains(rp.name)) continue;
    a.env.bind(rp.name, rp.map);
    a.rprimes.push_back(rp.name);
  }
  return a;
}

void chain_suite(const GroupFile& g, CheckReport& report) {
  auto result = chain_of(g);
  if (auto* v = std::get_if<Violation>(&result)) {
    std::string idx;
    for (std::size_t i = 0; i < v->indices.size(); ++i) idx += (i ? "," : "") + std::to_string(v->indices[i]);
    report.add(make_check(v->axiom + "(" + idx + ")", false, v->witness));
    return;
  }
  report.append(std::get<ChainSystem>(result).certificate());
}

void ring_suite(const GroupFile& g, CheckReport& report) {
  const auto maps = ring_maps_of(g);
  const auto axioms = ring_axiom_checks(maps, g.system_names);
  report.append(axioms);
  auto result = validate_ring(maps, g.system_names);
  if (!std::holds_alternative<RingSystem>(result)) return;
  const RingSystem& ring = std::get<RingSystem>(result);
  const auto hyp = check_ring_hypotheses(ring);
  const bool hyp_ok = std::all_of(hyp.begin(), hyp.end(), [](const Check& c) { return c.passed(); });
  if (ring.size() == 5 && hyp_ok) {
    report.append(verify_ar_lemma(ring).checks);
    return;
  }
  report.append(hyp);
  report.append(ring_two_chain_checks(ring));
}

struct CvOutcome {
  bool ran = false;
  std::string verdict;
};

CvOutcome cv_suite(const GroupFile& g, const VerifyOptions& o, CheckReport& report) {
  const Augmented a = augment(g);
  std::vector<std::string> s = g.generators();
  s.insert(s.end(), a.rprimes.begin(), a.rprimes.end());
  const WitnessSet w = o.witness.empty() ? WitnessSet{} : load_witnesses(o.witness);
  const CVReport cv = check_cv_criterion(a.env, s, w, o.k_max);
  report.append(cv.checks);
  return {true, cv.verdict()};
}

}  // namespace

int cmd_build(const BuildOptions& o, std::ostream& out) {
  GroupFile g;
  if (o.kind == "chain") {
    if (o.n < 2) throw Error(ErrorCode::InvalidArgument, "--n must be at least 2");
    g = group_from_chain(make_standard_chain(o.n));
  } else if (o.kind == "ring") {
    if (!o.standard) throw Error(ErrorCode::InvalidArgument, "only 'build ring --standard' is supported");
    const RingSystem ring = make_standard_ring5();
    g = group_from_ring(ring);
    if (!o.witness_out.empty()) write_text(o.witness_out, write_witnesses(standard_cv_witnesses(ring).witnesses), out);
  } else if (o.kind == "kkl") {
    g = group_from_kkl();
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown build kind " + o.kind);
  }
  write_text(o.out, write_group(g), out);
  return kPass;
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const GroupFile g = load(o.group, "ring5");
  CheckReport report;
  CvOutcome cv;
  const bool all = o.suite == "all";
  if (o.suite == "chain" || (all && g.system == SystemKind::Chain)) chain_suite(g, report);
  if (o.suite == "ring" || (all && g.system == SystemKind::Ring)) ring_suite(g, report);
  if (o.suite == "cv" || all) cv = cv_suite(g, o, report);
  if (o.suite != "chain" && o.suite != "ring" && o.suite != "cv" && !all)
    throw Error(ErrorCode::InvalidArgument, "unknown suite " + o.suite);

  const int status = report.exit_status();
  if (o.format == "structured") {
    nlohmann::ordered_json doc;
    doc["suite"] = o.suite;
    doc["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : report.checks())
      doc["checks"].push_back({{"id", c.id}, {"status", std::string(to_string(c.status))}, {"witness", c.witness}});
    if (cv.ran) {
      doc["verdict"] = cv.verdict;
      doc["note"] = CVReport::kCaveat;
    }
    doc["exit"] = status;
    out << doc.dump(2) << "\n";
  } else if (o.format == "text") {
    out << report.text();
    if (cv.ran) out << "VERDICT " << cv.verdict << "\nNOTE " << CVReport::kCaveat << "\n";
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown format " + o.format);
  }
  return status;
}

int cmd_search_higman(const HigmanOptions& o, std::ostream& out) {
  const GroupFile g = load(o.group, "ring5");
  const Augmented a = augment(g);
  const auto cert = search_higman(a.env, g.generators(), o.s1, o.s2, Word::parse(o.g), o.max_len);
  if (!cert) {
    out << "NOTFOUND max-len " << o.max_len << "\n";
    return kNotFound;
  }
  out << cert->str() << "\n";
  return kPass;
}

int cmd_check_higman(const CheckHigmanOptions& o, std::ostream& out) {
  const GroupFile g = load(o.group, "ring5");
  const Augmented a = augment(g);
  const HigmanCertificate cert = HigmanCertificate::parse(o.cert);
  const HigmanResult r = verify_higman(a.env, cert);
  CheckReport report;
  report.add(make_check("HIGMAN", r.ok, r.detail + (r.witness ? " common point " + r.witness->str() : "")));
  out << report.text();
  return r.ok ? kPass : kFail;
}

int cmd_search_move(const MoveOptions& o, std::ostream& out) {
  const GroupFile g = load(o.group, "ring5");
  const Augmented a = augment(g);
  std::vector<ClosedPiece> k;
  for (std::size_t pos = o.k.find('['); pos != std::string::npos; pos = o.k.find('[', pos + 1)) {
    const std::size_t close = o.k.find(']', pos);
    if (close == std::string::npos) throw Error(ErrorCode::ParseError, "unterminated piece in " + o.k);
    k.push_back(parse_closed_piece(o.k.substr(pos, close - pos + 1)));
  }
  if (k.empty()) throw Error(ErrorCode::ParseError, "no closed piece in '" + o.k + "'");
  const Interval j = parse_open_interval(o.j);
  const auto moved = co_move(a.env, g.generators(), k, j, o.max_len, o.commutator);
  if (!moved) {
    out << "NOTFOUND max-len " << o.max_len << "\n";
    return kNotFound;
  }
  out << "MOVE " << moved->word.str();
  for (const auto& piece : k)
    out << " [" << a.env.apply(moved->word, piece.lo) << "," << a.env.apply(moved->word, piece.hi) << "]";
  out << "\n";
  return kPass;
}

int cmd_orbit(const OrbitOptions& o, std::ostream& out) {
  const GroupFile g = load(o.group, "kkl");
  const Augmented a = augment(g);
  const std::vector<std::string> gens = o.gens.empty() ? g.generators() : o.gens;
  const ProbeReport r = minimality_probe(a.env, gens, Rat::parse(o.seed), parse_closed_piece(o.window),
                                         Rat::parse(o.eps), o.depth);
  std::ostringstream csv;
  csv << "depth,points,coverageNum,coverageDen\n";
  for (const auto& row : r.rows) csv << row.depth << "," << row.points << "," << row.covered << "," << row.cells << "\n";
  write_text(o.out, csv.str(), out);
  return r.verified ? kPass : kFail;
}

int cmd_plotdata(const PlotOptions& o, std::ostream& out) {
  const GroupFile g = load(o.group, "ring5");
  const Augmented a = augment(g);
  std::vector<std::string> names = g.generators();
  if (o.rprime) {
    if (a.rprimes.empty()) throw Error(ErrorCode::InvalidArgument, "--rprime needs a valid five-generator ring");
    names.insert(names.end(), a.rprimes.begin(), a.rprimes.end());
  }
  std::ostringstream text;
  for (const auto& name : names) {
    const PointSet s = support(a.env.at(name));
    if (const auto* line = std::get_if<SupportSet>(&s)) {
      for (const auto& piece : line->intervals()) text << "ARC " << name << " " << piece.lo << " " << piece.hi << "\n";
    } else {
      const ArcSet& arcs = std::get<ArcSet>(s);
      if (arcs.is_full()) text << "ARC " << name << " 0 " << arcs.modulus() << " mod " << arcs.modulus() << "\n";
      for (const auto& arc : arcs.arcs())
        text << "ARC " << name << " " << arc.start << " " << arc.end << " mod " << arcs.modulus() << "\n";
    }
  }
  write_text(o.out, text.str(), out);
  return kPass;
}

}  // namespace plh::cli
