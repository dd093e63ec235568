#include "plh/ring.hpp"

#include <algorithm>

#include "plh/error.hpp"

namespace plh {

std::size_t RingSystem::wrap(long i) const {
  const long m = static_cast<long>(maps_.size());
  return static_cast<std::size_t>(((i % m) + m) % m);
}

GenAssignment RingSystem::assignment() const {
  GenAssignment env;
  for (std::size_t i = 0; i < maps_.size(); ++i) env.bind(names_[i], maps_[i]);
  return env;
}

bool RingCertificate::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

namespace {

std::string pair_id(const char* name, std::size_t i, std::size_t j) {
  return std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string index_id(const char* name, long i) { return std::string(name) + "(" + std::to_string(i) + ")"; }

std::vector<std::string> default_names(std::size_t m) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < m; ++i) names.push_back("r" + std::to_string(i + 1));
  return names;
}

void check_inputs(const std::vector<CircleMap>& maps, const std::vector<std::string>& names) {
  if (maps.size() < 3) throw Error(ErrorCode::InvalidArgument, "a ring needs at least three maps");
  if (names.size() != maps.size()) throw Error(ErrorCode::InvalidArgument, "one name per map required");
  for (const auto& f : maps)
    if (f.modulus() != maps.front().modulus())
      throw Error(ErrorCode::ModulusMismatch,
                  "moduli " + maps.front().modulus().str() + " and " + f.modulus().str() + " differ");
}

// Single-arc support, or nullopt when the map is the identity.
std::optional<ArcSet> arc_support(const CircleMap& f, const std::string& name) {
  ArcSet s = support(f);
  if (s.empty()) return std::nullopt;
  if (s.is_full() || s.size() != 1)
    throw Error(ErrorCode::NonArcSupport, "support of " + name + " is " + s.str() + ", not a single open arc");
  return s;
}

std::size_t cyclic_distance(std::size_t i, std::size_t j, std::size_t m) {
  const std::size_t d = i > j ? i - j : j - i;
  return std::min(d, m - d);
}

}  // namespace

std::vector<Check> ring_axiom_checks(const std::vector<CircleMap>& maps, const std::vector<std::string>& names) {
  check_inputs(maps, names);
  const std::size_t m = maps.size();
  std::vector<std::optional<ArcSet>> supp;
  for (std::size_t i = 0; i < m; ++i) supp.push_back(arc_support(maps[i], names[i]));

  std::vector<Check> out;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (cyclic_distance(i, j, m) < 2) continue;
      if (!supp[i] || !supp[j]) {
        out.push_back(make_check(pair_id("R1", i + 1, j + 1), true, "empty support"));
        continue;
      }
      const ArcSet common = ss_intersect(*supp[i], *supp[j]);
      out.push_back(make_check(pair_id("R1", i + 1, j + 1), common.empty(),
                               supp[i]->str() + " " + supp[j]->str() +
                                   (common.empty() ? "" : " meet in " + common.str())));
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    const std::size_t j = (i + 1) % m;
    const std::string id = pair_id("R2", i + 1, j + 1);
    if (!supp[i] || !supp[j]) {
      out.push_back(make_check(id, false, "supp(" + names[supp[i] ? j : i] + ") is empty"));
      continue;
    }
    const ArcSet common = ss_intersect(*supp[i], *supp[j]);
    std::string why;
    if (common.empty())
      why = "overlap is empty";
    else if (common.size() != 1)
      why = "overlap " + common.str() + " is not one arc";
    else if (common == *supp[i] || common == *supp[j])
      why = "overlap " + common.str() + " is not proper";
    out.push_back(make_check(id, why.empty(),
                             supp[i]->str() + " " + supp[j]->str() + (why.empty() ? " overlap " + common.str() : " " + why)));
  }
  return out;
}

std::variant<RingSystem, Violation> validate_ring(const std::vector<CircleMap>& maps, std::vector<std::string> names) {
  if (names.empty()) names = default_names(maps.size());
  std::vector<Check> checks = ring_axiom_checks(maps, names);
  for (const auto& c : checks) {
    if (c.passed()) continue;
    const auto open = c.id.find('('), comma = c.id.find(','), close = c.id.find(')');
    const std::size_t i = std::stoul(c.id.substr(open + 1, comma - open - 1));
    const std::size_t j = std::stoul(c.id.substr(comma + 1, close - comma - 1));
    return Violation{c.id.substr(0, open), {i, j}, c.witness};
  }
  RingSystem ring;
  ring.names_ = std::move(names);
  ring.maps_ = maps;
  ring.modulus_ = maps.front().modulus();
  for (std::size_t i = 0; i < maps.size(); ++i) ring.supports_.push_back(support(maps[i]).arcs().front());
  ring.certificate_ = std::move(checks);
  return ring;
}

RingSystem make_ring5_from_profile(const std::vector<Point>& profile) {
  if (profile.size() < 2 || profile.front() != Point{Rat(0), Rat(0)} || profile.back() != Point{Rat(2), Rat(2)})
    throw Error(ErrorCode::InvalidArgument, "ring profile must run from (0,0) to (2,2)");
  const Rat modulus(5);
  std::vector<CircleMap> maps;
  for (int i = 1; i <= 5; ++i) {
    std::vector<Point> pts;
    for (const auto& p : profile) pts.push_back({p.x + Rat(i), p.y + Rat(i)});
    // a fixed point in the complementary arc pins the lift there
    pts.push_back({Rat(i) + Rat(7, 2), Rat(i) + Rat(7, 2)});
    maps.push_back(CircleMap::from_lift_points(modulus, std::move(pts)));
  }
  auto result = validate_ring(maps);
  if (auto* v = std::get_if<Violation>(&result))
    throw Error(ErrorCode::InvalidArgument, "profile does not give a ring: " + v->str());
  return std::get<RingSystem>(std::move(result));
}

RingSystem make_standard_ring5() {
  return make_ring5_from_profile({{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1)}, {Rat(1), Rat(3, 2)}, {Rat(2), Rat(2)}});
}

std::vector<Check> check_ring_hypotheses(const RingSystem& ring) {
  std::vector<Check> out;
  const long m = static_cast<long>(ring.size());
  const Rat& modulus = ring.modulus();
  for (long i = 0; i < m; ++i) {
    const Rat& hi = ring.arc(i).end;
    const Rat& lo2 = ring.arc(i + 2).start;
    out.push_back(make_check(index_id("L35_I", i + 1), hi == lo2,
                             "d+supp(" + ring.name(i) + ")=" + hi.str() + " d-supp(" + ring.name(i + 2) + ")=" +
                                 lo2.str()));
  }
  for (long i = 0; i < m; ++i) {
    const Rat& start = ring.arc(i + 1).start;
    const Rat moved = ring.map(i + 1)(ring.map(i)(start)).mod(modulus);
    const Rat& target = ring.arc(i + 2).start;
    out.push_back(make_check(index_id("L35_II", i + 1), moved == target,
                             ring.name(i + 1) + ring.name(i) + "(" + start.str() + ")=" + moved.str() + " d-supp(" +
                                 ring.name(i + 2) + ")=" + target.str()));
  }
  return out;
}

RPrime build_rprime(const RingSystem& ring, int i) {
  if (ring.size() != 5) throw Error(ErrorCode::InvalidArgument, "r' is defined for rings of five generators");
  if (i < 1 || i > 5) throw Error(ErrorCode::InvalidArgument, "index must be in 1..5");
  const long k = i - 1;
  const Word c = Word::generator(ring.name(k + 2), 2) * Word::generator(ring.name(k + 1), 2) *
                 Word::generator(ring.name(k), 2) * Word::generator(ring.name(k - 1));
  const GenAssignment env = ring.assignment();
  const CircleMap conj = std::get<CircleMap>(env.eval(c));
  return {"rp" + std::to_string(i), c, conjugate_word(Word::generator(ring.name(k)), c), conjugate(ring.map(k), conj)};
}

LineMap unroll_at(const CircleMap& f, const Rat& cut) {
  const Rat& modulus = f.modulus();
  const Rat k = from_mpz(((f.lift(cut) - cut) / modulus).floor());
  if (f.lift(cut) - cut != k * modulus)
    throw Error(ErrorCode::CannotUnroll, "map does not fix the cut point " + cut.str());
  std::vector<Point> pts{{cut, cut}, {cut + modulus, cut + modulus}};
  for (const auto& bp : f.breakpoints()) {
    Rat x = cut + (bp.x - cut).mod(modulus);
    if (x == cut) continue;
    pts.push_back({x, f.lift(x) - k * modulus});
  }
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
  return LineMap::from_breakpoints(std::move(pts), Rat(0), Rat(0));
}

ChainSystem ring_to_chain_subsystem(const RingSystem& ring, int start, int n) {
  const int m = static_cast<int>(ring.size());
  if (n < 2 || n > m - 1)
    throw Error(ErrorCode::InvalidArgument, "subsystem length must be in 2.." + std::to_string(m - 1));
  ArcSet united(ring.modulus());
  for (int t = 0; t < n; ++t) united = ss_union(united, ArcSet::from_arcs(ring.modulus(), {ring.arc(start - 1 + t)}));
  if (united.is_full())
    throw Error(ErrorCode::CannotUnroll, "supports of " + std::to_string(n) + " generators from " +
                                             ring.name(start - 1) + " cover the circle");
  Rat cut(0);
  if (united.contains(cut)) {
    for (const auto& a : united.arcs())
      if (a.contains(cut, ring.modulus())) cut = a.end;
  }
  std::vector<LineMap> maps;
  std::vector<std::string> names;
  for (int t = 0; t < n; ++t) {
    maps.push_back(unroll_at(ring.map(start - 1 + t), cut));
    names.push_back(ring.name(start - 1 + t));
  }
  auto result = validate_chain(maps, names);
  if (auto* v = std::get_if<Violation>(&result))
    throw Error(ErrorCode::NotAChain, "unrolled generators are not a chain: " + v->str());
  return std::get<ChainSystem>(std::move(result));
}

std::vector<Check> ring_two_chain_checks(const RingSystem& ring, std::vector<TwoChainReport>* reports) {
  std::vector<Check> out;
  const long m = static_cast<long>(ring.size());
  for (long i = 0; i < m; ++i) {
    const std::string id = index_id("TWO_CHAIN", i + 1);
    const CircleMap& f1 = ring.map(i);
    const CircleMap& f2 = ring.map(i + 1);
    const bool circle_relation = commutator(f1, conjugate(f2, compose(f2, f1))).is_identity();
    try {
      const ChainSystem pair = ring_to_chain_subsystem(ring, static_cast<int>(i + 1), 2);
      const TwoChainReport r = check_two_chain(pair.maps()[0], pair.maps()[1]);
      if (reports) reports->push_back(r);
      out.push_back(make_check(id, r.inequality && r.relation_identity && circle_relation,
                               "lhs=" + r.lhs.str() + " rhs=" + r.rhs.str() + (r.equality ? " equal" : "") +
                                   " relation=" + (r.relation_identity && circle_relation ? "identity" : "nontrivial")));
    } catch (const Error& e) {
      if (reports) reports->push_back(TwoChainReport{});
      out.push_back(make_check(id, false, e.what()));
    }
  }
  return out;
}

namespace {

std::string moved_witness(const CircleMap& f) {
  const auto p = moved_point(PLMap(f));
  return p ? "moves " + p->str() + " to " + f(*p).str() : "identity";
}

}  // namespace

RingCertificate verify_ar_lemma(const RingSystem& ring) {
  if (ring.size() != 5) throw Error(ErrorCode::InvalidArgument, "verify_ar_lemma needs a ring of five generators");
  RingCertificate cert;
  cert.checks = check_ring_hypotheses(ring);
  for (const auto& c : cert.checks)
    if (!c.passed()) throw Error(ErrorCode::PreconditionViolation, "hypothesis " + c.id + " fails: " + c.witness);

  const Rat& modulus = ring.modulus();
  for (int i = 1; i <= 5; ++i) cert.rprimes.push_back(build_rprime(ring, i));

  std::vector<std::pair<std::string, CircleMap>> everything;
  for (long k = 0; k < 5; ++k) everything.emplace_back(ring.name(k), ring.map(k));
  for (const auto& rp : cert.rprimes) everything.emplace_back(rp.name, rp.map);

  auto arc_set = [&](long k) { return ArcSet::from_arcs(modulus, {ring.arc(k)}); };

  for (long k = 0; k < 5; ++k) {
    const ArcSet a = support(cert.rprimes[k].map);
    const ArcSet both = ss_intersect(arc_set(k + 2), arc_set(k + 3));
    const auto out = point_outside(a, both);
    cert.checks.push_back(make_check(index_id("RP_SUPP", k + 1), !out && !a.empty(),
                                     a.str() + " in " + both.str() + (out ? " fails at " + out->str() : "")));
  }
  for (long k = 0; k < 5; ++k) {
    const ArcSet a = support(cert.rprimes[k].map);
    const ArcSet moved = image(invert(ring.map(k + 2)), a);
    const auto p = common_point(a, moved);
    cert.checks.push_back(make_check(index_id("RP_DISJ_A", k + 1), !p,
                                     a.str() + " vs " + ring.name(k + 2) + "^-1: " + moved.str() +
                                         (p ? " share " + p->str() : "")));
  }
  for (long k = 0; k < 5; ++k) {
    const ArcSet a = support(cert.rprimes[k].map);
    const ArcSet moved = image(ring.map(k + 3), a);
    const auto p = common_point(a, moved);
    cert.checks.push_back(make_check(index_id("RP_DISJ_B", k + 1), !p,
                                     a.str() + " vs " + ring.name(k + 3) + ": " + moved.str() +
                                         (p ? " share " + p->str() : "")));
  }
  for (long k = 0; k < 5; ++k) {
    const CircleMap& rp = cert.rprimes[k].map;
    for (const auto& [name, r] : everything) {
      if (name == ring.name(k + 2) || name == ring.name(k + 3)) continue;
      const CircleMap c = commutator(rp, r);
      cert.checks.push_back(make_check("COMM_FAR(" + std::to_string(k + 1) + "," + name + ")", c.is_identity(),
                                       "[" + cert.rprimes[k].name + "," + name + "] " + moved_witness(c)));
    }
  }
  for (const char* which : {"COMM_CONJ_A", "COMM_CONJ_B"}) {
    const long offset = std::string(which) == "COMM_CONJ_A" ? 2 : 3;
    for (long k = 0; k < 5; ++k) {
      const CircleMap& rp = cert.rprimes[k].map;
      const CircleMap& r = ring.map(k + offset);
      const CircleMap c = commutator(conjugate(rp, invert(r)), rp);
      cert.checks.push_back(make_check(index_id(which, k + 1), c.is_identity(),
                                       "[" + ring.name(k + offset) + "^-1 " + cert.rprimes[k].name + " " +
                                           ring.name(k + offset) + "," + cert.rprimes[k].name + "] " +
                                           moved_witness(c)));
    }
  }
  const auto two = ring_two_chain_checks(ring, &cert.two_chain);
  cert.checks.insert(cert.checks.end(), two.begin(), two.end());
  return cert;
}

}  // namespace plh
