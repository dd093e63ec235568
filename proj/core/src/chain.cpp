#include "plh/chain.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "plh/error.hpp"

namespace plh {

std::string Violation::str() const {
  std::string idx;
  for (std::size_t i = 0; i < indices.size(); ++i) idx += (i ? "," : "") + std::to_string(indices[i]);
  return axiom + "(" + idx + ") " + witness;
}

namespace {

Interval single_interval(const LineMap& f, std::size_t index) {
  const SupportSet s = support(f);
  if (s.size() != 1)
    throw Error(ErrorCode::NonIntervalSupport,
                "support of generator " + std::to_string(index) + " is " + s.str() + ", not a single open interval");
  return s.intervals().front();
}

std::optional<Interval> overlap(const Interval& a, const Interval& b) {
  const ExtRat lo = std::max(a.lo, b.lo);
  const ExtRat hi = std::min(a.hi, b.hi);
  if (lo < hi) return Interval(lo, hi);
  return std::nullopt;
}

std::string pair_id(const char* name, std::size_t i, std::size_t j) {
  return std::string(name) + "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

std::string index_id(const char* name, std::size_t i) { return std::string(name) + "(" + std::to_string(i) + ")"; }

}  // namespace

bool ChainSystem::boundary_conditions_hold() const {
  return std::all_of(certificate_.begin(), certificate_.end(), [](const Check& c) {
    return c.passed() || (c.id.rfind("BOUNDARY_", 0) != 0);
  });
}

GenAssignment ChainSystem::assignment() const {
  GenAssignment env;
  for (std::size_t i = 0; i < maps_.size(); ++i) env.bind(names_[i], maps_[i]);
  return env;
}

std::variant<ChainSystem, Violation> validate_chain(const std::vector<LineMap>& maps, std::vector<std::string> names) {
  if (maps.size() < 2) throw Error(ErrorCode::InvalidArgument, "a chain needs at least two maps");
  if (names.empty())
    for (std::size_t i = 0; i < maps.size(); ++i) names.push_back("f" + std::to_string(i + 1));
  if (names.size() != maps.size()) throw Error(ErrorCode::InvalidArgument, "one name per map required");

  const std::size_t n = maps.size();
  std::vector<Interval> supp;
  supp.reserve(n);
  for (std::size_t i = 0; i < n; ++i) supp.push_back(single_interval(maps[i], i + 1));

  ChainSystem sys;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (auto common = overlap(supp[i], supp[j]))
        return Violation{"C1", {i + 1, j + 1}, supp[i].str() + " meets " + supp[j].str() + " in " + common->str()};
      sys.certificate_.push_back(make_check(pair_id("C1", i + 1, j + 1), true, supp[i].str() + " " + supp[j].str()));
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const auto common = overlap(supp[i], supp[i + 1]);
    if (!common)
      return Violation{"C2", {i + 1, i + 2}, supp[i].str() + " and " + supp[i + 1].str() + " do not overlap"};
    if (*common == supp[i] || *common == supp[i + 1])
      return Violation{"C2", {i + 1, i + 2}, "overlap " + common->str() + " is not proper in " + supp[i].str() +
                                                   " and " + supp[i + 1].str()};
    sys.certificate_.push_back(make_check(pair_id("C2", i + 1, i + 2), true, "overlap " + common->str()));
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    const Interval& left = supp[i];
    const Interval& right = supp[i + 1];
    if (!(left.lo < right.lo)) {
      sys.certificate_.push_back(make_check(index_id("TWO_CHAIN", i + 1), false,
                                            "supp(f" + std::to_string(i + 1) + ") is not left of supp(f" +
                                                std::to_string(i + 2) + ")"));
      continue;
    }
    const TwoChainReport r = check_two_chain(maps[i], maps[i + 1]);
    sys.certificate_.push_back(make_check(index_id("TWO_CHAIN", i + 1), r.inequality && r.relation_identity,
                                          "lhs=" + r.lhs.str() + " rhs=" + r.rhs.str() + " relation=" +
                                              (r.relation_identity ? "identity" : "nontrivial")));
  }

  for (std::size_t i = 0; i + 2 < n; ++i) {
    const bool cond_i = supp[i].hi == supp[i + 2].lo;
    sys.certificate_.push_back(make_check(index_id("BOUNDARY_I", i + 1), cond_i,
                                          "d+supp(f" + std::to_string(i + 1) + ")=" + supp[i].hi.str() +
                                              " d-supp(f" + std::to_string(i + 3) + ")=" + supp[i + 2].lo.str()));
    const ExtRat moved = maps[i + 1](maps[i](supp[i + 1].lo));
    sys.certificate_.push_back(make_check(index_id("BOUNDARY_II", i + 1), moved == supp[i + 2].lo,
                                          "f" + std::to_string(i + 2) + "f" + std::to_string(i + 1) + "(" +
                                              supp[i + 1].lo.str() + ")=" + moved.str() + " d-supp(f" +
                                              std::to_string(i + 3) + ")=" + supp[i + 2].lo.str()));
  }

  sys.names_ = std::move(names);
  sys.maps_ = maps;
  sys.supports_ = std::move(supp);
  return sys;
}

TwoChainReport check_two_chain(const LineMap& f1, const LineMap& f2) {
  const SupportSet s1 = support(f1);
  const SupportSet s2 = support(f2);
  if (s1.size() != 1 || s2.size() != 1)
    throw Error(ErrorCode::NotAChain, "supports " + s1.str() + " and " + s2.str() + " are not single intervals");
  const Interval& j1 = s1.intervals().front();
  const Interval& j2 = s2.intervals().front();
  const auto common = overlap(j1, j2);
  if (!common || *common == j1 || *common == j2 || !(j1.lo < j2.lo))
    throw Error(ErrorCode::NotAChain, j1.str() + ", " + j2.str() + " is not a 2-chain with the first on the left");

  TwoChainReport r;
  r.lhs = f2(f1(j2.lo));
  r.rhs = j1.hi;
  r.inequality = r.rhs <= r.lhs;
  r.equality = r.lhs == r.rhs;
  const LineMap f21 = compose(f2, f1);
  r.relation_identity = commutator(f1, conjugate(f2, f21)).is_identity();
  return r;
}

LineMap make_bump(const Rat& lo, const Rat& hi) {
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "make_bump needs lo < hi, got " + lo.str() + ", " + hi.str());
  const Rat scale = (hi - lo) / Rat(2);
  const std::vector<Point> unit{{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1)}, {Rat(1), Rat(3, 2)}, {Rat(2), Rat(2)}};
  std::vector<Point> bps;
  bps.reserve(unit.size());
  for (const auto& p : unit) bps.push_back({lo + scale * p.x, lo + scale * p.y});
  return LineMap::from_breakpoints(std::move(bps), Rat(0), Rat(0));
}

ChainSystem make_standard_chain(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "standard chain needs n >= 2, got " + std::to_string(n));
  std::vector<LineMap> maps;
  for (int i = 1; i <= n; ++i) maps.push_back(make_bump(Rat(i - 1), Rat(i + 1)));
  auto result = validate_chain(maps);
  if (auto* v = std::get_if<Violation>(&result))
    throw Error(ErrorCode::PreconditionViolation, "standard chain failed validation: " + v->str());
  return std::get<ChainSystem>(std::move(result));
}

KklGenerators make_kkl_generators() {
  return {LineMap::translation(Rat(1)),
          LineMap::from_breakpoints({{Rat(0), Rat(0)}, {Rat(1), Rat(2)}}, Rat(0), Rat(1))};
}

bool CommutatorEmbedding::verified() const {
  return std::all_of(verification.begin(), verification.end(), [](const EmbeddingCheck& c) { return c.ok; });
}

CommutatorEmbedding embed_commutator_copy(const LineMap& n1, const LineMap& n2) {
  const SupportSet half = SupportSet::from_intervals({Interval(Rat(0), Rat(1, 2))});
  if (!ss_contains(half, support(n1)) || !ss_contains(half, support(n2)))
    throw Error(ErrorCode::PreconditionViolation, "n1 and n2 must be supported in (0,1/2)");

  const LineMap a = make_kkl_generators().a;
  const LineMap a_inv = invert(a);
  CommutatorEmbedding out{commutator(n1, a), commutator(n2, a_inv), {}};

  const Rat zero(0), half_r(1, 2), one(1), three_halves(3, 2), minus_one(-1), minus_half(-1, 2);
  auto& v = out.verification;
  v.push_back({"g1 = n1 on [0,1/2]", agree_on(out.g1, n1, zero, half_r)});
  v.push_back({"g1 = x -> n1^-1(x-1)+1 on [1,3/2]", agree_on(out.g1, conjugate(invert(n1), a), one, three_halves)});
  v.push_back({"g2 = n2 on [0,1/2]", agree_on(out.g2, n2, zero, half_r)});
  v.push_back({"g2 = x -> n2^-1(x+1)-1 on [-1,-1/2]",
               agree_on(out.g2, conjugate(invert(n2), a_inv), minus_one, minus_half)});
  const SupportSet g1_allowed = SupportSet::from_intervals({Interval(zero, half_r), Interval(one, three_halves)});
  const SupportSet g2_allowed = SupportSet::from_intervals({Interval(minus_one, minus_half), Interval(zero, half_r)});
  v.push_back({"g1 = id off (0,1/2) u (1,3/2)", ss_contains(g1_allowed, support(out.g1))});
  v.push_back({"g2 = id off (-1,-1/2) u (0,1/2)", ss_contains(g2_allowed, support(out.g2))});
  return out;
}

namespace {

// True iff [lo, hi] lies in the closure of the open set `pieces`.
bool closure_covers(const SupportSet& pieces, const Rat& lo, const Rat& hi) {
  const SupportSet window = SupportSet::from_intervals({Interval(lo, hi)});
  const SupportSet inside = ss_intersect(pieces, window);
  const auto& p = inside.intervals();
  if (p.empty() || p.front().lo != ExtRat(lo) || p.back().hi != ExtRat(hi)) return false;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i].hi != p[i + 1].lo) return false;
  return true;
}

}  // namespace

ProbeReport minimality_probe(const GenAssignment& env, const std::vector<std::string>& generators, const Rat& seed,
                             const ClosedPiece& window, const Rat& eps, long depth) {
  if (!(window.lo < window.hi)) throw Error(ErrorCode::InvalidArgument, "empty window " + window.str());
  if (eps.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  if (depth < 0) throw Error(ErrorCode::InvalidArgument, "depth must be >= 0");
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "no generators given");

  std::optional<PointSet> supp;
  for (const auto& g : generators) {
    PointSet s = support(env.at(g));
    supp = supp ? ss_union(*supp, s) : std::move(s);
  }
  bool covered = false;
  if (const auto* line = std::get_if<SupportSet>(&*supp)) {
    covered = closure_covers(*line, window.lo, window.hi);
  } else {
    const ArcSet& arcs = std::get<ArcSet>(*supp);
    bool z = false;
    covered = window.lo.sign() >= 0 && window.hi <= arcs.modulus() &&
              closure_covers(arcs.fundamental_domain(z), window.lo, window.hi);
  }
  if (!covered)
    throw Error(ErrorCode::PreconditionViolation,
                "window " + window.str() + " is not inside the closed support " + to_string(*supp));

  const Rat width = window.hi - window.lo;
  const mpz_class cells_z = (width / eps).ceil();
  const std::size_t cells = cells_z.get_ui();
  std::vector<bool> hit(cells, false);

  ProbeReport report;
  std::size_t in_window = 0;
  std::size_t covered_cells = 0;
  auto record = [&](const Rat& p) {
    if (p < window.lo || p > window.hi) return;
    ++in_window;
    const Rat offset = (p - window.lo) / eps;
    const mpz_class k = offset.floor();
    auto mark = [&](const mpz_class& idx) {
      if (idx < 0 || idx >= cells_z) return;
      const std::size_t i = idx.get_ui();
      if (!hit[i]) {
        hit[i] = true;
        ++covered_cells;
      }
    };
    mark(k);
    if (offset.is_integer()) mark(k - 1);  // on a shared cell edge
  };

  std::vector<Letter> alphabet;
  for (const auto& g : generators) {
    alphabet.push_back({g, 1});
    alphabet.push_back({g, -1});
  }

  report.orbit.emplace(seed, Word{});
  record(seed);
  std::vector<Rat> frontier{seed};
  report.rows.push_back({0, in_window, covered_cells, cells});
  for (long d = 1; d <= depth; ++d) {
    std::vector<Rat> next;
    for (const auto& p : frontier) {
      const Word& reach = report.orbit.at(p);
      for (const auto& l : alphabet) {
        const Word step = Word::generator(l.name, l.exponent);
        Rat q = env.apply(step, p);
        if (report.orbit.count(q)) continue;
        report.orbit.emplace(q, step * reach);
        record(q);
        next.push_back(std::move(q));
      }
    }
    frontier = std::move(next);
    report.rows.push_back({d, in_window, covered_cells, cells});
  }

  report.verified = true;
  for (const auto& [p, w] : report.orbit) {
    if (p < window.lo || p > window.hi) continue;
    if (evaluate(env.eval(w), seed) != p) report.verified = false;
  }
  return report;
}

ProbeReport minimality_probe(const ChainSystem& system, const Rat& seed, const ClosedPiece& window, const Rat& eps,
                             long depth) {
  return minimality_probe(system.assignment(), system.names(), seed, window, eps, depth);
}

}  // namespace plh
