#include "plh/cvgraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "plh/error.hpp"
#include "plh/parallel.hpp"

namespace plh {

bool is_minipotent(const Word& w, const std::string& si, const std::string& sj) {
  const auto& letters = w.letters();
  if (si == sj || letters.size() < 2 || letters.size() % 2 != 0) return false;
  // reduced words never repeat a name, so two names alternate automatically
  return std::all_of(letters.begin(), letters.end(), [&](const Letter& l) {
    return (l.exponent == 1 || l.exponent == -1) && (l.name == si || l.name == sj);
  });
}

namespace {

bool commute(const PLMap& f, const PLMap& g) { return is_identity(commutator(f, g)); }

std::string pair_text(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

}  // namespace

std::variant<DeltaWitness, EdgeFailure> check_delta_edge(const GenAssignment& env, const std::string& si,
                                                         const std::string& sj, const Word& w) {
  if (!is_minipotent(w, si, sj))
    throw Error(ErrorCode::InvalidArgument, w.str() + " is not minipotent in " + si + ", " + sj);
  const PLMap m = env.eval(w);
  DeltaWitness out{si, sj, w, commute(m, env.at(si)), commute(m, env.at(sj))};
  if (!out.commutes_with_i && !out.commutes_with_j)
    return EdgeFailure{w.str() + " commutes with neither " + si + " nor " + sj};
  return out;
}

std::optional<int> check_distinguished(const GenAssignment& env, const std::string& si, const std::string& sj,
                                       int k_max) {
  if (k_max < 1) return std::nullopt;
  const PLMap& j = env.at(sj);
  PLMap c = commutator(env.at(si), j);
  for (int k = 1; k <= k_max; ++k) {
    const PLMap next = commutator(c, j);
    if (is_identity(next)) return k;
    c = next;
  }
  return std::nullopt;
}

DeltaGraph build_delta(const GenAssignment& env, const std::vector<std::string>& s,
                       const std::vector<EdgeWitness>& witnesses) {
  std::map<std::pair<std::string, std::string>, Word> supplied;
  for (const auto& w : witnesses) {
    auto key = std::minmax(w.si, w.sj);
    supplied[{key.first, key.second}] = w.word;
  }

  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b) pairs.emplace_back(s[a], s[b]);

  struct Outcome {
    Check check;
    std::optional<DeltaWitness> edge;
  };
  std::vector<Outcome> results(pairs.size());
  parallel_for(pairs.size(), [&](std::size_t idx) {
    const auto& [si, sj] = pairs[idx];
    const std::string id = "DELTA_COMPLETE" + pair_text(si, sj);
    auto key = std::minmax(si, sj);
    const auto it = supplied.find({key.first, key.second});
    const bool have = it != supplied.end();
    const Word w = have ? it->second : Word::generator(si) * Word::generator(sj);
    if (!is_minipotent(w, si, sj)) {
      results[idx] = {make_check(id, false, w.str() + " is not minipotent"), std::nullopt};
      return;
    }
    auto r = check_delta_edge(env, si, sj, w);
    if (auto* e = std::get_if<DeltaWitness>(&r)) {
      const std::string with = e->commutes_with_i && e->commutes_with_j ? "both" : (e->commutes_with_i ? si : sj);
      results[idx] = {make_check(id, true, (have ? "" : "default ") + w.str() + " commutes with " + with), *e};
    } else if (have) {
      results[idx] = {make_check(id, false, std::get<EdgeFailure>(r).reason), std::nullopt};
    } else {
      results[idx] = {Check{id, Status::Skip, "no witness; default " + w.str() + " fails"}, std::nullopt};
    }
  });

  DeltaGraph g;
  g.vertices = s;
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    if (results[idx].edge)
      g.edges.push_back(*results[idx].edge);
    else
      g.missing.push_back(pairs[idx]);
    g.checks.push_back(std::move(results[idx].check));
  }
  std::string summary = std::to_string(g.edges.size()) + "/" + std::to_string(pairs.size()) + " edges";
  if (!g.missing.empty()) summary += ", missing " + pair_text(g.missing.front().first, g.missing.front().second);
  g.checks.push_back(make_check("DELTA_COMPLETE", g.complete(), summary));
  return g;
}

CVReport check_cv_criterion(const GenAssignment& env, const std::vector<std::string>& s,
                            const WitnessSet& witnesses, int k_max) {
  CVReport report;
  report.delta = build_delta(env, s, witnesses.edges);
  report.checks = report.delta.checks;

  const std::set<std::string> in_s(s.begin(), s.end());
  std::map<std::string, std::string> owner;
  for (const auto& c : witnesses.classes) {
    if (c.members.empty()) throw Error(ErrorCode::PreconditionViolation, "class " + c.name + " is empty");
    if (c.via.size() != c.members.size() - 1)
      throw Error(ErrorCode::InvalidConjugationWitness,
                  "class " + c.name + " needs one conjugating word per member after the first");
    for (const auto& m : c.members) {
      if (!in_s.count(m)) throw Error(ErrorCode::PreconditionViolation, m + " in class " + c.name + " is not in S");
      if (!owner.emplace(m, c.name).second)
        throw Error(ErrorCode::PreconditionViolation, m + " belongs to two classes");
    }
    const PLMap& base = env.at(c.members.front());
    for (std::size_t t = 0; t < c.via.size(); ++t) {
      if (!equals(conjugate(base, env.eval(c.via[t])), env.at(c.members[t + 1])))
        throw Error(ErrorCode::InvalidConjugationWitness,
                    c.via[t].str() + " does not conjugate " + c.members.front() + " to " + c.members[t + 1]);
    }
  }
  if (!witnesses.classes.empty() && owner.size() != in_s.size())
    throw Error(ErrorCode::PreconditionViolation, "declared classes do not cover S");

  std::set<std::pair<std::string, std::string>> delta_edges;
  for (const auto& e : report.delta.edges) {
    delta_edges.insert({e.si, e.sj});
    delta_edges.insert({e.sj, e.si});
  }
  std::map<std::pair<std::string, std::string>, bool> memo;
  auto distinguished = [&](const std::string& a, const std::string& b) {
    auto [it, fresh] = memo.try_emplace({a, b}, false);
    if (fresh) it->second = check_distinguished(env, a, b, k_max).has_value();
    return it->second;
  };

  if (witnesses.classes.empty() && !s.empty())
    report.checks.push_back(Check{"CV_CLASS", Status::Skip, "no conjugacy classes declared"});

  for (const auto& c : witnesses.classes) {
    const auto d = witnesses.dense.find(c.name);
    const std::vector<std::string> v = d != witnesses.dense.end() ? d->second : c.members;
    for (const auto& x : v)
      if (owner.count(x) == 0 || owner.at(x) != c.name)
        throw Error(ErrorCode::PreconditionViolation, x + " is not a member of class " + c.name);

    std::vector<std::size_t> parent(v.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t a = 0; a < v.size(); ++a)
      for (std::size_t b = a + 1; b < v.size(); ++b)
        if (delta_edges.count({v[a], v[b]}) && (distinguished(v[a], v[b]) || distinguished(v[b], v[a])))
          parent[find(a)] = find(b);
    std::size_t components = 0;
    for (std::size_t a = 0; a < v.size(); ++a) components += find(a) == a;
    std::string vs;
    for (const auto& x : v) vs += (vs.empty() ? "" : ",") + x;
    report.checks.push_back(make_check("CV_CLASS(" + c.name + ")", components == 1 && !v.empty(),
                                       "V={" + vs + "} components=" + std::to_string(components)));

    std::string failure;
    std::size_t outside = 0;
    for (const auto& x : s) {
      if (std::find(v.begin(), v.end(), x) != v.end()) continue;
      ++outside;
      const bool into = std::any_of(v.begin(), v.end(), [&](const std::string& y) { return distinguished(y, x); });
      const bool out = std::any_of(v.begin(), v.end(), [&](const std::string& y) { return distinguished(x, y); });
      if (!into || !out) {
        failure = "x=" + x + (into ? "" : " no (v,x)") + (out ? "" : " no (x,v')");
        break;
      }
    }
    report.checks.push_back(make_check("CV_DENSE(" + c.name + ")", failure.empty(),
                                       failure.empty() ? std::to_string(outside) + " outside points reached" : failure));
  }

  report.hypotheses_verified = std::all_of(report.checks.begin(), report.checks.end(),
                                           [](const Check& c) { return c.passed(); });
  return report;
}

StandardCV standard_cv_witnesses(const RingSystem& ring) {
  if (ring.size() != 5) throw Error(ErrorCode::InvalidArgument, "standard witnesses need a five-generator ring");
  StandardCV out;
  out.env = ring.assignment();
  std::vector<RPrime> rp;
  for (int i = 1; i <= 5; ++i) {
    rp.push_back(build_rprime(ring, i));
    out.env.bind(rp.back().name, rp.back().map);
  }
  out.s = ring.names();
  for (const auto& p : rp) out.s.push_back(p.name);

  for (long k = 0; k < 5; ++k) {
    const Word a = Word::generator(ring.name(k));
    const Word b = Word::generator(ring.name(k + 1));
    out.witnesses.edges.push_back({ring.name(k), ring.name(k + 1), commutator_word(a, conjugate_word(b, b * a))});
  }
  for (long k = 0; k < 5; ++k) {
    const Word p = Word::generator(rp[k].name);
    for (long offset : {2L, 3L}) {
      const Word r = Word::generator(ring.name(k + offset));
      out.witnesses.edges.push_back({rp[k].name, ring.name(k + offset), commutator_word(conjugate_word(p, r.inverse()), p)});
    }
  }
  for (long k = 0; k < 5; ++k) {
    const std::string name = "C" + std::to_string(k + 1);
    out.witnesses.classes.push_back({name, {ring.name(k), rp[k].name}, {rp[k].conjugator}});
    out.witnesses.dense[name] = {ring.name(k), rp[k].name};
  }
  return out;
}

}  // namespace plh
