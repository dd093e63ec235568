#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "plh/report.hpp"
#include "plh/ring.hpp"
#include "plh/word.hpp"

namespace plh {

/// Strictly alternating word in s_i^{±1}, s_j^{±1} of even length >= 2.
bool is_minipotent(const Word& w, const std::string& si, const std::string& sj);

struct DeltaWitness {
  std::string si;
  std::string sj;
  Word word;
  bool commutes_with_i = false;
  bool commutes_with_j = false;
};

struct EdgeFailure {
  std::string reason;
};

/// Throws InvalidArgument if w is not minipotent in {si, sj}.
std::variant<DeltaWitness, EdgeFailure> check_delta_edge(const GenAssignment& env, const std::string& si,
                                                         const std::string& sj, const Word& w);

/// Smallest k <= k_max with c_k commuting with s_j, where c_1 = [s_i, s_j]
/// and c_k = [c_{k-1}, s_j].
std::optional<int> check_distinguished(const GenAssignment& env, const std::string& si, const std::string& sj,
                                       int k_max);

struct EdgeWitness {
  std::string si;
  std::string sj;
  Word word;
};

struct ClassDecl {
  std::string name;
  std::vector<std::string> members;
  std::vector<Word> via;  // members[t+1] = via[t] members[0] via[t]^-1
};

struct WitnessSet {
  std::vector<EdgeWitness> edges;
  std::vector<ClassDecl> classes;
  std::map<std::string, std::vector<std::string>> dense;  // class name -> V
};

struct DeltaGraph {
  std::vector<std::string> vertices;
  std::vector<DeltaWitness> edges;  // verified, in lexicographic pair order
  std::vector<std::pair<std::string, std::string>> missing;
  std::vector<Check> checks;  // DELTA_COMPLETE(si,sj) per pair, then DELTA_COMPLETE

  bool complete() const { return missing.empty(); }
};

/// One candidate per unordered pair: the supplied word if any, otherwise
/// "si sj" when the maps commute. Pairs with neither are SKIP.
DeltaGraph build_delta(const GenAssignment& env, const std::vector<std::string>& s,
                       const std::vector<EdgeWitness>& witnesses);

struct CVReport {
  DeltaGraph delta;
  std::vector<Check> checks;  // all checks, DELTA_COMPLETE first, then CV_CLASS, CV_DENSE
  bool hypotheses_verified = false;

  static constexpr const char* kCaveat =
      "declared classes may be finer than the true conjugacy classes; every true class then contains a "
      "declared subset, so the verdict stays sound";
  std::string verdict() const { return hypotheses_verified ? "HYPOTHESES-VERIFIED" : "HYPOTHESES-NOT-VERIFIED"; }
};

/// Throws InvalidConjugationWitness when a via word does not conjugate
/// members[0] onto its member, PreconditionViolation when the classes do not
/// partition S.
CVReport check_cv_criterion(const GenAssignment& env, const std::vector<std::string>& s,
                            const WitnessSet& witnesses, int k_max = 3);

/// S = {r_1..r_5, rp1..rp5}, classes {r_i, rp_i} via c_i, V = whole class,
/// and a relation word for every pair that does not commute: the 2-chain
/// relation for r_i, r_{i+1} and [r^-1 rp_k r, rp_k] for r = r_{k+2}, r_{k+3}.
/// The returned env binds the rp names too.
struct StandardCV {
  GenAssignment env;
  std::vector<std::string> s;
  WitnessSet witnesses;
};
StandardCV standard_cv_witnesses(const RingSystem& ring);

}  // namespace plh
