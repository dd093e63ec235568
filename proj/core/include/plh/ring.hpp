#pragma once

#include <string>
#include <variant>
#include <vector>

#include "plh/chain.hpp"
#include "plh/plmap.hpp"
#include "plh/report.hpp"
#include "plh/word.hpp"

namespace plh {

/// Circle maps whose supports form a ring of arcs (indices mod m).
/// Only validate_ring (and the constructors built on it) create one.
class RingSystem {
 public:
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<CircleMap>& maps() const { return maps_; }
  const std::vector<Arc>& supports() const { return supports_; }
  const Rat& modulus() const { return modulus_; }
  std::size_t size() const { return maps_.size(); }

  /// 0-based index reduced mod m, for signed offsets.
  std::size_t wrap(long i) const;
  const CircleMap& map(long i) const { return maps_[wrap(i)]; }
  const std::string& name(long i) const { return names_[wrap(i)]; }
  const Arc& arc(long i) const { return supports_[wrap(i)]; }

  /// R1 and R2 results, all passing.
  const std::vector<Check>& certificate() const { return certificate_; }
  GenAssignment assignment() const;

 private:
  friend std::variant<RingSystem, Violation> validate_ring(const std::vector<CircleMap>&, std::vector<std::string>);

  std::vector<std::string> names_;
  std::vector<CircleMap> maps_;
  std::vector<Arc> supports_;
  Rat modulus_;
  std::vector<Check> certificate_;
};

/// Every R1(i,j) (cyclic index distance >= 2) and R2(i,i+1) check, pass or
/// fail. An empty support fails R2. Throws NonArcSupport for a support that
/// is not a single arc, InvalidArgument for m < 3 and ModulusMismatch.
std::vector<Check> ring_axiom_checks(const std::vector<CircleMap>& maps, const std::vector<std::string>& names);

/// Names default to r1..rm. Returns the first failing axiom.
std::variant<RingSystem, Violation> validate_ring(const std::vector<CircleMap>& maps,
                                                   std::vector<std::string> names = {});

/// Ring on the circle of length 5 with r_i(x) = p(x - i) + i on (i, i+2),
/// where p is the profile given by breakpoints on [0, 2] fixing 0 and 2.
RingSystem make_ring5_from_profile(const std::vector<Point>& profile);

/// The profile (0,0), (1/2,1), (1,3/2), (2,2).
RingSystem make_standard_ring5();

/// L35_I(i): ∂₊supp(r_i) = ∂₋supp(r_{i+2});
/// L35_II(i): r_{i+1} r_i(∂₋supp(r_{i+1})) = ∂₋supp(r_{i+2}); for all i mod m.
std::vector<Check> check_ring_hypotheses(const RingSystem& ring);

struct RPrime {
  std::string name;  // "rp<i>"
  Word conjugator;   // c_i = r_{i+2}^2 r_{i+1}^2 r_i^2 r_{i-1}
  Word word;         // c_i r_i c_i^-1
  CircleMap map;
};

/// i is 1-based. Throws InvalidArgument unless m = 5.
RPrime build_rprime(const RingSystem& ring, int i);

struct RingCertificate {
  std::vector<Check> checks;
  std::vector<TwoChainReport> two_chain;  // pair (r_i, r_{i+1}), i = 1..m
  std::vector<RPrime> rprimes;

  bool all_passed() const;
};

/// Hypotheses, then RP_SUPP, RP_DISJ_A, RP_DISJ_B, COMM_FAR, COMM_CONJ_A,
/// COMM_CONJ_B and TWO_CHAIN for every i. Throws PreconditionViolation naming
/// the failing hypothesis, InvalidArgument unless m = 5.
RingCertificate verify_ar_lemma(const RingSystem& ring);

/// TWO_CHAIN(i) for every consecutive pair; works for any m.
std::vector<Check> ring_two_chain_checks(const RingSystem& ring, std::vector<TwoChainReport>* reports = nullptr);

/// n consecutive generators from 1-based start, cut open at a point outside
/// their union. Throws CannotUnroll if the union is the whole circle and
/// InvalidArgument unless 2 <= n <= m-1.
ChainSystem ring_to_chain_subsystem(const RingSystem& ring, int start, int n);

/// Lifts a circle map fixing `cut` to a line map supported in (cut, cut+L).
LineMap unroll_at(const CircleMap& f, const Rat& cut);

}  // namespace plh
