#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "plh/plmap.hpp"
#include "plh/report.hpp"
#include "plh/word.hpp"

namespace plh {

/// A failed axiom: which one, the 1-based generator indices involved and
/// the exact interval data demonstrating it.
struct Violation {
  std::string axiom;
  std::vector<std::size_t> indices;
  std::string witness;

  std::string str() const;
};

/// Generators of a prechain group whose supports form a chain of intervals.
/// Only validate_chain (and the constructors built on it) create one.
class ChainSystem {
 public:
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<LineMap>& maps() const { return maps_; }
  const std::vector<Interval>& supports() const { return supports_; }
  std::size_t size() const { return maps_.size(); }

  /// C1, C2, TWO_CHAIN per adjacent pair, and the boundary conditions
  /// BOUNDARY_I / BOUNDARY_II for every i with f_{i+2} present.
  const std::vector<Check>& certificate() const { return certificate_; }
  bool boundary_conditions_hold() const;
  GenAssignment assignment() const;

 private:
  friend std::variant<ChainSystem, Violation> validate_chain(const std::vector<LineMap>&, std::vector<std::string>);

  std::vector<std::string> names_;
  std::vector<LineMap> maps_;
  std::vector<Interval> supports_;
  std::vector<Check> certificate_;
};

/// Checks (C1) and (C2). Names default to f1..fn.
/// Throws NonIntervalSupport if a support is not a single open interval and
/// InvalidArgument for fewer than two maps.
std::variant<ChainSystem, Violation> validate_chain(const std::vector<LineMap>& maps,
                                                     std::vector<std::string> names = {});

struct TwoChainReport {
  ExtRat lhs;  // f2 f1(∂₋ supp f2)
  ExtRat rhs;  // ∂₊ supp f1
  bool inequality = false;
  bool equality = false;
  bool relation_identity = false;  // [f1, (f2 f1) f2 (f2 f1)^-1] == 1

  bool chain_group_pair() const { return inequality; }
};

/// Requires supp(f1), supp(f2) to form a 2-chain with supp(f1) on the left;
/// throws Error(NotAChain) otherwise.
TwoChainReport check_two_chain(const LineMap& f1, const LineMap& f2);

/// Affine rescaling onto (lo, hi) of the bump with breakpoints
/// (0,0), (1/2,1), (1,3/2), (2,2).
LineMap make_bump(const Rat& lo, const Rat& hi);

/// f_i = bump on (i-1, i+1), i = 1..n.
ChainSystem make_standard_chain(int n);

struct KklGenerators {
  LineMap a;  // x + 1
  LineMap b;  // x on (-inf,0], 2x on (0,1), x+1 on [1,inf)
};
KklGenerators make_kkl_generators();

struct EmbeddingCheck {
  std::string what;
  bool ok = false;
};

struct CommutatorEmbedding {
  LineMap g1;  // [n1, a]
  LineMap g2;  // [n2, a^-1]
  std::vector<EmbeddingCheck> verification;

  bool verified() const;
};

/// Requires supp(n1), supp(n2) ⊆ (0, 1/2); throws PreconditionViolation.
CommutatorEmbedding embed_commutator_copy(const LineMap& n1, const LineMap& n2);

struct ProbeRow {
  long depth = 0;
  std::size_t points = 0;  // distinct orbit points inside the window
  std::size_t covered = 0;
  std::size_t cells = 0;
};

struct ProbeReport {
  std::vector<ProbeRow> rows;
  std::map<Rat, Word> orbit;  // every orbit point found, with a reaching word
  bool verified = false;      // every window point re-derived through word_eval
};

/// Orbit of `seed` under all reduced words of length <= depth over the
/// generators, tallied on the ε-grid of the closed window.
///
/// The window must lie in the closure of the union of the generator
/// supports; throws PreconditionViolation otherwise and InvalidArgument for
/// an empty window, eps <= 0 or depth < 0.
ProbeReport minimality_probe(const GenAssignment& env, const std::vector<std::string>& generators, const Rat& seed,
                             const ClosedPiece& window, const Rat& eps, long depth);
ProbeReport minimality_probe(const ChainSystem& system, const Rat& seed, const ClosedPiece& window, const Rat& eps,
                             long depth);

}  // namespace plh
