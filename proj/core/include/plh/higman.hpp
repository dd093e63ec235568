#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plh/intervals.hpp"
#include "plh/word.hpp"

namespace plh {

enum class HigmanShape { One, Two };

/// Witness data for the displacement conditions. ONE uses u1 only.
struct HigmanCertificate {
  std::string s1;
  std::string s2;
  Word g;
  HigmanShape shape = HigmanShape::One;
  Word u1;
  Word u2;
  bool verified = false;

  /// "higman ONE s1 s2 g u" or "higman TWO s1 s2 g u1 u2".
  std::string str() const;
  /// Parses the str() form. Throws ParseError.
  static HigmanCertificate parse(std::string_view line);
};

struct HigmanResult {
  bool ok = false;
  std::optional<Rat> witness;  // a point of the intersection when !ok
  std::string detail;          // the two sets compared
};

/// ONE: A ∩ (u g u^-1)(A) = ∅ with A = supp(s1) ∪ supp(s2).
/// TWO: B ∩ (u2 g u2^-1)(B) = ∅ with B = supp(s1) ∪ (u1 g u1^-1)(supp(s2)).
/// Throws UnboundGenerator.
HigmanResult verify_higman(const GenAssignment& env, const HigmanCertificate& cert);

/// Reduced words over `alphabet` and inverses in shortlex order (generator
/// order as given, each g before g^-1), lengths 0..max_len. At each length
/// ONE candidates come first, then TWO pairs with |u1| + |u2| equal to that
/// length. The result is verified and independent of the thread count.
std::optional<HigmanCertificate> search_higman(const GenAssignment& env, const std::vector<std::string>& alphabet,
                                               const std::string& s1, const std::string& s2, const Word& g,
                                               long max_len);

/// Reduced words of exactly `length` letters in shortlex order, at most
/// `limit` of them.
std::vector<Word> shortlex_words(const std::vector<std::string>& alphabet, long length,
                                 std::size_t limit = static_cast<std::size_t>(-1));

struct MoveResult {
  Word word;
  std::vector<std::pair<Word, Word>> blocks;  // commutator blocks when requested
};

/// A word w with w(K) ⊆ J, verified exactly. K is a finite union of closed
/// pieces; on the circle J is the arc from lo running forward to hi. Stages: powers of one generator, then two-generator pushes
/// g^p h^q, then shortlex words; all stages respect |w| <= budget. With
/// require_commutator only products of one or two blocks [g^p, h^q] are
/// tried. Throws InvalidArgument if K covers the whole circle.
std::optional<MoveResult> co_move(const GenAssignment& env, const std::vector<std::string>& alphabet,
                                  const std::vector<ClosedPiece>& k, const Interval& j, long budget,
                                  bool require_commutator = false);

/// True iff w maps every piece of K into J.
bool moves_into(const GenAssignment& env, const Word& w, const std::vector<ClosedPiece>& k, const Interval& j);

}  // namespace plh
