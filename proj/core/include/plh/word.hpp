#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plh/plmap.hpp"

namespace plh {

struct Letter {
  std::string name;
  long exponent = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

/// Freely reduced word over named generators. Adjacent letters always have
/// distinct names; the empty word is the identity.
///
/// Reading convention: "f g" evaluates to f∘g, so the rightmost letter acts
/// first.
class Word {
 public:
  Word() = default;
  /// Freely reduces an arbitrary letter sequence (zero exponents dropped).
  explicit Word(std::vector<Letter> letters);
  static Word generator(std::string name, long exponent = 1);

  /// Letters separated by whitespace, '.' or '*'; each letter is name,
  /// name^k or name^-k. "1" (or an empty string) is the identity.
  static Word parse(std::string_view text);

  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  /// Number of ±1 letters, i.e. the sum of |exponent|.
  long length() const;
  Word inverse() const;
  /// Canonical text, letters joined by '.', identity "1".
  std::string str() const;

  friend Word operator*(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Free reduction; idempotent.
Word word_reduce(const std::vector<Letter>& letters);

/// Binding of generator names to maps of one kind (and one modulus).
class GenAssignment {
 public:
  GenAssignment() = default;

  /// Adds or replaces a binding. Throws KindMismatch / ModulusMismatch.
  void bind(const std::string& name, PLMap map);
  bool contains(const std::string& name) const { return maps_.count(name) != 0; }
  /// Throws Error(UnboundGenerator).
  const PLMap& at(const std::string& name) const;
  const PLMap& inverse_of(const std::string& name) const;
  /// Names in insertion order.
  const std::vector<std::string>& names() const { return order_; }
  bool circle() const { return circle_.value_or(false); }
  std::optional<Rat> modulus() const { return modulus_; }

  PLMap identity() const;
  /// word_eval: composition of the letters, leftmost applied last.
  PLMap eval(const Word& w) const;
  /// Image of one point under the word, applying letters right to left
  /// without building the composite map.
  Rat apply(const Word& w, const Rat& x) const;

 private:
  struct Entry {
    PLMap map;
    PLMap inverse;
  };
  std::map<std::string, Entry> maps_;
  std::vector<std::string> order_;
  std::optional<bool> circle_;
  std::optional<Rat> modulus_;
};

PLMap word_eval(const Word& w, const GenAssignment& env);

/// Commutator word [x,y] = x y x^-1 y^-1.
Word commutator_word(const Word& x, const Word& y);
/// Conjugate word u g u^-1.
Word conjugate_word(const Word& g, const Word& u);

}  // namespace plh
