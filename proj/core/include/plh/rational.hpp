#pragma once

#include <compare>
#include <concepts>
#include <cstddef>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace plh {

/// Exact rational number in canonical form (reduced, positive denominator).
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes,
/// so structural equality is numeric equality.
class Rat {
 public:
  Rat() = default;

  template <std::integral T>
  Rat(T value) : v_(static_cast<long>(value)) {}  // NOLINT: implicit by design of numeric types

  Rat(long num, long den);
  explicit Rat(mpq_class value);

  /// Parses "p", "-p", "p/q". Throws Error(ParseError).
  static Rat parse(std::string_view text);

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  /// Largest integer <= *this.
  mpz_class floor() const;
  /// Smallest integer >= *this.
  mpz_class ceil() const;

  /// Representative of *this modulo m in [0, m). Requires m > 0.
  Rat mod(const Rat& m) const;

  /// "p/q", denominator omitted when 1.
  std::string str() const;

  Rat operator-() const { return Rat(mpq_class(-v_)); }
  Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
  Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
  Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
  Rat& operator/=(const Rat& o);

  friend Rat operator+(Rat a, const Rat& b) { return a += b; }
  friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
  friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
  friend Rat operator/(Rat a, const Rat& b) { return a /= b; }

  friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

 private:
  mpq_class v_{0};
};

Rat abs(const Rat& r);
Rat min(const Rat& a, const Rat& b);
Rat max(const Rat& a, const Rat& b);
Rat from_mpz(const mpz_class& z);

/// A rational or one of the two infinities.
class ExtRat {
 public:
  enum class Kind { NegInf, Finite, PosInf };

  ExtRat() = default;
  ExtRat(Rat value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT
  template <std::integral T>
  ExtRat(T value) : ExtRat(Rat(value)) {}  // NOLINT

  static ExtRat neg_inf() { return ExtRat(Kind::NegInf); }
  static ExtRat pos_inf() { return ExtRat(Kind::PosInf); }

  /// Accepts a rational or "-inf" / "+inf" / "inf".
  static ExtRat parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  /// Requires is_finite().
  const Rat& value() const;

  std::string str() const;

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    return a.kind_ == b.kind_ && (a.kind_ != Kind::Finite || a.value_ == b.value_);
  }
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

  friend std::ostream& operator<<(std::ostream& os, const ExtRat& r) { return os << r.str(); }

 private:
  explicit ExtRat(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Rat value_;
};

}  // namespace plh

template <>
struct std::hash<plh::Rat> {
  std::size_t operator()(const plh::Rat& r) const noexcept;
};
