#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plh/rational.hpp"

namespace plh {

/// Open interval (lo, hi) of the extended line; lo < hi.
struct Interval {
  ExtRat lo;
  ExtRat hi;

  Interval(ExtRat lo_, ExtRat hi_);

  bool contains(const Rat& x) const { return lo < ExtRat(x) && ExtRat(x) < hi; }
  /// A rational strictly inside the interval.
  Rat interior_point() const;
  std::string str() const;

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Finite union of pairwise disjoint open intervals on the line, sorted by lo.
///
/// Members never overlap. Two members may share an endpoint; the shared point
/// is then outside the set.
class SupportSet {
 public:
  SupportSet() = default;
  /// Canonicalizes an arbitrary list of open intervals into their union.
  static SupportSet from_intervals(std::vector<Interval> parts);
  static SupportSet whole_line();

  const std::vector<Interval>& intervals() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  bool contains(const Rat& x) const;

  std::string str() const;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;

 private:
  std::vector<Interval> parts_;
};

SupportSet ss_union(const SupportSet& a, const SupportSet& b);
SupportSet ss_intersect(const SupportSet& a, const SupportSet& b);
bool ss_is_disjoint(const SupportSet& a, const SupportSet& b);
bool ss_contains(const SupportSet& outer, const SupportSet& inner);
/// A point of a ∩ b, if any.
std::optional<Rat> common_point(const SupportSet& a, const SupportSet& b);
/// A point of inner that is not in outer, if any.
std::optional<Rat> point_outside(const SupportSet& inner, const SupportSet& outer);

/// Open arc on the circle R/LZ running in the positive direction from start
/// to end, both in [0, L). start == end denotes the circle with one point
/// removed; the whole circle is represented by ArcSet::full().
struct Arc {
  Rat start;
  Rat end;

  /// Arc length in (0, L].
  Rat length(const Rat& modulus) const;
  bool contains(const Rat& x, const Rat& modulus) const;
  Rat interior_point(const Rat& modulus) const;
  std::string str() const;

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Finite union of disjoint open arcs sharing one modulus, sorted by start.
class ArcSet {
 public:
  explicit ArcSet(Rat modulus);
  static ArcSet full(Rat modulus);
  /// Canonicalizes the union of arbitrary arcs (which may overlap).
  static ArcSet from_arcs(Rat modulus, const std::vector<Arc>& arcs);

  const Rat& modulus() const { return modulus_; }
  bool is_full() const { return full_; }
  bool empty() const { return !full_ && arcs_.empty(); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t size() const { return full_ ? 1 : arcs_.size(); }
  bool contains(const Rat& x) const;
  Rat length() const;

  /// The set cut open at 0: open intervals inside (0, L) plus whether 0 belongs
  /// to the set.
  SupportSet fundamental_domain(bool& contains_zero) const;
  static ArcSet from_fundamental_domain(Rat modulus, const SupportSet& pieces, bool contains_zero);

  std::string str() const;

  friend bool operator==(const ArcSet&, const ArcSet&) = default;

 private:
  Rat modulus_;
  bool full_ = false;
  std::vector<Arc> arcs_;
};

ArcSet ss_union(const ArcSet& a, const ArcSet& b);
ArcSet ss_intersect(const ArcSet& a, const ArcSet& b);
bool ss_is_disjoint(const ArcSet& a, const ArcSet& b);
bool ss_contains(const ArcSet& outer, const ArcSet& inner);
std::optional<Rat> common_point(const ArcSet& a, const ArcSet& b);
std::optional<Rat> point_outside(const ArcSet& inner, const ArcSet& outer);

/// Closed interval [lo, hi] on the line (lo <= hi), or closed arc on the
/// circle from lo to hi in the positive direction (lo == hi is a point).
/// Compact test sets are always given this way, never as open supports.
struct ClosedPiece {
  Rat lo;
  Rat hi;

  std::string str() const { return "[" + lo.str() + "," + hi.str() + "]"; }
  friend bool operator==(const ClosedPiece&, const ClosedPiece&) = default;
};

/// Parses "(lo,hi)" into an open interval; endpoints may be ±inf.
Interval parse_open_interval(std::string_view text);
/// Parses "[lo,hi]".
ClosedPiece parse_closed_piece(std::string_view text);

}  // namespace plh
