#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "plh/intervals.hpp"
#include "plh/rational.hpp"

namespace plh {

struct Point {
  Rat x;
  Rat y;

  friend bool operator==(const Point&, const Point&) = default;
};

/// Orientation-preserving PL homeomorphism of the line with slope-1 tails.
///
/// Left of the first breakpoint the map is x -> x + left_tail, right of the
/// last it is x -> x + right_tail. With no breakpoints it is a translation.
/// The representation is canonical: no breakpoint has equal slopes on both
/// sides, so == is equality of maps.
class LineMap {
 public:
  LineMap() = default;  // identity

  static LineMap translation(Rat offset);
  /// Validates monotonicity and tail continuity, then canonicalizes.
  /// Throws Error(InvalidMap).
  static LineMap from_breakpoints(std::vector<Point> breakpoints, Rat left_tail, Rat right_tail);

  Rat operator()(const Rat& x) const;
  ExtRat operator()(const ExtRat& x) const;

  std::span<const Point> breakpoints() const { return bps_; }
  const Rat& left_tail() const { return left_; }
  const Rat& right_tail() const { return right_; }
  bool is_identity() const { return bps_.empty() && left_.is_zero(); }

  /// Slope on the segment starting at breakpoint index i (i = size()-1 is the right tail).
  Rat slope_after(std::size_t i) const;

  friend bool operator==(const LineMap&, const LineMap&) = default;

 private:
  std::vector<Point> bps_;
  Rat left_;
  Rat right_;
};

/// Orientation-preserving PL homeomorphism of the circle R/LZ.
///
/// Stored as a degree-1 lift F (F(x + L) = F(x) + L) through its breakpoints
/// in [0, L), with the lift normalized so that F(0) lies in [0, L). A map
/// without breakpoints is the rotation x -> x + F(0).
class CircleMap {
 public:
  explicit CircleMap(Rat modulus);  // identity
  static CircleMap rotation(Rat modulus, const Rat& angle);
  /// Builds the map from points on the graph of some lift; every breakpoint
  /// must appear among the points (modulo L). Throws Error(InvalidMap).
  static CircleMap from_lift_points(Rat modulus, std::vector<Point> points);

  const Rat& modulus() const { return modulus_; }
  /// Canonical lift F evaluated at any real x.
  Rat lift(const Rat& x) const;
  /// Image of a circle point, reduced into [0, L).
  Rat operator()(const Rat& x) const { return lift(x).mod(modulus_); }

  std::span<const Point> breakpoints() const { return bps_; }
  /// F(0), in [0, L).
  const Rat& offset() const { return offset_; }
  bool is_identity() const { return bps_.empty() && offset_.is_zero(); }

  friend bool operator==(const CircleMap&, const CircleMap&) = default;

 private:
  Rat lift_reduced(const Rat& x) const;  // x in [0, L)

  Rat modulus_;
  std::vector<Point> bps_;
  Rat offset_;
};

LineMap compose(const LineMap& f, const LineMap& g);
LineMap invert(const LineMap& f);
SupportSet support(const LineMap& f);
SupportSet image(const LineMap& f, const SupportSet& set);
LineMap conjugate(const LineMap& g, const LineMap& u);
LineMap commutator(const LineMap& f, const LineMap& g);

CircleMap compose(const CircleMap& f, const CircleMap& g);
CircleMap invert(const CircleMap& f);
ArcSet support(const CircleMap& f);
ArcSet image(const CircleMap& f, const ArcSet& set);
CircleMap conjugate(const CircleMap& g, const CircleMap& u);
CircleMap commutator(const CircleMap& f, const CircleMap& g);

/// True iff f and g agree at every point of the closed interval [lo, hi].
bool agree_on(const LineMap& f, const LineMap& g, const Rat& lo, const Rat& hi);

/// A map of either kind. Binary operations on mismatched kinds throw
/// Error(KindMismatch); circle maps of different moduli throw ModulusMismatch.
using PLMap = std::variant<LineMap, CircleMap>;
using PointSet = std::variant<SupportSet, ArcSet>;

bool is_circle(const PLMap& f);
PLMap identity_like(const PLMap& f);
Rat evaluate(const PLMap& f, const Rat& x);
PLMap compose(const PLMap& f, const PLMap& g);
PLMap invert(const PLMap& f);
PointSet support(const PLMap& f);
PointSet image(const PLMap& f, const PointSet& set);
PLMap conjugate(const PLMap& g, const PLMap& u);
PLMap commutator(const PLMap& f, const PLMap& g);
bool equals(const PLMap& f, const PLMap& g);
bool is_identity(const PLMap& f);

PointSet ss_union(const PointSet& a, const PointSet& b);
PointSet ss_intersect(const PointSet& a, const PointSet& b);
bool ss_is_disjoint(const PointSet& a, const PointSet& b);
bool ss_contains(const PointSet& outer, const PointSet& inner);
bool set_empty(const PointSet& s);
bool set_contains(const PointSet& s, const Rat& x);
std::optional<Rat> common_point(const PointSet& a, const PointSet& b);
std::optional<Rat> point_outside(const PointSet& inner, const PointSet& outer);
std::string to_string(const PointSet& s);

/// A point moved by f, if f is not the identity.
std::optional<Rat> moved_point(const PLMap& f);

}  // namespace plh
