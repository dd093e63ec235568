#include "plh/intervals.hpp"

#include <algorithm>
#include <cctype>

#include "plh/error.hpp"

namespace plh {

Interval::Interval(ExtRat lo_, ExtRat hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
  if (!(lo < hi)) throw Error(ErrorCode::InvalidArgument, "empty interval (" + lo.str() + "," + hi.str() + ")");
}

Rat Interval::interior_point() const {
  if (lo.is_finite() && hi.is_finite()) return (lo.value() + hi.value()) / Rat(2);
  if (hi.is_finite()) return hi.value() - Rat(1);
  if (lo.is_finite()) return lo.value() + Rat(1);
  return Rat(0);
}

std::string Interval::str() const { return "(" + lo.str() + "," + hi.str() + ")"; }

SupportSet SupportSet::from_intervals(std::vector<Interval> parts) {
  std::sort(parts.begin(), parts.end(), [](const Interval& a, const Interval& b) {
    if (a.lo != b.lo) return a.lo < b.lo;
    return a.hi < b.hi;
  });
  SupportSet out;
  for (auto& p : parts) {
    if (!out.parts_.empty() && p.lo < out.parts_.back().hi) {
      if (out.parts_.back().hi < p.hi) out.parts_.back().hi = p.hi;
    } else {
      out.parts_.push_back(std::move(p));
    }
  }
  return out;
}

SupportSet SupportSet::whole_line() {
  SupportSet out;
  out.parts_.emplace_back(ExtRat::neg_inf(), ExtRat::pos_inf());
  return out;
}

bool SupportSet::contains(const Rat& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& i) { return i.contains(x); });
}

std::string SupportSet::str() const {
  if (parts_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += " u ";
    out += parts_[i].str();
  }
  return out;
}

SupportSet ss_union(const SupportSet& a, const SupportSet& b) {
  std::vector<Interval> all = a.intervals();
  all.insert(all.end(), b.intervals().begin(), b.intervals().end());
  return SupportSet::from_intervals(std::move(all));
}

SupportSet ss_intersect(const SupportSet& a, const SupportSet& b) {
  std::vector<Interval> out;
  const auto& x = a.intervals();
  const auto& y = b.intervals();
  std::size_t i = 0, j = 0;
  while (i < x.size() && j < y.size()) {
    const ExtRat lo = std::max(x[i].lo, y[j].lo);
    const ExtRat hi = std::min(x[i].hi, y[j].hi);
    if (lo < hi) out.emplace_back(lo, hi);
    if (x[i].hi < y[j].hi) ++i; else ++j;
  }
  return SupportSet::from_intervals(std::move(out));
}

bool ss_is_disjoint(const SupportSet& a, const SupportSet& b) { return ss_intersect(a, b).empty(); }

bool ss_contains(const SupportSet& outer, const SupportSet& inner) { return ss_intersect(outer, inner) == inner; }

std::optional<Rat> common_point(const SupportSet& a, const SupportSet& b) {
  const SupportSet both = ss_intersect(a, b);
  if (both.empty()) return std::nullopt;
  return both.intervals().front().interior_point();
}

std::optional<Rat> point_outside(const SupportSet& inner, const SupportSet& outer) {
  for (const auto& piece : inner.intervals()) {
    bool meets = false;
    for (const auto& o : outer.intervals()) {
      // An endpoint of an open outer interval is never in the outer set.
      if (o.lo.is_finite() && piece.contains(o.lo.value()) && !outer.contains(o.lo.value())) return o.lo.value();
      if (o.hi.is_finite() && piece.contains(o.hi.value()) && !outer.contains(o.hi.value())) return o.hi.value();
      if (std::max(o.lo, piece.lo) < std::min(o.hi, piece.hi)) meets = true;
    }
    if (!meets) return piece.interior_point();
  }
  return std::nullopt;
}

Rat Arc::length(const Rat& modulus) const {
  if (start < end) return end - start;
  return end + modulus - start;
}

bool Arc::contains(const Rat& x, const Rat& modulus) const {
  const Rat p = x.mod(modulus);
  if (start < end) return start < p && p < end;
  if (start > end) return p > start || p < end;
  return p != start;
}

Rat Arc::interior_point(const Rat& modulus) const {
  return (start + length(modulus) / Rat(2)).mod(modulus);
}

std::string Arc::str() const { return "(" + start.str() + "," + end.str() + ")"; }

ArcSet::ArcSet(Rat modulus) : modulus_(std::move(modulus)) {
  if (modulus_.sign() <= 0) throw Error(ErrorCode::InvalidArgument, "circle modulus must be positive");
}

ArcSet ArcSet::full(Rat modulus) {
  ArcSet out(std::move(modulus));
  out.full_ = true;
  return out;
}

bool ArcSet::contains(const Rat& x) const {
  if (full_) return true;
  return std::any_of(arcs_.begin(), arcs_.end(), [&](const Arc& a) { return a.contains(x, modulus_); });
}

Rat ArcSet::length() const {
  if (full_) return modulus_;
  Rat total;
  for (const auto& a : arcs_) total += a.length(modulus_);
  return total;
}

SupportSet ArcSet::fundamental_domain(bool& contains_zero) const {
  contains_zero = false;
  std::vector<Interval> pieces;
  const Rat zero(0);
  if (full_) {
    contains_zero = true;
    pieces.emplace_back(zero, modulus_);
    return SupportSet::from_intervals(std::move(pieces));
  }
  for (const auto& a : arcs_) {
    if (a.start < a.end) {
      pieces.emplace_back(a.start, a.end);
    } else if (a.start == a.end && a.start.is_zero()) {
      pieces.emplace_back(zero, modulus_);
    } else {
      pieces.emplace_back(a.start, modulus_);
      if (!a.end.is_zero()) {
        pieces.emplace_back(zero, a.end);
        contains_zero = true;
      }
    }
  }
  return SupportSet::from_intervals(std::move(pieces));
}

ArcSet ArcSet::from_fundamental_domain(Rat modulus, const SupportSet& pieces, bool contains_zero) {
  ArcSet out(std::move(modulus));
  const auto& p = pieces.intervals();
  const ExtRat zero(Rat(0));
  const ExtRat top(out.modulus_);
  for (const auto& piece : p) {
    if (piece.lo < zero || top < piece.hi)
      throw Error(ErrorCode::InvalidArgument, "piece " + piece.str() + " outside the fundamental domain");
  }
  if (contains_zero) {
    if (p.empty() || p.front().lo != zero || p.back().hi != top)
      throw Error(ErrorCode::InvalidArgument, "open set containing 0 must reach both ends of the domain");
    if (p.size() == 1) {
      out.full_ = true;
      return out;
    }
    for (std::size_t i = 1; i + 1 < p.size(); ++i) out.arcs_.push_back({p[i].lo.value(), p[i].hi.value()});
    out.arcs_.push_back({p.back().lo.value(), p.front().hi.value()});
    return out;
  }
  for (const auto& piece : p) {
    const Rat hi = piece.hi == top ? Rat(0) : piece.hi.value();
    out.arcs_.push_back({piece.lo.value(), hi});
  }
  return out;
}

ArcSet ArcSet::from_arcs(Rat modulus, const std::vector<Arc>& arcs) {
  std::vector<Interval> pieces;
  bool any_zero = false;
  for (const auto& a : arcs) {
    if (a.start < Rat(0) || !(a.start < modulus) || a.end < Rat(0) || !(a.end < modulus))
      throw Error(ErrorCode::InvalidArgument, "arc endpoint outside [0, L): " + a.str());
    ArcSet single(modulus);
    single.arcs_.push_back(a);
    bool z = false;
    const SupportSet d = single.fundamental_domain(z);
    any_zero = any_zero || z;
    pieces.insert(pieces.end(), d.intervals().begin(), d.intervals().end());
  }
  return from_fundamental_domain(std::move(modulus), SupportSet::from_intervals(std::move(pieces)), any_zero);
}

std::string ArcSet::str() const {
  if (full_) return "S1";
  if (arcs_.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (i) out += " u ";
    out += arcs_[i].str();
  }
  return out;
}

namespace {

void require_same_modulus(const ArcSet& a, const ArcSet& b) {
  if (a.modulus() != b.modulus())
    throw Error(ErrorCode::ModulusMismatch, a.modulus().str() + " vs " + b.modulus().str());
}

}  // namespace

ArcSet ss_union(const ArcSet& a, const ArcSet& b) {
  require_same_modulus(a, b);
  bool za = false, zb = false;
  const SupportSet da = a.fundamental_domain(za);
  const SupportSet db = b.fundamental_domain(zb);
  return ArcSet::from_fundamental_domain(a.modulus(), ss_union(da, db), za || zb);
}

ArcSet ss_intersect(const ArcSet& a, const ArcSet& b) {
  require_same_modulus(a, b);
  bool za = false, zb = false;
  const SupportSet da = a.fundamental_domain(za);
  const SupportSet db = b.fundamental_domain(zb);
  return ArcSet::from_fundamental_domain(a.modulus(), ss_intersect(da, db), za && zb);
}

bool ss_is_disjoint(const ArcSet& a, const ArcSet& b) { return ss_intersect(a, b).empty(); }

bool ss_contains(const ArcSet& outer, const ArcSet& inner) { return ss_intersect(outer, inner) == inner; }

std::optional<Rat> common_point(const ArcSet& a, const ArcSet& b) {
  const ArcSet both = ss_intersect(a, b);
  if (both.empty()) return std::nullopt;
  if (both.is_full()) return Rat(0);
  return both.arcs().front().interior_point(both.modulus());
}

std::optional<Rat> point_outside(const ArcSet& inner, const ArcSet& outer) {
  require_same_modulus(inner, outer);
  bool zi = false, zo = false;
  const SupportSet di = inner.fundamental_domain(zi);
  const SupportSet d_o = outer.fundamental_domain(zo);
  if (zi && !zo) return Rat(0);
  return point_outside(di, d_o);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::pair<std::string_view, std::string_view> split_bracketed(std::string_view text, char open, char close) {
  text = trim(text);
  if (text.size() < 5 || text.front() != open || text.back() != close)
    throw Error(ErrorCode::ParseError, "expected " + std::string(1, open) + "lo,hi" + std::string(1, close) +
                                           ", got '" + std::string(text) + "'");
  const std::string_view body = text.substr(1, text.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) throw Error(ErrorCode::ParseError, "missing ',' in '" + std::string(text) + "'");
  return {trim(body.substr(0, comma)), trim(body.substr(comma + 1))};
}

}  // namespace

Interval parse_open_interval(std::string_view text) {
  const auto [lo, hi] = split_bracketed(text, '(', ')');
  try {
    return Interval(ExtRat::parse(lo), ExtRat::parse(hi));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

ClosedPiece parse_closed_piece(std::string_view text) {
  const auto [lo, hi] = split_bracketed(text, '[', ']');
  return {Rat::parse(lo), Rat::parse(hi)};
}

}  // namespace plh
