#include <algorithm>
#include <cassert>

#include "plh/error.hpp"
#include "plh/plmap.hpp"

namespace plh {

namespace {

Rat segment_value(const Point& a, const Point& b, const Rat& x) {
  return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

// Drops every breakpoint whose incoming and outgoing slopes agree. The tails
// have slope 1. Dropping all such points at once is sound: merging two
// collinear segments does not change any other slope.
std::vector<Point> drop_collinear(std::vector<Point> bps) {
  const std::size_t n = bps.size();
  if (n == 0) return bps;
  std::vector<Rat> slopes;  // slopes[i] = slope left of bps[i]; slopes[n] = right tail
  slopes.reserve(n + 1);
  slopes.emplace_back(1);
  for (std::size_t i = 0; i + 1 < n; ++i) slopes.push_back((bps[i + 1].y - bps[i].y) / (bps[i + 1].x - bps[i].x));
  slopes.emplace_back(1);
  std::vector<Point> kept;
  kept.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    if (slopes[i] != slopes[i + 1]) kept.push_back(std::move(bps[i]));
  return kept;
}

Rat inverse_value(const LineMap& g, const Rat& y) {
  const auto bps = g.breakpoints();
  if (bps.empty() || y <= bps.front().y) return y - g.left_tail();
  if (y >= bps.back().y) return y - g.right_tail();
  auto it = std::upper_bound(bps.begin(), bps.end(), y, [](const Rat& v, const Point& p) { return v < p.y; });
  const Point& b = *it;
  const Point& a = *(it - 1);
  return a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y);
}

}  // namespace

LineMap LineMap::translation(Rat offset) {
  LineMap m;
  m.left_ = offset;
  m.right_ = std::move(offset);
  return m;
}

LineMap LineMap::from_breakpoints(std::vector<Point> breakpoints, Rat left_tail, Rat right_tail) {
  if (breakpoints.empty()) {
    if (left_tail != right_tail)
      throw Error(ErrorCode::InvalidMap, "translation needs equal tails, got " + left_tail.str() + " and " + right_tail.str());
    return translation(std::move(left_tail));
  }
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    if (!(breakpoints[i].x < breakpoints[i + 1].x))
      throw Error(ErrorCode::InvalidMap, "breakpoint x-coordinates must increase strictly");
    if (!(breakpoints[i].y < breakpoints[i + 1].y))
      throw Error(ErrorCode::InvalidMap, "breakpoint y-coordinates must increase strictly");
  }
  const Point& first = breakpoints.front();
  const Point& last = breakpoints.back();
  if (first.y != first.x + left_tail)
    throw Error(ErrorCode::InvalidMap, "left tail " + left_tail.str() + " does not meet breakpoint " + first.x.str() +
                                           ":" + first.y.str());
  if (last.y != last.x + right_tail)
    throw Error(ErrorCode::InvalidMap, "right tail " + right_tail.str() + " does not meet breakpoint " + last.x.str() +
                                           ":" + last.y.str());
  LineMap m;
  m.bps_ = drop_collinear(std::move(breakpoints));
  m.left_ = std::move(left_tail);
  m.right_ = std::move(right_tail);
  if (m.bps_.empty()) {
    assert(m.left_ == m.right_);
  }
  return m;
}


Rat LineMap::operator()(const Rat& x) const {
  if (bps_.empty() || x <= bps_.front().x) return x + left_;
  if (x >= bps_.back().x) return x + right_;
  auto it = std::upper_bound(bps_.begin(), bps_.end(), x, [](const Rat& v, const Point& p) { return v < p.x; });
  return segment_value(*(it - 1), *it, x);
}

ExtRat LineMap::operator()(const ExtRat& x) const {
  if (!x.is_finite()) return x;
  return ExtRat((*this)(x.value()));
}

Rat LineMap::slope_after(std::size_t i) const {
  if (i + 1 >= bps_.size()) return Rat(1);
  return (bps_[i + 1].y - bps_[i].y) / (bps_[i + 1].x - bps_[i].x);
}

LineMap compose(const LineMap& f, const LineMap& g) {
  std::vector<Rat> xs;
  xs.reserve(f.breakpoints().size() + g.breakpoints().size());
  for (const auto& p : g.breakpoints()) xs.push_back(p.x);
  std::vector<Rat> pre;
  pre.reserve(f.breakpoints().size());
  for (const auto& p : f.breakpoints()) pre.push_back(inverse_value(g, p.x));
  std::vector<Rat> merged;
  merged.reserve(xs.size() + pre.size());
  std::merge(xs.begin(), xs.end(), pre.begin(), pre.end(), std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());

  std::vector<Point> pts;
  pts.reserve(merged.size());
  for (auto& x : merged) {
    Rat y = f(g(x));
    pts.push_back({std::move(x), std::move(y)});
  }
  return LineMap::from_breakpoints(std::move(pts), f.left_tail() + g.left_tail(), f.right_tail() + g.right_tail());
}

LineMap invert(const LineMap& f) {
  std::vector<Point> pts;
  pts.reserve(f.breakpoints().size());
  for (const auto& p : f.breakpoints()) pts.push_back({p.y, p.x});
  return LineMap::from_breakpoints(std::move(pts), -f.left_tail(), -f.right_tail());
}

SupportSet support(const LineMap& f) {
  const auto bps = f.breakpoints();
  if (bps.empty()) return f.left_tail().is_zero() ? SupportSet{} : SupportSet::whole_line();

  // Closed components of the fixed-point set, in increasing order.
  struct Closed {
    ExtRat lo, hi;
  };
  std::vector<Closed> fixed;
  if (f.left_tail().is_zero()) fixed.push_back({ExtRat::neg_inf(), ExtRat(bps.front().x)});
  for (std::size_t i = 0; i + 1 < bps.size(); ++i) {
    const Point& p = bps[i];
    const Point& q = bps[i + 1];
    const Rat dp = p.y - p.x;
    const Rat dq = q.y - q.x;
    if (dp.is_zero() && dq.is_zero()) {
      fixed.push_back({ExtRat(p.x), ExtRat(q.x)});
    } else if (dp.is_zero()) {
      fixed.push_back({ExtRat(p.x), ExtRat(p.x)});
    } else if (dq.is_zero()) {
      fixed.push_back({ExtRat(q.x), ExtRat(q.x)});
    } else if (dp.sign() != dq.sign()) {
      const Rat root = p.x + (q.x - p.x) * (-dp) / (dq - dp);
      fixed.push_back({ExtRat(root), ExtRat(root)});
    }
  }
  if (f.right_tail().is_zero()) fixed.push_back({ExtRat(bps.back().x), ExtRat::pos_inf()});

  std::vector<Closed> merged;
  for (auto& c : fixed) {
    if (!merged.empty() && c.lo <= merged.back().hi) {
      if (merged.back().hi < c.hi) merged.back().hi = c.hi;
    } else {
      merged.push_back(c);
    }
  }

  std::vector<Interval> moved;
  ExtRat cursor = ExtRat::neg_inf();
  bool open_left = true;  // cursor is -inf, not a fixed point
  for (const auto& c : merged) {
    if (open_left ? c.lo != ExtRat::neg_inf() : cursor < c.lo) moved.emplace_back(cursor, c.lo);
    cursor = c.hi;
    open_left = false;
  }
  if (cursor != ExtRat::pos_inf()) moved.emplace_back(cursor, ExtRat::pos_inf());
  return SupportSet::from_intervals(std::move(moved));
}

SupportSet image(const LineMap& f, const SupportSet& set) {
  std::vector<Interval> out;
  out.reserve(set.size());
  for (const auto& i : set.intervals()) out.emplace_back(f(i.lo), f(i.hi));
  return SupportSet::from_intervals(std::move(out));
}

LineMap conjugate(const LineMap& g, const LineMap& u) { return compose(u, compose(g, invert(u))); }

LineMap commutator(const LineMap& f, const LineMap& g) {
  return compose(compose(f, g), compose(invert(f), invert(g)));
}

bool agree_on(const LineMap& f, const LineMap& g, const Rat& lo, const Rat& hi) {
  if (hi < lo) throw Error(ErrorCode::InvalidArgument, "agree_on: empty interval");
  std::vector<Rat> pts{lo, hi};
  for (const auto& p : f.breakpoints())
    if (lo < p.x && p.x < hi) pts.push_back(p.x);
  for (const auto& p : g.breakpoints())
    if (lo < p.x && p.x < hi) pts.push_back(p.x);
  return std::all_of(pts.begin(), pts.end(), [&](const Rat& x) { return f(x) == g(x); });
}

}  // namespace plh
