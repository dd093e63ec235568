#include <algorithm>

#include "plh/error.hpp"
#include "plh/plmap.hpp"

namespace plh {

namespace {

Rat segment_value(const Point& a, const Point& b, const Rat& x) {
  return a.y + (x - a.x) * (b.y - a.y) / (b.x - a.x);
}

void require_same_modulus(const CircleMap& f, const CircleMap& g) {
  if (f.modulus() != g.modulus())
    throw Error(ErrorCode::ModulusMismatch, f.modulus().str() + " vs " + g.modulus().str());
}

}  // namespace

CircleMap::CircleMap(Rat modulus) : modulus_(std::move(modulus)) {
  if (modulus_.sign() <= 0) throw Error(ErrorCode::InvalidMap, "circle modulus must be positive");
}

CircleMap CircleMap::rotation(Rat modulus, const Rat& angle) {
  CircleMap m(std::move(modulus));
  m.offset_ = angle.mod(m.modulus_);
  return m;
}

CircleMap CircleMap::from_lift_points(Rat modulus, std::vector<Point> points) {
  CircleMap m(std::move(modulus));
  const Rat& L = m.modulus_;
  if (points.empty()) throw Error(ErrorCode::InvalidMap, "a circle map needs at least one lift point");

  for (auto& p : points) {
    const Rat shift = L * from_mpz((p.x / L).floor());
    p.x -= shift;
    p.y -= shift;
  }
  std::sort(points.begin(), points.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
  std::vector<Point> pts;
  pts.reserve(points.size());
  for (auto& p : points) {
    if (!pts.empty() && pts.back().x == p.x) {
      if (pts.back().y != p.y) throw Error(ErrorCode::InvalidMap, "two lift values at x = " + p.x.str());
      continue;
    }
    pts.push_back(std::move(p));
  }
  for (std::size_t i = 0; i + 1 < pts.size(); ++i)
    if (!(pts[i].y < pts[i + 1].y)) throw Error(ErrorCode::InvalidMap, "lift must be strictly increasing");
  if (!(pts.back().y < pts.front().y + L))
    throw Error(ErrorCode::InvalidMap, "lift must have degree 1 (F(x+L) = F(x)+L)");

  const std::size_t n = pts.size();
  const Point wrap_prev{pts[n - 1].x - L, pts[n - 1].y - L};
  const Rat f0 = pts.front().x.is_zero() ? pts.front().y : segment_value(wrap_prev, pts.front(), Rat(0));
  const Rat shift = L * from_mpz((f0 / L).floor());
  for (auto& p : pts) p.y -= shift;
  m.offset_ = f0 - shift;

  // Cyclic collinearity: slope into point i versus slope out of it.
  auto slope = [&](std::size_t i) {  // slope of the segment leaving pts[i]
    const Point& a = pts[i];
    const Point b = i + 1 < n ? pts[i + 1] : Point{pts[0].x + L, pts[0].y + L};
    return (b.y - a.y) / (b.x - a.x);
  };
  std::vector<Rat> out_slope(n);
  for (std::size_t i = 0; i < n; ++i) out_slope[i] = slope(i);
  for (std::size_t i = 0; i < n; ++i) {
    const Rat& in = out_slope[(i + n - 1) % n];
    if (in != out_slope[i]) m.bps_.push_back(pts[i]);
  }
  return m;
}

Rat CircleMap::lift_reduced(const Rat& x) const {
  if (bps_.empty()) return x + offset_;
  const std::size_t n = bps_.size();
  auto it = std::upper_bound(bps_.begin(), bps_.end(), x, [](const Rat& v, const Point& p) { return v < p.x; });
  const std::size_t j = static_cast<std::size_t>(it - bps_.begin());
  if (j == 0) return segment_value({bps_[n - 1].x - modulus_, bps_[n - 1].y - modulus_}, bps_[0], x);
  if (j == n) return segment_value(bps_[n - 1], {bps_[0].x + modulus_, bps_[0].y + modulus_}, x);
  return segment_value(bps_[j - 1], bps_[j], x);
}

Rat CircleMap::lift(const Rat& x) const {
  const Rat shift = modulus_ * from_mpz((x / modulus_).floor());
  return lift_reduced(x - shift) + shift;
}

CircleMap compose(const CircleMap& f, const CircleMap& g) {
  require_same_modulus(f, g);
  if (f.breakpoints().empty() && g.breakpoints().empty())
    return CircleMap::rotation(f.modulus(), f.offset() + g.offset());
  std::vector<Point> pts;
  pts.reserve(f.breakpoints().size() + g.breakpoints().size());
  for (const auto& p : g.breakpoints()) pts.push_back({p.x, f.lift(p.y)});
  if (!f.breakpoints().empty()) {
    const CircleMap g_inv = invert(g);
    for (const auto& p : f.breakpoints()) {
      const Rat x = g_inv.lift(p.x);
      pts.push_back({x, f.lift(g.lift(x))});
    }
  }
  return CircleMap::from_lift_points(f.modulus(), std::move(pts));
}

CircleMap invert(const CircleMap& f) {
  if (f.breakpoints().empty()) return CircleMap::rotation(f.modulus(), -f.offset());
  std::vector<Point> pts;
  pts.reserve(f.breakpoints().size());
  for (const auto& p : f.breakpoints()) pts.push_back({p.y, p.x});
  return CircleMap::from_lift_points(f.modulus(), std::move(pts));
}

ArcSet support(const CircleMap& f) {
  const Rat& L = f.modulus();
  std::vector<Point> pts;
  pts.push_back({Rat(0), f.offset()});
  for (const auto& p : f.breakpoints())
    if (p.x.sign() > 0) pts.push_back(p);
  pts.push_back({L, f.offset() + L});

  // Fixed points on the circle are where F(x) - x is a multiple of L.
  struct Closed {
    Rat lo, hi;
  };
  std::vector<Closed> fixed;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const Point& p = pts[i];
    const Point& q = pts[i + 1];
    const Rat dp = p.y - p.x;
    const Rat dq = q.y - q.x;
    const mpz_class m_lo = (min(dp, dq) / L).ceil();
    const mpz_class m_hi = (max(dp, dq) / L).floor();
    for (mpz_class m = m_lo; m <= m_hi; ++m) {
      const Rat level = L * from_mpz(m);
      const Rat gp = dp - level;
      const Rat gq = dq - level;
      if (gp.is_zero() && gq.is_zero()) {
        fixed.push_back({p.x, q.x});
      } else if (gp.is_zero()) {
        fixed.push_back({p.x, p.x});
      } else if (gq.is_zero()) {
        fixed.push_back({q.x, q.x});
      } else if (gp.sign() != gq.sign()) {
        const Rat root = p.x + (q.x - p.x) * (-gp) / (gq - gp);
        fixed.push_back({root, root});
      }
    }
  }
  std::sort(fixed.begin(), fixed.end(), [](const Closed& a, const Closed& b) { return a.lo < b.lo; });
  std::vector<Closed> merged;
  for (auto& c : fixed) {
    if (!merged.empty() && c.lo <= merged.back().hi) {
      if (merged.back().hi < c.hi) merged.back().hi = c.hi;
    } else {
      merged.push_back(c);
    }
  }
  if (merged.empty()) return ArcSet::full(L);

  std::vector<Interval> pieces;
  for (std::size_t j = 0; j + 1 < merged.size(); ++j) pieces.emplace_back(merged[j].hi, merged[j + 1].lo);
  const bool zero_moves = merged.front().lo.sign() > 0;
  if (zero_moves) {
    pieces.emplace_back(Rat(0), merged.front().lo);
    pieces.emplace_back(merged.back().hi, L);
  }
  return ArcSet::from_fundamental_domain(L, SupportSet::from_intervals(std::move(pieces)), zero_moves);
}

ArcSet image(const CircleMap& f, const ArcSet& set) {
  if (set.modulus() != f.modulus())
    throw Error(ErrorCode::ModulusMismatch, f.modulus().str() + " vs " + set.modulus().str());
  if (set.is_full()) return set;
  std::vector<Arc> arcs;
  arcs.reserve(set.arcs().size());
  for (const auto& a : set.arcs()) arcs.push_back({f(a.start), f(a.end)});
  return ArcSet::from_arcs(f.modulus(), arcs);
}

CircleMap conjugate(const CircleMap& g, const CircleMap& u) { return compose(u, compose(g, invert(u))); }

CircleMap commutator(const CircleMap& f, const CircleMap& g) {
  return compose(compose(f, g), compose(invert(f), invert(g)));
}

}  // namespace plh
