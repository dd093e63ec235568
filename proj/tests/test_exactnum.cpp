#include <doctest.h>

#include <random>

#include "convert.hpp"
#include "plh/error.hpp"
#include "plh/intervals.hpp"

using namespace plh;
using testing_support::R;

namespace {

SupportSet line(std::initializer_list<std::pair<Rat, Rat>> parts) {
  std::vector<Interval> v;
  for (const auto& [lo, hi] : parts) v.emplace_back(lo, hi);
  return SupportSet::from_intervals(v);
}

ArcSet arcs(long modulus, std::initializer_list<std::pair<Rat, Rat>> parts) {
  std::vector<Arc> v;
  for (const auto& [a, b] : parts) v.push_back({a, b});
  return ArcSet::from_arcs(Rat(modulus), v);
}

}  // namespace

TEST_CASE("rationals are canonical") {
  CHECK(Rat(2, 4) == Rat(1, 2));
  CHECK(Rat(3, -6).str() == "-1/2");
  CHECK(Rat::parse("10/4").str() == "5/2");
  CHECK(Rat::parse("-7").str() == "-7");
  CHECK_THROWS_AS(Rat::parse("1/0"), Error);
  CHECK_THROWS_AS(Rat::parse("x"), Error);
  CHECK(Rat(-7, 2).floor() == -4);
  CHECK(Rat(-7, 2).mod(Rat(5)) == Rat(3, 2));
  CHECK(Rat(37, 8).mod(Rat(5)) == Rat(37, 8));
}

TEST_CASE("extended rationals order the infinities around every rational") {
  CHECK(ExtRat::neg_inf() < ExtRat(Rat(-1000000)));
  CHECK(ExtRat(Rat(1000000)) < ExtRat::pos_inf());
  CHECK(ExtRat::parse("-inf") == ExtRat::neg_inf());
  CHECK(ExtRat::parse("+inf").str() == "+inf");
  CHECK(ExtRat::parse("3/6") == ExtRat(Rat(1, 2)));
}

TEST_CASE("line unions and intersections") {
  CHECK(ss_union(line({{R(0), R(2)}}), line({{R(1), R(3)}})) == line({{R(0), R(3)}}));
  const SupportSet touching = ss_union(line({{R(0), R(1)}}), line({{R(1), R(2)}}));
  CHECK(touching.size() == 2);
  CHECK_FALSE(touching.contains(R(1)));
  CHECK(ss_intersect(line({{R(1), R(3)}}), line({{R(2), R(4)}})) == line({{R(2), R(3)}}));
  CHECK(ss_intersect(line({{R(1), R(3)}}), line({{R(3), R(5)}})).empty());
  CHECK(ss_is_disjoint(line({{R(0), R(1)}}), line({{R(1), R(2)}})));
  CHECK_FALSE(ss_is_disjoint(line({{R(1), R(3)}}), line({{R(1), R(3)}})));
  CHECK(SupportSet::whole_line().str() == "(-inf,+inf)");
}

TEST_CASE("arc unions and intersections wrap through zero") {
  const ArcSet empty(Rat(5));
  CHECK(ss_union(empty, arcs(5, {{R(4), R(1)}})) == arcs(5, {{R(4), R(1)}}));
  CHECK(ss_intersect(arcs(5, {{R(3), R(0)}}), arcs(5, {{R(4), R(1)}})) == arcs(5, {{R(4), R(0)}}));
  CHECK(ss_is_disjoint(arcs(5, {{R(36, 8), R(37, 8)}}), arcs(5, {{R(0), R(1, 8)}})));
  CHECK_THROWS_AS(ss_union(arcs(5, {{R(1), R(2)}}), arcs(4, {{R(1), R(2)}})), Error);
  CHECK(ss_union(arcs(5, {{R(0), R(3)}}), arcs(5, {{R(2), R(0)}})).is_full() == false);
  CHECK(ss_union(arcs(5, {{R(0), R(3)}}), arcs(5, {{R(2), R(1)}})).is_full());
}

TEST_CASE("punctured circle arc") {
  const ArcSet p = arcs(5, {{R(1), R(1)}});
  CHECK_FALSE(p.is_full());
  CHECK_FALSE(p.contains(R(1)));
  CHECK(p.contains(R(0)));
  CHECK(p.length() == Rat(5));
}

TEST_CASE("parsing pieces") {
  const Interval i = parse_open_interval("(-inf,3/2)");
  CHECK(i.lo == ExtRat::neg_inf());
  CHECK(i.hi == ExtRat(R(3, 2)));
  CHECK(parse_closed_piece("[5/2,11/4]") == ClosedPiece{R(5, 2), R(11, 4)});
  CHECK_THROWS_AS(parse_open_interval("(2,1)"), Error);
  CHECK_THROWS_AS(parse_closed_piece("(0,1)"), Error);
}

namespace {

// Random sets are built from intervals with small dyadic endpoints; they are
// compared against direct membership of the pieces at many sample points.
std::vector<std::pair<Rat, Rat>> random_pieces(std::mt19937_64& rng, int max_n, long bound) {
  std::uniform_int_distribution<int> count(0, max_n);
  std::vector<std::pair<Rat, Rat>> out;
  for (int n = count(rng); n > 0; --n) {
    Rat a = testing_support::to_rat(oracle::random_dyadic(rng, bound, 2));
    Rat b = testing_support::to_rat(oracle::random_dyadic(rng, bound, 2));
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    out.emplace_back(a, b);
  }
  return out;
}

bool in_pieces(const std::vector<std::pair<Rat, Rat>>& pieces, const Rat& x) {
  for (const auto& [a, b] : pieces)
    if (a < x && x < b) return true;
  return false;
}

bool in_arc_pieces(const std::vector<std::pair<Rat, Rat>>& pieces, const Rat& x, const Rat& modulus) {
  for (const auto& [a, b] : pieces) {
    const Rat s = (x - a).mod(modulus);
    const Rat len = (b - a).mod(modulus);
    if (s.sign() > 0 && (len.is_zero() || s < len)) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("line set algebra matches pointwise membership") {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pa = random_pieces(rng, 4, 4);
    const auto pb = random_pieces(rng, 4, 4);
    std::vector<Interval> va, vb;
    for (const auto& [lo, hi] : pa) va.emplace_back(lo, hi);
    for (const auto& [lo, hi] : pb) vb.emplace_back(lo, hi);
    const SupportSet a = SupportSet::from_intervals(va);
    const SupportSet b = SupportSet::from_intervals(vb);
    const SupportSet u = ss_union(a, b);
    const SupportSet n = ss_intersect(a, b);
    CHECK(ss_union(b, a) == u);
    CHECK(ss_intersect(b, a) == n);
    CHECK(ss_union(a, a) == a);
    CHECK(ss_is_disjoint(a, b) == n.empty());
    for (int k = -40; k <= 40; ++k) {
      const Rat x(k, 8);
      const bool ia = in_pieces(pa, x), ib = in_pieces(pb, x);
      REQUIRE(a.contains(x) == ia);
      REQUIRE(u.contains(x) == (ia || ib));
      REQUIRE(n.contains(x) == (ia && ib));
    }
    for (std::size_t i = 0; i + 1 < u.size(); ++i) CHECK(u.intervals()[i].hi <= u.intervals()[i + 1].lo);
  }
}

TEST_CASE("arc set algebra matches pointwise membership") {
  std::mt19937_64 rng(77);
  const Rat modulus(5);
  for (int trial = 0; trial < 300; ++trial) {
    auto to_arcs = [&](const std::vector<std::pair<Rat, Rat>>& pieces) {
      std::vector<Arc> v;
      for (const auto& [lo, hi] : pieces) v.push_back({lo.mod(modulus), hi.mod(modulus)});
      return v;
    };
    auto pa = random_pieces(rng, 3, 5);
    auto pb = random_pieces(rng, 3, 5);
    for (auto* p : {&pa, &pb})
      for (auto& [lo, hi] : *p) {
        lo = lo.mod(modulus);
        hi = hi.mod(modulus);
      }
    const ArcSet a = ArcSet::from_arcs(modulus, to_arcs(pa));
    const ArcSet b = ArcSet::from_arcs(modulus, to_arcs(pb));
    const ArcSet u = ss_union(a, b);
    const ArcSet n = ss_intersect(a, b);
    CHECK(ss_union(b, a) == u);
    CHECK(ss_intersect(b, a) == n);
    CHECK(ss_is_disjoint(a, b) == n.empty());
    CHECK(u.length() <= a.length() + b.length());
    if (ss_is_disjoint(a, b)) CHECK(u.length() == a.length() + b.length());
    for (int k = 0; k < 40; ++k) {
      const Rat x(k, 8);
      const bool ia = in_arc_pieces(pa, x, modulus), ib = in_arc_pieces(pb, x, modulus);
      REQUIRE(a.contains(x) == ia);
      REQUIRE(u.contains(x) == (ia || ib));
      REQUIRE(n.contains(x) == (ia && ib));
    }
  }
}
