// Independent reference implementations used only by tests. Nothing here
// calls into the library's map algebra; values are plain mpq_class.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Q = mpq_class;

inline Q q(long num, long den = 1) {
  Q v(num, den);
  v.canonicalize();
  return v;
}

inline Q floor_q(const Q& x) {
  mpz_class f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return Q(f);
}

inline Q mod_q(const Q& x, const Q& m) { return x - m * floor_q(x / m); }

/// Piecewise affine map through `pts`, slope 1 beyond the ends.
struct Pwl {
  std::vector<std::pair<Q, Q>> pts;
  Q left = 0;   // used only when pts is empty
  Q right = 0;

  Q operator()(const Q& x) const {
    if (pts.empty()) return x + left;
    if (x <= pts.front().first) return x - pts.front().first + pts.front().second;
    if (x >= pts.back().first) return x - pts.back().first + pts.back().second;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      const auto& [x0, y0] = pts[i];
      const auto& [x1, y1] = pts[i + 1];
      if (x0 <= x && x <= x1) return y0 + (y1 - y0) * (x - x0) / (x1 - x0);
    }
    return x;  // unreachable for sorted input
  }
};

/// The bump with corners (0,0), (1/2,1), (1,3/2), (2,2), written as formulas.
inline Q fhat(const Q& x) {
  if (x <= 0 || x >= 2) return x;
  if (x <= q(1, 2)) return 2 * x;
  if (x <= 1) return x + q(1, 2);
  return x / 2 + 1;
}

inline Q fhat_inv(const Q& y) {
  if (y <= 0 || y >= 2) return y;
  if (y <= 1) return y / 2;
  if (y <= q(3, 2)) return y - q(1, 2);
  return 2 * y - 2;
}

/// r_i on the circle of length 5 (i = 1..5), x any rational.
inline Q ring_r(int i, const Q& x) {
  const Q t = mod_q(x - i, 5);
  if (t <= 0 || t >= 2) return mod_q(x, 5);
  return mod_q(fhat(t) + i, 5);
}

inline Q ring_r_inv(int i, const Q& x) {
  const Q t = mod_q(x - i, 5);
  if (t <= 0 || t >= 2) return mod_q(x, 5);
  return mod_q(fhat_inv(t) + i, 5);
}

/// Applies the letters right to left; each letter is (generator, ±1).
inline Q ring_word(const std::vector<std::pair<int, int>>& letters, Q x) {
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) x = it->second > 0 ? ring_r(it->first, x) : ring_r_inv(it->first, x);
  return x;
}

/// c_i = r_{i+2}^2 r_{i+1}^2 r_i^2 r_{i-1} as letters, indices mod 5 in 1..5.
inline std::vector<std::pair<int, int>> conjugator(int i) {
  auto w = [](int k) { return ((k - 1) % 5 + 5) % 5 + 1; };
  return {{w(i + 2), 1}, {w(i + 2), 1}, {w(i + 1), 1}, {w(i + 1), 1}, {w(i), 1}, {w(i), 1}, {w(i - 1), 1}};
}

inline std::vector<std::pair<int, int>> inverse(std::vector<std::pair<int, int>> w) {
  std::reverse(w.begin(), w.end());
  for (auto& l : w) l.second = -l.second;
  return w;
}

/// r'_i = c_i r_i c_i^-1 as letters.
inline std::vector<std::pair<int, int>> rprime(int i) {
  auto w = conjugator(i);
  w.push_back({i, 1});
  const auto inv = inverse(conjugator(i));
  w.insert(w.end(), inv.begin(), inv.end());
  return w;
}

/// Dyadic rational k / 2^e with |value| <= bound.
inline Q random_dyadic(std::mt19937_64& rng, long bound, int max_exp = 4) {
  std::uniform_int_distribution<int> e(0, max_exp);
  const long den = 1L << e(rng);
  std::uniform_int_distribution<long> k(-bound * den, bound * den);
  return q(k(rng), den);
}

/// Random increasing PL data with up to max_bps dyadic breakpoints.
inline Pwl random_pwl(std::mt19937_64& rng, int max_bps = 16) {
  std::uniform_int_distribution<int> count(0, max_bps);
  const int n = count(rng);
  Pwl f;
  if (n == 0) {
    f.left = f.right = random_dyadic(rng, 3);
    return f;
  }
  std::vector<Q> xs;
  while (static_cast<int>(xs.size()) < n) {
    Q x = random_dyadic(rng, 8);
    if (std::find(xs.begin(), xs.end(), x) == xs.end()) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());
  std::uniform_int_distribution<int> slope_pick(0, 6);
  const Q slopes[] = {q(1, 4), q(1, 2), q(1), q(1), q(2), q(4), q(3, 2)};
  Q y = xs.front() + random_dyadic(rng, 2);
  f.pts.push_back({xs.front(), y});
  for (std::size_t i = 1; i < xs.size(); ++i) {
    y += slopes[slope_pick(rng)] * (xs[i] - xs[i - 1]);
    f.pts.push_back({xs[i], y});
  }
  f.left = f.pts.front().second - f.pts.front().first;
  f.right = f.pts.back().second - f.pts.back().first;
  return f;
}

}  // namespace oracle
