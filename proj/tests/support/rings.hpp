#pragma once

#include <vector>

#include "plh/chain.hpp"
#include "plh/plmap.hpp"

namespace testing_support {

/// Profiles on [0,2] with p(1/2)-style calibration moved around but keeping
/// p(p(1) - 1) = 1, which is what condition (ii) needs on a shift ring.
inline std::vector<std::vector<plh::Point>> perturbed_profiles() {
  using plh::Rat;
  return {
      {{Rat(0), Rat(0)}, {Rat(1, 4), Rat(1)}, {Rat(1), Rat(5, 4)}, {Rat(2), Rat(2)}},
      {{Rat(0), Rat(0)}, {Rat(3, 4), Rat(1)}, {Rat(1), Rat(7, 4)}, {Rat(2), Rat(2)}},
      {{Rat(0), Rat(0)}, {Rat(1, 4), Rat(1, 2)}, {Rat(1, 2), Rat(1)}, {Rat(1), Rat(3, 2)}, {Rat(3, 2), Rat(15, 8)},
       {Rat(2), Rat(2)}},
      {{Rat(0), Rat(0)}, {Rat(1, 2), Rat(1)}, {Rat(1), Rat(3, 2)}, {Rat(5, 4), Rat(7, 4)}, {Rat(2), Rat(2)}},
  };
}

/// The standard bump rescaled onto the arc (lo, hi) of the circle of length
/// `modulus`, identity elsewhere. lo may exceed hi numerically by wrapping:
/// pass hi > lo in lift coordinates.
inline plh::CircleMap circle_bump(const plh::Rat& lo, const plh::Rat& hi, const plh::Rat& modulus) {
  const plh::LineMap b = plh::make_bump(lo, hi);
  std::vector<plh::Point> pts(b.breakpoints().begin(), b.breakpoints().end());
  const plh::Rat rest = hi + (modulus - (hi - lo)) / plh::Rat(2);
  pts.push_back({rest, rest});
  return plh::CircleMap::from_lift_points(modulus, pts);
}

}  // namespace testing_support
