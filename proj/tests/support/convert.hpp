#pragma once

#include "oracle.hpp"
#include "plh/plmap.hpp"

namespace testing_support {

inline plh::Rat R(long num, long den = 1) { return plh::Rat(num, den); }

inline plh::Rat to_rat(const oracle::Q& v) { return plh::Rat(v); }

inline oracle::Q to_q(const plh::Rat& r) { return r.raw(); }

inline plh::LineMap to_line_map(const oracle::Pwl& f) {
  if (f.pts.empty()) return plh::LineMap::translation(to_rat(f.left));
  std::vector<plh::Point> bps;
  for (const auto& [x, y] : f.pts) bps.push_back({to_rat(x), to_rat(y)});
  return plh::LineMap::from_breakpoints(std::move(bps), to_rat(f.left), to_rat(f.right));
}

}  // namespace testing_support
