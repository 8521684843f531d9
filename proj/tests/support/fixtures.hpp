#pragma once

#include "mukaikit/mukaikit.hpp"

namespace fx {

using namespace mukaikit;

inline ThreefoldRing quintic() {
  return ThreefoldRing({"quintic", {"H"}, {5}, {0}, {50}, -200, 101});
}

inline ThreefoldRing cp3() {
  return ThreefoldRing({"cp3", {"H"}, {1}, {4}, {6}, 4, 0});
}

inline FlagDescriptor cp3_quartic() { return FlagDescriptor(cp3(), {4}, 0, 34); }

/// rho = 2 flag with restricted gram [[4,2],[2,1]], which is degenerate.
inline FlagDescriptor synthetic_rho2() {
  ThreefoldRing r({"synthetic-rho2", {"A", "B"}, {4, 2, 2, 1, 2, 1, 1, 0}, {1, 0}, {24, 0}, 0, 0});
  return FlagDescriptor(r, {1, 0});
}

/// rho = 2 flag whose restricted gram [[-2,6],[6,-2]] admits the swap isometry.
inline FlagDescriptor swap_rho2() {
  ThreefoldRing r({"swap-rho2", {"A", "B"}, {-5, 3, 3, 3, 3, 3, 3, -5}, {1, 1}, {12, 12}, 0, 0});
  return FlagDescriptor(r, {1, 1});
}

inline ChernData instanton() { return {2, {0}, {1}, 0}; }

inline ChernData line(std::int64_t k) { return ChernData::line_bundle({k}); }

}  // namespace fx
