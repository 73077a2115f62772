#pragma once

// Points and finite rectangular regions of the planar integer lattice.

#include <array>
#include <set>

namespace latcodes {

using LatticePoint = std::array<int, 2>;  // (column, row)
using LatticeSet = std::set<LatticePoint>;

/// Inclusive rectangle [x0,x1] x [y0,y1]; empty when x1 < x0 or y1 < y0.
struct Region {
  int x0 = 0, y0 = 0, x1 = -1, y1 = -1;

  static Region square(int lo, int hi) { return {lo, lo, hi, hi}; }

  bool empty() const noexcept { return x1 < x0 || y1 < y0; }
  bool contains(const LatticePoint& p) const noexcept {
    return p[0] >= x0 && p[0] <= x1 && p[1] >= y0 && p[1] <= y1;
  }
  Region grown(int pad) const noexcept { return {x0 - pad, y0 - pad, x1 + pad, y1 + pad}; }
  int width() const noexcept { return empty() ? 0 : x1 - x0 + 1; }
  int height() const noexcept { return empty() ? 0 : y1 - y0 + 1; }

  friend bool operator==(const Region&, const Region&) = default;
};

inline int floor_div(int a, int b) {
  int q = a / b;
  return (a % b != 0 && ((a < 0) != (b < 0))) ? q - 1 : q;
}
inline int ceil_div(int a, int b) { return -floor_div(-a, b); }
inline int floor_mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

inline LatticeSet restrict_to(const LatticeSet& s, const Region& r) {
  LatticeSet out;
  for (const auto& p : s)
    if (r.contains(p)) out.insert(p);
  return out;
}

}  // namespace latcodes
