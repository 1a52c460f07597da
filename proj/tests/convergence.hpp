#pragma once

// Error-versus-spacing studies on a fixed physical box.

#include "gauge/patch.hpp"

#include <cmath>
#include <vector>

namespace gauge::test {

inline constexpr double kBoxLength = 0.32;
inline constexpr double kBoxOrigin = 0.3;
inline constexpr double kCoarsest = 0.04;

struct Study {
  std::vector<double> errors;
  std::vector<double> ratios;

  bool ratios_within(double lo, double hi) const {
    for (double r : ratios) {
      if (!(r >= lo && r <= hi)) return false;
    }
    return !ratios.empty();
  }
};

/// error(patch, stride, margin) is evaluated on the box at each spacing;
/// stride selects the points that also lie on the coarsest grid.
template <class Fn>
Study study(int dim, const std::vector<double>& spacings, int margin, Fn&& error) {
  Study s;
  for (double h : spacings) {
    const Patch p = Patch::box(dim, kBoxLength, h, kBoxOrigin);
    const int stride = static_cast<int>(std::lround(kCoarsest / h));
    s.errors.push_back(error(p, Region::interior(p, margin * stride), stride));
  }
  for (std::size_t i = 1; i < s.errors.size(); ++i) s.ratios.push_back(s.errors[i - 1] / s.errors[i]);
  return s;
}

}  // namespace gauge::test
