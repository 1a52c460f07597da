#include "gauge/patch.hpp"

#include <cmath>

namespace gauge {

Patch Patch::uniform(int dim, int extent, double h, double origin) {
  Patch p;
  p.dim = dim;
  p.extent.assign(dim, extent);
  p.spacing.assign(dim, h);
  p.origin.assign(dim, origin);
  p.validate();
  return p;
}

Patch Patch::box(int dim, double length, double h, double origin) {
  if (!(h > 0.0) || !(length > 0.0)) throw std::invalid_argument("patch: box length and spacing must be > 0");
  return uniform(dim, static_cast<int>(std::lround(length / h)) + 1, h, origin);
}

void Patch::validate() const {
  if (dim < 1 || dim > 4) throw std::invalid_argument("patch: dim must be in [1, 4]");
  if (static_cast<int>(extent.size()) != dim || static_cast<int>(spacing.size()) != dim ||
      static_cast<int>(origin.size()) != dim) {
    throw std::invalid_argument("patch: extent/spacing/origin must have dim entries");
  }
  for (int a = 0; a < dim; ++a) {
    if (extent[a] < 5) throw std::invalid_argument("patch: extent must be >= 5 on every axis");
    if (!(spacing[a] > 0.0) || !std::isfinite(spacing[a])) {
      throw std::invalid_argument("patch: spacing must be positive");
    }
    if (!std::isfinite(origin[a])) throw std::invalid_argument("patch: origin must be finite");
  }
}

std::size_t Patch::size() const {
  std::size_t s = 1;
  for (int e : extent) s *= static_cast<std::size_t>(e);
  return s;
}

std::size_t Patch::stride(int axis) const {
  std::size_t s = 1;
  for (int a = dim - 1; a > axis; --a) s *= static_cast<std::size_t>(extent[a]);
  return s;
}

std::size_t Patch::linear(const MultiIndex& idx) const {
  std::size_t i = 0;
  for (int a = 0; a < dim; ++a) i = i * static_cast<std::size_t>(extent[a]) + static_cast<std::size_t>(idx[a]);
  return i;
}

MultiIndex Patch::multi_index(std::size_t linear) const {
  MultiIndex idx(dim);
  for (int a = dim - 1; a >= 0; --a) {
    idx[a] = static_cast<int>(linear % static_cast<std::size_t>(extent[a]));
    linear /= static_cast<std::size_t>(extent[a]);
  }
  return idx;
}

Point Patch::coordinates(std::size_t linear) const {
  const MultiIndex idx = multi_index(linear);
  Point x(dim);
  for (int a = 0; a < dim; ++a) x[a] = origin[a] + idx[a] * spacing[a];
  return x;
}

double Patch::cell_volume() const {
  double v = 1.0;
  for (double h : spacing) v *= h;
  return v;
}

Region Region::interior(const Patch& patch, int margin) {
  Region r;
  r.lo.assign(patch.dim, margin);
  r.hi.resize(patch.dim);
  for (int a = 0; a < patch.dim; ++a) r.hi[a] = patch.extent[a] - margin;
  return r;
}

std::size_t Region::point_count() const {
  std::size_t c = lo.empty() ? 0 : 1;
  for (std::size_t a = 0; a < lo.size(); ++a) c *= hi[a] > lo[a] ? static_cast<std::size_t>(hi[a] - lo[a]) : 0;
  return c;
}

bool Region::contains(const MultiIndex& idx) const {
  for (std::size_t a = 0; a < lo.size(); ++a) {
    if (idx[a] < lo[a] || idx[a] >= hi[a]) return false;
  }
  return true;
}

void validate_region(const Patch& patch, const Region& region, int margin) {
  if (static_cast<int>(region.lo.size()) != patch.dim || static_cast<int>(region.hi.size()) != patch.dim) {
    throw std::invalid_argument("region: dimension does not match patch");
  }
  const int m = std::max(margin, 1);
  for (int a = 0; a < patch.dim; ++a) {
    if (region.lo[a] >= region.hi[a]) throw std::invalid_argument("region: empty");
    if (region.lo[a] < m || region.hi[a] > patch.extent[a] - m) {
      throw std::invalid_argument("region: outside the patch interior");
    }
  }
}

double integrate(const Field<double>& density, const Region& region) {
  validate_region(density.patch(), region, density.margin());
  double sum = 0.0;
  region.for_each(density.patch(), [&](std::size_t i) { sum += density[i]; });
  return sum * density.patch().cell_volume();
}

}  // namespace gauge
