#pragma once

// Rectangular grid on a coordinate domain U in R^n, fields sampled on it,
// central finite differences, and Riemann-sum quadrature.

#include "gauge/lie.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace gauge {

using MultiIndex = std::vector<int>;
using Point = std::vector<double>;

struct Patch {
  int dim = 1;
  std::vector<int> extent;      // points per axis, >= 5
  std::vector<double> spacing;  // h per axis, > 0
  Point origin;

  static Patch uniform(int dim, int extent, double h, double origin = 0.0);
  /// Cube [origin, origin + length]^dim at spacing h; length / h is rounded
  /// to the nearest integer.
  static Patch box(int dim, double length, double h, double origin = 0.0);

  /// Throws std::invalid_argument if the invariants do not hold.
  void validate() const;

  std::size_t size() const;
  std::size_t stride(int axis) const;
  /// Lexicographic order: axis 0 slowest, last axis fastest.
  std::size_t linear(const MultiIndex& idx) const;
  MultiIndex multi_index(std::size_t linear) const;
  Point coordinates(std::size_t linear) const;
  /// Product of the spacings (volume weight of a grid cell).
  double cell_volume() const;

  friend bool operator==(const Patch&, const Patch&) = default;
};

/// Half-open per-axis index box [lo, hi).
struct Region {
  std::vector<int> lo;
  std::vector<int> hi;

  /// Everything except `margin` layers at each side of the patch.
  static Region interior(const Patch& patch, int margin = 1);

  std::size_t point_count() const;
  bool contains(const MultiIndex& idx) const;
  /// Calls f(linear index) for every point, in lexicographic order.
  template <class F>
  void for_each(const Patch& patch, F&& f) const;
  /// Like for_each, restricted to points whose every index is a multiple
  /// of `stride`.
  template <class F>
  void for_each_every(const Patch& patch, int stride, F&& f) const;
};

/// Values of type V at every grid point. The outer `margin` layers are not
/// valid (they hold default-constructed values) after differentiation.
template <class V>
class Field {
 public:
  using value_type = V;

  Field() = default;
  Field(Patch patch, std::vector<V> values, int margin = 0)
      : patch_(std::move(patch)), values_(std::move(values)), margin_(margin) {
    if (values_.size() != patch_.size()) {
      throw std::invalid_argument("field: value count does not match patch size");
    }
  }

  const Patch& patch() const { return patch_; }
  int margin() const { return margin_; }
  std::size_t size() const { return values_.size(); }

  /// Set when values come from finite differences with spacing h.
  bool numerical() const { return fd_spacing_ > 0.0; }
  double fd_spacing() const { return fd_spacing_; }
  void mark_numerical(double h) { fd_spacing_ = h; }

  const V& operator[](std::size_t i) const { return values_[i]; }
  V& operator[](std::size_t i) { return values_[i]; }
  const V& at(const MultiIndex& idx) const { return values_[patch_.linear(idx)]; }
  const std::vector<V>& values() const { return values_; }

  bool valid(std::size_t linear) const;

 private:
  Patch patch_;
  std::vector<V> values_;
  int margin_ = 0;
  double fd_spacing_ = 0.0;
};

/// Finite-difference result type for each field value type, and the
/// central quotient (plus - minus) * scale.
template <class V>
struct Difference;

template <>
struct Difference<double> {
  using type = double;
  static type quotient(double p, double m, double s) { return (p - m) * s; }
};
template <>
struct Difference<Matrix> {
  using type = Matrix;
  static type quotient(const Matrix& p, const Matrix& m, double s) { return (p - m) * s; }
};
template <>
struct Difference<Vector> {
  using type = Vector;
  static type quotient(const Vector& p, const Vector& m, double s) { return (p - m) * s; }
};
template <>
struct Difference<GroupElement> {
  using type = Matrix;
  static type quotient(const GroupElement& p, const GroupElement& m, double s) {
    return (p.matrix() - m.matrix()) * s;
  }
};
template <>
struct Difference<AlgebraElement> {
  using type = AlgebraElement;
  static type quotient(const AlgebraElement& p, const AlgebraElement& m, double s) {
    return (p - m) * s;
  }
};
template <>
struct Difference<RepVector> {
  using type = RepTangent;
  static type quotient(const RepVector& p, const RepVector& m, double s) {
    return RepTangent((p.vector() - m.vector()) * s);
  }
};
template <>
struct Difference<RepTangent> {
  using type = RepTangent;
  static type quotient(const RepTangent& p, const RepTangent& m, double s) {
    return RepTangent((p.vector() - m.vector()) * s);
  }
};
template <class T>
struct Difference<std::vector<T>> {
  using type = std::vector<typename Difference<T>::type>;
  static type quotient(const std::vector<T>& p, const std::vector<T>& m, double s) {
    type out;
    out.reserve(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out.push_back(Difference<T>::quotient(p[i], m[i], s));
    return out;
  }
};

/// Second-order central difference along `axis`; the result has one more
/// invalid boundary layer than `f`.
template <class V>
Field<typename Difference<V>::type> partial(const Field<V>& f, int axis);

/// Applies fn to every valid point; invalid points stay default-constructed.
template <class V, class Fn>
auto map(const Field<V>& f, Fn&& fn) -> Field<std::decay_t<std::invoke_result_t<Fn&, const V&>>>;

template <class A, class B, class Fn>
auto zip_map(const Field<A>& a, const Field<B>& b, Fn&& fn)
    -> Field<std::decay_t<std::invoke_result_t<Fn&, const A&, const B&>>>;

/// Evaluates fn(coordinates) at every grid point.
template <class Fn>
auto sample(const Patch& patch, Fn&& fn) -> Field<std::decay_t<std::invoke_result_t<Fn&, const Point&>>>;

/// Riemann sum of density * cell volume over K, in lexicographic order.
double integrate(const Field<double>& density, const Region& region);

/// Throws std::invalid_argument unless the region is a nonempty box inside
/// the patch interior and clear of the field's invalid margin.
void validate_region(const Patch& patch, const Region& region, int margin = 1);

// ---------------------------------------------------------------------------

template <class F>
void Region::for_each(const Patch& patch, F&& f) const {
  if (lo.empty()) return;
  MultiIndex idx = lo;
  const int n = static_cast<int>(lo.size());
  for (int a = 0; a < n; ++a) {
    if (lo[a] >= hi[a]) return;
  }
  while (true) {
    f(patch.linear(idx));
    int a = n - 1;
    while (a >= 0) {
      if (++idx[a] < hi[a]) break;
      idx[a] = lo[a];
      --a;
    }
    if (a < 0) break;
  }
}

template <class F>
void Region::for_each_every(const Patch& patch, int stride, F&& f) const {
  if (stride < 1) throw std::invalid_argument("region: stride must be >= 1");
  for_each(patch, [&](std::size_t i) {
    const MultiIndex idx = patch.multi_index(i);
    for (int v : idx) {
      if (v % stride != 0) return;
    }
    f(i);
  });
}

template <class V>
bool Field<V>::valid(std::size_t linear) const {
  if (margin_ == 0) return true;
  const MultiIndex idx = patch_.multi_index(linear);
  for (int a = 0; a < patch_.dim; ++a) {
    if (idx[a] < margin_ || idx[a] >= patch_.extent[a] - margin_) return false;
  }
  return true;
}

template <class V>
Field<typename Difference<V>::type> partial(const Field<V>& f, int axis) {
  const Patch& p = f.patch();
  if (axis < 0 || axis >= p.dim) {
    throw std::invalid_argument("partial: axis " + std::to_string(axis) + " out of range");
  }
  const int margin = f.margin() + 1;
  for (int a = 0; a < p.dim; ++a) {
    if (p.extent[a] < 2 * margin + 1) throw std::invalid_argument("partial: patch too small");
  }
  using R = typename Difference<V>::type;
  std::vector<R> out(p.size());
  const std::size_t stride = p.stride(axis);
  const double scale = 1.0 / (2.0 * p.spacing[axis]);
  Region::interior(p, margin).for_each(p, [&](std::size_t i) {
    out[i] = Difference<V>::quotient(f[i + stride], f[i - stride], scale);
  });
  Field<R> result(p, std::move(out), margin);
  double h = p.spacing[axis];
  if (f.numerical()) h = std::max(h, f.fd_spacing());
  result.mark_numerical(h);
  return result;
}

template <class V, class Fn>
auto map(const Field<V>& f, Fn&& fn) -> Field<std::decay_t<std::invoke_result_t<Fn&, const V&>>> {
  using R = std::decay_t<std::invoke_result_t<Fn&, const V&>>;
  std::vector<R> out(f.size());
  Region::interior(f.patch(), f.margin()).for_each(f.patch(), [&](std::size_t i) { out[i] = fn(f[i]); });
  Field<R> result(f.patch(), std::move(out), f.margin());
  if (f.numerical()) result.mark_numerical(f.fd_spacing());
  return result;
}

template <class A, class B, class Fn>
auto zip_map(const Field<A>& a, const Field<B>& b, Fn&& fn)
    -> Field<std::decay_t<std::invoke_result_t<Fn&, const A&, const B&>>> {
  if (!(a.patch() == b.patch())) throw std::invalid_argument("zip_map: fields live on different patches");
  using R = std::decay_t<std::invoke_result_t<Fn&, const A&, const B&>>;
  const int margin = std::max(a.margin(), b.margin());
  std::vector<R> out(a.size());
  Region::interior(a.patch(), margin).for_each(a.patch(), [&](std::size_t i) { out[i] = fn(a[i], b[i]); });
  Field<R> result(a.patch(), std::move(out), margin);
  const double h = std::max(a.fd_spacing(), b.fd_spacing());
  if (h > 0.0) result.mark_numerical(h);
  return result;
}

template <class Fn>
auto sample(const Patch& patch, Fn&& fn) -> Field<std::decay_t<std::invoke_result_t<Fn&, const Point&>>> {
  using R = std::decay_t<std::invoke_result_t<Fn&, const Point&>>;
  std::vector<R> out;
  out.reserve(patch.size());
  for (std::size_t i = 0; i < patch.size(); ++i) out.push_back(fn(patch.coordinates(i)));
  return Field<R>(patch, std::move(out));
}

}  // namespace gauge
