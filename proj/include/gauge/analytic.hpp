#pragma once

// Closed-form field families whose jets are known exactly, so that jet
// formulas can be checked independently of finite differencing.

#include "gauge/jets.hpp"
#include "gauge/lie.hpp"
#include "gauge/patch.hpp"

#include <string_view>
#include <vector>

namespace gauge {

/// Real scalar function on R^n with exact gradient and hessian:
/// polynomial c + b.x + x^T Q x / 2, or amplitude * sin(k.x + phase).
class ScalarFunction {
 public:
  enum class Kind { Polynomial, Sinusoid };

  static ScalarFunction polynomial(double c, std::vector<double> b, std::vector<double> q_rowmajor);
  static ScalarFunction sinusoid(double amplitude, std::vector<double> k, double phase);
  /// Random function with bounded coefficients; sinusoid or quadratic.
  static ScalarFunction random(Rng& rng, int n);

  /// x -> f(scale * (x - center)), componentwise scale.
  ScalarFunction composed(const std::vector<double>& scale, const Point& center) const;
  /// Composition with the affine map taking the patch box onto [-1, 1]^n,
  /// so random functions stay O(1) on any patch.
  ScalarFunction fitted(const Patch& patch) const;

  Kind kind() const { return kind_; }
  int dim() const { return static_cast<int>(b_.size()); }
  double value(const Point& x) const;
  std::vector<double> gradient(const Point& x) const;
  /// Row-major n x n.
  std::vector<double> hessian(const Point& x) const;

 private:
  Kind kind_ = Kind::Polynomial;
  double c_ = 0.0;              // constant, or amplitude
  std::vector<double> b_;       // linear part, or wave vector
  std::vector<double> q_;       // quadratic part (polynomial only)
  double phase_ = 0.0;
};

/// g(x) = exp(f(x) X).
struct GeneratorFactor {
  AlgebraElement generator;
  ScalarFunction f;
};

/// g(x) = g0 * exp(f_1(x) X_1) * ... * exp(f_m(x) X_m), m <= 3. With m = 0
/// this is the constant family.
struct GaugeFamily {
  GroupElement constant;
  std::vector<GeneratorFactor> factors;

  static GaugeFamily constant_family(GroupElement g0) { return {std::move(g0), {}}; }
  static GaugeFamily single(AlgebraElement x, ScalarFunction f);
  /// Random non-abelian product of `count` single-generator factors.
  static GaugeFamily random(Rng& rng, const GroupSpec& spec, int n, int count = 3);
  /// Built-in named families: "constant", "single", "product", and for U1
  /// "plane-wave". Throws std::invalid_argument for unknown names.
  static GaugeFamily named(std::string_view name, Rng& rng, const GroupSpec& spec, int n);

  /// Every factor function fitted to the patch box.
  GaugeFamily fitted(const Patch& patch) const;

  GroupElement value(const Point& x) const;
  /// Exact 2-jet, composed from the factor jets with jet2_mul.
  Jet2Gauge jet(const Point& x) const;
};

/// A_mu(x) = sum_t f_{mu,t}(x) T_{mu,t}.
struct ConnectionFamily {
  struct Term {
    ScalarFunction f;
    AlgebraElement generator;
  };
  int matrix_dim = 1;
  std::vector<std::vector<Term>> components;  // one list per axis

  static ConnectionFamily random(Rng& rng, const GroupSpec& spec, int n, int terms = 2);
  ConnectionFamily fitted(const Patch& patch) const;
  /// Rescaled so that max_mu |A_mu|_F over the patch points is 1.
  ConnectionFamily normalized(const Patch& patch) const;

  Connection value(const Point& x) const;
  JetConnection jet(const Point& x) const;
};

/// phi(x) = sum_t f_t(x) v_t with complex vectors v_t.
struct MatterFamily {
  struct Term {
    ScalarFunction f;
    Vector v;
  };
  int rep_dim = 1;
  std::vector<Term> terms;

  static MatterFamily random(Rng& rng, int rep_dim, int n, int terms = 3);
  MatterFamily fitted(const Patch& patch) const;
  /// Rescaled so that max |phi| over the patch points is 1.
  MatterFamily normalized(const Patch& patch) const;

  RepVector value(const Point& x) const;
  JetMatter jet(const Point& x) const;
};

/// Sampled group field together with its exact jets.
struct GaugeSample {
  Field<GroupElement> g;
  Field<Jet2Gauge> jets;

  Field<Jet1Gauge> jets1() const;
};

GaugeSample sample_analytic(const Patch& patch, const GaugeFamily& family);
Field<JetConnection> sample_analytic(const Patch& patch, const ConnectionFamily& family);
Field<JetMatter> sample_analytic(const Patch& patch, const MatterFamily& family);

// Random fiber elements with entries drawn like random_algebra_element.
Jet1Gauge random_jet1(Rng& rng, const GroupSpec& spec, int n);
Jet2Gauge random_jet2(Rng& rng, const GroupSpec& spec, int n);
Connection random_connection(Rng& rng, const GroupSpec& spec, int n);
JetConnection random_jet_connection(Rng& rng, const GroupSpec& spec, int n);
JetMatter random_jet_matter(Rng& rng, int rep_dim, int n);

}  // namespace gauge
