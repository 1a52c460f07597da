#pragma once

// Matter and gauge-field lagrangian densities, minimal coupling, Utiyama
// factorization through the curvature map, and action functionals.
//
// Conventions: index contraction uses a diagonal metric (Euclidean by
// default), the inner product on the Lie algebra is -tr(XY), densities are
// coefficients of dx^1 ^ ... ^ dx^n, and D_mu = d_mu + A_mu.

#include "gauge/jets.hpp"
#include "gauge/lie.hpp"
#include "gauge/patch.hpp"

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

namespace gauge {

/// Diagonal metric used to raise indices in contractions.
struct Metric {
  std::vector<double> signs;

  static Metric euclidean(int n) { return {std::vector<double>(n, 1.0)}; }
  /// (-, +, ..., +)
  static Metric minkowski(int n);

  int dim() const { return static_cast<int>(signs.size()); }
  double operator()(int mu) const { return signs[mu]; }
};

enum class MatterKind { Free, Phi4, Broken };

struct MatterLagrangianSpec {
  MatterKind kind = MatterKind::Free;
  double lambda = 0.0;
  double v = 0.0;
  double c = 0.0;  // weight of the non-invariant Re(phi_1) term

  static MatterLagrangianSpec free() { return {}; }
  static MatterLagrangianSpec phi4(double lambda, double v) { return {MatterKind::Phi4, lambda, v, 0.0}; }
  static MatterLagrangianSpec broken(double c) { return {MatterKind::Broken, 0.0, 0.0, c}; }

  void validate() const;
};

enum class GaugeKind { YangMills, FrobeniusCurvature, BrokenGauge };

struct GaugeLagrangianSpec {
  GaugeKind kind = GaugeKind::YangMills;
  double coupling = 1.0;  // e

  void validate() const;
};

MatterKind parse_matter_kind(std::string_view name);
GaugeKind parse_gauge_kind(std::string_view name);

/// (phi, D phi) with D_mu phi = d_mu phi + A_mu . phi.
struct CovariantMatter {
  RepVector phi;
  std::vector<RepTangent> Dphi;
};

CovariantMatter covariant_derivative(const Representation& rep, const Connection& a, const JetMatter& jm);

/// Globally invariant density on (phi, D phi):
///   free:   sum_mu eta^mu |D_mu phi|^2
///   phi4:   + lambda (|phi|^2 - v^2)^2
///   broken: + c Re(phi_1)
double matter_density_vec(const MatterLagrangianSpec& spec, const RepVector& phi,
                          const std::vector<RepTangent>& dphi, const Metric& metric);

/// Minimally coupled density L(A, phi, d phi) = Lvec(phi, D_A phi).
class MinimallyCoupledDensity {
 public:
  MinimallyCoupledDensity(MatterLagrangianSpec spec, Representation rep, Metric metric);

  double operator()(const Connection& a, const JetMatter& jm) const;
  const MatterLagrangianSpec& spec() const { return spec_; }

 private:
  MatterLagrangianSpec spec_;
  Representation rep_;
  Metric metric_;
};

/// Rejects the broken kind with std::invalid_argument.
MinimallyCoupledDensity minimal_coupling(const MatterLagrangianSpec& spec, const Representation& rep,
                                         const Metric& metric);
/// Accepts any kind; used for negative controls.
MinimallyCoupledDensity minimal_coupling_unchecked(const MatterLagrangianSpec& spec, const Representation& rep,
                                                   const Metric& metric);

/// -tr(XY), positive definite on anti-hermitian matrices.
double algebra_inner(const AlgebraElement& x, const AlgebraElement& y);

/// yang_mills:           1/(2e^2) sum_{mu<nu} eta^mu eta^nu Re tr(F^dagger F)
/// frobenius_curvature:  sum_{mu<nu} eta^mu eta^nu |F_mu_nu|_F^2
/// broken_gauge:         yang_mills + sum_{mu<=nu} |d_(mu A_nu)|_F^2
double gauge_density(const GaugeLagrangianSpec& spec, const JetConnection& jc, const Metric& metric);

/// Curvature-level densities.
double yang_mills_curvature_density(const Curvature& f, double coupling, const Metric& metric);
double frobenius_curvature_density(const Curvature& f, const Metric& metric);

using CurvatureDensity = std::function<double(const Curvature&)>;
using ConnectionDensity = std::function<double(const JetConnection&)>;

/// Options for the invariance probe run by utiyama_factor.
struct UtiyamaProbe {
  GroupSpec group = GroupSpec::su2();
  int dim = 2;
  std::uint64_t seed = 0x5eed;
  int samples = 16;
  double tolerance = 1e-10;
};

/// Returns JC -> L_curv(curvature(JC)) after checking that L_curv is
/// invariant under act_curvature on random probes; throws
/// std::invalid_argument with a diagnostic otherwise.
ConnectionDensity utiyama_factor(CurvatureDensity l_curv, const UtiyamaProbe& probe);

/// Integral of a density field over K.
double action_functional(const Field<double>& density, const Region& region);

using TangentLagrangian = std::function<double(const RepVector&, const RepTangent&)>;

/// S[q] = integral of L(q, qdot) for a curve on a 1-dimensional patch; the
/// curve is given as its jet field (q, qdot).
double mechanics_action(const TangentLagrangian& l, const Field<JetMatter>& curve, const Region& interval);

/// Covariantized: integral of L(q, qdot + A q) with a 1-dimensional
/// connection field A.
double covariant_mechanics_action(const TangentLagrangian& l, const Representation& rep,
                                  const Field<Connection>& a, const Field<JetMatter>& curve,
                                  const Region& interval);

}  // namespace gauge
