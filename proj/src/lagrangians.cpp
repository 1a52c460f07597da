#include "gauge/lagrangians.hpp"

#include "gauge/actions.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

namespace gauge {

Metric Metric::minkowski(int n) {
  Metric m = euclidean(n);
  if (n > 0) m.signs[0] = -1.0;
  return m;
}

void MatterLagrangianSpec::validate() const {
  if (!(lambda >= 0.0)) throw std::invalid_argument("matter lagrangian: lambda must be >= 0");
  if (!std::isfinite(v) || !std::isfinite(c)) throw std::invalid_argument("matter lagrangian: non-finite parameter");
}

void GaugeLagrangianSpec::validate() const {
  if (!(coupling > 0.0)) throw std::invalid_argument("gauge lagrangian: coupling must be > 0");
}

MatterKind parse_matter_kind(std::string_view name) {
  if (name == "free") return MatterKind::Free;
  if (name == "phi4") return MatterKind::Phi4;
  if (name == "broken") return MatterKind::Broken;
  throw std::invalid_argument("unknown matter lagrangian kind: " + std::string(name));
}

GaugeKind parse_gauge_kind(std::string_view name) {
  if (name == "yang_mills") return GaugeKind::YangMills;
  if (name == "frobenius_curvature") return GaugeKind::FrobeniusCurvature;
  if (name == "broken_gauge") return GaugeKind::BrokenGauge;
  throw std::invalid_argument("unknown gauge lagrangian kind: " + std::string(name));
}

CovariantMatter covariant_derivative(const Representation& rep, const Connection& a, const JetMatter& jm) {
  if (a.size() != jm.dphi.size()) throw std::invalid_argument("covariant_derivative: dimension mismatch");
  CovariantMatter out{jm.phi, {}};
  out.Dphi.reserve(a.size());
  for (std::size_t mu = 0; mu < a.size(); ++mu) {
    out.Dphi.push_back(jm.dphi[mu] + fundamental_vector_field(rep, a[mu], jm.phi));
  }
  return out;
}

double matter_density_vec(const MatterLagrangianSpec& spec, const RepVector& phi,
                          const std::vector<RepTangent>& dphi, const Metric& metric) {
  if (static_cast<int>(dphi.size()) != metric.dim()) {
    throw std::invalid_argument("matter density: metric dimension mismatch");
  }
  double value = 0.0;
  for (std::size_t mu = 0; mu < dphi.size(); ++mu) value += metric(static_cast<int>(mu)) * dphi[mu].vector().squaredNorm();
  if (spec.kind == MatterKind::Phi4) {
    const double r = phi.vector().squaredNorm() - spec.v * spec.v;
    value += spec.lambda * r * r;
  } else if (spec.kind == MatterKind::Broken) {
    value += spec.c * phi.vector()(0).real();
  }
  return value;
}

MinimallyCoupledDensity::MinimallyCoupledDensity(MatterLagrangianSpec spec, Representation rep, Metric metric)
    : spec_(spec), rep_(rep), metric_(std::move(metric)) {
  spec_.validate();
}

double MinimallyCoupledDensity::operator()(const Connection& a, const JetMatter& jm) const {
  const CovariantMatter d = covariant_derivative(rep_, a, jm);
  return matter_density_vec(spec_, d.phi, d.Dphi, metric_);
}

MinimallyCoupledDensity minimal_coupling(const MatterLagrangianSpec& spec, const Representation& rep,
                                         const Metric& metric) {
  if (spec.kind == MatterKind::Broken) {
    throw std::invalid_argument(
        "minimal_coupling: the broken matter lagrangian is not globally invariant, so its minimal "
        "coupling is not gauge invariant");
  }
  return {spec, rep, metric};
}

MinimallyCoupledDensity minimal_coupling_unchecked(const MatterLagrangianSpec& spec, const Representation& rep,
                                                   const Metric& metric) {
  return {spec, rep, metric};
}

double algebra_inner(const AlgebraElement& x, const AlgebraElement& y) {
  return -(x.matrix() * y.matrix()).trace().real();
}

double yang_mills_curvature_density(const Curvature& f, double coupling, const Metric& metric) {
  double sum = 0.0;
  const int n = f.F.dim();
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = mu + 1; nu < n; ++nu) {
      const AlgebraElement x = f.F(mu, nu);
      const Matrix& m = x.matrix();
      sum += metric(mu) * metric(nu) * (m.adjoint() * m).trace().real();
    }
  }
  return sum / (2.0 * coupling * coupling);
}

double frobenius_curvature_density(const Curvature& f, const Metric& metric) {
  double sum = 0.0;
  const int n = f.F.dim();
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = mu + 1; nu < n; ++nu) sum += metric(mu) * metric(nu) * f.F(mu, nu).matrix().squaredNorm();
  }
  return sum;
}

double gauge_density(const GaugeLagrangianSpec& spec, const JetConnection& jc, const Metric& metric) {
  spec.validate();
  if (jc.dim() != metric.dim()) throw std::invalid_argument("gauge density: metric dimension mismatch");
  const Curvature f = curvature(jc);
  switch (spec.kind) {
    case GaugeKind::YangMills:
      return yang_mills_curvature_density(f, spec.coupling, metric);
    case GaugeKind::FrobeniusCurvature:
      return frobenius_curvature_density(f, metric);
    case GaugeKind::BrokenGauge: {
      double extra = 0.0;
      const SplitConnection parts = split_jet_connection(jc);
      for (const auto& s : parts.sym.packed()) extra += s.matrix().squaredNorm();
      return yang_mills_curvature_density(f, spec.coupling, metric) + extra;
    }
  }
  return 0.0;
}

ConnectionDensity utiyama_factor(CurvatureDensity l_curv, const UtiyamaProbe& probe) {
  Rng rng(probe.seed);
  const int n = probe.dim;
  for (int k = 0; k < probe.samples; ++k) {
    Curvature f{AntisymmetricArray(n, probe.group.n)};
    for (int mu = 0; mu < n; ++mu) {
      for (int nu = mu + 1; nu < n; ++nu) f.F.set(mu, nu, random_algebra_element(rng, probe.group));
    }
    const GroupElement g = random_group_element(rng, probe.group);
    const double before = l_curv(f);
    const double after = l_curv(act_curvature(g, f));
    const double defect = std::abs(after - before);
    if (!(defect <= probe.tolerance * std::max(1.0, std::abs(before)))) {
      std::ostringstream msg;
      msg << "utiyama_factor: curvature density is not invariant under the adjoint action (probe " << k
          << ", change " << defect << " > " << probe.tolerance << ")";
      throw std::invalid_argument(msg.str());
    }
  }
  return [l = std::move(l_curv)](const JetConnection& jc) { return l(curvature(jc)); };
}

double action_functional(const Field<double>& density, const Region& region) {
  return integrate(density, region);
}

double mechanics_action(const TangentLagrangian& l, const Field<JetMatter>& curve, const Region& interval) {
  if (curve.patch().dim != 1) throw std::invalid_argument("mechanics_action: requires a 1-dimensional patch");
  const Field<double> density = map(curve, [&](const JetMatter& jm) { return l(jm.phi, jm.dphi.front()); });
  return integrate(density, interval);
}

double covariant_mechanics_action(const TangentLagrangian& l, const Representation& rep,
                                  const Field<Connection>& a, const Field<JetMatter>& curve,
                                  const Region& interval) {
  if (curve.patch().dim != 1) {
    throw std::invalid_argument("covariant_mechanics_action: requires a 1-dimensional patch");
  }
  const Field<double> density = zip_map(a, curve, [&](const Connection& ax, const JetMatter& jm) {
    const CovariantMatter d = covariant_derivative(rep, ax, jm);
    return l(d.phi, d.Dphi.front());
  });
  return integrate(density, interval);
}

}  // namespace gauge
