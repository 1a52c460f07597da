#include "gauge/actions.hpp"
#include "gauge/analytic.hpp"
#include "gauge/harness.hpp"
#include "gauge/jets.hpp"
#include "gauge/lagrangians.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>

namespace gauge {

namespace {

// Relative to the coarsest spacing; the coarsest grid has 11 points per axis.
constexpr double kBoxCells = 10.0;
constexpr double kBoxOrigin = 0.3;
constexpr double kNegativeMatter = 1e-3;
constexpr double kNegativeGauge = 1e-6;
constexpr double kNegativeMechanics = 1e-3;

Rng suite_rng(const SuiteConfig& c, const std::string& name) {
  const std::string hex = fnv1a_hex(name);
  return Rng(c.seed ^ std::stoull(hex, nullptr, 16));
}

Point random_point(Rng& rng, int n) {
  Point x(n);
  for (auto& v : x) v = rng.uniform(-1.0, 1.0);
  return x;
}

Jet2Gauge analytic_jet2(Rng& rng, const GroupSpec& g, int n) {
  const GaugeFamily fam = GaugeFamily::random(rng, g, n, 3);
  return fam.jet(random_point(rng, n));
}

JetConnection analytic_connection_jet(Rng& rng, const GroupSpec& g, int n) {
  const ConnectionFamily fam = ConnectionFamily::random(rng, g, n);
  return fam.jet(random_point(rng, n));
}

JetMatter analytic_matter_jet(Rng& rng, int rep_dim, int n) {
  const MatterFamily fam = MatterFamily::random(rng, rep_dim, n);
  return fam.jet(random_point(rng, n));
}

GaugeFamily config_family(Rng& rng, const SuiteConfig& c, int n) {
  return GaugeFamily::named(c.family, rng, c.group, n);
}

int fd_dim(const SuiteConfig& c) { return c.patch.dim == 1 ? 1 : 2; }

double tolerance_for(const std::string& name, const SuiteConfig& c) {
  const auto it = c.tolerances.find(name);
  return it != c.tolerances.end() ? it->second : default_tolerance(name, c);
}

/// error(patch, region, stride) on the box at every h level; the region and
/// stride select the points of the coarsest grid away from the boundary.
template <class Fn>
Convergence fd_study(const SuiteConfig& c, int margin, Fn&& error) {
  const double coarsest = c.h_levels.front();
  std::vector<double> errors;
  for (double h : c.h_levels) {
    const int n = fd_dim(c);
    const Patch p = Patch::box(n, kBoxCells * coarsest, h, kBoxOrigin);
    const int stride = static_cast<int>(std::lround(coarsest / h));
    errors.push_back(error(p, Region::interior(p, margin * stride), stride));
  }
  return classify(c.h_levels, std::move(errors));
}

SuiteResult judge(SuiteResult r, double max_error) {
  r.max_error = max_error;
  r.pass = max_error <= r.tolerance;
  return r;
}

SuiteResult from_study(SuiteResult r, Convergence study) {
  r.max_error = study.errors.back();
  r.pass = *r.max_error <= r.tolerance && ratios_pass(study);
  if (!ratios_pass(study)) r.detail = "convergence ratios outside [3.5, 4.5]";
  r.convergence = std::move(study);
  return r;
}

SuiteResult negative(SuiteResult r, double violation, double threshold, bool rejected = true) {
  r.negative_control = NegativeControl{violation, threshold, rejected && violation > threshold};
  r.tolerance = threshold;
  r.pass = r.negative_control->detected;
  return r;
}

// ---------------------------------------------------------------------------

SuiteResult jet_group_axioms(const SuiteConfig& c, Rng& rng, SuiteResult r) {
  const int n = c.patch.dim;
  const Jet1Gauge unit1 = Jet1Gauge::unit(n, c.group.n);
  const Jet2Gauge unit2 = Jet2Gauge::unit(n, c.group.n);
  double worst = 0.0;
  for (int k = 0; k < c.samples; ++k) {
    const Jet2Gauge p = analytic_jet2(rng, c.group, n);
    const Jet2Gauge q = analytic_jet2(rng, c.group, n);
    const Jet2Gauge s = analytic_jet2(rng, c.group, n);
    const Jet1Gauge a = p.first_order(), b = q.first_order(), d = s.first_order();
    worst = std::max({worst, distance(jet1_mul(jet1_mul(a, b), d), jet1_mul(a, jet1_mul(b, d))),
                      distance(jet1_mul(unit1, a), a), distance(jet1_mul(a, unit1), a),
                      distance(jet1_mul(a, jet1_inv(a)), unit1), distance(jet1_mul(jet1_inv(a), a), unit1),
                      distance(jet2_mul(jet2_mul(p, q), s), jet2_mul(p, jet2_mul(q, s))),
                      distance(jet2_mul(unit2, p), p), distance(jet2_mul(p, unit2), p),
                      distance(jet2_mul(p, jet2_inv(p)), unit2), distance(jet2_mul(jet2_inv(p), p), unit2)});
  }
  return judge(std::move(r), worst);
}

Convergence jet_functoriality_study(const SuiteConfig& c, Rng& rng) {
  const int n = fd_dim(c);
  const GaugeFamily f1 = config_family(rng, c, n);
  const GaugeFamily f2 = config_family(rng, c, n);
  return fd_study(c, 2, [&](const Patch& p, const Region& region, int stride) {
    const auto g = sample(p, [&](const Point& x) { return f1.value(x); });
    const auto k = sample(p, [&](const Point& x) { return f2.value(x); });
    const auto gk = zip_map(g, k, [](const GroupElement& a, const GroupElement& b) { return a * b; });
    const auto lhs1 = jet1_of(gk);
    const auto rhs1 = zip_map(jet1_of(g), jet1_of(k), jet1_mul);
    const auto lhs2 = jet2_of(gk);
    const auto rhs2 = zip_map(jet2_of(g), jet2_of(k), jet2_mul);
    double e1 = 0.0, e2 = 0.0;
    region.for_each_every(p, stride, [&](std::size_t i) {
      e1 = std::max(e1, distance(lhs1[i], rhs1[i]));
      e2 = std::max(e2, distance(lhs2[i], rhs2[i]));
    });
    return e1 + e2;
  });
}

SuiteResult action_axioms(const SuiteConfig& c, Rng& rng, SuiteResult r) {
  const int n = c.patch.dim;
  const Representation rep = Representation::of(c.group);
  const Jet1Gauge unit1 = Jet1Gauge::unit(n, c.group.n);
  const Jet2Gauge unit2 = Jet2Gauge::unit(n, c.group.n);
  double worst = 0.0;
  for (int k = 0; k < c.samples; ++k) {
    const Jet2Gauge p = analytic_jet2(rng, c.group, n), q = analytic_jet2(rng, c.group, n);
    const Jet1Gauge p1 = p.first_order(), q1 = q.first_order();
    const JetMatter jm = analytic_matter_jet(rng, rep.dim(), n);
    const JetConnection jc = analytic_connection_jet(rng, c.group, n);
    const Curvature f = curvature(jc);
    const Variation v{RepTangent(random_vector(rng, rep.dim()))};
    worst = std::max({
        worst,
        distance(act_jet_matter(rep, unit1, jm), jm),
        distance(act_connection(unit1, jc.A), jc.A),
        distance(act_jet_connection(unit2, jc), jc),
        distance(act_jet_matter(rep, jet1_mul(p1, q1), jm), act_jet_matter(rep, p1, act_jet_matter(rep, q1, jm))),
        distance(act_connection(jet1_mul(p1, q1), jc.A), act_connection(p1, act_connection(q1, jc.A))),
        distance(act_jet_connection(jet2_mul(p, q), jc), act_jet_connection(p, act_jet_connection(q, jc))),
        distance(act_curvature(p.g * q.g, f), act_curvature(p.g, act_curvature(q.g, f))),
        (act_variation(rep, p.g * q.g, v).dphi - act_variation(rep, p.g, act_variation(rep, q.g, v)).dphi).norm(),
    });
  }
  return judge(std::move(r), worst);
}

Convergence chain_rule_matter_study(const SuiteConfig& c, Rng& rng) {
  const int n = fd_dim(c);
  const Representation rep = Representation::of(c.group);
  const GaugeFamily gf = config_family(rng, c, n);
  const MatterFamily mf = MatterFamily::random(rng, rep.dim(), n);
  return fd_study(c, 1, [&](const Patch& p, const Region& region, int stride) {
    const auto fd = jet_of(sample(p, [&](const Point& x) { return act_matter(rep, gf.value(x), mf.value(x)); }));
    double worst = 0.0;
    region.for_each_every(p, stride, [&](std::size_t i) {
      const Point x = p.coordinates(i);
      worst = std::max(worst, distance(fd[i], act_jet_matter(rep, gf.jet(x).first_order(), mf.jet(x))));
    });
    return worst;
  });
}

Convergence chain_rule_connection_study(const SuiteConfig& c, Rng& rng) {
  const int n = fd_dim(c);
  const GaugeFamily gf = config_family(rng, c, n);
  const ConnectionFamily cf = ConnectionFamily::random(rng, c.group, n);
  return fd_study(c, 1, [&](const Patch& p, const Region& region, int stride) {
    const auto fd =
        jet_of(sample(p, [&](const Point& x) { return act_connection(gf.jet(x).first_order(), cf.value(x)); }));
    double worst = 0.0;
    region.for_each_every(p, stride, [&](std::size_t i) {
      const Point x = p.coordinates(i);
      worst = std::max(worst, distance(fd[i], act_jet_connection(gf.jet(x), cf.jet(x))));
    });
    return worst;
  });
}

SuiteResult curvature_equivariance(const SuiteConfig& c, Rng& rng, SuiteResult r) {
  const int n = c.patch.dim;
  double worst = 0.0;
  for (int k = 0; k < c.samples; ++k) {
    const Jet2Gauge j = analytic_jet2(rng, c.group, n);
    const JetConnection jc = analytic_connection_jet(rng, c.group, n);
    worst = std::max(worst, distance(curvature(act_jet_connection(j, jc)), act_curvature(j.g, curvature(jc))));
  }
  return judge(std::move(r), worst);
}

SuiteResult gauge_to_zero_1(const SuiteConfig& c, Rng& rng, SuiteResult r) {
  const ConnectionFamily cf = ConnectionFamily::random(rng, c.group, c.patch.dim).fitted(c.patch);
  const auto a = sample(c.patch, [&](const Point& x) { return cf.value(x); });
  double worst = 0.0;
  const auto witnesses = gauge_to_zero_jet1(a);
  for (const auto& w : witnesses) worst = std::max(worst, w.residual);
  if (witnesses.size() != c.patch.size()) worst = std::numeric_limits<double>::infinity();
  return judge(std::move(r), worst);
}

SuiteResult gauge_to_zero_2(const SuiteConfig& c, Rng& rng, SuiteResult r) {
  const ConnectionFamily cf = ConnectionFamily::random(rng, c.group, c.patch.dim).fitted(c.patch);
  const auto witnesses = gauge_to_zero_jet2(sample_analytic(c.patch, cf));
  double worst = 0.0;
  for (const auto& w : witnesses) worst = std::max({worst, w.residual, w.curvature_residual});
  if (witnesses.size() != c.patch.size()) worst = std::numeric_limits<double>::infinity();
  return judge(std::move(r), worst);
}

SuiteResult minimal_coupling_invariance(const SuiteConfig& c, Rng& rng, SuiteResult r) {
  const int n = c.patch.dim;
  const Representation rep = Representation::of(c.group);
  double worst = 0.0;
  for (int k = 0; k < c.samples; ++k) {
    const Jet1Gauge j = analytic_jet2(rng, c.group, n).first_order();
    const Connection a = analytic_connection_jet(rng, c.group, n).A;
    const JetMatter jm = analytic_matter_jet(rng, rep.dim(), n);
    const CovariantMatter lhs = covariant_derivative(rep, act_connection(j, a), act_jet_matter(rep, j, jm));
    const CovariantMatter d = covariant_derivative(rep, a, jm);
    worst = std::max(worst, (lhs.phi.vector() - rep_act(rep, j.g, d.phi).vector()).norm());
    for (int mu = 0; mu < n; ++mu) {
      worst = std::max(worst, (lhs.Dphi[mu].vector() - rep_act(rep, j.g, d.Dphi[mu]).vector()).norm());
    }
  }
  return judge(std::move(r), worst);
}

SuiteResult minimal_coupling_negative(const SuiteConfig& c, Rng& rng, SuiteResult r) {
  const int n = c.patch.dim;
  const Representation rep = Representation::of(c.group);
  const MatterLagrangianSpec broken = MatterLagrangianSpec::broken(c.broken_c);
  bool rejected = false;
  try {
    minimal_coupling(broken, rep, c.make_metric());
  } catch (const std::invalid_argument& e) {
    rejected = true;
    r.detail = e.what();
  }
  const auto l = minimal_coupling_unchecked(broken, rep, c.make_metric());
  double violation = 0.0;
  for (int k = 0; k < c.samples; ++k) {
    const Jet1Gauge j = analytic_jet2(rng, c.group, n).first_order();
    const Connection a = analytic_connection_jet(rng, c.group, n).A;
    const JetMatter jm = analytic_matter_jet(rng, rep.dim(), n);
    violation = std::max(violation, std::abs(l(act_connection(j, a), act_jet_matter(rep, j, jm)) - l(a, jm)));
  }
  return negative(std::move(r), violation, kNegativeMatter, rejected);
}

// Pairs of connection jets with equal curvature and different sym dA.
std::vector<std::pair<JetConnection, JetConnection>> level_set_pairs(const SuiteConfig& c, Rng& rng) {
  const int n = c.patch.dim;
  std::vector<std::pair<JetConnection, JetConnection>> out;
  for (int k = 0; k < c.pairs; ++k) {
    JetConnection jc = analytic_connection_jet(rng, c.group, n);
    JetConnection other = jc;
    for (int mu = 0; mu < n; ++mu) {
      for (int nu = mu; nu < n; ++nu) {
        const AlgebraElement x = random_algebra_element(rng, c.group);
        other.d(mu, nu) += x;
        if (nu != mu) other.d(nu, mu) += x;
      }
    }
    out.emplace_back(std::move(jc), std::move(other));
  }
  return out;
}

SuiteResult utiyama_level_sets(const SuiteConfig& c, Rng& rng, SuiteResult r) {
  const Metric metric = c.make_metric();
  UtiyamaProbe probe;
  probe.group = c.group;
  probe.dim = c.patch.dim;
  probe.seed = rng.next();
  const double e = c.coupling;
  const ConnectionDensity ym =
      utiyama_factor([&](const Curvature& f) { return yang_mills_curvature_density(f, e, metric); }, probe);
  const ConnectionDensity frob =
      utiyama_factor([&](const Curvature& f) { return frobenius_curvature_density(f, metric); }, probe);
  double worst = 0.0;
  for (const auto& [a, b] : level_set_pairs(c, rng)) {
    worst = std::max({worst, std::abs(ym(a) - ym(b)), std::abs(frob(a) - frob(b)),
                      std::abs(ym(a) - gauge_density({GaugeKind::YangMills, e}, a, metric))});
  }
  return judge(std::move(r), worst);
}

SuiteResult utiyama_negative(const SuiteConfig& c, Rng& rng, SuiteResult r) {
  const Metric metric = c.make_metric();
  UtiyamaProbe probe;
  probe.group = c.group;
  probe.dim = c.patch.dim;
  probe.seed = rng.next();
  bool rejected = false;
  if (c.patch.dim < 2) {
    rejected = true;  // no curvature components to depend on
  } else {
    try {
      utiyama_factor([](const Curvature& f) { return f.F(0, 1).matrix()(0, 0).imag(); }, probe);
    } catch (const std::invalid_argument& e) {
      rejected = true;
      r.detail = e.what();
    }
  }
  const GaugeLagrangianSpec broken{GaugeKind::BrokenGauge, c.coupling};
  double smallest = std::numeric_limits<double>::infinity();
  for (const auto& [a, b] : level_set_pairs(c, rng)) {
    smallest = std::min(smallest, std::abs(gauge_density(broken, a, metric) - gauge_density(broken, b, metric)));
  }
  if (c.pairs == 0) smallest = 0.0;
  return negative(std::move(r), smallest, kNegativeGauge, rejected);
}

SuiteResult theorem_ginv1(const SuiteConfig& c, Rng& rng, SuiteResult r) {
  const Patch& p = c.patch;
  const int n = p.dim;
  const Representation rep = Representation::of(c.group);
  const Metric metric = c.make_metric();
  const Region k = Region::interior(p);
  const double points = static_cast<double>(k.point_count());
  const MinimallyCoupledDensity densities[] = {minimal_coupling(MatterLagrangianSpec::free(), rep, metric),
                                               minimal_coupling(c.phi4, rep, metric)};
  const auto broken = minimal_coupling_unchecked(MatterLagrangianSpec::broken(c.broken_c), rep, metric);

  double worst = 0.0, violation = 0.0;
  for (int f = 0; f < c.fields; ++f) {
    const auto g = sample_analytic(p, config_family(rng, c, n).fitted(p)).jets1();
    const ConnectionFamily cf = ConnectionFamily::random(rng, c.group, n).fitted(p).normalized(p);
    const auto a = sample(p, [&](const Point& x) { return cf.value(x); });
    const auto phi = sample_analytic(p, MatterFamily::random(rng, rep.dim(), n).fitted(p).normalized(p));
    const auto a2 = zip_map(g, a, [](const Jet1Gauge& j, const Connection& x) { return act_connection(j, x); });
    const auto phi2 = zip_map(g, phi, [&](const Jet1Gauge& j, const JetMatter& x) { return act_jet_matter(rep, j, x); });
    auto change = [&](const MinimallyCoupledDensity& l, double& pointwise) {
      const auto before = zip_map(a, phi, l);
      const auto after = zip_map(a2, phi2, l);
      k.for_each(p, [&](std::size_t i) { pointwise = std::max(pointwise, std::abs(after[i] - before[i])); });
      return std::abs(action_functional(after, k) - action_functional(before, k));
    };
    for (const auto& l : densities) {
      double pointwise = 0.0;
      const double ds = change(l, pointwise);
      worst = std::max({worst, pointwise, ds / points});
    }
    double broken_pointwise = 0.0;
    const double ds = change(broken, broken_pointwise);
    violation = std::max({violation, broken_pointwise, ds});
  }
  r = judge(std::move(r), worst);
  r.negative_control = NegativeControl{violation, kNegativeMatter, violation > kNegativeMatter};
  r.pass = r.pass && r.negative_control->detected;
  return r;
}

SuiteResult theorem_ginv2(const SuiteConfig& c, Rng& rng, SuiteResult r) {
  const Patch& p = c.patch;
  const int n = p.dim;
  const Metric metric = c.make_metric();
  const Region k = Region::interior(p);
  const double points = static_cast<double>(k.point_count());
  const GaugeLagrangianSpec ym{GaugeKind::YangMills, c.coupling};
  const GaugeLagrangianSpec broken{GaugeKind::BrokenGauge, c.coupling};

  double worst = 0.0, violation = 0.0;
  for (int f = 0; f < c.fields; ++f) {
    const auto g = sample_analytic(p, config_family(rng, c, n).fitted(p)).jets;
    const auto jc = sample_analytic(p, ConnectionFamily::random(rng, c.group, n).fitted(p).normalized(p));
    const auto jc2 = zip_map(g, jc, act_jet_connection);
    auto change = [&](const GaugeLagrangianSpec& spec, double& pointwise) {
      const auto density = [&](const JetConnection& x) { return gauge_density(spec, x, metric); };
      const auto before = map(jc, density);
      const auto after = map(jc2, density);
      k.for_each(p, [&](std::size_t i) { pointwise = std::max(pointwise, std::abs(after[i] - before[i])); });
      return std::abs(action_functional(after, k) - action_functional(before, k));
    };
    double pointwise = 0.0;
    const double ds = change(ym, pointwise);
    worst = std::max({worst, pointwise, ds / points});
    double broken_pointwise = 0.0;
    const double broken_ds = change(broken, broken_pointwise);
    violation = std::max({violation, broken_pointwise, broken_ds});
  }
  r = judge(std::move(r), worst);
  r.negative_control = NegativeControl{violation, kNegativeGauge, violation > kNegativeGauge};
  r.pass = r.pass && r.negative_control->detected;
  return r;
}

SuiteResult mechanics_reduction(const SuiteConfig& c, Rng& rng, SuiteResult r) {
  const Representation rep = Representation::of(c.group);
  const Patch line = Patch::uniform(1, 101, 0.01);
  const Region interval = Region::interior(line);
  const TangentLagrangian kinetic = [](const RepVector&, const RepTangent& v) { return v.vector().squaredNorm(); };

  double curvature_size = 0.0;
  for (int k = 0; k < c.pairs; ++k) {
    curvature_size += static_cast<double>(curvature(analytic_connection_jet(rng, c.group, 1)).F.packed().size());
  }
  const auto curve = sample_analytic(line, MatterFamily::random(rng, rep.dim(), 1));
  const auto g = sample_analytic(line, config_family(rng, c, 1)).jets1();
  const auto moved = zip_map(g, curve, [&](const Jet1Gauge& j, const JetMatter& jm) { return act_jet_matter(rep, j, jm); });
  const double plain = std::abs(mechanics_action(kinetic, moved, interval) - mechanics_action(kinetic, curve, interval));

  const auto a = sample(line, [&, cf = ConnectionFamily::random(rng, c.group, 1)](const Point& x) { return cf.value(x); });
  const auto a2 = zip_map(g, a, [](const Jet1Gauge& j, const Connection& x) { return act_connection(j, x); });
  const double covariant = std::abs(covariant_mechanics_action(kinetic, rep, a2, moved, interval) -
                                    covariant_mechanics_action(kinetic, rep, a, curve, interval));
  r = judge(std::move(r), curvature_size > 0.0 ? std::numeric_limits<double>::infinity() : covariant);
  r.negative_control = NegativeControl{plain, kNegativeMechanics, plain > kNegativeMechanics};
  r.pass = r.pass && r.negative_control->detected;
  return r;
}

Convergence maurer_cartan_study(const SuiteConfig& c, Rng& rng) {
  const int n = fd_dim(c);
  const GaugeFamily gf = config_family(rng, c, n);
  return fd_study(c, 2, [&](const Patch& p, const Region& region, int stride) {
    const auto j1 = jet1_of(sample(p, [&](const Point& x) { return gf.value(x); }));
    std::vector<Field<AlgebraElement>> a, da;  // da[mu * n + nu] = d_mu a_nu
    for (int nu = 0; nu < n; ++nu) a.push_back(map(j1, [nu](const Jet1Gauge& j) { return j.a[nu]; }));
    for (int mu = 0; mu < n; ++mu) {
      for (int nu = 0; nu < n; ++nu) da.push_back(partial(a[nu], mu));
    }
    double worst = 0.0;
    region.for_each_every(p, stride, [&](std::size_t i) {
      for (int mu = 0; mu < n; ++mu) {
        for (int nu = mu + 1; nu < n; ++nu) {
          const AlgebraElement defect = da[mu * n + nu][i] - da[nu * n + mu][i] - bracket(j1[i].a[mu], j1[i].a[nu]);
          worst = std::max(worst, frobenius_norm(defect));
        }
      }
    });
    return worst;
  });
}

using SuiteFn = SuiteResult (*)(const SuiteConfig&, Rng&, SuiteResult);
using StudyFn = Convergence (*)(const SuiteConfig&, Rng&);

struct Entry {
  const char* name;
  const char* anchor;
  SuiteFn run;
  StudyFn study;
};

const Entry kSuites[] = {
    {"jet_group_axioms", "first and second order gauge jets form groups: associativity, unit, inverse",
     jet_group_axioms, nullptr},
    {"jet_functoriality", "jets of pointwise products of gauge transformations are jet-group products", nullptr,
     jet_functoriality_study},
    {"action_axioms", "jet actions on matter, variations, connections, connection jets and curvature are group actions",
     action_axioms, nullptr},
    {"chain_rule_matter", "the jet action on matter jets is the jet of the pointwise action", nullptr,
     chain_rule_matter_study},
    {"chain_rule_connection", "the jet action on connection jets is the jet of the pointwise gauge transformation",
     nullptr, chain_rule_connection_study},
    {"curvature_equivariance", "curvature transforms by the adjoint action of the base group element",
     curvature_equivariance, nullptr},
    {"gauge_to_zero_1", "first order jets act fiber transitively on connections", gauge_to_zero_1, nullptr},
    {"gauge_to_zero_2",
     "second order jets act fiber transitively on connections and the symmetric part of their derivative; "
     "the remaining antisymmetric part is half the curvature",
     gauge_to_zero_2, nullptr},
    {"minimal_coupling_invariance", "the covariant derivative map is equivariant", minimal_coupling_invariance,
     nullptr},
    {"minimal_coupling_negative",
     "minimal coupling of a globally non-invariant matter lagrangian is rejected and breaks gauge invariance",
     minimal_coupling_negative, nullptr},
    {"utiyama_level_sets", "invariant first order gauge lagrangians factor through the curvature map",
     utiyama_level_sets, nullptr},
    {"utiyama_negative",
     "densities depending on the symmetric derivative are not constant on curvature level sets, and "
     "non-invariant curvature densities are rejected",
     utiyama_negative, nullptr},
    {"theorem_ginv1",
     "minimally coupled invariant matter lagrangians are invariant under the first order jet group and give "
     "gauge-invariant actions",
     theorem_ginv1, nullptr},
    {"theorem_ginv2",
     "curvature lagrangians are invariant under the second order jet group and give gauge-invariant actions",
     theorem_ginv2, nullptr},
    {"mechanics_reduction",
     "in one dimension the curvature vanishes identically and only the covariantized action is invariant",
     mechanics_reduction, nullptr},
    {"maurer_cartan", "right-trivialized derivatives satisfy d_mu a_nu - d_nu a_mu = [a_mu, a_nu]", nullptr,
     maurer_cartan_study},
};

const Entry& find_suite(const std::string& name) {
  for (const auto& e : kSuites) {
    if (name == e.name) return e;
  }
  throw ConfigError("unknown suite: " + name);
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& e : kSuites) v.emplace_back(e.name);
    return v;
  }();
  return names;
}

bool is_convergence_suite(const std::string& name) { return find_suite(name).study != nullptr; }

const std::string& suite_anchor(const std::string& name) {
  static const std::map<std::string, std::string> anchors = [] {
    std::map<std::string, std::string> m;
    for (const auto& e : kSuites) m.emplace(e.name, e.anchor);
    return m;
  }();
  find_suite(name);
  return anchors.at(name);
}

double default_tolerance(const std::string& name, const SuiteConfig& c) {
  const Entry& e = find_suite(name);
  if (e.study) {
    const double h = c.h_levels.back();
    const double constant = name == "chain_rule_matter" ? 10.0 : 50.0;
    return constant * h * h;
  }
  if (name == "curvature_equivariance" || name == "mechanics_reduction") return 1e-10;
  return 1e-12;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& config) {
  const Entry& e = find_suite(name);
  const auto start = std::chrono::steady_clock::now();
  SuiteResult r;
  r.name = name;
  r.anchor = e.anchor;
  r.tolerance = tolerance_for(name, config);
  Rng rng = suite_rng(config, name);
  try {
    r = e.study ? from_study(std::move(r), e.study(config, rng)) : e.run(config, rng, std::move(r));
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& ex) {
    r.pass = false;
    r.detail = std::string("error: ") + ex.what();
  }
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

Convergence convergence_study(const SuiteConfig& config, const std::string& suite) {
  const Entry& e = find_suite(suite);
  if (config.h_levels.size() < 2) throw ConfigError("convergence study needs at least 2 h_levels");
  if (e.study) {
    Rng rng = suite_rng(config, suite);
    return e.study(config, rng);
  }
  std::vector<double> errors;
  for (double h : config.h_levels) {
    SuiteConfig c = config;
    c.patch.spacing.assign(c.patch.dim, h);
    const SuiteResult r = run_suite(suite, c);
    errors.push_back(r.max_error.value_or(0.0));
  }
  return classify(config.h_levels, std::move(errors));
}

}  // namespace gauge
