#include "gauge/lagrangians.hpp"

#include "gauge/actions.hpp"
#include "gauge/analytic.hpp"

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"

using namespace gauge;
using gauge::test::dist;

namespace {

const GroupSpec kGroups[] = {GroupSpec::u1(), GroupSpec::su2(), GroupSpec::su3()};

// Adds a symmetric perturbation to dA; the curvature is unchanged.
JetConnection with_symmetric_shift(JetConnection jc, Rng& rng, const GroupSpec& spec) {
  const int n = jc.dim();
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = mu; nu < n; ++nu) {
      const AlgebraElement x = random_algebra_element(rng, spec);
      jc.d(mu, nu) = jc.d(mu, nu) + x;
      if (nu != mu) jc.d(nu, mu) = jc.d(nu, mu) + x;
    }
  }
  return jc;
}

}  // namespace

TEST_CASE("parsing and validation") {
  CHECK(parse_matter_kind("phi4") == MatterKind::Phi4);
  CHECK(parse_gauge_kind("broken_gauge") == GaugeKind::BrokenGauge);
  CHECK_THROWS_AS(parse_matter_kind("dirac"), std::invalid_argument);
  CHECK_THROWS_AS(parse_gauge_kind("chern_simons"), std::invalid_argument);
  CHECK_THROWS_AS(MatterLagrangianSpec::phi4(-1.0, 1.0).validate(), std::invalid_argument);
  CHECK_THROWS_AS((GaugeLagrangianSpec{GaugeKind::YangMills, 0.0}.validate()), std::invalid_argument);
  const Representation rep = Representation::fundamental(2);
  CHECK_THROWS_AS(minimal_coupling(MatterLagrangianSpec::broken(1.0), rep, Metric::euclidean(2)),
                  std::invalid_argument);
  CHECK_NOTHROW(minimal_coupling_unchecked(MatterLagrangianSpec::broken(1.0), rep, Metric::euclidean(2)));
}

TEST_CASE("covariant derivative is equivariant") {
  for (const auto& spec : kGroups) {
    Rng rng(10 + spec.n);
    for (RepKind kind : {RepKind::Fundamental, RepKind::Adjoint}) {
      const Representation rep{kind, spec.n};
      double worst = 0.0;
      for (int k = 0; k < 300; ++k) {
        const Jet1Gauge j = random_jet1(rng, spec, 3);
        const Connection a = random_connection(rng, spec, 3);
        const JetMatter jm = random_jet_matter(rng, rep.dim(), 3);
        const CovariantMatter lhs = covariant_derivative(rep, act_connection(j, a), act_jet_matter(rep, j, jm));
        const CovariantMatter d = covariant_derivative(rep, a, jm);
        worst = std::max(worst, (lhs.phi.vector() - rep_act(rep, j.g, d.phi).vector()).norm());
        for (int mu = 0; mu < 3; ++mu) {
          worst = std::max(worst, (lhs.Dphi[mu].vector() - rep_act(rep, j.g, d.Dphi[mu]).vector()).norm());
        }
      }
      CHECK(worst <= 1e-12);
    }
  }
}

TEST_CASE("matter densities") {
  const Complex i(0.0, 1.0);
  const RepVector phi(Vector{{Complex(1.0, 2.0), Complex(0.0, -1.0)}});
  const std::vector<RepTangent> dphi{RepTangent(Vector{{1.0, i}}), RepTangent(Vector{{2.0, 0.0}})};
  const Metric e = Metric::euclidean(2);
  CHECK(matter_density_vec(MatterLagrangianSpec::free(), phi, dphi, e) == 2.0 + 4.0);
  CHECK(matter_density_vec(MatterLagrangianSpec::free(), phi, dphi, Metric::minkowski(2)) == -2.0 + 4.0);
  // |phi|^2 = 6
  CHECK(matter_density_vec(MatterLagrangianSpec::phi4(0.5, 2.0), phi, dphi, e) == 6.0 + 0.5 * 4.0);
  CHECK(matter_density_vec(MatterLagrangianSpec::broken(3.0), phi, dphi, e) == 6.0 + 3.0);
  CHECK_THROWS_AS(matter_density_vec(MatterLagrangianSpec::free(), phi, dphi, Metric::euclidean(3)),
                  std::invalid_argument);

  // zero connection: D = d
  const auto l = minimal_coupling(MatterLagrangianSpec::free(), Representation::fundamental(2), e);
  CHECK(l(Connection(2, AlgebraElement::zero(2)), JetMatter{phi, dphi}) == 6.0);
}

TEST_CASE("minimally coupled densities are gauge invariant") {
  const MatterLagrangianSpec invariant[] = {MatterLagrangianSpec::free(), MatterLagrangianSpec::phi4(0.7, 1.3)};
  for (const auto& spec : kGroups) {
    Rng rng(20 + spec.n);
    const Representation rep = Representation::of(spec);
    for (const auto& metric : {Metric::euclidean(3), Metric::minkowski(3)}) {
      for (const auto& ms : invariant) {
        const auto l = minimal_coupling(ms, rep, metric);
        double worst = 0.0;
        for (int k = 0; k < 200; ++k) {
          const Jet1Gauge j = random_jet1(rng, spec, 3);
          const Connection a = random_connection(rng, spec, 3);
          const JetMatter jm = random_jet_matter(rng, rep.dim(), 3);
          worst = std::max(worst, std::abs(l(act_connection(j, a), act_jet_matter(rep, j, jm)) - l(a, jm)));
        }
        CHECK(worst <= 1e-12);
      }
    }
    // negative control
    const auto broken = minimal_coupling_unchecked(MatterLagrangianSpec::broken(1.0), rep, Metric::euclidean(3));
    double violation = 0.0;
    for (int k = 0; k < 20; ++k) {
      const Jet1Gauge j = random_jet1(rng, spec, 3);
      const Connection a = random_connection(rng, spec, 3);
      const JetMatter jm = random_jet_matter(rng, rep.dim(), 3);
      violation = std::max(violation, std::abs(broken(act_connection(j, a), act_jet_matter(rep, j, jm)) - broken(a, jm)));
    }
    CHECK(violation > 1e-3);
  }
}

TEST_CASE("gauge densities") {
  SUBCASE("abelian constant field strength") {
    // A_1 = 0, A_2 = i b x^1: F_12 = i b, density b^2 / (2 e^2)
    const double b = 1.7, e = 0.8;
    JetConnection jc = JetConnection::zero(2, 1);
    jc.d(0, 1) = AlgebraElement(Matrix::Constant(1, 1, Complex(0.0, b)));
    const double ym = gauge_density({GaugeKind::YangMills, e}, jc, Metric::euclidean(2));
    CHECK(std::abs(ym - b * b / (2 * e * e)) < 1e-15);
    CHECK(gauge_density({GaugeKind::FrobeniusCurvature, 1.0}, jc, Metric::euclidean(2)) == doctest::Approx(b * b));
    CHECK(gauge_density({GaugeKind::YangMills, e}, jc, Metric::minkowski(2)) == doctest::Approx(-ym));
    // tr(F^dagger F) = -tr(F F) = algebra_inner(F, F)
    const Curvature f = curvature(jc);
    CHECK(algebra_inner(f.F(0, 1), f.F(0, 1)) == doctest::Approx(b * b));
  }
  SUBCASE("same curvature, different symmetric part") {
    Rng rng(5);
    const GroupSpec su2 = GroupSpec::su2();
    const JetConnection jc = random_jet_connection(rng, su2, 3);
    const JetConnection other = with_symmetric_shift(jc, rng, su2);
    CHECK(distance(curvature(jc), curvature(other)) < 1e-14);
    const Metric m = Metric::euclidean(3);
    CHECK(std::abs(gauge_density({GaugeKind::YangMills, 1.0}, jc, m) -
                   gauge_density({GaugeKind::YangMills, 1.0}, other, m)) < 1e-12);
    CHECK(std::abs(gauge_density({GaugeKind::BrokenGauge, 1.0}, jc, m) -
                   gauge_density({GaugeKind::BrokenGauge, 1.0}, other, m)) > 1e-6);
  }
  SUBCASE("invariance under the second order jet group") {
    for (const auto& spec : kGroups) {
      Rng rng(30 + spec.n);
      const Metric m = Metric::euclidean(4);
      double worst = 0.0, broken = 0.0;
      for (int k = 0; k < 100; ++k) {
        const Jet2Gauge j = random_jet2(rng, spec, 4);
        const JetConnection jc = random_jet_connection(rng, spec, 4);
        const JetConnection moved = act_jet_connection(j, jc);
        for (auto kind : {GaugeKind::YangMills, GaugeKind::FrobeniusCurvature}) {
          worst = std::max(worst, std::abs(gauge_density({kind, 1.3}, moved, m) - gauge_density({kind, 1.3}, jc, m)));
        }
        broken = std::max(broken, std::abs(gauge_density({GaugeKind::BrokenGauge, 1.3}, moved, m) -
                                           gauge_density({GaugeKind::BrokenGauge, 1.3}, jc, m)));
      }
      CHECK(worst <= 1e-12);
      CHECK(broken > 1e-6);
    }
  }
}

TEST_CASE("Utiyama factorization") {
  UtiyamaProbe probe;
  probe.group = GroupSpec::su3();
  probe.dim = 3;
  Rng rng(7);

  const auto zero = utiyama_factor([](const Curvature&) { return 0.0; }, probe);
  CHECK(zero(random_jet_connection(rng, probe.group, 3)) == 0.0);

  const Metric m = Metric::euclidean(3);
  const auto frob = utiyama_factor([&](const Curvature& f) { return frobenius_curvature_density(f, m); }, probe);
  for (int k = 0; k < 50; ++k) {
    const JetConnection jc = random_jet_connection(rng, probe.group, 3);
    CHECK(frob(jc) == gauge_density({GaugeKind::FrobeniusCurvature, 1.0}, jc, m));
    const JetConnection other = with_symmetric_shift(jc, rng, probe.group);
    CHECK(std::abs(frob(jc) - frob(other)) <= 1e-12);
  }

  // depends on a single matrix entry of F_12: not adjoint invariant
  CHECK_THROWS_AS(utiyama_factor([](const Curvature& f) { return f.F(0, 1).matrix()(0, 1).real(); }, probe),
                  std::invalid_argument);
}

TEST_CASE("action functional") {
  Rng rng(8);
  const Patch p = Patch::uniform(2, 12, 0.1);
  const ConnectionFamily cf = ConnectionFamily::random(rng, GroupSpec::su2(), 2);
  const auto jc = sample_analytic(p, cf);
  const auto density = map(jc, [](const JetConnection& x) {
    return gauge_density({GaugeKind::YangMills, 1.0}, x, Metric::euclidean(2));
  });
  const Region whole{{1, 1}, {11, 11}};
  const double s = action_functional(density, whole);
  const double parts = action_functional(density, Region{{1, 1}, {6, 11}}) + action_functional(density, Region{{6, 1}, {11, 11}});
  CHECK(std::abs(s - parts) <= 1e-13 * std::abs(s));
  double direct = 0.0;
  whole.for_each(p, [&](std::size_t i) { direct += density[i]; });
  CHECK(s == direct * 0.1 * 0.1);
}

TEST_CASE("mechanics on a line") {
  const GroupSpec su2 = GroupSpec::su2();
  const Representation rep = Representation::of(su2);
  const Patch line = Patch::uniform(1, 101, 0.01);
  const Region interval = Region::interior(line);
  Rng rng(9);
  const MatterFamily curve_family = MatterFamily::random(rng, 2, 1);
  const auto curve = sample_analytic(line, curve_family);
  const TangentLagrangian kinetic = [](const RepVector&, const RepTangent& v) { return v.vector().squaredNorm(); };
  const double s = mechanics_action(kinetic, curve, interval);

  CHECK(curvature(random_jet_connection(rng, su2, 1)).F.packed().empty());
  CHECK_THROWS_AS(mechanics_action(kinetic, sample_analytic(Patch::uniform(2, 6, 0.1), MatterFamily::random(rng, 2, 2)),
                                   Region::interior(Patch::uniform(2, 6, 0.1))),
                  std::invalid_argument);

  SUBCASE("constant transformation") {
    const Jet1Gauge j{random_group_element(rng, su2), {AlgebraElement::zero(2)}};
    const auto moved = map(curve, [&](const JetMatter& jm) { return act_jet_matter(rep, j, jm); });
    CHECK(std::abs(mechanics_action(kinetic, moved, interval) - s) <= 1e-12 * std::abs(s));
  }
  SUBCASE("time dependent transformation") {
    const GaugeFamily gf = GaugeFamily::random(rng, su2, 1, 3);
    const auto g = sample_analytic(line, gf).jets1();
    const auto moved = zip_map(g, curve, [&](const Jet1Gauge& j, const JetMatter& jm) { return act_jet_matter(rep, j, jm); });
    CHECK(std::abs(mechanics_action(kinetic, moved, interval) - s) > 1e-3);

    const ConnectionFamily cf = ConnectionFamily::random(rng, su2, 1);
    const auto a = sample(line, [&](const Point& x) { return cf.value(x); });
    const auto a_moved = zip_map(g, a, [](const Jet1Gauge& j, const Connection& x) { return act_connection(j, x); });
    const double sc = covariant_mechanics_action(kinetic, rep, a, curve, interval);
    CHECK(std::abs(covariant_mechanics_action(kinetic, rep, a_moved, moved, interval) - sc) <= 1e-10);
  }
}
