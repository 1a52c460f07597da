#include "gauge/jets.hpp"

#include "gauge/analytic.hpp"

#include <doctest.h>

#include <cmath>

#include "oracles.hpp"

using namespace gauge;
using gauge::test::dist;

namespace {

const GroupSpec kGroups[] = {GroupSpec::u1(), GroupSpec::su2(), GroupSpec::su3()};

/// Max distance over points of `region`.
template <class V, class W>
double max_distance(const Field<V>& a, const Field<W>& b, const Region& region) {
  double worst = 0.0;
  region.for_each(a.patch(), [&](std::size_t i) { worst = std::max(worst, distance(a[i], b[i])); });
  return worst;
}

}  // namespace

TEST_CASE("symmetric and antisymmetric storage") {
  SymmetricArray s(3, 2);
  s(2, 0) = random_algebra_element(1, GroupSpec::su2());
  CHECK(dist(s(0, 2), s(2, 0)) == 0.0);
  CHECK(s.packed().size() == 6);

  AntisymmetricArray f(4, 2);
  CHECK(f.packed().size() == 6);
  const AlgebraElement x = random_algebra_element(2, GroupSpec::su2());
  f.set(3, 1, x);
  CHECK(dist(f(3, 1), x) == 0.0);
  CHECK(dist(f(1, 3), -x) == 0.0);
  CHECK(frobenius_norm(f(2, 2)) == 0.0);
  CHECK_THROWS(f.set(1, 1, x));
  CHECK(AntisymmetricArray(1, 2).packed().empty());
}

TEST_CASE("jet group axioms") {
  for (const auto& spec : kGroups) {
    Rng rng(100 + spec.n);
    const int n = 3;
    double worst1 = 0.0, worst2 = 0.0;
    const Jet1Gauge unit1 = Jet1Gauge::unit(n, spec.n);
    const Jet2Gauge unit2 = Jet2Gauge::unit(n, spec.n);
    for (int k = 0; k < 200; ++k) {
      const Jet1Gauge a = random_jet1(rng, spec, n), b = random_jet1(rng, spec, n), c = random_jet1(rng, spec, n);
      worst1 = std::max({worst1, distance(jet1_mul(jet1_mul(a, b), c), jet1_mul(a, jet1_mul(b, c))),
                         distance(jet1_mul(unit1, a), a), distance(jet1_mul(a, unit1), a),
                         distance(jet1_mul(a, jet1_inv(a)), unit1), distance(jet1_mul(jet1_inv(a), a), unit1)});
      const Jet2Gauge p = random_jet2(rng, spec, n), q = random_jet2(rng, spec, n), r = random_jet2(rng, spec, n);
      worst2 = std::max({worst2, distance(jet2_mul(jet2_mul(p, q), r), jet2_mul(p, jet2_mul(q, r))),
                         distance(jet2_mul(unit2, p), p), distance(jet2_mul(p, unit2), p),
                         distance(jet2_mul(p, jet2_inv(p)), unit2), distance(jet2_mul(jet2_inv(p), p), unit2)});
    }
    CHECK(worst1 < 1e-12);
    CHECK(worst2 < 1e-12);
  }
}

TEST_CASE("abelian jet2 product has no bracket terms") {
  Rng rng(5);
  const Jet2Gauge p = random_jet2(rng, GroupSpec::u1(), 3);
  const Jet2Gauge q = random_jet2(rng, GroupSpec::u1(), 3);
  const Jet2Gauge pq = jet2_mul(p, q);
  for (int mu = 0; mu < 3; ++mu) {
    for (int nu = mu; nu < 3; ++nu) CHECK(dist(pq.s(mu, nu), p.s(mu, nu) + q.s(mu, nu)) < 1e-15);
  }
}

TEST_CASE("jet products reject mismatched dimensions") {
  Rng rng(6);
  CHECK_THROWS_AS(jet1_mul(random_jet1(rng, GroupSpec::su2(), 2), random_jet1(rng, GroupSpec::su2(), 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(jet2_mul(random_jet2(rng, GroupSpec::su2(), 2), random_jet2(rng, GroupSpec::su2(), 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(jet1_mul(random_jet1(rng, GroupSpec::su2(), 2), random_jet1(rng, GroupSpec::su3(), 2)),
                  std::invalid_argument);
}

TEST_CASE("jets of simple sampled fields") {
  const Patch p = Patch::uniform(2, 12, 0.05, 0.2);
  const GroupSpec su2 = GroupSpec::su2();

  SUBCASE("constant field") {
    const GroupElement g0 = random_group_element(9, su2);
    const auto g = sample(p, [&](const Point&) { return g0; });
    const auto j2 = jet2_of(g);
    CHECK(j2.margin() == 2);
    Region::interior(p, 2).for_each(p, [&](std::size_t i) { CHECK(distance(j2[i], Jet2Gauge{g0, Jet2Gauge::unit(2, 2).a, SymmetricArray(2, 2)}) == 0.0); });
    const auto sample_exact = sample_analytic(p, GaugeFamily::constant_family(g0));
    Region::interior(p, 0).for_each(p, [&](std::size_t i) {
      CHECK(dist(sample_exact.jets[i].g, g0) == 0.0);
      for (const auto& a : sample_exact.jets[i].a) CHECK(frobenius_norm(a) == 0.0);
    });
  }

  SUBCASE("U(1) plane wave") {
    const double k0 = 0.8, k1 = -1.3;
    const AlgebraElement i1(Matrix::Constant(1, 1, Complex(0.0, 1.0)));
    const GaugeFamily fam = GaugeFamily::single(i1, ScalarFunction::polynomial(0.0, {k0, k1}, {0, 0, 0, 0}));
    const auto exact = sample_analytic(p, fam);
    const auto j1 = jet1_of(exact.g);
    const auto j2 = jet2_of(exact.g);
    const double h = 0.05;
    Region::interior(p, 2).for_each(p, [&](std::size_t i) {
      const auto& a = exact.jets[i].a;
      CHECK(std::abs(a[0].matrix()(0, 0) - Complex(0.0, k0)) < 1e-15);
      CHECK(std::abs(a[1].matrix()(0, 0) - Complex(0.0, k1)) < 1e-15);
      for (const auto& s : exact.jets[i].s.packed()) CHECK(frobenius_norm(s) == 0.0);
      // FD: sin(k h)/h instead of k
      CHECK(std::abs(j1[i].a[0].matrix()(0, 0) - Complex(0.0, std::sin(k0 * h) / h)) < 1e-12);
      CHECK(frobenius_norm(j1[i].a[1] - exact.jets[i].a[1]) < 10 * h * h);
      for (const auto& s : j2[i].s.packed()) CHECK(frobenius_norm(s) < 1e-10);
    });
  }

  SUBCASE("single generator exp(f X), f = x1 x2") {
    const AlgebraElement x = random_algebra_element(10, su2);
    const GaugeFamily fam = GaugeFamily::single(x, ScalarFunction::polynomial(0.0, {0.0, 0.0}, {0, 1, 1, 0}));
    const auto exact = sample_analytic(p, fam);
    const auto j2 = jet2_of(exact.g);
    const double h = 0.05;
    Region::interior(p, 2).for_each(p, [&](std::size_t i) {
      const Point pt = p.coordinates(i);
      // d_1 f = x2, d_2 f = x1, d_1 d_2 f = 1
      CHECK(dist(exact.jets[i].a[0], pt[1] * x) < 1e-14);
      CHECK(dist(exact.jets[i].a[1], pt[0] * x) < 1e-14);
      CHECK(dist(exact.jets[i].s(0, 1), x) < 1e-15);
      CHECK(frobenius_norm(exact.jets[i].s(0, 0)) == 0.0);
      CHECK(frobenius_norm(exact.jets[i].s(1, 1)) == 0.0);
      CHECK(distance(j2[i], exact.jets[i]) < 50 * h * h);
    });
  }
}

TEST_CASE("functoriality: jets of pointwise products are jet products") {
  for (const auto& spec : kGroups) {
    Rng rng(31 + spec.n);
    const GaugeFamily f1 = GaugeFamily::random(rng, spec, 2, 3);
    const GaugeFamily f2 = GaugeFamily::random(rng, spec, 2, 3);
    auto errors = [&](double h) {
      // fixed physical box [0.3, 0.3 + 0.32]^2 sampled at spacing h
      const int extent = static_cast<int>(std::lround(0.32 / h)) + 1;
      const Patch p = Patch::uniform(2, extent, h, 0.3);
      const auto g = sample_analytic(p, f1).g;
      const auto k = sample_analytic(p, f2).g;
      const auto gk = zip_map(g, k, [](const GroupElement& a, const GroupElement& b) { return a * b; });
      const auto lhs1 = jet1_of(gk);
      const auto rhs1 = zip_map(jet1_of(g), jet1_of(k), jet1_mul);
      const auto lhs2 = jet2_of(gk);
      const auto rhs2 = zip_map(jet2_of(g), jet2_of(k), jet2_mul);
      // compare on the points of the coarsest grid (spacing 0.04)
      const int stride = static_cast<int>(std::lround(0.04 / h));
      Region r = Region::interior(p, 2 * stride);
      double e1 = 0.0, e2 = 0.0;
      r.for_each(p, [&](std::size_t i) {
        const MultiIndex idx = p.multi_index(i);
        if (idx[0] % stride != 0 || idx[1] % stride != 0) return;
        e1 = std::max(e1, distance(lhs1[i], rhs1[i]));
        e2 = std::max(e2, distance(lhs2[i], rhs2[i]));
      });
      return std::pair{e1, e2};
    };
    const auto [a1, a2] = errors(0.04);
    const auto [b1, b2] = errors(0.02);
    const auto [c1, c2] = errors(0.01);
    CHECK(c1 <= 10 * 0.01 * 0.01);
    CHECK(c2 <= 50 * 0.01 * 0.01);
    for (double ratio : {a1 / b1, b1 / c1, a2 / b2, b2 / c2}) {
      CHECK(ratio >= 3.5);
      CHECK(ratio <= 4.5);
    }
  }
}

TEST_CASE("split and merge of connection jets") {
  Rng rng(41);
  const GroupSpec su3 = GroupSpec::su3();
  SUBCASE("symmetric and antisymmetric inputs") {
    JetConnection jc = JetConnection::zero(3, 3);
    for (int mu = 0; mu < 3; ++mu) {
      for (int nu = mu; nu < 3; ++nu) {
        const AlgebraElement x = random_algebra_element(rng, su3);
        jc.d(mu, nu) = x;
        jc.d(nu, mu) = x;
      }
    }
    const SplitConnection sym_parts = split_jet_connection(jc);
    for (const auto& x : sym_parts.antisym.packed()) CHECK(frobenius_norm(x) == 0.0);
    for (int mu = 0; mu < 3; ++mu) {
      for (int nu = mu; nu < 3; ++nu) {
        const AlgebraElement x = random_algebra_element(rng, su3);
        jc.d(mu, nu) = mu == nu ? AlgebraElement::zero(3) : x;
        jc.d(nu, mu) = mu == nu ? AlgebraElement::zero(3) : -x;
      }
    }
    const SplitConnection anti_parts = split_jet_connection(jc);
    for (const auto& x : anti_parts.sym.packed()) CHECK(frobenius_norm(x) == 0.0);
  }
  SUBCASE("round trip") {
    for (int k = 0; k < 50; ++k) {
      const JetConnection jc = random_jet_connection(rng, su3, 4);
      const SplitConnection parts = split_jet_connection(jc);
      const JetConnection back = merge_jet_connection(jc.A, parts);
      // (x + y)/2 + (x - y)/2 reproduces x up to one rounding per entry
      CHECK(distance(back, jc) < 1e-15 * 16);
      const SplitConnection again = split_jet_connection(back);
      double d = 0.0;
      for (std::size_t i = 0; i < parts.sym.packed().size(); ++i) d += dist(parts.sym.packed()[i], again.sym.packed()[i]);
      for (std::size_t i = 0; i < parts.antisym.packed().size(); ++i) {
        d += dist(parts.antisym.packed()[i], again.antisym.packed()[i]);
      }
      CHECK(d < 1e-15 * 16);
    }
  }
}

TEST_CASE("curvature") {
  SUBCASE("zero connection") {
    const Curvature f = curvature(JetConnection::zero(3, 2));
    for (const auto& x : f.F.packed()) CHECK(frobenius_norm(x) == 0.0);
  }
  SUBCASE("abelian affine connection") {
    // A_mu = i (c_mu + sum_nu m_mu_nu x^nu), so d_mu A_nu = i m_nu_mu and
    // F_mu_nu = i (m_nu_mu - m_mu_nu).
    const double m[3][3] = {{0.3, -1.2, 0.5}, {2.0, 0.1, -0.7}, {0.9, 1.4, -0.2}};
    const double c[3] = {0.5, -0.25, 1.0};
    const AlgebraElement i1(Matrix::Constant(1, 1, Complex(0.0, 1.0)));
    ConnectionFamily fam;
    fam.matrix_dim = 1;
    fam.components.resize(3);
    for (int mu = 0; mu < 3; ++mu) {
      fam.components[mu].push_back(
          {ScalarFunction::polynomial(c[mu], {m[mu][0], m[mu][1], m[mu][2]}, std::vector<double>(9, 0.0)), i1});
    }
    const JetConnection jc = fam.jet({0.4, -0.6, 1.1});
    const Curvature f = curvature(jc);
    for (int mu = 0; mu < 3; ++mu) {
      for (int nu = 0; nu < 3; ++nu) {
        CHECK(std::abs(f.F(mu, nu).matrix()(0, 0) - Complex(0.0, m[nu][mu] - m[mu][nu])) < 1e-15);
      }
    }
  }
  SUBCASE("one dimension has no components") {
    Rng rng(3);
    const JetConnection jc = random_jet_connection(rng, GroupSpec::su2(), 1);
    CHECK(curvature(jc).F.packed().empty());
    CHECK(curvature(jc).F.dim() == 1);
  }
  SUBCASE("antisymmetry and formula") {
    Rng rng(4);
    const JetConnection jc = random_jet_connection(rng, GroupSpec::su3(), 4);
    const Curvature f = curvature(jc);
    for (int mu = 0; mu < 4; ++mu) {
      CHECK(frobenius_norm(f.F(mu, mu)) == 0.0);
      for (int nu = 0; nu < 4; ++nu) {
        CHECK(dist(f.F(mu, nu), -f.F(nu, mu)) == 0.0);
        if (mu < nu) {
          const Matrix direct = jc.d(mu, nu).matrix() - jc.d(nu, mu).matrix() +
                                jc.A[mu].matrix() * jc.A[nu].matrix() - jc.A[nu].matrix() * jc.A[mu].matrix();
          CHECK(dist(f.F(mu, nu).matrix(), direct) < 1e-15);
        }
      }
    }
  }
}

TEST_CASE("jets of matter and connection fields") {
  const Patch p = Patch::uniform(2, 20, 0.02, 0.1);
  Rng rng(61);
  const MatterFamily mf = MatterFamily::random(rng, 3, 2);
  const ConnectionFamily cf = ConnectionFamily::random(rng, GroupSpec::su3(), 2);
  const auto phi = sample(p, [&](const Point& x) { return mf.value(x); });
  const auto a = sample(p, [&](const Point& x) { return cf.value(x); });
  const auto jm = jet_of(phi);
  const auto jc = jet_of(a);
  const auto jm_exact = sample_analytic(p, mf);
  const auto jc_exact = sample_analytic(p, cf);
  const Region r = Region::interior(p, 1);
  CHECK(max_distance(jm, jm_exact, r) < 10 * 0.02 * 0.02);
  CHECK(max_distance(jc, jc_exact, r) < 10 * 0.02 * 0.02);
}
