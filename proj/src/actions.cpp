#include "gauge/actions.hpp"

#include <stdexcept>
#include <string>

namespace gauge {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

Connection rotate(const GroupElement& g, const Connection& a) {
  Connection out;
  out.reserve(a.size());
  for (const auto& x : a) out.push_back(adjoint(g, x));
  return out;
}

}  // namespace

RepVector act_matter(const Representation& rep, const GroupElement& g, const RepVector& phi) {
  return rep_act(rep, g, phi);
}

Variation act_variation(const Representation& rep, const GroupElement& g, const Variation& v) {
  return {rep_act(rep, g, v.dphi)};
}

JetMatter act_jet_matter(const Representation& rep, const Jet1Gauge& j, const JetMatter& jm) {
  require(j.dim() == static_cast<int>(jm.dphi.size()), "act_jet_matter");
  JetMatter out{rep_act(rep, j.g, jm.phi), {}};
  out.dphi.reserve(jm.dphi.size());
  for (int mu = 0; mu < j.dim(); ++mu) {
    out.dphi.push_back(rep_act(rep, j.g, jm.dphi[mu]) + fundamental_vector_field(rep, j.a[mu], out.phi));
  }
  return out;
}

Connection act_connection(const Jet1Gauge& j, const Connection& a) {
  require(j.dim() == static_cast<int>(a.size()), "act_connection");
  Connection out;
  out.reserve(a.size());
  for (int mu = 0; mu < j.dim(); ++mu) out.push_back(adjoint(j.g, a[mu]) - j.a[mu]);
  return out;
}

JetConnection act_jet_connection(const Jet2Gauge& j, const JetConnection& jc) {
  const int n = j.dim();
  require(jc.dim() == n && static_cast<int>(jc.dA.size()) == n * n, "act_jet_connection");
  const Connection rotated = rotate(j.g, jc.A);
  JetConnection out{{}, {}};
  out.A.reserve(n);
  for (int mu = 0; mu < n; ++mu) out.A.push_back(rotated[mu] - j.a[mu]);
  out.dA.reserve(static_cast<std::size_t>(n * n));
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu) {
      out.dA.push_back(adjoint(j.g, jc.d(mu, nu)) + bracket(j.a[mu], rotated[nu]) -
                       0.5 * bracket(j.a[mu], j.a[nu]) - j.s(mu, nu));
    }
  }
  return out;
}

SymmetricArray act_jet_connection_symmetric(const Jet2Gauge& j, const JetConnection& jc) {
  const int n = j.dim();
  require(jc.dim() == n, "act_jet_connection_symmetric");
  const Connection rotated = rotate(j.g, jc.A);
  SymmetricArray out(n, j.g.dim());
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = mu; nu < n; ++nu) {
      out(mu, nu) = adjoint(j.g, jc.d(mu, nu) + jc.d(nu, mu)) + bracket(j.a[mu], rotated[nu]) +
                    bracket(j.a[nu], rotated[mu]) - 2.0 * j.s(mu, nu);
    }
  }
  return out;
}

AntisymmetricArray act_jet_connection_antisymmetric(const Jet2Gauge& j, const JetConnection& jc) {
  const int n = j.dim();
  require(jc.dim() == n, "act_jet_connection_antisymmetric");
  const Connection rotated = rotate(j.g, jc.A);
  AntisymmetricArray out(n, j.g.dim());
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = mu + 1; nu < n; ++nu) {
      out.set(mu, nu,
              adjoint(j.g, jc.d(mu, nu) - jc.d(nu, mu)) + bracket(j.a[mu], rotated[nu]) -
                  bracket(j.a[nu], rotated[mu]) - bracket(j.a[mu], j.a[nu]));
    }
  }
  return out;
}

Curvature act_curvature(const GroupElement& g, const Curvature& f) {
  require(f.F.matrix_dim() == g.dim() || f.F.dim() < 2, "act_curvature");
  Curvature out{AntisymmetricArray(f.F.dim(), g.dim())};
  for (int mu = 0; mu < f.F.dim(); ++mu) {
    for (int nu = mu + 1; nu < f.F.dim(); ++nu) out.F.set(mu, nu, adjoint(g, f.F(mu, nu)));
  }
  return out;
}

TransitivityWitness gauge_to_zero_jet1(const Connection& a) {
  require(!a.empty(), "gauge_to_zero_jet1");
  const int m = a.front().dim();
  Jet1Gauge j{GroupElement::identity(m), a};
  double residual = 0.0;
  for (const auto& x : act_connection(j, a)) residual += frobenius_norm(x);
  return {{}, std::move(j), residual, 0.0};
}

TransitivityWitness gauge_to_zero_jet2(const JetConnection& jc) {
  const int n = jc.dim();
  require(n > 0, "gauge_to_zero_jet2");
  const int m = jc.A.front().dim();
  const SplitConnection parts = split_jet_connection(jc);
  Jet2Gauge j{GroupElement::identity(m), jc.A, parts.sym};

  const JetConnection moved = act_jet_connection(j, jc);
  const SplitConnection moved_parts = split_jet_connection(moved);
  double residual = 0.0;
  for (const auto& x : moved.A) residual += frobenius_norm(x);
  for (const auto& x : moved_parts.sym.packed()) residual += frobenius_norm(x);

  const Curvature f = curvature(jc);
  double curvature_residual = 0.0;
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = mu + 1; nu < n; ++nu) {
      curvature_residual += frobenius_norm(moved_parts.antisym(mu, nu) - 0.5 * f.F(mu, nu));
    }
  }
  return {{}, std::move(j), residual, curvature_residual};
}

std::vector<TransitivityWitness> gauge_to_zero_jet1(const Field<Connection>& a) {
  std::vector<TransitivityWitness> out;
  const Patch& p = a.patch();
  Region::interior(p, a.margin()).for_each(p, [&](std::size_t i) {
    TransitivityWitness w = gauge_to_zero_jet1(a[i]);
    w.point = p.multi_index(i);
    out.push_back(std::move(w));
  });
  return out;
}

std::vector<TransitivityWitness> gauge_to_zero_jet2(const Field<JetConnection>& jc) {
  std::vector<TransitivityWitness> out;
  const Patch& p = jc.patch();
  Region::interior(p, jc.margin()).for_each(p, [&](std::size_t i) {
    TransitivityWitness w = gauge_to_zero_jet2(jc[i]);
    w.point = p.multi_index(i);
    out.push_back(std::move(w));
  });
  return out;
}

}  // namespace gauge
