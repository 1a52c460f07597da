#include "gauge/jets.hpp"

#include <stdexcept>
#include <string>

namespace gauge {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

std::vector<AlgebraElement> zeros(int count, int m) {
  return std::vector<AlgebraElement>(static_cast<std::size_t>(count), AlgebraElement::zero(m));
}

}  // namespace

SymmetricArray::SymmetricArray(int n, int matrix_dim) : n_(n), v_(zeros(n * (n + 1) / 2, matrix_dim)) {}

std::size_t SymmetricArray::index(int mu, int nu) const {
  if (mu > nu) std::swap(mu, nu);
  if (mu < 0 || nu >= n_) throw std::out_of_range("symmetric array index");
  // rows 0..mu-1 hold n, n-1, ... entries
  return static_cast<std::size_t>(mu * n_ - mu * (mu - 1) / 2 + (nu - mu));
}

AntisymmetricArray::AntisymmetricArray(int n, int matrix_dim)
    : n_(n), m_(matrix_dim), v_(zeros(n * (n - 1) / 2, matrix_dim)) {}

std::size_t AntisymmetricArray::index(int mu, int nu) const {
  if (mu > nu) std::swap(mu, nu);
  if (mu < 0 || nu >= n_ || mu == nu) throw std::out_of_range("antisymmetric array index");
  return static_cast<std::size_t>(mu * (n_ - 1) - mu * (mu - 1) / 2 + (nu - mu - 1));
}

AlgebraElement AntisymmetricArray::operator()(int mu, int nu) const {
  if (mu == nu) {
    if (mu < 0 || mu >= n_) throw std::out_of_range("antisymmetric array index");
    return AlgebraElement::zero(m_);
  }
  const AlgebraElement& x = v_[index(mu, nu)];
  return mu < nu ? x : -x;
}

void AntisymmetricArray::set(int mu, int nu, const AlgebraElement& x) {
  v_[index(mu, nu)] = mu < nu ? x : -x;
}

Jet1Gauge Jet1Gauge::unit(int n, int matrix_dim) {
  return {GroupElement::identity(matrix_dim), zeros(n, matrix_dim)};
}

Jet2Gauge Jet2Gauge::unit(int n, int matrix_dim) {
  return {GroupElement::identity(matrix_dim), zeros(n, matrix_dim), SymmetricArray(n, matrix_dim)};
}

JetConnection JetConnection::zero(int n, int matrix_dim) {
  return {zeros(n, matrix_dim), zeros(n * n, matrix_dim)};
}

Jet1Gauge jet1_mul(const Jet1Gauge& l, const Jet1Gauge& r) {
  require(l.dim() == r.dim(), "jet1_mul");
  Jet1Gauge out{l.g * r.g, {}};
  out.a.reserve(l.a.size());
  for (int mu = 0; mu < l.dim(); ++mu) out.a.push_back(l.a[mu] + adjoint(l.g, r.a[mu]));
  return out;
}

Jet1Gauge jet1_inv(const Jet1Gauge& j) {
  Jet1Gauge out{j.g.inverse(), {}};
  out.a.reserve(j.a.size());
  for (const auto& a : j.a) out.a.push_back(-adjoint(out.g, a));
  return out;
}

Jet2Gauge jet2_mul(const Jet2Gauge& l, const Jet2Gauge& r) {
  require(l.dim() == r.dim(), "jet2_mul");
  const int n = l.dim();
  std::vector<AlgebraElement> rotated;  // Ad(g) b_mu
  rotated.reserve(n);
  for (int mu = 0; mu < n; ++mu) rotated.push_back(adjoint(l.g, r.a[mu]));

  Jet2Gauge out{l.g * r.g, {}, SymmetricArray(n, l.g.dim())};
  out.a.reserve(n);
  for (int mu = 0; mu < n; ++mu) out.a.push_back(l.a[mu] + rotated[mu]);
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = mu; nu < n; ++nu) {
      out.s(mu, nu) = l.s(mu, nu) + adjoint(l.g, r.s(mu, nu)) +
                      0.5 * (bracket(l.a[mu], rotated[nu]) + bracket(l.a[nu], rotated[mu]));
    }
  }
  return out;
}

Jet2Gauge jet2_inv(const Jet2Gauge& j) {
  // The bracket terms cancel for the inverse: t = -Ad(g^-1) s.
  const int n = j.dim();
  Jet2Gauge out{j.g.inverse(), {}, SymmetricArray(n, j.g.dim())};
  out.a.reserve(n);
  for (const auto& a : j.a) out.a.push_back(-adjoint(out.g, a));
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = mu; nu < n; ++nu) out.s(mu, nu) = -adjoint(out.g, j.s(mu, nu));
  }
  return out;
}

namespace {

double sum_distance(const std::vector<AlgebraElement>& x, const std::vector<AlgebraElement>& y) {
  require(x.size() == y.size(), "distance");
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d += (x[i].matrix() - y[i].matrix()).norm();
  return d;
}

}  // namespace

double distance(const Jet1Gauge& x, const Jet1Gauge& y) {
  return (x.g.matrix() - y.g.matrix()).norm() + sum_distance(x.a, y.a);
}

double distance(const Jet2Gauge& x, const Jet2Gauge& y) {
  return (x.g.matrix() - y.g.matrix()).norm() + sum_distance(x.a, y.a) +
         sum_distance(x.s.packed(), y.s.packed());
}

double distance(const JetConnection& x, const JetConnection& y) {
  return sum_distance(x.A, y.A) + sum_distance(x.dA, y.dA);
}

double distance(const Curvature& x, const Curvature& y) { return sum_distance(x.F.packed(), y.F.packed()); }

double distance(const JetMatter& x, const JetMatter& y) {
  require(x.dphi.size() == y.dphi.size(), "distance");
  double d = (x.phi.vector() - y.phi.vector()).norm();
  for (std::size_t i = 0; i < x.dphi.size(); ++i) d += (x.dphi[i].vector() - y.dphi[i].vector()).norm();
  return d;
}

double distance(const Connection& x, const Connection& y) { return sum_distance(x, y); }

namespace {

/// a_mu = (d_mu g) g^-1 as a field of n-tuples.
Field<Connection> right_derivatives(const Field<GroupElement>& g) {
  const Patch& p = g.patch();
  std::vector<Field<Matrix>> dg;
  dg.reserve(p.dim);
  for (int mu = 0; mu < p.dim; ++mu) dg.push_back(partial(g, mu));
  const int margin = dg.front().margin();
  std::vector<Connection> out(p.size());
  Region::interior(p, margin).for_each(p, [&](std::size_t i) {
    Connection a;
    a.reserve(p.dim);
    const Matrix ginv = g[i].matrix().adjoint();
    for (int mu = 0; mu < p.dim; ++mu) a.emplace_back(dg[mu][i] * ginv);
    out[i] = std::move(a);
  });
  Field<Connection> result(p, std::move(out), margin);
  result.mark_numerical(dg.front().fd_spacing());
  return result;
}

}  // namespace

Field<Jet1Gauge> jet1_of(const Field<GroupElement>& g) {
  const Field<Connection> a = right_derivatives(g);
  return zip_map(g, a, [](const GroupElement& gx, const Connection& ax) { return Jet1Gauge{gx, ax}; });
}

Field<Jet2Gauge> jet2_of(const Field<GroupElement>& g) {
  const Patch& p = g.patch();
  const int n = p.dim;
  const Field<Connection> a = right_derivatives(g);
  std::vector<Field<Connection>> da;  // da[mu][x][nu] = d_mu a_nu
  da.reserve(n);
  for (int mu = 0; mu < n; ++mu) da.push_back(partial(a, mu));
  const int margin = da.front().margin();
  std::vector<Jet2Gauge> out(p.size());
  Region::interior(p, margin).for_each(p, [&](std::size_t i) {
    Jet2Gauge j{g[i], a[i], SymmetricArray(n, g[i].dim())};
    for (int mu = 0; mu < n; ++mu) {
      for (int nu = mu; nu < n; ++nu) j.s(mu, nu) = 0.5 * (da[mu][i][nu] + da[nu][i][mu]);
    }
    out[i] = std::move(j);
  });
  Field<Jet2Gauge> result(p, std::move(out), margin);
  result.mark_numerical(da.front().fd_spacing());
  return result;
}

Field<JetMatter> jet_of(const Field<RepVector>& phi) {
  const Patch& p = phi.patch();
  std::vector<Field<RepTangent>> d;
  d.reserve(p.dim);
  for (int mu = 0; mu < p.dim; ++mu) d.push_back(partial(phi, mu));
  const int margin = d.front().margin();
  std::vector<JetMatter> out(p.size());
  Region::interior(p, margin).for_each(p, [&](std::size_t i) {
    JetMatter jm{phi[i], {}};
    jm.dphi.reserve(p.dim);
    for (int mu = 0; mu < p.dim; ++mu) jm.dphi.push_back(d[mu][i]);
    out[i] = std::move(jm);
  });
  Field<JetMatter> result(p, std::move(out), margin);
  result.mark_numerical(d.front().fd_spacing());
  return result;
}

Field<JetConnection> jet_of(const Field<Connection>& a) {
  const Patch& p = a.patch();
  const int n = p.dim;
  std::vector<Field<Connection>> d;
  d.reserve(n);
  for (int mu = 0; mu < n; ++mu) d.push_back(partial(a, mu));
  const int margin = d.front().margin();
  std::vector<JetConnection> out(p.size());
  Region::interior(p, margin).for_each(p, [&](std::size_t i) {
    JetConnection jc{a[i], {}};
    jc.dA.reserve(static_cast<std::size_t>(n * n));
    for (int mu = 0; mu < n; ++mu) {
      for (int nu = 0; nu < n; ++nu) jc.dA.push_back(d[mu][i][nu]);
    }
    out[i] = std::move(jc);
  });
  Field<JetConnection> result(p, std::move(out), margin);
  result.mark_numerical(d.front().fd_spacing());
  return result;
}

SplitConnection split_jet_connection(const JetConnection& jc) {
  const int n = jc.dim();
  require(static_cast<int>(jc.dA.size()) == n * n, "split_jet_connection");
  const int m = n > 0 ? jc.A.front().dim() : 0;
  SplitConnection parts{SymmetricArray(n, m), AntisymmetricArray(n, m)};
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = mu; nu < n; ++nu) {
      parts.sym(mu, nu) = 0.5 * (jc.d(mu, nu) + jc.d(nu, mu));
      if (nu != mu) parts.antisym.set(mu, nu, 0.5 * (jc.d(mu, nu) - jc.d(nu, mu)));
    }
  }
  return parts;
}

JetConnection merge_jet_connection(const Connection& a, const SplitConnection& parts) {
  const int n = static_cast<int>(a.size());
  require(parts.sym.dim() == n && parts.antisym.dim() == n, "merge_jet_connection");
  JetConnection jc{a, {}};
  jc.dA.reserve(static_cast<std::size_t>(n * n));
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = 0; nu < n; ++nu) {
      if (mu == nu) {
        jc.dA.push_back(parts.sym(mu, nu));
      } else {
        jc.dA.push_back(parts.sym(mu, nu) + parts.antisym(mu, nu));
      }
    }
  }
  return jc;
}

Curvature curvature(const JetConnection& jc) {
  const int n = jc.dim();
  require(static_cast<int>(jc.dA.size()) == n * n, "curvature");
  const int m = n > 0 ? jc.A.front().dim() : 0;
  Curvature f{AntisymmetricArray(n, m)};
  for (int mu = 0; mu < n; ++mu) {
    for (int nu = mu + 1; nu < n; ++nu) {
      f.F.set(mu, nu, jc.d(mu, nu) - jc.d(nu, mu) + bracket(jc.A[mu], jc.A[nu]));
    }
  }
  return f;
}

}  // namespace gauge
