#pragma once

// First and second order jets of gauge transformations (right trivialized as
// (g, dg g^-1, sym d(dg g^-1))), of matter fields and of connections, with
// the jet group products and the symmetric/antisymmetric split of dA.

#include "gauge/lie.hpp"
#include "gauge/patch.hpp"

#include <vector>

namespace gauge {

/// n-tuple of algebra elements: components A_mu of a connection 1-form.
using Connection = std::vector<AlgebraElement>;

/// Symmetric n x n array; only mu <= nu is stored, so s(mu, nu) == s(nu, mu)
/// holds exactly.
class SymmetricArray {
 public:
  SymmetricArray() = default;
  SymmetricArray(int n, int matrix_dim);

  int dim() const { return n_; }
  const AlgebraElement& operator()(int mu, int nu) const { return v_[index(mu, nu)]; }
  AlgebraElement& operator()(int mu, int nu) { return v_[index(mu, nu)]; }
  /// Upper triangle, row-major (mu <= nu).
  const std::vector<AlgebraElement>& packed() const { return v_; }
  std::vector<AlgebraElement>& packed() { return v_; }

 private:
  std::size_t index(int mu, int nu) const;
  int n_ = 0;
  std::vector<AlgebraElement> v_;
};

/// Antisymmetric n x n array; only mu < nu is stored.
class AntisymmetricArray {
 public:
  AntisymmetricArray() = default;
  AntisymmetricArray(int n, int matrix_dim);

  int dim() const { return n_; }
  int matrix_dim() const { return m_; }
  /// Value at (mu, nu): stored, negated, or zero on the diagonal.
  AlgebraElement operator()(int mu, int nu) const;
  /// Sets the (mu, nu) entry, mu != nu; (nu, mu) follows by antisymmetry.
  void set(int mu, int nu, const AlgebraElement& x);
  /// Strict upper triangle, row-major; empty for n = 1.
  const std::vector<AlgebraElement>& packed() const { return v_; }

 private:
  std::size_t index(int mu, int nu) const;
  int n_ = 0;
  int m_ = 0;
  std::vector<AlgebraElement> v_;
};

struct Jet1Gauge {
  GroupElement g;
  std::vector<AlgebraElement> a;  // a_mu = d_mu g g^-1

  static Jet1Gauge unit(int n, int matrix_dim);
  int dim() const { return static_cast<int>(a.size()); }
};

struct Jet2Gauge {
  GroupElement g;
  std::vector<AlgebraElement> a;
  SymmetricArray s;  // s_mu_nu = d_(mu a_nu)

  static Jet2Gauge unit(int n, int matrix_dim);
  int dim() const { return static_cast<int>(a.size()); }
  /// Target projection J^2 -> J^1.
  Jet1Gauge first_order() const { return {g, a}; }
};

struct JetMatter {
  RepVector phi;
  std::vector<RepTangent> dphi;
};

struct Variation {
  RepTangent dphi;
};

struct JetConnection {
  Connection A;
  std::vector<AlgebraElement> dA;  // row-major, dA[mu * n + nu] = d_mu A_nu

  static JetConnection zero(int n, int matrix_dim);
  int dim() const { return static_cast<int>(A.size()); }
  const AlgebraElement& d(int mu, int nu) const { return dA[mu * dim() + nu]; }
  AlgebraElement& d(int mu, int nu) { return dA[mu * dim() + nu]; }
};

struct Curvature {
  AntisymmetricArray F;
};

struct SplitConnection {
  SymmetricArray sym;          // d_(mu A_nu)
  AntisymmetricArray antisym;  // d_[mu A_nu]
};

// Jet group laws.
Jet1Gauge jet1_mul(const Jet1Gauge& l, const Jet1Gauge& r);
Jet1Gauge jet1_inv(const Jet1Gauge& j);
Jet2Gauge jet2_mul(const Jet2Gauge& l, const Jet2Gauge& r);
Jet2Gauge jet2_inv(const Jet2Gauge& j);

/// Frobenius distance summed over all components.
double distance(const Jet1Gauge& x, const Jet1Gauge& y);
double distance(const Jet2Gauge& x, const Jet2Gauge& y);
double distance(const JetConnection& x, const JetConnection& y);
double distance(const Curvature& x, const Curvature& y);
double distance(const JetMatter& x, const JetMatter& y);
double distance(const Connection& x, const Connection& y);

/// Jets of a sampled group field by central differences. Valid on the
/// interior (margin 1 for jet1, 2 for jet2).
Field<Jet1Gauge> jet1_of(const Field<GroupElement>& g);
Field<Jet2Gauge> jet2_of(const Field<GroupElement>& g);
/// Jet (phi, d phi) of a sampled matter field.
Field<JetMatter> jet_of(const Field<RepVector>& phi);
/// Jet (A, dA) of a sampled connection field.
Field<JetConnection> jet_of(const Field<Connection>& a);

SplitConnection split_jet_connection(const JetConnection& jc);
JetConnection merge_jet_connection(const Connection& a, const SplitConnection& parts);

/// F_mu_nu = d_mu A_nu - d_nu A_mu + [A_mu, A_nu].
Curvature curvature(const JetConnection& jc);

}  // namespace gauge
