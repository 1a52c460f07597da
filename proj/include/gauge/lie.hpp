#pragma once

// Compact matrix Lie groups, their Lie algebras, and linear representations.
//
// Group elements are unitary N x N complex matrices; algebra elements are
// anti-hermitian (and traceless for the special unitary families). The
// representation space standing in for the target manifold Q is C^k with
// k = N (fundamental) or k = N^2 (adjoint, acting on vec(X)).

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gauge {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Tolerance used for the unitarity / anti-hermiticity invariants.
inline constexpr double kInvariantTol = 1e-12;

enum class GroupFamily { U1, SU2, SU3, SUN };
enum class RepKind { Fundamental, Adjoint };

struct GroupSpec {
  GroupFamily family = GroupFamily::SU2;
  int n = 2;  // matrix size N
  RepKind rep = RepKind::Fundamental;

  static GroupSpec u1() { return {GroupFamily::U1, 1, RepKind::Fundamental}; }
  static GroupSpec su2() { return {GroupFamily::SU2, 2, RepKind::Fundamental}; }
  static GroupSpec su3() { return {GroupFamily::SU3, 3, RepKind::Fundamental}; }
  static GroupSpec sun(int n) { return {GroupFamily::SUN, n, RepKind::Fundamental}; }

  /// Parses "U1", "SU2", "SU3" or "SU<N>"; throws std::invalid_argument.
  static GroupSpec parse(std::string_view name);

  bool special() const { return family != GroupFamily::U1; }
  int matrix_dim() const { return n; }
  /// Dimension k of the representation space.
  int rep_dim() const { return rep == RepKind::Fundamental ? n : n * n; }
  /// Real dimension of the Lie algebra.
  int algebra_dim() const { return special() ? n * n - 1 : 1; }
  std::string name() const;

  void validate() const;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

class GroupElement {
 public:
  GroupElement() = default;
  explicit GroupElement(Matrix m) : m_(std::move(m)) {}

  static GroupElement identity(int n) { return GroupElement(Matrix::Identity(n, n)); }

  const Matrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

  /// Conjugate transpose; exact for unitary matrices.
  GroupElement inverse() const { return GroupElement(m_.adjoint()); }

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);

 private:
  Matrix m_;
};

class AlgebraElement {
 public:
  AlgebraElement() = default;
  explicit AlgebraElement(Matrix m) : m_(std::move(m)) {}

  static AlgebraElement zero(int n) { return AlgebraElement(Matrix::Zero(n, n)); }

  const Matrix& matrix() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

  AlgebraElement& operator+=(const AlgebraElement& o);
  AlgebraElement& operator-=(const AlgebraElement& o);
  AlgebraElement& operator*=(double s) {
    m_ *= s;
    return *this;
  }

  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  friend AlgebraElement operator-(const AlgebraElement& a) { return AlgebraElement(-a.m_); }
  friend AlgebraElement operator*(double s, AlgebraElement a) { return a *= s; }
  friend AlgebraElement operator*(AlgebraElement a, double s) { return a *= s; }

 private:
  Matrix m_;
};

/// A point of the representation space.
class RepVector {
 public:
  RepVector() = default;
  explicit RepVector(Vector v) : v_(std::move(v)) {}
  static RepVector zero(int k) { return RepVector(Vector::Zero(k)); }

  const Vector& vector() const { return v_; }
  int dim() const { return static_cast<int>(v_.size()); }
  double norm() const { return v_.norm(); }

  friend RepVector operator+(const RepVector& a, const RepVector& b);
  friend RepVector operator-(const RepVector& a, const RepVector& b);
  friend RepVector operator*(Complex s, const RepVector& a) { return RepVector(s * a.v_); }

 private:
  Vector v_;
};

/// A tangent vector at a point of the (linear) representation space.
class RepTangent {
 public:
  RepTangent() = default;
  explicit RepTangent(Vector v) : v_(std::move(v)) {}
  static RepTangent zero(int k) { return RepTangent(Vector::Zero(k)); }

  const Vector& vector() const { return v_; }
  int dim() const { return static_cast<int>(v_.size()); }
  double norm() const { return v_.norm(); }

  friend RepTangent operator+(const RepTangent& a, const RepTangent& b);
  friend RepTangent operator-(const RepTangent& a, const RepTangent& b);
  friend RepTangent operator*(Complex s, const RepTangent& a) { return RepTangent(s * a.v_); }

 private:
  Vector v_;
};

/// Linear representation of a matrix group on C^k.
struct Representation {
  RepKind kind = RepKind::Fundamental;
  int n = 2;

  static Representation of(const GroupSpec& spec) { return {spec.rep, spec.n}; }
  static Representation fundamental(int n) { return {RepKind::Fundamental, n}; }
  static Representation adjoint(int n) { return {RepKind::Adjoint, n}; }

  int dim() const { return kind == RepKind::Fundamental ? n : n * n; }
  /// k x k matrix representing g.
  Matrix matrix(const GroupElement& g) const;
  /// k x k matrix representing the infinitesimal action of X.
  Matrix generator(const AlgebraElement& x) const;
};

// Invariant measures.
double unitarity_defect(const GroupElement& g);
double determinant_defect(const GroupElement& g);
double anti_hermiticity_defect(const AlgebraElement& x);
double trace_defect(const AlgebraElement& x);
bool is_valid(const GroupSpec& spec, const GroupElement& g, double tol = kInvariantTol);
bool is_valid(const GroupSpec& spec, const AlgebraElement& x, double tol = kInvariantTol);

double frobenius_norm(const AlgebraElement& x);
double frobenius_norm(const Matrix& m);

/// Matrix exponential (scaling and squaring with a Taylor kernel).
GroupElement exp(const AlgebraElement& x);
Matrix expm(const Matrix& m);

/// XY - YX.
AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y);

/// g X g^-1.
AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& x);

RepVector rep_act(const Representation& rep, const GroupElement& g, const RepVector& q);
RepTangent rep_act(const Representation& rep, const GroupElement& g, const RepTangent& v);
inline RepVector rep_act(const GroupElement& g, const RepVector& q) {
  return rep_act(Representation::fundamental(g.dim()), g, q);
}

/// X_Q(q) = d/dt|0 exp(tX) . q
RepTangent fundamental_vector_field(const Representation& rep, const AlgebraElement& x,
                                    const RepVector& q);
inline RepTangent fundamental_vector_field(const AlgebraElement& x, const RepVector& q) {
  return fundamental_vector_field(Representation::fundamental(x.dim()), x, q);
}

/// Action of TG = G x g (right trivialized) on TQ:
/// (g, X) . (q, qdot) = (g q, g qdot + X_Q(g q)).
std::pair<RepVector, RepTangent> tangent_act(const Representation& rep, const GroupElement& g,
                                             const AlgebraElement& x, const RepVector& q,
                                             const RepTangent& qdot);

/// Orthogonal basis of the Lie algebra: i for U(1); -(i/2) * generalized
/// Gell-Mann matrices for SU(N). For SU(2) this is e_a = -(i/2) sigma_a.
std::vector<AlgebraElement> algebra_basis(const GroupSpec& spec);

/// Deterministic uniform source. The mapping from engine output to doubles
/// is fixed here so results do not depend on the standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Sum of basis elements with coefficients uniform in [-1, 1].
AlgebraElement random_algebra_element(Rng& rng, const GroupSpec& spec);
AlgebraElement random_algebra_element(std::uint64_t seed, const GroupSpec& spec);
/// exp of a random algebra element.
GroupElement random_group_element(Rng& rng, const GroupSpec& spec);
GroupElement random_group_element(std::uint64_t seed, const GroupSpec& spec);
/// Complex entries with real and imaginary parts uniform in [-1, 1].
Vector random_vector(Rng& rng, int k);

}  // namespace gauge
