#include "gauge/lie.hpp"

#include <cmath>
#include <stdexcept>

namespace gauge {

namespace {

void require_same_dim(int a, int b, const char* what) {
  if (a != b) {
    throw std::invalid_argument(std::string(what) + ": dimension mismatch (" + std::to_string(a) +
                                " vs " + std::to_string(b) + ")");
  }
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Vector vec(const Matrix& m) { return Eigen::Map<const Vector>(m.data(), m.size()); }

}  // namespace

GroupSpec GroupSpec::parse(std::string_view name) {
  if (name == "U1") return u1();
  if (name == "SU2") return su2();
  if (name == "SU3") return su3();
  if (name.size() > 2 && name.substr(0, 2) == "SU") {
    int n = 0;
    for (char c : name.substr(2)) {
      if (c < '0' || c > '9') throw std::invalid_argument("unknown group family: " + std::string(name));
      n = n * 10 + (c - '0');
      if (n > 64) throw std::invalid_argument("group dimension too large: " + std::string(name));
    }
    if (n < 2) throw std::invalid_argument("SU(N) requires N >= 2: " + std::string(name));
    if (n == 2) return su2();
    if (n == 3) return su3();
    return sun(n);
  }
  throw std::invalid_argument("unknown group family: " + std::string(name));
}

std::string GroupSpec::name() const {
  switch (family) {
    case GroupFamily::U1:
      return "U1";
    case GroupFamily::SU2:
      return "SU2";
    case GroupFamily::SU3:
      return "SU3";
    case GroupFamily::SUN:
      return "SU" + std::to_string(n);
  }
  return "?";
}

void GroupSpec::validate() const {
  switch (family) {
    case GroupFamily::U1:
      if (n != 1) throw std::invalid_argument("U1 requires N = 1");
      break;
    case GroupFamily::SU2:
      if (n != 2) throw std::invalid_argument("SU2 requires N = 2");
      break;
    case GroupFamily::SU3:
      if (n != 3) throw std::invalid_argument("SU3 requires N = 3");
      break;
    case GroupFamily::SUN:
      if (n < 2) throw std::invalid_argument("SU(N) requires N >= 2");
      break;
  }
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) {
  require_same_dim(a.dim(), b.dim(), "group product");
  return GroupElement(a.m_ * b.m_);
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  require_same_dim(dim(), o.dim(), "algebra sum");
  m_ += o.m_;
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  require_same_dim(dim(), o.dim(), "algebra difference");
  m_ -= o.m_;
  return *this;
}

RepVector operator+(const RepVector& a, const RepVector& b) {
  require_same_dim(a.dim(), b.dim(), "rep vector sum");
  return RepVector(a.v_ + b.v_);
}
RepVector operator-(const RepVector& a, const RepVector& b) {
  require_same_dim(a.dim(), b.dim(), "rep vector difference");
  return RepVector(a.v_ - b.v_);
}
RepTangent operator+(const RepTangent& a, const RepTangent& b) {
  require_same_dim(a.dim(), b.dim(), "rep tangent sum");
  return RepTangent(a.v_ + b.v_);
}
RepTangent operator-(const RepTangent& a, const RepTangent& b) {
  require_same_dim(a.dim(), b.dim(), "rep tangent difference");
  return RepTangent(a.v_ - b.v_);
}

Matrix Representation::matrix(const GroupElement& g) const {
  require_same_dim(g.dim(), n, "representation");
  if (kind == RepKind::Fundamental) return g.matrix();
  // vec(g X g^dagger) = (conj(g) (x) g) vec(X), column-major vec
  return kron(g.matrix().conjugate(), g.matrix());
}

Matrix Representation::generator(const AlgebraElement& x) const {
  require_same_dim(x.dim(), n, "representation");
  if (kind == RepKind::Fundamental) return x.matrix();
  const Matrix id = Matrix::Identity(n, n);
  // vec(ZX - XZ) = (I (x) Z - Z^T (x) I) vec(X)
  return kron(id, x.matrix()) - kron(x.matrix().transpose(), id);
}

double unitarity_defect(const GroupElement& g) {
  const Matrix& m = g.matrix();
  return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).norm();
}

double determinant_defect(const GroupElement& g) { return std::abs(g.matrix().determinant() - 1.0); }

double anti_hermiticity_defect(const AlgebraElement& x) {
  return (x.matrix().adjoint() + x.matrix()).norm();
}

double trace_defect(const AlgebraElement& x) { return std::abs(x.matrix().trace()); }

bool is_valid(const GroupSpec& spec, const GroupElement& g, double tol) {
  if (g.dim() != spec.n || g.matrix().cols() != spec.n) return false;
  if (!g.matrix().allFinite()) return false;
  if (unitarity_defect(g) > tol) return false;
  return !spec.special() || determinant_defect(g) <= tol;
}

bool is_valid(const GroupSpec& spec, const AlgebraElement& x, double tol) {
  if (x.dim() != spec.n || x.matrix().cols() != spec.n) return false;
  if (!x.matrix().allFinite()) return false;
  if (anti_hermiticity_defect(x) > tol) return false;
  return !spec.special() || trace_defect(x) <= tol;
}

double frobenius_norm(const AlgebraElement& x) { return x.matrix().norm(); }
double frobenius_norm(const Matrix& m) { return m.norm(); }

Matrix expm(const Matrix& m) {
  const Eigen::Index n = m.rows();
  if (n == 0) return m;
  // 1-norm
  const double norm = m.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm > 0.5) squarings = static_cast<int>(std::ceil(std::log2(norm / 0.5)));
  const Matrix scaled = m / std::ldexp(1.0, squarings);

  Matrix result = Matrix::Identity(n, n);
  Matrix term = Matrix::Identity(n, n);
  for (int k = 1; k <= 30; ++k) {
    term = term * scaled / static_cast<double>(k);
    result += term;
    if (term.cwiseAbs().maxCoeff() < 1e-18) break;
  }
  for (int i = 0; i < squarings; ++i) result = result * result;
  return result;
}

GroupElement exp(const AlgebraElement& x) { return GroupElement(expm(x.matrix())); }

AlgebraElement bracket(const AlgebraElement& x, const AlgebraElement& y) {
  require_same_dim(x.dim(), y.dim(), "bracket");
  return AlgebraElement(x.matrix() * y.matrix() - y.matrix() * x.matrix());
}

AlgebraElement adjoint(const GroupElement& g, const AlgebraElement& x) {
  require_same_dim(g.dim(), x.dim(), "adjoint");
  return AlgebraElement(g.matrix() * x.matrix() * g.matrix().adjoint());
}

RepVector rep_act(const Representation& rep, const GroupElement& g, const RepVector& q) {
  require_same_dim(q.dim(), rep.dim(), "rep_act");
  if (rep.kind == RepKind::Adjoint) {
    const Matrix x = Eigen::Map<const Matrix>(q.vector().data(), rep.n, rep.n);
    return RepVector(vec(g.matrix() * x * g.matrix().adjoint()));
  }
  require_same_dim(g.dim(), rep.n, "rep_act");
  return RepVector(g.matrix() * q.vector());
}

RepTangent rep_act(const Representation& rep, const GroupElement& g, const RepTangent& v) {
  return RepTangent(rep_act(rep, g, RepVector(v.vector())).vector());
}

RepTangent fundamental_vector_field(const Representation& rep, const AlgebraElement& x,
                                    const RepVector& q) {
  require_same_dim(q.dim(), rep.dim(), "fundamental_vector_field");
  require_same_dim(x.dim(), rep.n, "fundamental_vector_field");
  if (rep.kind == RepKind::Adjoint) {
    const Matrix y = Eigen::Map<const Matrix>(q.vector().data(), rep.n, rep.n);
    return RepTangent(vec(x.matrix() * y - y * x.matrix()));
  }
  return RepTangent(x.matrix() * q.vector());
}

std::pair<RepVector, RepTangent> tangent_act(const Representation& rep, const GroupElement& g,
                                             const AlgebraElement& x, const RepVector& q,
                                             const RepTangent& qdot) {
  RepVector gq = rep_act(rep, g, q);
  RepTangent v = rep_act(rep, g, qdot) + fundamental_vector_field(rep, x, gq);
  return {std::move(gq), std::move(v)};
}

std::vector<AlgebraElement> algebra_basis(const GroupSpec& spec) {
  spec.validate();
  const Complex i(0.0, 1.0);
  std::vector<AlgebraElement> basis;
  if (!spec.special()) {
    basis.emplace_back(Matrix::Constant(1, 1, i));
    return basis;
  }
  const int n = spec.n;
  // Generalized Gell-Mann matrices lambda with tr(lambda_a lambda_b) = 2 delta_ab,
  // ordered so that SU(2) gives (sigma_1, sigma_2, sigma_3).
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) {
      Matrix sym = Matrix::Zero(n, n);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      Matrix anti = Matrix::Zero(n, n);
      anti(j, k) = -i;
      anti(k, j) = i;
      basis.emplace_back(-0.5 * i * sym);
      basis.emplace_back(-0.5 * i * anti);
    }
  }
  for (int l = 1; l < n; ++l) {
    Matrix diag = Matrix::Zero(n, n);
    const double norm = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) diag(j, j) = norm;
    diag(l, l) = -l * norm;
    basis.emplace_back(-0.5 * i * diag);
  }
  return basis;
}

AlgebraElement random_algebra_element(Rng& rng, const GroupSpec& spec) {
  const auto basis = algebra_basis(spec);
  AlgebraElement x = AlgebraElement::zero(spec.n);
  for (const auto& b : basis) x += rng.uniform(-1.0, 1.0) * b;
  return x;
}

AlgebraElement random_algebra_element(std::uint64_t seed, const GroupSpec& spec) {
  Rng rng(seed);
  return random_algebra_element(rng, spec);
}

GroupElement random_group_element(Rng& rng, const GroupSpec& spec) {
  return exp(random_algebra_element(rng, spec));
}

GroupElement random_group_element(std::uint64_t seed, const GroupSpec& spec) {
  Rng rng(seed);
  return random_group_element(rng, spec);
}

Vector random_vector(Rng& rng, int k) {
  Vector v(k);
  for (int i = 0; i < k; ++i) {
    const double re = rng.uniform(-1.0, 1.0);
    const double im = rng.uniform(-1.0, 1.0);
    v(i) = Complex(re, im);
  }
  return v;
}

}  // namespace gauge
