#include "gauge/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace gauge {

ScalarFunction ScalarFunction::polynomial(double c, std::vector<double> b, std::vector<double> q_rowmajor) {
  const std::size_t n = b.size();
  if (q_rowmajor.size() != n * n) throw std::invalid_argument("polynomial: quadratic part must be n x n");
  ScalarFunction f;
  f.kind_ = Kind::Polynomial;
  f.c_ = c;
  f.b_ = std::move(b);
  // keep only the symmetric part
  f.q_.assign(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) f.q_[i * n + j] = 0.5 * (q_rowmajor[i * n + j] + q_rowmajor[j * n + i]);
  }
  return f;
}

ScalarFunction ScalarFunction::sinusoid(double amplitude, std::vector<double> k, double phase) {
  ScalarFunction f;
  f.kind_ = Kind::Sinusoid;
  f.c_ = amplitude;
  f.b_ = std::move(k);
  f.phase_ = phase;
  return f;
}

ScalarFunction ScalarFunction::random(Rng& rng, int n) {
  if (rng.uniform() < 0.5) {
    std::vector<double> k(n);
    for (auto& v : k) v = rng.uniform(-1.2, 1.2);
    const double amplitude = rng.uniform(0.3, 1.0);
    const double phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
    return sinusoid(amplitude, std::move(k), phase);
  }
  const double c = rng.uniform(-1.0, 1.0);
  std::vector<double> b(n);
  for (auto& v : b) v = rng.uniform(-1.0, 1.0);
  std::vector<double> q(static_cast<std::size_t>(n * n));
  for (auto& v : q) v = rng.uniform(-0.5, 0.5);
  return polynomial(c, std::move(b), std::move(q));
}

namespace {

double dot(const std::vector<double>& a, const Point& x) {
  if (a.size() != x.size()) throw std::invalid_argument("scalar function: point dimension mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

}  // namespace

double ScalarFunction::value(const Point& x) const {
  if (kind_ == Kind::Sinusoid) return c_ * std::sin(dot(b_, x) + phase_);
  const std::size_t n = b_.size();
  double quad = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) quad += x[i] * q_[i * n + j] * x[j];
  }
  return c_ + dot(b_, x) + 0.5 * quad;
}

std::vector<double> ScalarFunction::gradient(const Point& x) const {
  const std::size_t n = b_.size();
  std::vector<double> g(n);
  if (kind_ == Kind::Sinusoid) {
    const double c = c_ * std::cos(dot(b_, x) + phase_);
    for (std::size_t i = 0; i < n; ++i) g[i] = c * b_[i];
    return g;
  }
  for (std::size_t i = 0; i < n; ++i) {
    double s = b_[i];
    for (std::size_t j = 0; j < n; ++j) s += q_[i * n + j] * x[j];
    g[i] = s;
  }
  return g;
}

std::vector<double> ScalarFunction::hessian(const Point& x) const {
  const std::size_t n = b_.size();
  if (kind_ == Kind::Polynomial) return q_;
  std::vector<double> h(n * n);
  const double s = -c_ * std::sin(dot(b_, x) + phase_);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h[i * n + j] = s * (b_[i] * b_[j]);
  }
  return h;
}

ScalarFunction ScalarFunction::composed(const std::vector<double>& scale, const Point& center) const {
  const std::size_t n = b_.size();
  if (scale.size() != n || center.size() != n) throw std::invalid_argument("scalar function: composition dimension mismatch");
  // image of x = 0
  Point origin(n);
  for (std::size_t i = 0; i < n; ++i) origin[i] = -scale[i] * center[i];
  ScalarFunction f = *this;
  if (kind_ == Kind::Sinusoid) {
    for (std::size_t i = 0; i < n; ++i) f.b_[i] = scale[i] * b_[i];
    f.phase_ = phase_ + dot(b_, origin);
    return f;
  }
  const auto grad = gradient(origin);
  f.c_ = value(origin);
  for (std::size_t i = 0; i < n; ++i) {
    f.b_[i] = scale[i] * grad[i];
    for (std::size_t j = 0; j < n; ++j) f.q_[i * n + j] = scale[i] * q_[i * n + j] * scale[j];
  }
  return f;
}

ScalarFunction ScalarFunction::fitted(const Patch& patch) const {
  std::vector<double> scale(patch.dim);
  Point center(patch.dim);
  for (int a = 0; a < patch.dim; ++a) {
    const double length = (patch.extent[a] - 1) * patch.spacing[a];
    scale[a] = 2.0 / length;
    center[a] = patch.origin[a] + 0.5 * length;
  }
  return composed(scale, center);
}

GaugeFamily GaugeFamily::single(AlgebraElement x, ScalarFunction f) {
  const int m = x.dim();
  return {GroupElement::identity(m), {GeneratorFactor{std::move(x), std::move(f)}}};
}

GaugeFamily GaugeFamily::random(Rng& rng, const GroupSpec& spec, int n, int count) {
  if (count < 0 || count > 3) throw std::invalid_argument("gauge family: at most 3 factors");
  GaugeFamily family{random_group_element(rng, spec), {}};
  for (int i = 0; i < count; ++i) {
    AlgebraElement x = random_algebra_element(rng, spec);
    family.factors.push_back({std::move(x), ScalarFunction::random(rng, n)});
  }
  return family;
}

GaugeFamily GaugeFamily::named(std::string_view name, Rng& rng, const GroupSpec& spec, int n) {
  if (name == "constant") return constant_family(random_group_element(rng, spec));
  if (name == "single") return random(rng, spec, n, 1);
  if (name == "product") return random(rng, spec, n, 3);
  if (name == "plane-wave") {
    if (spec.family != GroupFamily::U1) throw std::invalid_argument("plane-wave family requires U1");
    std::vector<double> k(n);
    for (auto& v : k) v = rng.uniform(-1.0, 1.0);
    return single(algebra_basis(spec).front(),
                  ScalarFunction::polynomial(0.0, std::move(k), std::vector<double>(n * n, 0.0)));
  }
  throw std::invalid_argument("unknown analytic family: " + std::string(name));
}

GaugeFamily GaugeFamily::fitted(const Patch& patch) const {
  GaugeFamily out = *this;
  for (auto& f : out.factors) f.f = f.f.fitted(patch);
  return out;
}

GroupElement GaugeFamily::value(const Point& x) const {
  GroupElement g = constant;
  for (const auto& f : factors) g = g * exp(f.f.value(x) * f.generator);
  return g;
}

Jet2Gauge GaugeFamily::jet(const Point& x) const {
  const int n = static_cast<int>(x.size());
  const int m = constant.dim();
  Jet2Gauge j = Jet2Gauge::unit(n, m);
  j.g = constant;
  for (const auto& f : factors) {
    // exp(f X): a_mu = d_mu f X, s_mu_nu = d_mu d_nu f X
    const auto grad = f.f.gradient(x);
    const auto hess = f.f.hessian(x);
    Jet2Gauge fj{exp(f.f.value(x) * f.generator), {}, SymmetricArray(n, m)};
    for (int mu = 0; mu < n; ++mu) fj.a.push_back(grad[mu] * f.generator);
    for (int mu = 0; mu < n; ++mu) {
      for (int nu = mu; nu < n; ++nu) fj.s(mu, nu) = hess[mu * n + nu] * f.generator;
    }
    j = jet2_mul(j, fj);
  }
  return j;
}

ConnectionFamily ConnectionFamily::random(Rng& rng, const GroupSpec& spec, int n, int terms) {
  ConnectionFamily family;
  family.matrix_dim = spec.n;
  family.components.resize(n);
  for (int mu = 0; mu < n; ++mu) {
    for (int t = 0; t < terms; ++t) {
      ScalarFunction f = ScalarFunction::random(rng, n);
      family.components[mu].push_back({std::move(f), random_algebra_element(rng, spec)});
    }
  }
  return family;
}

ConnectionFamily ConnectionFamily::fitted(const Patch& patch) const {
  ConnectionFamily out = *this;
  for (auto& terms : out.components) {
    for (auto& t : terms) t.f = t.f.fitted(patch);
  }
  return out;
}

ConnectionFamily ConnectionFamily::normalized(const Patch& patch) const {
  double top = 0.0;
  for (std::size_t i = 0; i < patch.size(); ++i) {
    for (const auto& a : value(patch.coordinates(i))) top = std::max(top, a.matrix().norm());
  }
  if (top == 0.0) return *this;
  ConnectionFamily out = *this;
  for (auto& terms : out.components) {
    for (auto& t : terms) t.generator = (1.0 / top) * t.generator;
  }
  return out;
}

Connection ConnectionFamily::value(const Point& x) const {
  Connection a;
  a.reserve(components.size());
  for (const auto& terms : components) {
    AlgebraElement v = AlgebraElement::zero(matrix_dim);
    for (const auto& t : terms) v += t.f.value(x) * t.generator;
    a.push_back(std::move(v));
  }
  return a;
}

JetConnection ConnectionFamily::jet(const Point& x) const {
  const int n = static_cast<int>(components.size());
  JetConnection jc = JetConnection::zero(n, matrix_dim);
  jc.A = value(x);
  for (int nu = 0; nu < n; ++nu) {
    for (const auto& t : components[nu]) {
      const auto grad = t.f.gradient(x);
      for (int mu = 0; mu < n; ++mu) jc.d(mu, nu) += grad[mu] * t.generator;
    }
  }
  return jc;
}

MatterFamily MatterFamily::random(Rng& rng, int rep_dim, int n, int terms) {
  MatterFamily family;
  family.rep_dim = rep_dim;
  for (int t = 0; t < terms; ++t) {
    ScalarFunction f = ScalarFunction::random(rng, n);
    family.terms.push_back({std::move(f), random_vector(rng, rep_dim)});
  }
  return family;
}

MatterFamily MatterFamily::fitted(const Patch& patch) const {
  MatterFamily out = *this;
  for (auto& t : out.terms) t.f = t.f.fitted(patch);
  return out;
}

MatterFamily MatterFamily::normalized(const Patch& patch) const {
  double top = 0.0;
  for (std::size_t i = 0; i < patch.size(); ++i) top = std::max(top, value(patch.coordinates(i)).vector().norm());
  if (top == 0.0) return *this;
  MatterFamily out = *this;
  for (auto& t : out.terms) t.v /= top;
  return out;
}

RepVector MatterFamily::value(const Point& x) const {
  Vector v = Vector::Zero(rep_dim);
  for (const auto& t : terms) v += t.f.value(x) * t.v;
  return RepVector(std::move(v));
}

JetMatter MatterFamily::jet(const Point& x) const {
  const int n = static_cast<int>(x.size());
  JetMatter jm{value(x), std::vector<RepTangent>(n, RepTangent::zero(rep_dim))};
  std::vector<Vector> d(n, Vector::Zero(rep_dim));
  for (const auto& t : terms) {
    const auto grad = t.f.gradient(x);
    for (int mu = 0; mu < n; ++mu) d[mu] += grad[mu] * t.v;
  }
  for (int mu = 0; mu < n; ++mu) jm.dphi[mu] = RepTangent(std::move(d[mu]));
  return jm;
}

Field<Jet1Gauge> GaugeSample::jets1() const {
  return map(jets, [](const Jet2Gauge& j) { return j.first_order(); });
}

GaugeSample sample_analytic(const Patch& patch, const GaugeFamily& family) {
  patch.validate();
  Field<Jet2Gauge> jets = sample(patch, [&](const Point& x) { return family.jet(x); });
  Field<GroupElement> g = map(jets, [](const Jet2Gauge& j) { return j.g; });
  return {std::move(g), std::move(jets)};
}

Field<JetConnection> sample_analytic(const Patch& patch, const ConnectionFamily& family) {
  patch.validate();
  return sample(patch, [&](const Point& x) { return family.jet(x); });
}

Field<JetMatter> sample_analytic(const Patch& patch, const MatterFamily& family) {
  patch.validate();
  return sample(patch, [&](const Point& x) { return family.jet(x); });
}

Jet1Gauge random_jet1(Rng& rng, const GroupSpec& spec, int n) {
  Jet1Gauge j{random_group_element(rng, spec), {}};
  for (int mu = 0; mu < n; ++mu) j.a.push_back(random_algebra_element(rng, spec));
  return j;
}

Jet2Gauge random_jet2(Rng& rng, const GroupSpec& spec, int n) {
  Jet2Gauge j{random_group_element(rng, spec), {}, SymmetricArray(n, spec.n)};
  for (int mu = 0; mu < n; ++mu) j.a.push_back(random_algebra_element(rng, spec));
  for (auto& s : j.s.packed()) s = random_algebra_element(rng, spec);
  return j;
}

Connection random_connection(Rng& rng, const GroupSpec& spec, int n) {
  Connection a;
  for (int mu = 0; mu < n; ++mu) a.push_back(random_algebra_element(rng, spec));
  return a;
}

JetConnection random_jet_connection(Rng& rng, const GroupSpec& spec, int n) {
  JetConnection jc = JetConnection::zero(n, spec.n);
  for (auto& a : jc.A) a = random_algebra_element(rng, spec);
  for (auto& d : jc.dA) d = random_algebra_element(rng, spec);
  return jc;
}

JetMatter random_jet_matter(Rng& rng, int rep_dim, int n) {
  JetMatter jm{RepVector(random_vector(rng, rep_dim)), {}};
  for (int mu = 0; mu < n; ++mu) jm.dphi.emplace_back(random_vector(rng, rep_dim));
  return jm;
}

}  // namespace gauge
