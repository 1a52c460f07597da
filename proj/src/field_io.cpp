#include "gauge/field_io.hpp"

#include <cstdint>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gauge {

namespace {

using Sink = std::vector<Complex>;

void put(Sink& out, const Matrix& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  }
}

Matrix take_matrix(const Complex*& p, int n) {
  Matrix m(n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) m(r, c) = *p++;
  }
  return m;
}

struct Layout {
  int n = 1;  // patch dim
  int m = 1;  // matrix dim
  int k = 1;  // rep dim
};

std::size_t entries_per_point(ValueKind kind, const Layout& l) {
  const std::size_t mat = static_cast<std::size_t>(l.m * l.m);
  const std::size_t n = static_cast<std::size_t>(l.n);
  switch (kind) {
    case ValueKind::Group:
    case ValueKind::Algebra:
      return mat;
    case ValueKind::RepVector:
      return static_cast<std::size_t>(l.k);
    case ValueKind::Scalar:
      return 1;
    case ValueKind::Jet1Gauge:
      return mat * (1 + n);
    case ValueKind::Jet2Gauge:
      return mat * (1 + n + n * (n + 1) / 2);
    case ValueKind::JetConnection:
      return mat * (n + n * n);
  }
  return 0;
}

void encode(Sink& out, const GroupElement& v, const Layout&) { put(out, v.matrix()); }
void encode(Sink& out, const AlgebraElement& v, const Layout&) { put(out, v.matrix()); }
void encode(Sink& out, const RepVector& v, const Layout&) {
  for (Eigen::Index i = 0; i < v.vector().size(); ++i) out.push_back(v.vector()(i));
}
void encode(Sink& out, double v, const Layout&) { out.emplace_back(v, 0.0); }
void encode(Sink& out, const Jet1Gauge& v, const Layout&) {
  put(out, v.g.matrix());
  for (const auto& a : v.a) put(out, a.matrix());
}
void encode(Sink& out, const Jet2Gauge& v, const Layout&) {
  put(out, v.g.matrix());
  for (const auto& a : v.a) put(out, a.matrix());
  for (const auto& s : v.s.packed()) put(out, s.matrix());
}
void encode(Sink& out, const JetConnection& v, const Layout&) {
  for (const auto& a : v.A) put(out, a.matrix());
  for (const auto& d : v.dA) put(out, d.matrix());
}

template <class V>
V decode(const Complex*& p, const Layout& l);

template <>
GroupElement decode<GroupElement>(const Complex*& p, const Layout& l) {
  return GroupElement(take_matrix(p, l.m));
}
template <>
AlgebraElement decode<AlgebraElement>(const Complex*& p, const Layout& l) {
  return AlgebraElement(take_matrix(p, l.m));
}
template <>
RepVector decode<RepVector>(const Complex*& p, const Layout& l) {
  Vector v(l.k);
  for (int i = 0; i < l.k; ++i) v(i) = *p++;
  return RepVector(std::move(v));
}
template <>
double decode<double>(const Complex*& p, const Layout&) {
  return (p++)->real();
}
template <>
Jet1Gauge decode<Jet1Gauge>(const Complex*& p, const Layout& l) {
  Jet1Gauge j{GroupElement(take_matrix(p, l.m)), {}};
  for (int mu = 0; mu < l.n; ++mu) j.a.emplace_back(take_matrix(p, l.m));
  return j;
}
template <>
Jet2Gauge decode<Jet2Gauge>(const Complex*& p, const Layout& l) {
  Jet2Gauge j{GroupElement(take_matrix(p, l.m)), {}, SymmetricArray(l.n, l.m)};
  for (int mu = 0; mu < l.n; ++mu) j.a.emplace_back(take_matrix(p, l.m));
  for (auto& s : j.s.packed()) s = AlgebraElement(take_matrix(p, l.m));
  return j;
}
template <>
JetConnection decode<JetConnection>(const Complex*& p, const Layout& l) {
  JetConnection jc;
  for (int mu = 0; mu < l.n; ++mu) jc.A.emplace_back(take_matrix(p, l.m));
  for (int i = 0; i < l.n * l.n; ++i) jc.dA.emplace_back(take_matrix(p, l.m));
  return jc;
}

void write_le_double(std::ostream& out, double x) {
  std::uint64_t bits;
  std::memcpy(&bits, &x, sizeof bits);
  unsigned char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<unsigned char>((bits >> (8 * i)) & 0xffu);
  out.write(reinterpret_cast<const char*>(bytes), 8);
}

double read_le_double(std::istream& in) {
  unsigned char bytes[8];
  if (!in.read(reinterpret_cast<char*>(bytes), 8)) throw std::runtime_error("JGF1: truncated payload");
  std::uint64_t bits = 0;
  for (int i = 0; i < 8; ++i) bits |= static_cast<std::uint64_t>(bytes[i]) << (8 * i);
  double x;
  std::memcpy(&x, &bits, sizeof x);
  return x;
}

std::string format_double(double x) {
  std::ostringstream s;
  s << std::setprecision(17) << x;
  return s.str();
}

template <class V>
void write_any(std::ostream& out, const GroupSpec& group, const Field<V>& f, ValueKind kind) {
  const Patch& p = f.patch();
  const Layout layout{p.dim, group.n, group.rep_dim()};
  out << "JGF1\n";
  out << "family " << group.name() << '\n';
  out << "rep_dim " << group.rep_dim() << '\n';
  out << "dim " << p.dim << '\n';
  out << "extent";
  for (int e : p.extent) out << ' ' << e;
  out << '\n';
  out << "spacing";
  for (double h : p.spacing) out << ' ' << format_double(h);
  out << '\n';
  out << "value-kind " << to_string(kind) << '\n';

  const std::size_t per_point = entries_per_point(kind, layout);
  Sink sink;
  sink.reserve(per_point);
  for (std::size_t i = 0; i < f.size(); ++i) {
    sink.clear();
    if (f.valid(i)) {
      encode(sink, f[i], layout);
      if (sink.size() != per_point) throw std::invalid_argument("JGF1: value does not match declared layout");
    } else {
      sink.assign(per_point, Complex(0.0, 0.0));
    }
    for (const Complex& z : sink) {
      write_le_double(out, z.real());
      write_le_double(out, z.imag());
    }
  }
  if (!out) throw std::runtime_error("JGF1: write failed");
}

template <class V>
Field<V> read_values(std::istream& in, const FieldHeader& h) {
  const Layout layout{h.patch.dim, h.group.n, h.rep_dim};
  const std::size_t per_point = entries_per_point(h.kind, layout);
  std::vector<V> values;
  values.reserve(h.patch.size());
  std::vector<Complex> buf(per_point);
  for (std::size_t i = 0; i < h.patch.size(); ++i) {
    for (auto& z : buf) {
      const double re = read_le_double(in);
      const double im = read_le_double(in);
      z = Complex(re, im);
    }
    const Complex* p = buf.data();
    values.push_back(decode<V>(p, layout));
  }
  if (in.peek() != std::char_traits<char>::eof()) throw std::runtime_error("JGF1: trailing bytes after payload");
  return Field<V>(h.patch, std::move(values));
}

std::string expect_line(std::istream& in, const std::string& key) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("JGF1: missing header line '" + key + "'");
  if (line.rfind(key + " ", 0) != 0) throw std::runtime_error("JGF1: expected '" + key + "', got '" + line + "'");
  return line.substr(key.size() + 1);
}

int parse_int(const std::string& text, const char* what) {
  std::istringstream s(text);
  int v = 0;
  if (!(s >> v) || !(s >> std::ws).eof()) throw std::runtime_error(std::string("JGF1: malformed ") + what);
  return v;
}

}  // namespace

std::string to_string(ValueKind kind) {
  switch (kind) {
    case ValueKind::Group:
      return "group";
    case ValueKind::Algebra:
      return "algebra";
    case ValueKind::RepVector:
      return "rep-vector";
    case ValueKind::Scalar:
      return "scalar";
    case ValueKind::Jet1Gauge:
      return "jet1-gauge";
    case ValueKind::Jet2Gauge:
      return "jet2-gauge";
    case ValueKind::JetConnection:
      return "jet-connection";
  }
  return "?";
}

ValueKind parse_value_kind(const std::string& name) {
  for (ValueKind k : {ValueKind::Group, ValueKind::Algebra, ValueKind::RepVector, ValueKind::Scalar,
                      ValueKind::Jet1Gauge, ValueKind::Jet2Gauge, ValueKind::JetConnection}) {
    if (to_string(k) == name) return k;
  }
  throw std::runtime_error("JGF1: unknown value-kind '" + name + "'");
}

void write_field(std::ostream& out, const GroupSpec& g, const Field<GroupElement>& f) {
  write_any(out, g, f, ValueKind::Group);
}
void write_field(std::ostream& out, const GroupSpec& g, const Field<AlgebraElement>& f) {
  write_any(out, g, f, ValueKind::Algebra);
}
void write_field(std::ostream& out, const GroupSpec& g, const Field<RepVector>& f) {
  write_any(out, g, f, ValueKind::RepVector);
}
void write_field(std::ostream& out, const GroupSpec& g, const Field<double>& f) {
  write_any(out, g, f, ValueKind::Scalar);
}
void write_field(std::ostream& out, const GroupSpec& g, const Field<Jet1Gauge>& f) {
  write_any(out, g, f, ValueKind::Jet1Gauge);
}
void write_field(std::ostream& out, const GroupSpec& g, const Field<Jet2Gauge>& f) {
  write_any(out, g, f, ValueKind::Jet2Gauge);
}
void write_field(std::ostream& out, const GroupSpec& g, const Field<JetConnection>& f) {
  write_any(out, g, f, ValueKind::JetConnection);
}

FieldHeader read_header(std::istream& in) {
  std::string magic;
  if (!std::getline(in, magic) || magic != "JGF1") throw std::runtime_error("JGF1: bad magic");
  FieldHeader h;
  try {
    h.group = GroupSpec::parse(expect_line(in, "family"));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("JGF1: ") + e.what());
  }
  h.rep_dim = parse_int(expect_line(in, "rep_dim"), "rep_dim");
  if (h.rep_dim == h.group.n * h.group.n && h.rep_dim != h.group.n) h.group.rep = RepKind::Adjoint;
  if (h.rep_dim != h.group.rep_dim()) throw std::runtime_error("JGF1: rep_dim does not match family");
  const int dim = parse_int(expect_line(in, "dim"), "dim");
  if (dim < 1 || dim > 4) throw std::runtime_error("JGF1: dim out of range");
  h.patch.dim = dim;
  {
    std::istringstream s(expect_line(in, "extent"));
    h.patch.extent.resize(dim);
    for (auto& e : h.patch.extent) {
      if (!(s >> e)) throw std::runtime_error("JGF1: malformed extent");
    }
    if (!(s >> std::ws).eof()) throw std::runtime_error("JGF1: malformed extent");
  }
  {
    std::istringstream s(expect_line(in, "spacing"));
    h.patch.spacing.resize(dim);
    for (auto& x : h.patch.spacing) {
      if (!(s >> x)) throw std::runtime_error("JGF1: malformed spacing");
    }
    if (!(s >> std::ws).eof()) throw std::runtime_error("JGF1: malformed spacing");
  }
  h.patch.origin.assign(dim, 0.0);
  h.kind = parse_value_kind(expect_line(in, "value-kind"));
  try {
    h.patch.validate();
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("JGF1: ") + e.what());
  }
  return h;
}

namespace {

template <class V>
FieldFile with_values(std::istream& in, const FieldHeader& h) {
  AnyField field = read_values<V>(in, h);
  return {h, std::move(field)};
}

}  // namespace

FieldFile read_field(std::istream& in) {
  FieldHeader h = read_header(in);
  switch (h.kind) {
    case ValueKind::Group:
      return with_values<GroupElement>(in, h);
    case ValueKind::Algebra:
      return with_values<AlgebraElement>(in, h);
    case ValueKind::RepVector:
      return with_values<RepVector>(in, h);
    case ValueKind::Scalar:
      return with_values<double>(in, h);
    case ValueKind::Jet1Gauge:
      return with_values<Jet1Gauge>(in, h);
    case ValueKind::Jet2Gauge:
      return with_values<Jet2Gauge>(in, h);
    case ValueKind::JetConnection:
      return with_values<JetConnection>(in, h);
  }
  throw std::runtime_error("JGF1: unsupported value kind");
}

void write_field_file(const std::string& path, const GroupSpec& group, const AnyField& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  std::visit([&](const auto& field) { write_field(out, group, field); }, f);
}

FieldFile read_field_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return read_field(in);
}

}  // namespace gauge
