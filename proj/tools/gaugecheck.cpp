// gaugecheck: run verification suites, convergence studies, and read or
// write JGF1 field files.

#include "gauge/analytic.hpp"
#include "gauge/field_io.hpp"
#include "gauge/harness.hpp"
#include "gauge/jets.hpp"
#include "gauge/lagrangians.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace gauge;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Common {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::vector<std::string> suites;
  std::string out;
  std::optional<int> threads;
};

void add_common(CLI::App* cmd, Common& o, bool with_suites) {
  cmd->add_option("--config", o.config_path, "JSON config file")->check(CLI::ExistingFile);
  cmd->add_option("--seed", o.seed, "override the config seed");
  if (with_suites) cmd->add_option("--suite", o.suites, "suite to run (repeatable)")->take_all();
  cmd->add_option("--out", o.out, "output path");
  cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
}

SuiteConfig resolve(const Common& o) {
  SuiteConfig c = o.config_path.empty() ? parse_config("{}") : load_config(o.config_path);
  if (o.seed) c.seed = *o.seed;
  if (!o.suites.empty()) c.suites = o.suites;
  if (o.threads) c.threads = *o.threads;
  if (!o.out.empty()) c.output = o.out;
  c.validate();
  return c;
}

/// Writes to `path`, or stdout when empty. Throws ConfigError if unwritable.
void emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!(f << text) || !f.flush()) throw ConfigError("cannot write '" + path + "'");
}

void summarize(const Report& r) {
  for (const auto& s : r.suites) {
    std::cerr << (s.pass ? "PASS " : "FAIL ") << s.name;
    if (s.max_error) std::cerr << "  max_error=" << *s.max_error << " tol=" << s.tolerance;
    if (s.negative_control) std::cerr << "  violation=" << s.negative_control->violation;
    if (s.convergence && !s.convergence->ratios.empty()) {
      std::cerr << "  ratios=";
      for (double x : s.convergence->ratios) std::cerr << x << ' ';
    }
    if (!s.detail.empty()) std::cerr << "  (" << s.detail << ")";
    std::cerr << '\n';
  }
}

int cmd_run(const Common& o) {
  const SuiteConfig c = resolve(o);
  const Report r = run(c);
  summarize(r);
  emit(c.output, report_json(r) + "\n");
  return r.pass() ? kPass : kFail;
}

int cmd_converge(const Common& o, const std::string& csv) {
  const SuiteConfig c = resolve(o);
  const Report r = run_convergence(c);
  summarize(r);
  emit(c.output, report_json(r) + "\n");
  if (!csv.empty()) {
    std::vector<std::pair<std::string, Convergence>> studies;
    for (const auto& s : r.suites) {
      if (s.convergence) studies.emplace_back(s.name, *s.convergence);
    }
    emit(csv, convergence_csv(studies));
  }
  return r.pass() ? kPass : kFail;
}

int cmd_sample(const Common& o, const std::string& kind_name, const std::string& family, bool numerical) {
  SuiteConfig c = resolve(o);
  if (!family.empty()) {
    c.family = family;
    c.validate();
  }
  if (c.output.empty()) throw ConfigError("sample: --out is required");
  ValueKind kind;
  try {
    kind = parse_value_kind(kind_name);
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  if (numerical && kind != ValueKind::Jet1Gauge && kind != ValueKind::Jet2Gauge) {
    throw ConfigError("sample: --numerical applies to jet1-gauge and jet2-gauge only");
  }
  Rng rng(c.seed);
  const Patch& p = c.patch;
  const int n = p.dim;
  const GroupSpec& g = c.group;
  AnyField field;
  switch (kind) {
    case ValueKind::Group:
      field = sample_analytic(p, GaugeFamily::named(c.family, rng, g, n)).g;
      break;
    case ValueKind::Jet1Gauge:
    case ValueKind::Jet2Gauge: {
      GaugeSample s = sample_analytic(p, GaugeFamily::named(c.family, rng, g, n));
      if (kind == ValueKind::Jet1Gauge) {
        field = numerical ? jet1_of(s.g) : s.jets1();
      } else {
        field = numerical ? jet2_of(s.g) : std::move(s.jets);
      }
      break;
    }
    case ValueKind::Algebra: {
      const ConnectionFamily f = ConnectionFamily::random(rng, g, n);
      field = sample(p, [&](const Point& x) { return f.value(x).front(); });
      break;
    }
    case ValueKind::JetConnection:
      field = sample_analytic(p, ConnectionFamily::random(rng, g, n));
      break;
    case ValueKind::RepVector: {
      const MatterFamily f = MatterFamily::random(rng, g.rep_dim(), n);
      field = sample(p, [&](const Point& x) { return f.value(x); });
      break;
    }
    case ValueKind::Scalar: {
      // Yang-Mills density of a random connection
      const ConnectionFamily f = ConnectionFamily::random(rng, g, n);
      const GaugeLagrangianSpec ym{GaugeKind::YangMills, c.coupling};
      const Metric m = c.make_metric();
      field = sample(p, [&](const Point& x) { return gauge_density(ym, f.jet(x), m); });
      break;
    }
  }
  try {
    write_field_file(c.output, g, field);
  } catch (const std::runtime_error& e) {
    throw ConfigError(e.what());
  }
  std::cerr << "wrote " << to_string(kind) << " field, " << p.size() << " points, to " << c.output << '\n';
  return kPass;
}

template <class V>
double norm_of(const V& v);
template <>
double norm_of(const GroupElement& v) { return v.matrix().norm(); }
template <>
double norm_of(const AlgebraElement& v) { return v.matrix().norm(); }
template <>
double norm_of(const RepVector& v) { return v.vector().norm(); }
template <>
double norm_of(const double& v) { return std::abs(v); }
template <>
double norm_of(const Jet1Gauge& v) {
  double s = 0;
  for (const auto& a : v.a) s = std::max(s, a.matrix().norm());
  return s;
}
template <>
double norm_of(const Jet2Gauge& v) {
  double s = 0;
  for (const auto& a : v.a) s = std::max(s, a.matrix().norm());
  for (const auto& x : v.s.packed()) s = std::max(s, x.matrix().norm());
  return s;
}
template <>
double norm_of(const JetConnection& v) {
  double s = 0;
  for (const auto& a : v.A) s = std::max(s, a.matrix().norm());
  for (const auto& x : v.dA) s = std::max(s, x.matrix().norm());
  return s;
}

template <class V>
const GroupElement* group_part(const V&) { return nullptr; }
const GroupElement* group_part(const GroupElement& g) { return &g; }
const GroupElement* group_part(const Jet1Gauge& j) { return &j.g; }
const GroupElement* group_part(const Jet2Gauge& j) { return &j.g; }

int cmd_inspect(const std::string& path) {
  FieldFile file;
  try {
    file = read_field_file(path);
  } catch (const std::runtime_error& e) {
    throw ConfigError(e.what());
  }
  const FieldHeader& h = file.header;
  std::cout << "file        " << path << '\n'
            << "family      " << h.group.name() << '\n'
            << "rep_dim     " << h.rep_dim << '\n'
            << "dim         " << h.patch.dim << '\n'
            << "extent     ";
  for (int e : h.patch.extent) std::cout << ' ' << e;
  std::cout << "\nspacing    ";
  for (double s : h.patch.spacing) std::cout << ' ' << s;
  std::cout << "\nvalue-kind  " << to_string(h.kind) << '\n' << "points      " << h.patch.size() << '\n';

  std::visit(
      [](const auto& f) {
        std::size_t zero = 0;
        double max_norm = 0.0;
        double unitarity = 0.0;
        bool has_group = false;
        for (std::size_t i = 0; i < f.size(); ++i) {
          const double nv = norm_of(f[i]);
          max_norm = std::max(max_norm, nv);
          if (const GroupElement* g = group_part(f[i])) {
            if (g->matrix().norm() == 0.0) {
              ++zero;
              continue;
            }
            has_group = true;
            unitarity = std::max(unitarity, unitarity_defect(*g));
          } else if (nv == 0.0) {
            ++zero;
          }
        }
        std::cout << "zero points " << zero << '\n' << "max norm    " << max_norm << '\n';
        if (has_group) std::cout << "unitarity   " << unitarity << '\n';
      },
      file.field);
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jet-group gauge symmetry verification harness"};
  app.require_subcommand(1);

  Common run_opts, conv_opts, sample_opts;
  CLI::App* run_cmd = app.add_subcommand("run", "run verification suites and write a JSON report");
  add_common(run_cmd, run_opts, true);

  CLI::App* conv_cmd = app.add_subcommand("converge", "convergence study over h_levels for each suite");
  add_common(conv_cmd, conv_opts, true);
  std::string csv;
  conv_cmd->add_option("--csv", csv, "also write suite,h,error rows");

  CLI::App* sample_cmd = app.add_subcommand("sample", "write a sampled analytic field as JGF1");
  add_common(sample_cmd, sample_opts, false);
  std::string kind = "group", family;
  bool numerical = false;
  sample_cmd->add_option("--kind", kind, "group|algebra|rep-vector|scalar|jet1-gauge|jet2-gauge|jet-connection");
  sample_cmd->add_option("--family", family, "gauge family: constant|single|product|plane-wave");
  sample_cmd->add_flag("--numerical", numerical, "finite-difference jets instead of exact ones");

  CLI::App* inspect_cmd = app.add_subcommand("inspect", "print the header and a summary of a JGF1 file");
  std::string inspect_path;
  inspect_cmd->add_option("path", inspect_path, "JGF1 file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*run_cmd) return cmd_run(run_opts);
    if (*conv_cmd) return cmd_converge(conv_opts, csv);
    if (*sample_cmd) return cmd_sample(sample_opts, kind, family, numerical);
    if (*inspect_cmd) return cmd_inspect(inspect_path);
  } catch (const ConfigError& e) {
    std::cerr << "gaugecheck: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "gaugecheck: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
