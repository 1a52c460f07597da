#include "gauge/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <set>
#include <sstream>
#include <thread>

namespace gauge {

using nlohmann::json;

namespace {

const std::set<std::string> kTopKeys = {"group",   "patch",   "seed",   "suites",  "h_levels",    "tolerances",
                                        "output",  "metric",  "family", "threads", "samples",     "pairs",
                                        "fields",  "lagrangians"};

void check_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  if (!obj.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

/// A number or a list of dim numbers.
template <class T>
std::vector<T> per_axis(const json& v, int dim, const std::string& what) {
  if (v.is_array()) {
    if (static_cast<int>(v.size()) != dim) throw ConfigError("patch." + what + ": expected " + std::to_string(dim) + " values");
    return v.get<std::vector<T>>();
  }
  return std::vector<T>(dim, v.get<T>());
}

void parse_into(SuiteConfig& c, const json& j) {
  check_keys(j, kTopKeys, "config");
  if (j.contains("group")) {
    const json& g = j["group"];
    check_keys(g, {"family", "rep"}, "group");
    if (g.contains("family")) {
      try {
        c.group = GroupSpec::parse(g["family"].get<std::string>());
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
    if (g.contains("rep")) {
      const std::string rep = g["rep"].get<std::string>();
      if (rep == "fundamental") {
        c.group.rep = RepKind::Fundamental;
      } else if (rep == "adjoint") {
        c.group.rep = RepKind::Adjoint;
      } else {
        throw ConfigError("group.rep must be 'fundamental' or 'adjoint'");
      }
    }
  }
  if (j.contains("patch")) {
    const json& p = j["patch"];
    check_keys(p, {"dim", "extent", "spacing", "origin"}, "patch");
    const int dim = p.value("dim", c.patch.dim);
    Patch patch;
    patch.dim = dim;
    if (dim < 1 || dim > 4) throw ConfigError("patch.dim must be in [1, 4]");
    patch.extent = p.contains("extent") ? per_axis<int>(p["extent"], dim, "extent") : std::vector<int>(dim, c.patch.extent.front());
    patch.spacing =
        p.contains("spacing") ? per_axis<double>(p["spacing"], dim, "spacing") : std::vector<double>(dim, c.patch.spacing.front());
    patch.origin = p.contains("origin") ? per_axis<double>(p["origin"], dim, "origin") : Point(dim, 0.0);
    c.patch = patch;
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw ConfigError("seed must be a non-negative integer");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  c.suites = j.contains("suites") ? j["suites"].get<std::vector<std::string>>() : suite_names();
  if (j.contains("h_levels")) c.h_levels = j["h_levels"].get<std::vector<double>>();
  if (j.contains("tolerances")) c.tolerances = j["tolerances"].get<std::map<std::string, double>>();
  if (j.contains("output")) c.output = j["output"].get<std::string>();
  if (j.contains("metric")) c.metric = j["metric"].get<std::string>();
  if (j.contains("family")) c.family = j["family"].get<std::string>();
  if (j.contains("threads")) c.threads = j["threads"].get<int>();
  if (j.contains("samples")) c.samples = j["samples"].get<int>();
  if (j.contains("pairs")) c.pairs = j["pairs"].get<int>();
  if (j.contains("fields")) c.fields = j["fields"].get<int>();
  if (j.contains("lagrangians")) {
    const json& l = j["lagrangians"];
    check_keys(l, {"phi4", "broken_c", "coupling"}, "lagrangians");
    if (l.contains("phi4")) {
      check_keys(l["phi4"], {"lambda", "v"}, "lagrangians.phi4");
      c.phi4 = MatterLagrangianSpec::phi4(l["phi4"].value("lambda", c.phi4.lambda), l["phi4"].value("v", c.phi4.v));
    }
    c.broken_c = l.value("broken_c", c.broken_c);
    c.coupling = l.value("coupling", c.coupling);
  }
}

std::string rep_name(RepKind r) { return r == RepKind::Fundamental ? "fundamental" : "adjoint"; }

json number_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json numbers(const std::vector<double>& v) {
  json out = json::array();
  for (double x : v) out.push_back(number_or_null(x));
  return out;
}

}  // namespace

void SuiteConfig::validate() const {
  try {
    group.validate();
    patch.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (h_levels.empty()) throw ConfigError("h_levels must not be empty");
  for (std::size_t i = 0; i < h_levels.size(); ++i) {
    if (!(h_levels[i] > 0.0)) throw ConfigError("h_levels must be positive");
    if (i > 0 && !(h_levels[i] < h_levels[i - 1])) throw ConfigError("h_levels must be strictly decreasing");
    const double ratio = h_levels.front() / h_levels[i];
    if (std::abs(ratio - std::round(ratio)) > 1e-9) {
      throw ConfigError("each h level must divide the coarsest one an integer number of times");
    }
  }
  for (const auto& name : suites) {
    const auto& all = suite_names();
    if (std::find(all.begin(), all.end(), name) == all.end()) throw ConfigError("unknown suite: " + name);
  }
  for (const auto& [name, tol] : tolerances) {
    const auto& all = suite_names();
    if (std::find(all.begin(), all.end(), name) == all.end()) throw ConfigError("tolerance for unknown suite: " + name);
    if (!(tol > 0.0)) throw ConfigError("tolerance for " + name + " must be > 0");
  }
  if (metric != "euclidean" && metric != "minkowski") throw ConfigError("metric must be 'euclidean' or 'minkowski'");
  if (family != "constant" && family != "single" && family != "product" && family != "plane-wave") {
    throw ConfigError("unknown family: " + family);
  }
  if (family == "plane-wave" && group.family != GroupFamily::U1) throw ConfigError("family 'plane-wave' requires U1");
  if (threads < 1) throw ConfigError("threads must be >= 1");
  if (samples < 1 || pairs < 1 || fields < 1) throw ConfigError("samples, pairs and fields must be >= 1");
  try {
    phi4.validate();
    GaugeLagrangianSpec{GaugeKind::YangMills, coupling}.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (!std::isfinite(broken_c) || broken_c == 0.0) throw ConfigError("lagrangians.broken_c must be finite and non-zero");
}

Metric SuiteConfig::make_metric() const {
  return metric == "minkowski" ? Metric::minkowski(patch.dim) : Metric::euclidean(patch.dim);
}

SuiteConfig parse_config(const std::string& json_text) {
  SuiteConfig c;
  c.suites = suite_names();
  try {
    parse_into(c, json::parse(json_text));
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed config: ") + e.what());
  }
  c.validate();
  return c;
}

SuiteConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config '" + path + "'");
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_config(text);
}

std::string canonical_config(const SuiteConfig& c) {
  json j;
  j["group"] = {{"family", c.group.name()}, {"rep", rep_name(c.group.rep)}};
  j["patch"] = {{"dim", c.patch.dim}, {"extent", c.patch.extent}, {"spacing", c.patch.spacing}, {"origin", c.patch.origin}};
  j["seed"] = c.seed;
  j["suites"] = c.suites;
  j["h_levels"] = c.h_levels;
  j["tolerances"] = c.tolerances;
  j["metric"] = c.metric;
  j["family"] = c.family;
  j["samples"] = c.samples;
  j["pairs"] = c.pairs;
  j["fields"] = c.fields;
  j["lagrangians"] = {{"phi4", {{"lambda", c.phi4.lambda}, {"v", c.phi4.v}}},
                      {"broken_c", c.broken_c},
                      {"coupling", c.coupling}};
  return j.dump();
}

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

bool Report::pass() const {
  for (const auto& s : suites) {
    if (!s.pass) return false;
  }
  return true;
}

Convergence classify(std::vector<double> h, std::vector<double> errors) {
  Convergence c;
  c.h = std::move(h);
  c.errors = std::move(errors);
  bool exact = true;
  for (double e : c.errors) exact = exact && e <= kExactLevel;
  c.mode = exact ? "exact" : "ratio";
  if (!exact) {
    for (std::size_t i = 1; i < c.errors.size(); ++i) c.ratios.push_back(c.errors[i - 1] / c.errors[i]);
  }
  return c;
}

bool ratios_pass(const Convergence& c) {
  if (c.mode == "exact") return true;
  if (c.ratios.empty()) return false;
  for (double r : c.ratios) {
    if (!(r >= kRatioLow && r <= kRatioHigh)) return false;
  }
  return true;
}

namespace {

template <class Fn>
Report run_each(const SuiteConfig& config, Fn&& one) {
  config.validate();
  Report report;
  report.seed = config.seed;
  report.config_hash = fnv1a_hex(canonical_config(config));
  report.group = config.group.name();
  report.dim = config.patch.dim;
  report.suites.resize(config.suites.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.suites.size(); i = next++) {
      report.suites[i] = one(config.suites[i]);
    }
  };
  const int workers = std::min<int>(config.threads, static_cast<int>(config.suites.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  return report;
}

}  // namespace

Report run(const SuiteConfig& config) {
  return run_each(config, [&](const std::string& name) { return run_suite(name, config); });
}

Report run_convergence(const SuiteConfig& config) {
  if (config.h_levels.size() < 2) throw ConfigError("convergence study needs at least 2 h_levels");
  return run_each(config, [&](const std::string& name) {
    const auto start = std::chrono::steady_clock::now();
    SuiteResult r;
    r.name = name;
    r.anchor = suite_anchor(name);
    try {
      Convergence c = convergence_study(config, name);
      r.max_error = c.errors.back();
      r.tolerance = c.mode == "exact" ? kExactLevel : default_tolerance(name, config);
      r.pass = ratios_pass(c);
      if (!r.pass) r.detail = "convergence ratios outside [3.5, 4.5]";
      r.convergence = std::move(c);
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& ex) {
      r.detail = std::string("error: ") + ex.what();
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  });
}

std::string report_json(const Report& report, bool include_runtime) {
  json j;
  j["schema"] = kReportSchema;
  j["provenance"] = {{"seed", report.seed},
                     {"config_hash", report.config_hash},
                     {"group", report.group},
                     {"dim", report.dim}};
  j["status"] = report.pass() ? "pass" : "fail";
  j["suites"] = json::array();
  for (const auto& s : report.suites) {
    json e;
    e["name"] = s.name;
    e["anchor"] = s.anchor;
    e["status"] = s.pass ? "pass" : "fail";
    e["max_error"] = s.max_error ? number_or_null(*s.max_error) : json(nullptr);
    e["tolerance"] = s.tolerance;
    if (s.convergence) {
      e["convergence"] = {{"h", s.convergence->h},
                          {"errors", numbers(s.convergence->errors)},
                          {"ratios", numbers(s.convergence->ratios)},
                          {"mode", s.convergence->mode}};
    }
    if (s.negative_control) {
      e["negative_control"] = {{"violation", number_or_null(s.negative_control->violation)},
                               {"threshold", s.negative_control->threshold},
                               {"detected", s.negative_control->detected}};
    }
    if (include_runtime) e["runtime_ms"] = s.runtime_ms;
    if (!s.detail.empty()) e["detail"] = s.detail;
    j["suites"].push_back(std::move(e));
  }
  return j.dump(2) + "\n";
}

std::string convergence_csv(const std::vector<std::pair<std::string, Convergence>>& studies) {
  std::ostringstream out;
  out.precision(17);
  out << "suite,h,error\n";
  for (const auto& [name, c] : studies) {
    for (std::size_t i = 0; i < c.h.size(); ++i) out << name << ',' << c.h[i] << ',' << c.errors[i] << '\n';
  }
  return out.str();
}

}  // namespace gauge
