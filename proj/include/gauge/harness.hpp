#pragma once

// Verification harness: configuration, named suites, reports and
// convergence studies.

#include "gauge/lagrangians.hpp"
#include "gauge/lie.hpp"
#include "gauge/patch.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gauge {

/// Malformed or inconsistent configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SuiteConfig {
  GroupSpec group = GroupSpec::su2();
  Patch patch = Patch::uniform(2, 64, 0.05);
  std::uint64_t seed = 1;
  std::vector<std::string> suites;  // run in this order
  std::vector<double> h_levels = {0.04, 0.02, 0.01};
  std::map<std::string, double> tolerances;  // per-suite overrides
  std::string output;
  std::string metric = "euclidean";
  std::string family = "product";  // analytic gauge family for sampled fields
  int threads = 1;
  int samples = 1000;  // random fibers per pointwise suite
  int pairs = 100;     // connection jets per level-set suite
  int fields = 20;     // gauge-transformation fields per action suite
  MatterLagrangianSpec phi4 = MatterLagrangianSpec::phi4(0.5, 1.0);
  double broken_c = 1.0;
  double coupling = 1.0;

  /// Throws ConfigError.
  void validate() const;
  Metric make_metric() const;
};

/// Parses a JSON config document; absent keys keep their defaults, and an
/// absent "suites" key selects every suite.
SuiteConfig parse_config(const std::string& json_text);
SuiteConfig load_config(const std::string& path);
/// Canonical JSON of the fields that influence results.
std::string canonical_config(const SuiteConfig& config);
/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

struct Convergence {
  std::vector<double> h;
  std::vector<double> errors;
  std::vector<double> ratios;
  std::string mode;  // "ratio" or "exact"
};

struct NegativeControl {
  double violation = 0.0;
  double threshold = 0.0;
  bool detected = false;
};

struct SuiteResult {
  std::string name;
  std::string anchor;  // property certified by the suite
  bool pass = false;
  std::optional<double> max_error;
  double tolerance = 0.0;
  std::optional<Convergence> convergence;
  std::optional<NegativeControl> negative_control;
  double runtime_ms = 0.0;
  std::string detail;
};

struct Report {
  std::uint64_t seed = 0;
  std::string config_hash;
  std::string group;
  int dim = 0;
  std::vector<SuiteResult> suites;

  bool pass() const;
};

inline constexpr const char* kReportSchema = "gaugecheck-report/1";
/// Ratio window for second-order convergence.
inline constexpr double kRatioLow = 3.5;
inline constexpr double kRatioHigh = 4.5;
/// Studies whose errors all stay below this are classed as exact.
inline constexpr double kExactLevel = 1e-11;

const std::vector<std::string>& suite_names();
bool is_convergence_suite(const std::string& name);
/// Property certified by a suite.
const std::string& suite_anchor(const std::string& name);
double default_tolerance(const std::string& name, const SuiteConfig& config);

/// Runs one suite. Throws ConfigError for an unknown name.
SuiteResult run_suite(const std::string& name, const SuiteConfig& config);
/// Runs config.suites, in parallel over suites when config.threads > 1;
/// results keep the configured order.
Report run(const SuiteConfig& config);

/// error(h) for each h level of `suite` with ratios; finite-difference
/// suites use their own study, the others rerun on patches of spacing h.
Convergence convergence_study(const SuiteConfig& config, const std::string& suite);
/// One convergence study per configured suite, reported like run();
/// a suite passes when its study is exact or its ratios are in range.
Report run_convergence(const SuiteConfig& config);
/// Classifies a study and judges its ratios.
Convergence classify(std::vector<double> h, std::vector<double> errors);
bool ratios_pass(const Convergence& c);

std::string report_json(const Report& report, bool include_runtime = true);
/// Rows "suite,h,error".
std::string convergence_csv(const std::vector<std::pair<std::string, Convergence>>& studies);

}  // namespace gauge
