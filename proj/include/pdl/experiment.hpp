#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pdl/config.hpp"
#include "pdl/dataset.hpp"
#include "pdl/hybrid.hpp"
#include "pdl/pdl.hpp"
#include "pdl/safety.hpp"

namespace pdl {

enum class SystemKind { Pendulum, Biped };
std::string to_string(SystemKind s);

/// Declarative description of one experiment. File paths are relative to the
/// directory of the config file they were read from.
struct ExperimentConfig {
  SystemKind system = SystemKind::Pendulum;
  std::filesystem::path base_dir;  // where relative paths resolve
  std::string model_true;
  std::string model_nominal;
  std::string gait;    // biped only
  std::string stones;  // biped only

  // controller
  Variant variant = Variant::CbfQp;
  std::vector<double> delta_bar;        // rbar-cbf-qp, one per barrier
  std::vector<std::string> estimators;  // dhat-cbf-qp / ss-qp, one weight file per barrier, optional

  // barrier
  double gamma = 2.0;
  double alpha_e = 5.0;
  double a = 1.0;          // stone shape, (1 + a) r = half the stone width
  double m_decay = 10.0;
  double theta_max = 0.5;  // pendulum: h = theta_max - theta

  // pendulum nominal controller: feedback linearisation toward theta_target
  double theta_target = 0.8;
  double kp = 25.0;
  double kd = 10.0;

  // simulation
  std::vector<double> x0;  // empty: system default
  double t_max = 10.0;
  int steps = 10;          // biped: stop after this many impacts
  double dt_ctrl = 1e-3;
  int substeps = 10;
  std::uint64_t seed = 0;

  // learning
  PdlConfig learning;
  SmoothingConfig smoothing;

  std::string output_dir = "out";

  int num_barriers() const { return system == SystemKind::Biped ? 2 : 1; }
  std::filesystem::path resolve(const std::string& p) const;
  void validate() const;

  nlohmann::json to_json() const;
  /// Unknown fields and bad values raise ConfigError naming the field.
  static ExperimentConfig from_json(const nlohmann::json& j, const std::filesystem::path& base_dir,
                                    const std::string& source);
  static ExperimentConfig load(const std::filesystem::path& path);
  static ExperimentConfig defaults(SystemKind system);
};

/// Per-episode metrics; all lengths in meters.
struct EpisodeReport {
  int episode = 0;
  SystemKind system = SystemKind::Pendulum;
  Variant variant = Variant::CbfQp;
  std::string termination;
  std::string message;
  int steps_completed = 0;
  std::size_t samples = 0;
  double duration = 0.0;
  std::vector<double> max_violation;                    // per barrier, whole trace
  std::vector<std::vector<double>> step_max_violation;  // per barrier, per continuous phase
  std::vector<double> foot_placement_violation;         // per impact, biped only
  double max_foot_placement_violation = 0.0;
  std::vector<double> observed_delta_inf;  // |delta|_inf per barrier
  std::vector<double> residual_delta_inf;  // |delta - delta_hat|_inf per barrier
  double mean_control_deviation = 0.0;     // mean |u - k_d(x)|
  std::vector<TrainingReport> training;    // estimators fitted after this episode

  /// Foot-placement violation for the biped, barrier violation otherwise.
  double headline_violation() const;
  bool completed() const { return termination == to_string(Termination::Completed); }

  nlohmann::json to_json() const;
  static EpisodeReport from_json(const nlohmann::json& j);
};

struct EpisodeRun {
  HybridTrace trace;
  std::vector<EpisodeDataset> datasets;  // one per barrier
  std::vector<double> stone_offsets;     // biped: O_x per step
  EpisodeReport report;
};

/// Loaded models and fixtures for one config, ready to run rollouts.
class Experiment {
 public:
  explicit Experiment(ExperimentConfig cfg);

  const ExperimentConfig& config() const { return cfg_; }
  int num_barriers() const { return cfg_.num_barriers(); }
  int num_inputs() const;
  Eigen::VectorXd initial_state() const;

  const PendulumParameters& pendulum_true() const { return pend_true_; }
  const PendulumParameters& pendulum_nominal() const { return pend_nominal_; }
  const BipedParameters& biped_true() const { return biped_true_; }
  const BipedParameters& biped_nominal() const { return biped_nominal_; }
  const GaitFixture& gait() const { return gait_; }
  const std::vector<Stone>& stones() const { return stones_; }

  /// One closed-loop rollout. `estimators` overrides the residual models of
  /// learned variants; when empty, the weight files named in the config are used.
  EpisodeRun run(int episode, const EstimatorSet& estimators = {}) const;
  EpisodeRun run_from(int episode, const Eigen::VectorXd& x0, const EstimatorSet& estimators = {}) const;

  /// Residual models named by the config (null entries when absent).
  EstimatorSet configured_estimators() const;

  /// True when both experiments use identical models, gait and stones.
  bool same_setup(const Experiment& other) const;

  std::vector<std::string> trace_columns() const;
  void write_trace_csv(std::ostream& os, const EpisodeRun& run) const;

 private:
  ExperimentConfig cfg_;
  PendulumParameters pend_true_;
  PendulumParameters pend_nominal_;
  BipedParameters biped_true_;
  BipedParameters biped_nominal_;
  GaitFixture gait_;
  PhasingParams phasing_;
  std::vector<Stone> stones_;
};

/// Header line of trace.csv files.
inline constexpr const char* kTraceSchema = "pdl-trace v1";

/// Reads back t, phase, x, u, u_desired, h, h_ext, hdot_nominal, delta_true
/// and delta_hat from a trace written by Experiment::write_trace_csv. Raises
/// ConfigError on a schema or column-count mismatch.
HybridTrace read_trace_csv(std::istream& is);

/// Report metrics computed from a trace (no training section).
EpisodeReport make_report(int episode, const Experiment& exp, const HybridTrace& trace,
                          const std::vector<double>& stone_offsets = {});

/// Writes trace.csv and report.json into `dir`.
void write_episode(const std::filesystem::path& dir, const Experiment& exp, const EpisodeRun& run);

struct CampaignOptions {
  bool resume = false;
  std::optional<int> stop_after_episode;  // simulate an interruption
  std::ostream* log = nullptr;
};

/// Full PDL campaign with per-episode artifacts and a checkpoint:
///   <out>/episode_<j>/{trace.csv, report.json, dataset_b<i>.csv, estimator_b<i>.txt}
///   <out>/checkpoint.json, <out>/summary.json
/// Returns the summary (also written when the campaign finishes).
nlohmann::json run_campaign(const Experiment& exp, const std::filesystem::path& out, const CampaignOptions& opts);

/// summary.json content from the episode reports in order.
nlohmann::json make_summary(const std::vector<EpisodeReport>& reports);

struct ComparisonRow {
  std::string name;
  std::string variant;
  double max_violation = 0.0;  // headline violation
  double mean_control_deviation = 0.0;
  int steps_completed = 0;
  std::string termination;
};

/// Runs every experiment once. Raises MismatchedConfigs when models, gait or
/// stones differ.
std::vector<ComparisonRow> compare_experiments(const std::vector<Experiment>& exps,
                                               const std::vector<std::string>& names);
std::string comparison_csv(const std::vector<ComparisonRow>& rows);
std::string comparison_table(const std::vector<ComparisonRow>& rows);

}  // namespace pdl
