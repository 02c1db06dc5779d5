#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pdl/hybrid.hpp"

namespace pdl {

/// Centered moving average of odd width `window` (truncated symmetrically at
/// the ends), then central differences (one-sided at the ends). Output has the
/// input's length. Throws Error(TooShort) when series.size() < window.
std::vector<double> smooth_and_differentiate(const std::vector<double>& series, double dt, int window);

struct SmoothingConfig {
  int window = 11;
  int trim = 5;  // samples dropped on each side of an impact
};

struct DataSample {
  Eigen::VectorXd x;
  Eigen::VectorXd u;
  double hdot_measured = 0.0;
  double hdot_nominal = 0.0;
  int phase = 0;
  double t = 0.0;

  double residual() const { return hdot_measured - hdot_nominal; }
};

struct FeatureStats {
  Eigen::VectorXd mean;
  Eigen::VectorXd std;  // zero-variance features get 1
};

struct EpisodeDataset {
  std::vector<DataSample> samples;
  double dt = 0.0;

  bool empty() const { return samples.empty(); }
  std::size_t size() const { return samples.size(); }
  void append(const EpisodeDataset& other);

  Eigen::MatrixXd features() const;   // N x n, row per sample
  Eigen::VectorXd residuals() const;  // N
  FeatureStats feature_stats() const;
};

/// Recomputes the nominal constrained derivative at (x, u) when the trace did
/// not log it.
using NominalRate = std::function<double(const Eigen::VectorXd& x, const Eigen::VectorXd& u)>;

/// Differentiates the logged constrained barrier value of `barrier` per
/// continuous phase and pairs it with the nominal derivative. Phases shorter
/// than the window are skipped; samples within `trim` steps of an impact are
/// dropped.
EpisodeDataset build_dataset(const HybridTrace& trace, int barrier, const SmoothingConfig& cfg,
                             const NominalRate& nominal = {});

/// One row per sample: t, phase, x..., u..., hdot_measured, hdot_nominal.
void write_dataset_csv(std::ostream& os, const EpisodeDataset& ds);
EpisodeDataset read_dataset_csv(std::istream& is);

}  // namespace pdl
