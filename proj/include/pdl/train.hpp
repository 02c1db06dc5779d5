#pragma once

#include <cstdint>
#include <vector>

#include "pdl/dataset.hpp"
#include "pdl/mlp.hpp"

namespace pdl {

struct TrainingConfig {
  double learning_rate = 1e-3;
  int batch_size = 32;
  int epochs = 200;
  std::uint64_t seed = 0;
  double validation_fraction = 0.0;
  std::vector<int> hidden{50, 50};

  void validate() const;
};

struct TrainingReport {
  double initial_mae = 0.0;  // residual units, before the first step
  double final_mae = 0.0;    // of the returned weights
  double last_epoch_mae = 0.0;
  int best_epoch = 0;        // 0 means the initial weights were kept
  std::vector<double> epoch_mae;
  double validation_mae = 0.0;
  std::size_t train_samples = 0;
  std::size_t validation_samples = 0;
};

struct TrainingResult {
  MlpEstimator estimator;
  TrainingReport report;
};

/// Fits the residual hdot_measured - hdot_nominal as a function of the state
/// with mini-batch subgradient descent on the mean absolute error. Input and
/// target standardisation is computed from the training split and stored in
/// the returned estimator. Keeps the weights with the lowest training MAE.
TrainingResult train_estimator(const EpisodeDataset& ds, MlpEstimator net, const TrainingConfig& cfg);

/// Same, on raw arrays: X is N x n, target has N entries.
TrainingResult train_regression(const Eigen::MatrixXd& X, const Eigen::VectorXd& target, MlpEstimator net,
                                const TrainingConfig& cfg);

/// Deterministic per-(episode, barrier) seed derived from a base seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t episode, std::uint64_t barrier);

}  // namespace pdl
