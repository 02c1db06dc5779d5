#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "pdl/dataset.hpp"
#include "pdl/hybrid.hpp"
#include "pdl/mlp.hpp"
#include "pdl/train.hpp"

namespace pdl {

using EstimatorSet = std::vector<std::shared_ptr<const MlpEstimator>>;  // one per barrier, null = zero residual

struct PdlConfig {
  int episodes = 3;  // trainings; episodes + 1 rollouts
  bool aggregate_episodes = true;
  TrainingConfig training;

  void validate() const;
};

/// Result of running the current controller once: the trace and one dataset
/// per barrier (residual targets measured against the nominal derivative).
struct Rollout {
  HybridTrace trace;
  std::vector<EpisodeDataset> datasets;
};

struct EpisodeOutcome {
  int episode = 0;
  Rollout rollout;
  EstimatorSet estimators_used;          // the controller this rollout ran under
  EstimatorSet estimators_trained;       // empty after the last rollout
  std::vector<TrainingReport> training;  // one per barrier, empty after the last rollout
};

/// Everything needed to continue a campaign from episode `next_episode`.
struct PdlState {
  int next_episode = 0;
  std::vector<EpisodeDataset> training_data;  // per barrier, what the next training sees
  EstimatorSet estimators;                     // controller for the next rollout
};

using RolloutFn = std::function<Rollout(int episode, const EstimatorSet& estimators)>;
using EpisodeCallback = std::function<void(const EpisodeOutcome&, const PdlState&)>;

/// Episodic loop: roll out, collect data, fit one fresh estimator per barrier
/// against the nominal derivative, rebuild the controller, repeat. Runs until
/// rollout `episodes` (inclusive) has completed. The callback sees each
/// outcome together with the state that a resumed run would start from.
void run_pdl(const PdlConfig& cfg, int num_barriers, const RolloutFn& rollout, const EpisodeCallback& on_episode,
             PdlState& state);

}  // namespace pdl
