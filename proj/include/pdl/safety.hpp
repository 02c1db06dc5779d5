#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pdl/barriers.hpp"
#include "pdl/control_affine.hpp"
#include "pdl/hybrid.hpp"
#include "pdl/qp.hpp"

namespace pdl {

enum class Variant { CbfQp, RobustCbfQp, LearnedCbfQp, SteppingStoneQp };

/// "cbf-qp" | "rbar-cbf-qp" | "dhat-cbf-qp" | "ss-qp"
Variant parse_variant(const std::string& name);
std::string to_string(Variant v);

/// A barrier as seen by the filter. A barrier carries a robust bound
/// (delta_bar) or a learned residual (spec.delta_hat) or neither.
struct FilterBarrier {
  BarrierSpec spec;
  std::optional<double> robust_bound;
};

struct InputBox {
  Eigen::VectorXd lower;
  Eigen::VectorXd upper;
};

/// argmin 1/2 |u - k_d(x)|^2 subject to one affine row per barrier, all
/// evaluated on the nominal model.
struct SafetyFilter {
  Controller nominal;
  std::vector<FilterBarrier> barriers;
  ControlAffineModel model;
  std::optional<InputBox> saturation;  // applied after the QP, off by default

  void validate() const;
};

struct BarrierRow {
  double h = 0.0;
  double h_ext = 0.0;  // h_e for exponential barriers, h otherwise
  double drift = 0.0;  // u-independent part of the constrained derivative (nominal)
  Eigen::RowVectorXd gain;  // coefficient of u
  double delta_hat = 0.0;
  double delta_bar = 0.0;

  /// nominal constrained derivative at u (without residual terms)
  double nominal_rate(const Eigen::VectorXd& u) const { return drift + gain.dot(u); }
};

struct FilterResult {
  Eigen::VectorXd u;
  Eigen::VectorXd u_desired;
  std::vector<BarrierRow> rows;
  QPSolution qp;
  bool saturated = false;
};

/// Constraint row for one barrier at x on the given model.
BarrierRow barrier_row(const ControlAffineModel& model, const FilterBarrier& b, const Eigen::VectorXd& x);

/// Throws Error(Infeasible) with the state and rows in the message, or
/// Error(RelativeDegreeViolation) from exponential barriers.
FilterResult filter_control(const SafetyFilter& sf, const Eigen::VectorXd& x);

/// delta(x, u) = b(x) + a(x)^T u: the model error as it appears in the
/// constrained derivative (h_dot, or h_e dot for exponential barriers).
struct ProjectedDisturbance {
  double b = 0.0;
  Eigen::RowVectorXd a;
  double at(const Eigen::VectorXd& u) const { return b + a.dot(u); }
};

ProjectedDisturbance projected_disturbance_terms(const ControlAffineModel& model_true,
                                                 const ControlAffineModel& model_nominal, const BarrierSpec& barrier,
                                                 const Eigen::VectorXd& x);

double projected_disturbance(const ControlAffineModel& model_true, const ControlAffineModel& model_nominal,
                             const BarrierSpec& barrier, const Eigen::VectorXd& x, const Eigen::VectorXd& u);

struct PssfMargin {
  double min_h = 0.0;
  double max_violation = 0.0;
  std::optional<double> observed_delta_inf;
};

/// Observed margins of one barrier along a trace; the set inflation itself is
/// never certified.
PssfMargin pssf_margin(const HybridTrace& trace, int barrier);

}  // namespace pdl
