#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "pdl/control_affine.hpp"

namespace pdl {

/// Continuous flow plus an optional impact surface.
///
/// An event fires when guard(x) goes from strictly positive to nonpositive
/// within an integration step while guard_rate(x) < 0 at the located point.
struct HybridSystem {
  ControlAffineModel flow;
  std::function<double(const Eigen::VectorXd&)> guard;       // empty: no events
  std::function<double(const Eigen::VectorXd&)> guard_rate;  // empty: sign not checked
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> reset;
};

using Controller = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

/// One control-period sample. `phase` counts the events before this sample,
/// so samples with equal phase belong to one continuous segment.
struct TraceSample {
  double t = 0.0;
  int phase = 0;
  Eigen::VectorXd x;
  Eigen::VectorXd u;
  Eigen::VectorXd u_desired;       // nominal controller output, when known
  Eigen::VectorXd h;               // per barrier
  Eigen::VectorXd h_ext;           // per barrier: h_e for ECBF barriers, h otherwise
  Eigen::VectorXd hdot_nominal;    // per barrier, nominal model, at (x, u)
  Eigen::VectorXd delta_true;      // per barrier, simulation only
  Eigen::VectorXd delta_hat;       // per barrier
};

struct ImpactEvent {
  double t = 0.0;
  Eigen::VectorXd x_minus;
  Eigen::VectorXd x_plus;
};

enum class Termination { Completed, Blowup, ControllerFailure, MaxEventsExceeded };
std::string to_string(Termination t);

struct HybridTrace {
  std::vector<TraceSample> samples;
  std::vector<ImpactEvent> events;
  Termination termination = Termination::Completed;
  std::string message;
  double dt = 0.0;

  bool ok() const { return termination == Termination::Completed; }
};

/// Fills the diagnostic fields of a sample after the control has been chosen.
using SampleProbe = std::function<void(TraceSample&)>;

struct SimulationOptions {
  double t_max = 1.0;
  double dt_ctrl = 1e-3;
  int substeps = 10;
  double event_time_tol = 1e-10;
  double blowup_bound = 1e3;         // on |x|_inf
  int max_events = 10000;            // more events than this is an error
  std::optional<int> stop_after_events;  // normal termination after this many events
};

/// Classic fourth-order Runge-Kutta step with u held constant.
Eigen::VectorXd rk4_step(const ControlAffineModel& model, const Eigen::VectorXd& x, const Eigen::VectorXd& u,
                         double h);

/// Plain RK4 over one control period, no event handling.
Eigen::VectorXd integrate_rk4(const ControlAffineModel& model, const Eigen::VectorXd& x, const Eigen::VectorXd& u,
                              double dt, int substeps);

/// Zero-order-hold closed-loop simulation with event detection and resets.
/// Runtime failures (controller exceptions, blowup, too many events) end the
/// run early; the samples collected so far are kept and the reason recorded.
HybridTrace simulate_hybrid(const HybridSystem& sys, const Controller& controller, const Eigen::VectorXd& x0,
                            const SimulationOptions& opts, const SampleProbe& probe = {});

}  // namespace pdl
