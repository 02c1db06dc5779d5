#pragma once

#include <functional>
#include <optional>

#include <Eigen/Dense>

#include "pdl/biped.hpp"
#include "pdl/control_affine.hpp"
#include "pdl/gait.hpp"

namespace pdl {

using StateFunction = std::function<double(const Eigen::VectorXd&)>;

/// Shrinking virtual stone around a target at horizontal distance O_x from the
/// stance foot. (1 + a) r is the half width reached at tau = 1.
struct SteppingStoneParams {
  double O_x = 0.0;
  double r = 0.0;
  double a = 0.0;
  double m_decay = 1.0;

  void validate() const;
};

/// R(tau) = (a r - 1) / (1 + a r (exp(-m (tau - 1)) - 1)) + 1 + r
/// Throws Error(DegenerateParams) when the denominator vanishes.
double stone_radius(const SteppingStoneParams& ss, double tau);

struct SteppingStoneValues {
  double h1 = 0.0;  // R - (O_x - F_x): foot not short of the stone
  double h2 = 0.0;  // R + (O_x - F_x): foot not past the stone
};

SteppingStoneValues stepping_stone_barriers(const SteppingStoneParams& ss, const PhasingParams& pp,
                                            const BipedParameters& params, const Vector5d& q);

enum class BarrierMode { FirstOrder, Exponential };

/// h with its linear class-K gain alpha(h) = gamma h, the ECBF pole and an
/// optional learned residual on the constrained derivative.
struct BarrierSpec {
  StateFunction h;
  double alpha_gain = 1.0;
  double alpha_e = 1.0;
  BarrierMode mode = BarrierMode::FirstOrder;
  StateFunction delta_hat;  // empty: zero

  void validate() const;
};

struct LieTerms {
  double h = 0.0;
  double Lf_h = 0.0;
  Eigen::RowVectorXd Lg_h;
};

/// Central differences, step 1e-6, on every state coordinate.
Eigen::VectorXd numerical_gradient(const StateFunction& h, const Eigen::VectorXd& x, double step = 1e-6);

LieTerms lie_derivatives_1(const ControlAffineModel& model, const StateFunction& h, const Eigen::VectorXd& x);

struct EcbfTerms {
  double h = 0.0;
  double h_e = 0.0;   // L_f h + alpha_e h
  double Lf2_h = 0.0;
  Eigen::RowVectorXd LgLf_h;
  double Lf_h = 0.0;
  double alpha_e = 0.0;

  /// d/dt h_e = L_f^2 h + L_g L_f h u + alpha_e L_f h
  double he_dot(const Eigen::VectorXd& u) const;
  /// u-independent part of he_dot
  double he_dot_drift() const { return Lf2_h + alpha_e * Lf_h; }
};

/// Second-order barrier terms for a position-only h on a mechanical model,
///   h_ddot = (J_h_dot qdot) + J_h q_ddot,
/// with J_h by central differences and J_h_dot qdot as a second directional
/// difference along qdot. Throws Error(RelativeDegreeViolation) if |L_g h| > 1e-8.
EcbfTerms ecbf_terms(const ControlAffineModel& model, const StateFunction& h, double alpha_e,
                     const Eigen::VectorXd& x);

}  // namespace pdl
