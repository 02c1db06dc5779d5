#pragma once

#include <array>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "pdl/control_affine.hpp"

namespace pdl {

using Vector5d = Eigen::Matrix<double, 5, 1>;
using Matrix5d = Eigen::Matrix<double, 5, 5>;

/// One rigid link. For leg links `com` is measured from the hip-side joint
/// (hip for femurs, knee for tibias); for the torso it is measured from the hip.
struct LinkParams {
  double mass = 0.0;
  double length = 0.0;
  double com = 0.0;
  double inertia = 0.0;  // about the center of mass, before inertia_scale
};

enum class Link : int { StanceTibia = 0, StanceFemur = 1, Torso = 2, SwingFemur = 3, SwingTibia = 4 };

enum class Actuation { Underactuated, Full };

/// Pinned planar five-link walker with point feet.
///
/// Coordinates q = (q_sf, q_sk, q_sh, q_nsh, q_nsk). Leg link orientations are
/// measured from the downward vertical (direction hip -> foot), the torso from
/// the upward vertical, positive angles turning the far end backwards (-x):
///   stance tibia  = q_sf
///   stance femur  = q_sf + q_sk
///   torso         = q_sf + q_sk + q_sh
///   swing femur   = torso - q_nsh
///   swing tibia   = swing femur - q_nsk
/// q = 0 is the straight-legged stance with both feet at the origin and the
/// torso upright. Walking progresses toward +x.
struct BipedParameters {
  std::array<LinkParams, 5> links{};
  double gravity = 9.81;
  double inertia_scale = 1.0;
  Actuation actuation = Actuation::Underactuated;

  const LinkParams& link(Link l) const { return links[static_cast<std::size_t>(l)]; }
  LinkParams& link(Link l) { return links[static_cast<std::size_t>(l)]; }
  double tibia_length() const { return link(Link::StanceTibia).length; }
  double femur_length() const { return link(Link::StanceFemur).length; }
  int num_inputs() const { return actuation == Actuation::Full ? 5 : 4; }

  /// Throws Error(InvalidArgument) on nonpositive masses/lengths, negative
  /// inertias or a nonpositive inertia_scale.
  void validate() const;

  /// Symmetric legs built from one tibia, femur and torso description.
  static BipedParameters symmetric(const LinkParams& tibia, const LinkParams& femur, const LinkParams& torso,
                                   double gravity = 9.81);
  /// Bundled 22 kg, 1.37 m model used by the experiments.
  static BipedParameters default_walker();
};

struct BipedState {
  Vector5d q = Vector5d::Zero();
  Vector5d qdot = Vector5d::Zero();

  Eigen::VectorXd stacked() const;
  static BipedState from_stacked(const Eigen::VectorXd& x);
};

/// Absolute link orientations theta = T q.
const Matrix5d& absolute_angle_map();

/// Actuation matrix B: [0; I4] or I5 for the fully actuated test configuration.
Eigen::MatrixXd actuation_matrix(const BipedParameters& p);

Matrix5d mass_matrix(const BipedParameters& p, const Vector5d& q);
/// Christoffel-symbol Coriolis matrix, so that D_dot - 2C is skew-symmetric.
Matrix5d coriolis_matrix(const BipedParameters& p, const Vector5d& q, const Vector5d& qdot);
Vector5d gravity_vector(const BipedParameters& p, const Vector5d& q);
/// C(q, qdot) qdot + G(q)
Vector5d bias_forces(const BipedParameters& p, const Vector5d& q, const Vector5d& qdot);
double potential_energy(const BipedParameters& p, const Vector5d& q);
double kinetic_energy(const BipedParameters& p, const BipedState& x);

/// q_ddot = D^-1 (B u - C qdot - G). Throws Error(SingularMass).
Vector5d forward_dynamics(const BipedParameters& p, const BipedState& x, const Eigen::VectorXd& u);

/// Continuous flow as x_dot = f(x) + g(x) u on x = (q, qdot).
ControlAffineModel as_control_affine(const BipedParameters& p);

struct SwingFoot {
  double x = 0.0;  // horizontal position F_x
  double z = 0.0;  // height p_v
};

Eigen::Vector2d hip_position(const BipedParameters& p, const Vector5d& q);
SwingFoot swing_foot(const BipedParameters& p, const Vector5d& q);
/// d(F_x, p_v)/dq, 2 x 5
Eigen::Matrix<double, 2, 5> swing_foot_jacobian(const BipedParameters& p, const Vector5d& q);

struct GuardValue {
  double height = 0.0;  // p_v
  double rate = 0.0;    // p_v dot
  bool on_guard(double tol = 1e-9) const { return std::abs(height) <= tol && rate < 0.0; }
};
GuardValue guard_value(const BipedParameters& p, const BipedState& x);

/// Coordinate swap at touchdown: the former swing leg becomes the stance leg.
const Matrix5d& relabel_matrix();

struct ImpactResult {
  BipedState post;
  Eigen::Vector2d impulse = Eigen::Vector2d::Zero();
  BipedState pre_relabel;  // post-impact velocities in the old coordinates
};

/// Plastic impact of the swing foot followed by relabelling. Solves
///   [D  -J^T] [qdot+]   [D qdot-]
///   [J   0  ] [Lambda] = [0      ]
/// with J the swing-foot Jacobian. Throws Error(SingularImpact).
ImpactResult impact_map(const BipedParameters& p, const BipedState& pre);
BipedState impact_reset(const BipedParameters& p, const BipedState& pre);

}  // namespace pdl
