#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace pdl {

/// Fully connected ReLU network with a scalar linear output and built-in
/// input/output standardisation:
///   predict(x) = out_mean + out_scale * net((x - in_mean) / in_std)
/// The raw network `net` is what training and gradient checks operate on.
class MlpEstimator {
 public:
  MlpEstimator() = default;
  /// widths = {n_in, hidden..., 1}. Glorot-uniform weights, zero biases.
  MlpEstimator(std::vector<int> widths, std::uint64_t seed);

  static MlpEstimator standard(int n_in, std::uint64_t seed) { return MlpEstimator({n_in, 50, 50, 1}, seed); }

  const std::vector<int>& widths() const { return widths_; }
  int inputs() const { return widths_.front(); }
  int num_parameters() const;

  double predict(const Eigen::VectorXd& x) const;
  Eigen::VectorXd predict_batch(const Eigen::MatrixXd& X) const;  // row per sample

  /// Raw network on already standardised inputs, one column per sample.
  Eigen::RowVectorXd forward(const Eigen::MatrixXd& Z) const;

  /// Mean absolute error of the raw network and its subgradient (sign(0) = 0).
  double mae_gradient(const Eigen::MatrixXd& Z, const Eigen::RowVectorXd& target, Eigen::VectorXd& grad) const;
  double mae(const Eigen::MatrixXd& Z, const Eigen::RowVectorXd& target) const;

  /// Smallest |pre-activation| over all hidden units and samples.
  double min_preactivation(const Eigen::MatrixXd& Z) const;

  Eigen::VectorXd parameters() const;
  void set_parameters(const Eigen::VectorXd& theta);
  void step(const Eigen::VectorXd& grad, double lr);

  // standardisation
  Eigen::VectorXd in_mean;
  Eigen::VectorXd in_std;
  double out_mean = 0.0;
  double out_scale = 1.0;

  Eigen::MatrixXd normalize(const Eigen::MatrixXd& X) const;    // N x n -> n x N
  Eigen::MatrixXd denormalize(const Eigen::MatrixXd& Z) const;  // n x N -> N x n

  void save(std::ostream& os) const;
  static MlpEstimator load(std::istream& is);
  void save_file(const std::string& path) const;
  static MlpEstimator load_file(const std::string& path);

  bool operator==(const MlpEstimator& other) const;

 private:
  std::vector<int> widths_;
  std::vector<Eigen::MatrixXd> weights_;
  std::vector<Eigen::VectorXd> biases_;
};

/// Max relative error between the analytic MAE gradient and central finite
/// differences of step `step`, relative to max(|analytic|, |numeric|, 1e-5).
/// The floor sits well above the ~1e-10 roundoff of the differenced loss.
double mlp_gradient_check(const MlpEstimator& net, const Eigen::MatrixXd& Z, const Eigen::RowVectorXd& target,
                          double step = 1e-6);

}  // namespace pdl
