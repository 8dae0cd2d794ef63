#pragma once

#include <Eigen/Dense>

#include <vector>

#include "quadlab/rng.hpp"

namespace quadlab {

/// Fully connected tanh network with a linear output layer. Parameters live in
/// one flat vector: for each layer, W (out x in, column-major) then b.
class Mlp {
 public:
  Mlp() = default;
  explicit Mlp(std::vector<int> sizes);

  const std::vector<int>& sizes() const { return sizes_; }
  int input_dim() const { return sizes_.front(); }
  int output_dim() const { return sizes_.back(); }
  int num_layers() const { return static_cast<int>(sizes_.size()) - 1; }
  Eigen::Index num_params() const { return params_.size(); }

  Eigen::VectorXd& params() { return params_; }
  const Eigen::VectorXd& params() const { return params_; }

  /// Orthogonal init scaled by hidden_gain (hidden layers) and output_gain
  /// (last layer); zero biases.
  void init_orthogonal(Rng& rng, double hidden_gain, double output_gain);

  /// Single sample. Throws std::invalid_argument on a dimension mismatch.
  Eigen::VectorXd forward(const Eigen::VectorXd& x) const;

  struct Cache {
    std::vector<Eigen::MatrixXd> activations;  // input, then each hidden layer output
  };
  /// Batch forward, one sample per column.
  Eigen::MatrixXd forward_batch(const Eigen::MatrixXd& x, Cache* cache) const;
  /// Accumulates dL/dparams into grad given dL/doutput.
  void backward(const Cache& cache, const Eigen::MatrixXd& d_out, Eigen::VectorXd& grad) const;

 private:
  Eigen::Map<const Eigen::MatrixXd> weight(int l) const;
  Eigen::Map<const Eigen::VectorXd> bias(int l) const;

  std::vector<int> sizes_;
  std::vector<Eigen::Index> offsets_;
  Eigen::VectorXd params_;
};

class Adam {
 public:
  Adam() = default;
  Adam(Eigen::Index n, double learning_rate, double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-8);

  void step(Eigen::VectorXd& params, const Eigen::VectorXd& grad);
  double learning_rate = 3e-4;

 private:
  double beta1_ = 0.9;
  double beta2_ = 0.999;
  double eps_ = 1e-8;
  Eigen::VectorXd m_;
  Eigen::VectorXd v_;
  long t_ = 0;
};

}  // namespace quadlab
