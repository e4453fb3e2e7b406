#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace isaclab {

/// Derives an independent stream seed from a base seed and a salt
/// (splitmix64 finalizer over the combined value).
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt);

/// Deterministic random stream. Gaussian variates are produced by an
/// internal Box-Muller transform so sequences are identical across
/// standard-library implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  /// Uniform on [0, 1).
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi);
  /// Uniform integer on [0, n).
  int uniform_int(int n);

  /// Standard normal N(0, 1).
  double normal();
  /// Circular complex normal CN(0, 1): Re and Im ~ N(0, 1/2).
  std::complex<double> complex_normal();

  Eigen::VectorXd normal_vector(int n);
  Eigen::MatrixXd normal_matrix(int rows, int cols);
  Eigen::VectorXd uniform_vector(int n, double lo, double hi);
  Eigen::VectorXcd complex_normal_vector(int n);
  Eigen::MatrixXcd complex_normal_matrix(int rows, int cols);

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace isaclab
