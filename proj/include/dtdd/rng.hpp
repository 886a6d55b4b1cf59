#pragma once

#include <complex>
#include <cstdint>
#include <initializer_list>
#include <random>

#include <Eigen/Dense>

namespace dtdd {

using Complex = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Stream purposes used to derive independent substreams from the master
/// seed. Every sampled entity gets its own stream keyed by
/// (purpose, draw index, entity index), so realizations are reproducible
/// regardless of evaluation order or thread scheduling.
enum class StreamTag : std::uint64_t {
  kUtChannel = 1,
  kBs2BsChannel = 2,
  kTrainingNoise = 3,
  kEstimateDraw = 4,
  kLambdaEstimate = 5,
  kTest = 100,
};

std::uint64_t splitmix64(std::uint64_t& state);

/// Counter-derived random stream. The engine seed is a hash of the master
/// seed and the id path, so streams with distinct paths are independent
/// and a given path always reproduces the same sequence.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::initializer_list<std::uint64_t> path);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01();

  /// Standard real Gaussian (Box-Muller; second value cached).
  double gaussian();

  /// Scalar CN(0, 1).
  Complex cgauss();

  CVector cgauss_vector(int n);

  /// Column-major fill; entries i.i.d. CN(0, 1).
  CMatrix cgauss_matrix(int rows, int cols);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace dtdd
