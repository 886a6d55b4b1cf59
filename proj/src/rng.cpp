#include "dtdd/rng.hpp"

#include <cmath>

namespace dtdd {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RngStream::RngStream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t state = seed;
  splitmix64(state);
  for (std::uint64_t component : path) {
    state ^= splitmix64(state) + component;
    splitmix64(state);
  }
  engine_.seed(splitmix64(state));
}

double RngStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RngStream::gaussian() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  // Box-Muller; u clamped away from 0 so log stays finite.
  double u = uniform01();
  if (u <= 0.0) u = 0x1.0p-53;
  const double v = uniform01();
  const double r = std::sqrt(-2.0 * std::log(u));
  const double theta = 2.0 * M_PI * v;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

Complex RngStream::cgauss() {
  // CN(0,1): independent real/imag parts with variance 1/2 each.
  constexpr double kInvSqrt2 = 0.7071067811865475244;
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re * kInvSqrt2, im * kInvSqrt2);
}

CVector RngStream::cgauss_vector(int n) {
  CVector v(n);
  for (int i = 0; i < n; ++i) v(i) = cgauss();
  return v;
}

CMatrix RngStream::cgauss_matrix(int rows, int cols) {
  CMatrix m(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) m(r, c) = cgauss();
  return m;
}

}  // namespace dtdd
