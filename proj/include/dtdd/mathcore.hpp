#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "dtdd/rng.hpp"

// Dense complex Hermitian matrix utilities. Everything here is a pure
// function of its inputs and safe to call concurrently. Matrices are kept
// dense: the target dimensions (M <= ~512) make O(M^3) eigensolves and
// factorizations acceptable.
namespace dtdd::mathcore {

/// Single PSD acceptance tolerance: eigenvalues in [-kPsdTolerance, 0)
/// are treated as rounding noise and clipped to zero.
inline constexpr double kPsdTolerance = 1e-10;

struct NotPsdError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

bool is_hermitian(const CMatrix& a, double tol = 1e-12);

/// Throws std::invalid_argument if `a` is not square Hermitian (within tol)
/// or contains non-finite entries.
void require_hermitian(const CMatrix& a, const char* what);

/// Largest absolute eigenvalue of a Hermitian matrix.
double spectral_norm(const CMatrix& a);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const CMatrix& a);

/// Hermitian principal square root B of a PSD matrix, B * B^H = a.
/// Eigenvalues in [-kPsdTolerance, 0) are clipped; below that throws
/// NotPsdError. The eigendecomposition route (rather than Cholesky) keeps
/// rank-deficient inputs usable.
CMatrix psd_sqrt_factor(const CMatrix& a);

/// Selects the normalization of the regularized Gram inverse.
enum class GramScale {
  kPerAntenna,  // ((1/M) sum h h^H + (1/M) f + phi I)^-1, uplink detector form
  kUnit,        // (sum h h^H + f + M phi I)^-1, downlink precoder form
};

/// Inverse of the ridge-regularized Gram built from the columns of
/// `columns` (M x n). `f` may be empty (treated as zero). phi must be > 0;
/// the ridge makes the pre-inverse positive definite, so the inverse is
/// computed by Cholesky solve.
CMatrix regularized_gram_inverse(const CMatrix& columns, const CMatrix& f, double phi,
                                 GramScale scale);

/// Moore-Penrose pseudo-inverse of a Hermitian PSD matrix; eigenvalues
/// below rel_tol * max_eigenvalue are treated as zero.
CMatrix pseudo_inverse_psd(const CMatrix& a, double rel_tol = 1e-10);

/// Mean and standard error with pairwise summation, so the result does not
/// depend on accumulation order when draws are produced concurrently.
double pairwise_sum(const std::vector<double>& x);
struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;
};
MeanStderr mean_stderr(const std::vector<double>& x);

}  // namespace dtdd::mathcore
