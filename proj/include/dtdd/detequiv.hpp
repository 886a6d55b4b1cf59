#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dtdd/channel.hpp"
#include "dtdd/mathcore.hpp"
#include "dtdd/scenario.hpp"

// Random-matrix deterministic equivalents: the resolvent fixed point, its
// derivative form, and the closed-form / general approximations of the
// BS-to-BS interference power they yield.
namespace dtdd::detequiv {

struct NonConvergenceError : std::runtime_error {
  NonConvergenceError(const std::string& what, double res) : std::runtime_error(what), residual(res) {}
  double residual = 0.0;
};

/// Gamma(rho) and the fixed-point weights delta_i(rho). Convention: the
/// matrices r_list[i] are the covariance scale of vectors h_i ~ CN(0, R_i/N),
/// and the iteration divides by N exactly as the resolvent statement does.
struct FixedPointResult {
  CMatrix gamma;
  Eigen::VectorXd delta;
  int iterations = 0;
  double residual = 0.0;
};

/// Derivative-form result Gamma'(rho) for a weight matrix Theta, with the
/// linear system pieces exposed for diagnostics.
struct DerivativeResult {
  CMatrix gamma_prime;
  Eigen::VectorXd delta_prime;
  Eigen::MatrixXd j_matrix;
  Eigen::VectorXd u_vector;
};

struct FixedPointOptions {
  double tol = 1e-9;
  int max_iter = 500;
};

/// Iterates delta_i <- (1/N) tr R_i ((1/N) sum_m R_m/(1+delta_m) + S + rho I)^-1
/// from delta = 1/rho until the largest update is <= tol. Repeated pointers
/// in r_list are deduplicated when accumulating and tracing. Plain
/// iteration for the first 200 rounds, then 0.5 damping as a safeguard.
FixedPointResult fixed_point_gamma(const std::vector<const CMatrix*>& r_list, const CMatrix& s,
                                   double rho, const FixedPointOptions& opts = {});

DerivativeResult gamma_prime(const std::vector<const CMatrix*>& r_list, const CMatrix& s,
                             double rho, const CMatrix& theta, const FixedPointResult& fp);

/// Deterministic approximation of the BS-to-BS interference term of the UL
/// SINR at (j, k), assembled from the seven fixed-point quantities.
double prop1_bs2bs_approx(const channel::ChannelStatistics& stats,
                          const channel::TrainingModel& model, const ScenarioConfig& cfg, int j,
                          int k);

/// Closed form of the approximation under the uncorrelated channel model
/// with F = 0 and a common regularizer phi.
double prop2_closed_form(double alpha, int L, int L_dl, int K, int M, double p_dl, double p_tr,
                         double phi);

struct AssumptionCheck {
  bool pass = true;
  std::string detail;
};

/// Validation report for the four preconditions of the deterministic
/// approximation. F matrices default to zero when empty.
struct AssumptionReport {
  AssumptionCheck a1, a2, a3, a4;
  bool all_pass() const { return a1.pass && a2.pass && a3.pass && a4.pass; }
  std::string summary() const;
};

AssumptionReport validate_assumptions(const channel::ChannelStatistics& stats,
                                      const ScenarioConfig& cfg, const CMatrix& f_ul = CMatrix(),
                                      const CMatrix& f_dl = CMatrix());

}  // namespace dtdd::detequiv
