#pragma once

#include <cstdint>
#include <vector>

#include "dtdd/mathcore.hpp"
#include "dtdd/rng.hpp"
#include "dtdd/scenario.hpp"

namespace dtdd::channel {

/// Exponential antenna correlation: entry (r, c) = gain * beta^|r-c|.
CMatrix exponential_correlation(int M, double beta, double gain);

/// Deterministic LoS component of the BS-to-BS channel between the pair
/// (j, n). Every entry has modulus sqrt(alpha), and the columns are
/// mutually orthogonal, so Gbar^H Gbar = alpha * M * I exactly. Distinct
/// pairs differ by a deterministic global phase rotation.
CMatrix los_matrix(int M, double alpha, int j, int n);

/// Second-order statistics of every channel in the network. The
/// constructed scenario is symmetric, so the distinct matrices are stored
/// once and the indexed accessors return shared references; callers may
/// rely on pointer identity for caching.
struct ChannelStatistics {
  int L = 0, K = 0, M = 0;
  double alpha = 0.0, beta = 0.0;

  CMatrix r_own;         // R[j][j][k]
  CMatrix r_cross;       // R[j][l][k], l != j
  CMatrix c_bs;          // C[j][n]
  CMatrix t_bs;          // T[j][n]
  CMatrix r_own_sqrt;    // principal square roots used for sampling
  CMatrix r_cross_sqrt;
  CMatrix c_bs_sqrt;
  CMatrix t_bs_sqrt;

  const CMatrix& R(int j, int l, int /*k*/) const { return l == j ? r_own : r_cross; }
  const CMatrix& R_sqrt(int j, int l) const { return l == j ? r_own_sqrt : r_cross_sqrt; }
  const CMatrix& C(int /*j*/, int /*n*/) const { return c_bs; }
  const CMatrix& T(int /*j*/, int /*n*/) const { return t_bs; }

  /// LoS matrix for the ordered pair (j, n), built on demand.
  CMatrix gbar(int j, int n) const { return los_matrix(M, alpha, j, n); }

  /// UT-to-UT large-scale gain alpha_iklm; uniform across cross-cell pairs.
  double ut2ut_gain(int /*i*/, int /*k*/, int /*l*/, int /*m*/) const { return alpha; }
};

ChannelStatistics build_scenario_statistics(const ScenarioConfig& cfg);

/// One joint draw of all UT channels, BS-to-BS channels and training noise.
/// Index layouts: h[(j*L + l)*K + k], g[j*L + n] (empty on the diagonal),
/// training_noise[j*K + k].
struct ChannelRealization {
  int L = 0, K = 0, M = 0;
  std::vector<CVector> h;
  std::vector<CMatrix> g;
  std::vector<CVector> training_noise;

  const CVector& ut(int j, int l, int k) const { return h[(j * L + l) * K + k]; }
  const CMatrix& bs2bs(int j, int n) const { return g[j * L + n]; }
  const CVector& noise(int j, int k) const { return training_noise[j * K + k]; }
};

/// Entity-keyed draws. Each (draw_index, entity) pair has its own
/// substream, so a subset of a realization sampled elsewhere is bit
/// identical to the corresponding entries here.
CVector draw_ut_channel(const ChannelStatistics& stats, std::uint64_t seed,
                        std::uint64_t draw_index, int j, int l, int k);
CMatrix draw_bs2bs_channel(const ChannelStatistics& stats, std::uint64_t seed,
                           std::uint64_t draw_index, int j, int n);
CVector draw_training_noise(int M, std::uint64_t seed, std::uint64_t draw_index, int j, int k);

ChannelRealization sample_channels(const ChannelStatistics& stats, const ScenarioConfig& cfg,
                                   std::uint64_t draw_index);

/// Deterministic part of MMSE training: per-(j, k) filter Q, the estimator
/// R_jjk Q_jk applied to the pilot observation, and the estimate
/// covariances Phi. In the symmetric scenario all cells and pilots share
/// the same matrices, so everything is computed once.
class TrainingModel {
 public:
  static TrainingModel build(const ChannelStatistics& stats, const ScenarioConfig& cfg);

  const CMatrix& Q(int /*j*/, int /*k*/) const { return q_; }
  /// Phi_{jlmk} = R_jlk Q_jk R_jmk.
  CMatrix phi(const ChannelStatistics& stats, int j, int l, int m, int k) const;
  const CMatrix& phi_own() const { return phi_own_; }        // Phi_jjjk
  const CMatrix& phi_cross_own() const { return phi_cross_own_; }  // R_cross Q R_own
  const CMatrix& estimator() const { return estimator_; }    // R_own Q
  const CMatrix& phi_own_sqrt() const { return phi_own_sqrt_; }

 private:
  CMatrix q_;
  CMatrix estimator_;
  CMatrix phi_own_;
  CMatrix phi_cross_own_;
  CMatrix phi_own_sqrt_;
};

/// Channel estimates for one draw: hhat[j] is M x K, column k estimating
/// h[j][j][k].
struct TrainingOutput {
  std::vector<CMatrix> hhat;
  const CMatrix& cell(int j) const { return hhat[j]; }
};

/// MMSE estimates for every cell of one realization. The pilot observation
/// for (j, k) sums the channels from all L cells plus scaled noise.
TrainingOutput simulate_training(const ChannelRealization& real, const ChannelStatistics& stats,
                                 const TrainingModel& model, const ScenarioConfig& cfg);

/// Estimates for a single cell, drawn directly from the realization's
/// substreams without materializing the other cells.
CMatrix train_cell(const ChannelStatistics& stats, const TrainingModel& model,
                   const ScenarioConfig& cfg, std::uint64_t draw_index, int j);

/// Conditional law of the cross channel h[j][l][m] given the estimate
/// hhat[j][j][m] (jointly Gaussian): mean = X P^+ hhat and
/// cov = R_jlm - X P^+ X^H with X the cross-covariance and P the estimate
/// covariance. P^+ is a tolerance-thresholded pseudo-inverse.
struct ConditionalMoments {
  CVector mean;
  CMatrix cov;
};
ConditionalMoments conditional_ut_channel_moments(const ChannelStatistics& stats,
                                                  const TrainingModel& model, int j, int l, int m,
                                                  const CVector& hhat_jjm);

}  // namespace dtdd::channel
