#include "dtdd/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace dtdd::channel {

using mathcore::psd_sqrt_factor;
using mathcore::pseudo_inverse_psd;

CMatrix exponential_correlation(int M, double beta, double gain) {
  if (M < 1) throw std::invalid_argument("exponential_correlation: M must be >= 1");
  if (!(beta >= 0.0 && beta < 1.0))
    throw std::invalid_argument("exponential_correlation: beta must be in [0, 1)");
  if (!(gain >= 0.0)) throw std::invalid_argument("exponential_correlation: gain must be >= 0");
  CMatrix out(M, M);
  for (int r = 0; r < M; ++r)
    for (int c = 0; c < M; ++c) out(r, c) = gain * std::pow(beta, std::abs(r - c));
  return out;
}

CMatrix los_matrix(int M, double alpha, int j, int n) {
  if (M < 1) throw std::invalid_argument("los_matrix: M must be >= 1");
  if (!(alpha >= 0.0)) throw std::invalid_argument("los_matrix: alpha must be >= 0");
  const double amp = std::sqrt(alpha);
  // Unitary phase grid; the per-pair rotation keeps distinct pairs distinct
  // without disturbing column orthogonality.
  const double rot = 2.0 * M_PI * static_cast<double>((j * 131 + n * 17) % 251) / 251.0;
  CMatrix out(M, M);
  for (int c = 0; c < M; ++c) {
    for (int r = 0; r < M; ++r) {
      const double phase = 2.0 * M_PI * (static_cast<double>(r) * c / M) + rot;
      out(r, c) = amp * Complex(std::cos(phase), std::sin(phase));
    }
  }
  return out;
}

ChannelStatistics build_scenario_statistics(const ScenarioConfig& cfg) {
  cfg.validate();
  ChannelStatistics s;
  s.L = cfg.L;
  s.K = cfg.K;
  s.M = cfg.M;
  s.alpha = cfg.alpha;
  s.beta = cfg.beta;
  s.r_own = exponential_correlation(cfg.M, cfg.beta, 1.0);
  s.r_cross = exponential_correlation(cfg.M, cfg.beta, cfg.alpha);
  s.c_bs = exponential_correlation(cfg.M, cfg.beta, cfg.alpha);
  s.t_bs = exponential_correlation(cfg.M, cfg.beta, 1.0);
  s.r_own_sqrt = psd_sqrt_factor(s.r_own);
  s.r_cross_sqrt = psd_sqrt_factor(s.r_cross);
  s.c_bs_sqrt = psd_sqrt_factor(s.c_bs);
  s.t_bs_sqrt = psd_sqrt_factor(s.t_bs);
  return s;
}

namespace {

std::uint64_t pack3(int a, int b, int c, int stride_b, int stride_c) {
  return (static_cast<std::uint64_t>(a) * stride_b + b) * stride_c + c;
}

}  // namespace

CVector draw_ut_channel(const ChannelStatistics& stats, std::uint64_t seed,
                        std::uint64_t draw_index, int j, int l, int k) {
  RngStream rng(seed, {static_cast<std::uint64_t>(StreamTag::kUtChannel), draw_index,
                       pack3(j, l, k, stats.L, stats.K)});
  return stats.R_sqrt(j, l) * rng.cgauss_vector(stats.M);
}

CMatrix draw_bs2bs_channel(const ChannelStatistics& stats, std::uint64_t seed,
                           std::uint64_t draw_index, int j, int n) {
  RngStream rng(seed, {static_cast<std::uint64_t>(StreamTag::kBs2BsChannel), draw_index,
                       static_cast<std::uint64_t>(j) * stats.L + n});
  CMatrix v = rng.cgauss_matrix(stats.M, stats.M);
  return stats.c_bs_sqrt * v * stats.t_bs_sqrt + stats.gbar(j, n);
}

CVector draw_training_noise(int M, std::uint64_t seed, std::uint64_t draw_index, int j, int k) {
  RngStream rng(seed, {static_cast<std::uint64_t>(StreamTag::kTrainingNoise), draw_index,
                       static_cast<std::uint64_t>(j) * 4096 + k});
  return rng.cgauss_vector(M);
}

ChannelRealization sample_channels(const ChannelStatistics& stats, const ScenarioConfig& cfg,
                                   std::uint64_t draw_index) {
  ChannelRealization out;
  out.L = stats.L;
  out.K = stats.K;
  out.M = stats.M;
  out.h.resize(static_cast<std::size_t>(stats.L) * stats.L * stats.K);
  out.g.resize(static_cast<std::size_t>(stats.L) * stats.L);
  out.training_noise.resize(static_cast<std::size_t>(stats.L) * stats.K);
  for (int j = 0; j < stats.L; ++j) {
    for (int l = 0; l < stats.L; ++l)
      for (int k = 0; k < stats.K; ++k)
        out.h[(j * stats.L + l) * stats.K + k] = draw_ut_channel(stats, cfg.seed, draw_index, j, l, k);
    for (int n = 0; n < stats.L; ++n)
      if (n != j) out.g[j * stats.L + n] = draw_bs2bs_channel(stats, cfg.seed, draw_index, j, n);
    for (int k = 0; k < stats.K; ++k)
      out.training_noise[j * stats.K + k] = draw_training_noise(stats.M, cfg.seed, draw_index, j, k);
  }
  return out;
}

TrainingModel TrainingModel::build(const ChannelStatistics& stats, const ScenarioConfig& cfg) {
  if (!(cfg.p_tr > 0.0)) throw std::invalid_argument("TrainingModel: p_tr must be > 0");
  TrainingModel m;
  CMatrix q_inv = stats.r_own + static_cast<double>(cfg.L - 1) * stats.r_cross;
  q_inv.diagonal().array() += 1.0 / cfg.p_tr;
  Eigen::LLT<CMatrix> llt(q_inv);
  if (llt.info() != Eigen::Success)
    throw std::runtime_error("TrainingModel: Q pre-inverse factorization failed");
  m.q_ = llt.solve(CMatrix::Identity(stats.M, stats.M));
  m.estimator_ = stats.r_own * m.q_;
  m.phi_own_ = m.estimator_ * stats.r_own;
  m.phi_cross_own_ = stats.r_cross * m.q_ * stats.r_own;
  // Hermitize against rounding before the square root.
  m.phi_own_ = 0.5 * (m.phi_own_ + m.phi_own_.adjoint()).eval();
  m.phi_own_sqrt_ = psd_sqrt_factor(m.phi_own_);
  return m;
}

CMatrix TrainingModel::phi(const ChannelStatistics& stats, int j, int l, int m, int k) const {
  return stats.R(j, l, k) * q_ * stats.R(j, m, k);
}

TrainingOutput simulate_training(const ChannelRealization& real, const ChannelStatistics& stats,
                                 const TrainingModel& model, const ScenarioConfig& cfg) {
  TrainingOutput out;
  out.hhat.resize(stats.L);
  const double noise_scale = 1.0 / std::sqrt(cfg.p_tr);
  for (int j = 0; j < stats.L; ++j) {
    CMatrix y(stats.M, stats.K);
    for (int k = 0; k < stats.K; ++k) {
      CVector obs = real.noise(j, k) * noise_scale;
      for (int l = 0; l < stats.L; ++l) obs += real.ut(j, l, k);
      y.col(k) = obs;
    }
    out.hhat[j] = model.estimator() * y;
  }
  return out;
}

CMatrix train_cell(const ChannelStatistics& stats, const TrainingModel& model,
                   const ScenarioConfig& cfg, std::uint64_t draw_index, int j) {
  const double noise_scale = 1.0 / std::sqrt(cfg.p_tr);
  CMatrix y(stats.M, stats.K);
  for (int k = 0; k < stats.K; ++k) {
    CVector obs = draw_training_noise(stats.M, cfg.seed, draw_index, j, k) * noise_scale;
    for (int l = 0; l < stats.L; ++l) obs += draw_ut_channel(stats, cfg.seed, draw_index, j, l, k);
    y.col(k) = obs;
  }
  return model.estimator() * y;
}

ConditionalMoments conditional_ut_channel_moments(const ChannelStatistics& stats,
                                                  const TrainingModel& model, int j, int l, int m,
                                                  const CVector& hhat_jjm) {
  if (hhat_jjm.size() != stats.M)
    throw std::invalid_argument("conditional_ut_channel_moments: estimate length mismatch");
  const CMatrix x = model.phi(stats, j, l, j, m);  // cross-covariance of h_jlm with hhat
  const CMatrix p_pinv = pseudo_inverse_psd(model.phi_own());
  const CMatrix gain = x * p_pinv;
  ConditionalMoments out;
  out.mean = gain * hhat_jjm;
  out.cov = stats.R(j, l, m) - gain * x.adjoint();
  return out;
}

}  // namespace dtdd::channel
