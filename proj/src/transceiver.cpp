#include "dtdd/transceiver.hpp"

#include <cmath>
#include <stdexcept>

namespace dtdd::transceiver {

using mathcore::GramScale;
using mathcore::regularized_gram_inverse;

CMatrix mmse_detectors(const CMatrix& hhat_cell, const CMatrix& f, double phi) {
  if (!(phi > 0.0)) throw std::invalid_argument("mmse_detectors: phi must be > 0");
  const double m = static_cast<double>(hhat_cell.rows());
  const CMatrix lambda = regularized_gram_inverse(hhat_cell, f, phi, GramScale::kPerAntenna);
  return (lambda * hhat_cell) / m;
}

CMatrix rzf_precoder_unnormalized(const CMatrix& hhat_cell, const CMatrix& f, double phi) {
  if (!(phi > 0.0)) throw std::invalid_argument("rzf_precoder_unnormalized: phi must be > 0");
  const CMatrix inv = regularized_gram_inverse(hhat_cell, f, phi, GramScale::kUnit);
  return inv * hhat_cell;
}

LambdaEstimate estimate_power_normalization(const channel::ChannelStatistics& stats,
                                            const channel::TrainingModel& model,
                                            const ScenarioConfig& cfg, int cell, int n_samples) {
  if (n_samples < 1)
    throw std::invalid_argument("estimate_power_normalization: n_samples must be >= 1");
  const int m = stats.M;
  const int k = stats.K;
  std::vector<double> traces(n_samples);
  for (int s = 0; s < n_samples; ++s) {
    RngStream rng(cfg.seed, {static_cast<std::uint64_t>(StreamTag::kLambdaEstimate),
                             static_cast<std::uint64_t>(cell), static_cast<std::uint64_t>(s)});
    const CMatrix hhat = model.phi_own_sqrt() * rng.cgauss_matrix(m, k);
    const CMatrix omega = rzf_precoder_unnormalized(hhat, CMatrix(), cfg.phi_dl);
    traces[s] = omega.squaredNorm();  // tr(Omega Omega^H)
  }
  const auto stats_tr = mathcore::mean_stderr(traces);
  if (!(stats_tr.mean > 0.0))
    throw std::runtime_error("estimate_power_normalization: degenerate all-zero precoder draws");
  LambdaEstimate out;
  out.denom_mean = stats_tr.mean;
  out.denom_stderr = stats_tr.stderr_;
  out.n_samples = n_samples;
  out.lambda = static_cast<double>(k) / stats_tr.mean;
  return out;
}

}  // namespace dtdd::transceiver
