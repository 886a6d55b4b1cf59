#pragma once

#include "dtdd/channel.hpp"
#include "dtdd/mathcore.hpp"
#include "dtdd/scenario.hpp"

namespace dtdd::transceiver {

/// MMSE detection vectors for one cell, a_k in column k:
///   a_k = (1/M) ((1/M) sum_i hhat_i hhat_i^H + (1/M) f + phi I)^-1 hhat_k.
/// `f` may be empty (zero).
CMatrix mmse_detectors(const CMatrix& hhat_cell, const CMatrix& f, double phi);

/// Unnormalized RZF precoder:
///   Omega = (sum_i hhat_i hhat_i^H + f + M phi I)^-1 Hhat.
CMatrix rzf_precoder_unnormalized(const CMatrix& hhat_cell, const CMatrix& f, double phi);

struct LambdaEstimate {
  double lambda = 0.0;       // K / mean(tr Omega Omega^H)
  double denom_mean = 0.0;   // sample mean of tr Omega Omega^H
  double denom_stderr = 0.0;
  int n_samples = 0;
};

/// Monte Carlo estimate of the transmit power normalization for cell n,
/// averaging tr(Omega Omega^H) over n_samples independent estimate draws.
/// Deterministic given the config seed; independent of the outer draws.
LambdaEstimate estimate_power_normalization(const channel::ChannelStatistics& stats,
                                            const channel::TrainingModel& model,
                                            const ScenarioConfig& cfg, int cell, int n_samples);

}  // namespace dtdd::transceiver
