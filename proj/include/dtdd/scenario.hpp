#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dtdd {

/// All scalar parameters of one simulated network point, the duplex
/// assignment, the Monte Carlo budgets and the master seed. Field names
/// double as the keys of the JSON config file.
struct ScenarioConfig {
  int L = 7;    // cells
  int K = 10;   // user terminals per cell
  int M = 64;   // BS antennas

  double alpha = 0.1;  // inter-cell large-scale coefficient, (0, 1]
  double beta = 0.0;   // adjacent-antenna correlation, [0, 1)

  // Linear (dimensionless) SNRs.
  double p_tr = 3.9810717055349722;  // 6 dB
  double p_ul = 3.9810717055349722;
  double p_dl = 3.9810717055349722;

  // Regularizers of the detector / precoder ridge.
  double phi_ul = 0.251188643150958;  // 1 / p_ul
  double phi_dl = 0.251188643150958;

  /// Cell indices operating in DL; the complement operates in UL.
  std::vector<int> dl_cells;

  int n_outer = 200;     // outer Monte Carlo draws
  int n_inner = 50;      // precoder draws per outer draw (BS-to-BS term)
  int n_precoder = 500;  // draws for the power-normalization constant

  std::uint64_t seed = 1;

  /// Throws std::invalid_argument on the first violated invariant.
  void validate() const;

  bool is_dl(int cell) const;
  std::vector<int> ul_cells() const;
  int n_dl() const { return static_cast<int>(dl_cells.size()); }

  /// Assigns cells 1..n to DL (cell 0 stays UL), for UL-side metrics.
  ScenarioConfig with_dl_neighbors(int n) const;
  /// Assigns cells 0..n-1 to DL (cell 0 is the measured DL cell).
  ScenarioConfig with_dl_block(int n) const;
};

/// Reads a JSON config whose keys match the ScenarioConfig field names.
/// Missing keys keep their defaults; unknown keys are an error.
ScenarioConfig load_config(const std::string& path);

std::string to_json(const ScenarioConfig& cfg);

}  // namespace dtdd
