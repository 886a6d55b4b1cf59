#include "dtdd/scenario.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace dtdd {

void ScenarioConfig::validate() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("ScenarioConfig: " + msg); };
  if (L < 1) fail("L must be >= 1");
  if (K < 1) fail("K must be >= 1");
  if (M < 1) fail("M must be >= 1");
  if (K > M) fail("K must be <= M");
  if (!(alpha > 0.0 && alpha <= 1.0)) fail("alpha must be in (0, 1]");
  if (!(beta >= 0.0 && beta < 1.0)) fail("beta must be in [0, 1)");
  if (!(p_tr > 0.0) || !(p_ul > 0.0) || !(p_dl > 0.0)) fail("SNRs must be > 0");
  if (!(phi_ul > 0.0) || !(phi_dl > 0.0)) fail("regularizers must be > 0");
  std::set<int> seen;
  for (int c : dl_cells) {
    if (c < 0 || c >= L) fail("dl_cells entry out of range");
    if (!seen.insert(c).second) fail("dl_cells entries must be distinct");
  }
  // All-DL is a valid scenario for DL metrics; UL metrics reject the absence
  // of UL cells at call time.
  if (n_outer < 1 || n_inner < 1 || n_precoder < 1) fail("Monte Carlo budgets must be >= 1");
}

bool ScenarioConfig::is_dl(int cell) const {
  return std::find(dl_cells.begin(), dl_cells.end(), cell) != dl_cells.end();
}

std::vector<int> ScenarioConfig::ul_cells() const {
  std::vector<int> out;
  for (int c = 0; c < L; ++c)
    if (!is_dl(c)) out.push_back(c);
  return out;
}

ScenarioConfig ScenarioConfig::with_dl_neighbors(int n) const {
  ScenarioConfig out = *this;
  out.dl_cells.clear();
  for (int c = 1; c <= n; ++c) out.dl_cells.push_back(c);
  return out;
}

ScenarioConfig ScenarioConfig::with_dl_block(int n) const {
  ScenarioConfig out = *this;
  out.dl_cells.clear();
  for (int c = 0; c < n; ++c) out.dl_cells.push_back(c);
  return out;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  nlohmann::json j;
  in >> j;

  ScenarioConfig cfg;
  const std::set<std::string> known = {"L",      "K",      "M",          "alpha",   "beta",
                                       "p_tr",   "p_ul",   "p_dl",       "phi_ul",  "phi_dl",
                                       "dl_cells", "n_outer", "n_inner", "n_precoder", "seed"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key()))
      throw std::invalid_argument("unknown config key: " + it.key());
  }
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key)) field = j.at(key).get<std::decay_t<decltype(field)>>();
  };
  get("L", cfg.L);
  get("K", cfg.K);
  get("M", cfg.M);
  get("alpha", cfg.alpha);
  get("beta", cfg.beta);
  get("p_tr", cfg.p_tr);
  get("p_ul", cfg.p_ul);
  get("p_dl", cfg.p_dl);
  get("phi_ul", cfg.phi_ul);
  get("phi_dl", cfg.phi_dl);
  get("dl_cells", cfg.dl_cells);
  get("n_outer", cfg.n_outer);
  get("n_inner", cfg.n_inner);
  get("n_precoder", cfg.n_precoder);
  get("seed", cfg.seed);
  cfg.validate();
  return cfg;
}

std::string to_json(const ScenarioConfig& cfg) {
  nlohmann::json j;
  j["L"] = cfg.L;
  j["K"] = cfg.K;
  j["M"] = cfg.M;
  j["alpha"] = cfg.alpha;
  j["beta"] = cfg.beta;
  j["p_tr"] = cfg.p_tr;
  j["p_ul"] = cfg.p_ul;
  j["p_dl"] = cfg.p_dl;
  j["phi_ul"] = cfg.phi_ul;
  j["phi_dl"] = cfg.phi_dl;
  j["dl_cells"] = cfg.dl_cells;
  j["n_outer"] = cfg.n_outer;
  j["n_inner"] = cfg.n_inner;
  j["n_precoder"] = cfg.n_precoder;
  j["seed"] = cfg.seed;
  return j.dump(2);
}

}  // namespace dtdd
