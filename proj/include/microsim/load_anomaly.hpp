#ifndef MICROSIM_LOAD_ANOMALY_HPP
#define MICROSIM_LOAD_ANOMALY_HPP

#include <cstdint>
#include <vector>

#include "microsim/load_model.hpp"
#include "microsim/rng.hpp"

namespace msim {

struct LoadAnomalyConfig {
  double probability = 0.0;      // per-tick start probability, outside anomalies
  double duration_min = 60.0;    // ticks
  double duration_max = 600.0;   // ticks
  double multiplier_min = 1.0;
  double multiplier_max = 2.0;
};

// One coalesced anomaly interval; ticks in [start_tick, end_tick] inclusive
// all carry the same multiplier.
struct LoadAnomalyLabel {
  std::int64_t start_tick = 0;
  std::int64_t end_tick = 0;
  double multiplier = 1.0;
};

struct LoadAnomalyResult {
  LoadProfile profile;                  // adjusted users/raw, recomputed spawn rate
  std::vector<LoadAnomalyLabel> labels;
  std::vector<std::uint8_t> marked;     // per-tick ground truth
};

// Sequential pass over the profile: inside an active anomaly each tick is
// marked and scaled by the active multiplier (end comparison inclusive);
// otherwise a new anomaly starts with probability p, sampling duration then
// multiplier from their uniform ranges. Scaling multiplies the pre-rounding
// raw value, then re-rounds and re-clamps.
LoadAnomalyResult inject_load_anomalies(const LoadProfile& profile,
                                        const LoadAnomalyConfig& cfg, Rng& rng);

// Deterministic anomaly windows applied on top of a profile (used for
// scripted scenarios); same value law and labeling as the probabilistic pass.
LoadAnomalyResult apply_scripted_load_anomalies(const LoadProfile& profile,
                                                const std::vector<LoadAnomalyLabel>& windows);

// Analytic expectation of started anomaly intervals under the renewal
// approximation: n * p / (1 + p * mean_duration). Approximate by design;
// statistical tests compare against simulation.
double expected_anomaly_count(const LoadAnomalyConfig& cfg, std::int64_t n_ticks);

}  // namespace msim

#endif
