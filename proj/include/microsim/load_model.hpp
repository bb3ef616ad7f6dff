#ifndef MICROSIM_LOAD_MODEL_HPP
#define MICROSIM_LOAD_MODEL_HPP

#include <cstdint>
#include <vector>

#include "microsim/rng.hpp"

namespace msim {

// One sinusoidal-squared seasonal term of the user-load model. The noise
// term is zero-mean Gaussian white noise; noise_variance is a *variance*,
// not a standard deviation, and the realized noise is scaled by the
// component amplitude.
struct SeasonalComponent {
  double period_ticks = 0.0;
  double amplitude = 0.0;
  double noise_variance = 0.0;
};

struct TrendConfig {
  int num_intervals = 1;
  double slope_min = 0.0;  // must stay > -1 so (1 + trend) stays positive
  double slope_max = 0.0;
  double sudden_shift_prob = 0.0;
};

struct TrendInterval {
  std::int64_t start_tick = 0;
  std::int64_t end_tick = 0;  // exclusive
  double slope = 0.0;
  bool sudden_shift = false;
};

// Realized piecewise trend: contiguous intervals partitioning [0, duration).
struct TrendProfile {
  std::vector<TrendInterval> intervals;
  std::int64_t duration() const {
    return intervals.empty() ? 0 : intervals.back().end_tick;
  }
};

struct LoadConfig {
  double base_load = 20.0;
  std::vector<SeasonalComponent> components;
  TrendConfig trend;
  std::int64_t duration_ticks = 0;
  int tick_seconds = 1;
};

// Generated user-count series N(t) with its spawn rate R(t). `raw` keeps the
// model value before rounding/clamping; `users` is max(0, round(raw)).
struct LoadProfile {
  std::vector<std::int64_t> users;
  std::vector<double> raw;
  std::vector<double> spawn_rate;
  std::size_t size() const { return users.size(); }
};

// Per-component decomposition of the same model evaluation. Addends sum to
// `total` (== raw) exactly, in the order trend_part, then per component
// seasonal then noise.
struct DecomposedLoad {
  std::vector<double> trend_part;              // (1 + trend(t)) * base_load
  std::vector<std::vector<double>> seasonal;   // amplitude * sin^2 term
  std::vector<std::vector<double>> noise;      // amplitude * noise draw
  std::vector<double> total;                   // raw(t)
};

// Draws m contiguous equal-length intervals (the last absorbs the remainder),
// one uniform slope and one Bernoulli sudden-shift flag per interval, in
// interval order. Rejects duration < num_intervals.
TrendProfile generate_trend(const TrendConfig& cfg, std::int64_t duration_ticks, Rng& rng);

// Trend value at tick t. A sudden-shift interval sits at its slope level for
// the whole interval; otherwise the value interpolates from the previous
// interval's level (0 before the first interval) to this interval's level.
double eval_trend(const TrendProfile& profile, std::int64_t t);

LoadProfile generate_load(const LoadConfig& cfg, const TrendProfile& trend, Rng& rng);

DecomposedLoad decompose_load(const LoadConfig& cfg, const TrendProfile& trend, Rng& rng);

// Discrete gradient of the user series: central difference with h = 1 tick on
// interior points, one-sided differences at the boundaries. Negative values
// mean users are being removed. Rejects series shorter than 2.
std::vector<double> spawn_rate_series(const std::vector<std::int64_t>& users);

}  // namespace msim

#endif
