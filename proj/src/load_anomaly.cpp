#include "microsim/load_anomaly.hpp"

#include <algorithm>
#include <cmath>

#include "microsim/errors.hpp"

namespace msim {

namespace {

void check_config(const LoadAnomalyConfig& cfg) {
  if (cfg.probability < 0.0 || cfg.probability > 1.0)
    throw ConfigError("load_anomaly: probability outside [0,1]");
  if (cfg.duration_min <= 0.0 || cfg.duration_min > cfg.duration_max)
    throw ConfigError("load_anomaly: invalid duration range");
  if (cfg.multiplier_min < 0.0 || cfg.multiplier_min > cfg.multiplier_max)
    throw ConfigError("load_anomaly: invalid multiplier range");
}

inline std::int64_t scaled_users(double raw, double multiplier) {
  return std::max<std::int64_t>(0, static_cast<std::int64_t>(std::llround(raw * multiplier)));
}

}  // namespace

LoadAnomalyResult inject_load_anomalies(const LoadProfile& profile,
                                        const LoadAnomalyConfig& cfg, Rng& rng) {
  check_config(cfg);
  if (profile.size() == 0) throw ContractError("inject_load_anomalies: empty profile");

  const std::int64_t n = static_cast<std::int64_t>(profile.size());
  LoadAnomalyResult out;
  out.profile = profile;
  out.marked.assign(profile.size(), 0);

  double anomaly_end_time = -1.0;
  double multiplier = 1.0;
  bool active = false;

  for (std::int64_t t = 0; t < n; ++t) {
    if (active && static_cast<double>(t) <= anomaly_end_time) {
      out.marked[static_cast<std::size_t>(t)] = 1;
      out.labels.back().end_tick = t;
      out.profile.raw[static_cast<std::size_t>(t)] =
          profile.raw[static_cast<std::size_t>(t)] * multiplier;
      out.profile.users[static_cast<std::size_t>(t)] =
          scaled_users(profile.raw[static_cast<std::size_t>(t)], multiplier);
    } else if (rng.uniform01() < cfg.probability) {
      active = true;
      double duration = rng.uniform(cfg.duration_min, cfg.duration_max);
      anomaly_end_time = static_cast<double>(t) + duration;
      out.marked[static_cast<std::size_t>(t)] = 1;
      multiplier = rng.uniform(cfg.multiplier_min, cfg.multiplier_max);
      out.labels.push_back({t, t, multiplier});
      out.profile.raw[static_cast<std::size_t>(t)] =
          profile.raw[static_cast<std::size_t>(t)] * multiplier;
      out.profile.users[static_cast<std::size_t>(t)] =
          scaled_users(profile.raw[static_cast<std::size_t>(t)], multiplier);
    } else {
      active = false;
    }
  }

  out.profile.spawn_rate = spawn_rate_series(out.profile.users);
  return out;
}

LoadAnomalyResult apply_scripted_load_anomalies(
    const LoadProfile& profile, const std::vector<LoadAnomalyLabel>& windows) {
  if (profile.size() == 0)
    throw ContractError("apply_scripted_load_anomalies: empty profile");
  const std::int64_t n = static_cast<std::int64_t>(profile.size());

  LoadAnomalyResult out;
  out.profile = profile;
  out.marked.assign(profile.size(), 0);
  for (const auto& w : windows) {
    if (w.start_tick > w.end_tick || w.multiplier < 0.0)
      throw ConfigError("scripted load anomaly: invalid window");
    const std::int64_t lo = std::max<std::int64_t>(0, w.start_tick);
    const std::int64_t hi = std::min<std::int64_t>(n - 1, w.end_tick);
    if (lo > hi) continue;
    for (std::int64_t t = lo; t <= hi; ++t) {
      out.marked[static_cast<std::size_t>(t)] = 1;
      out.profile.raw[static_cast<std::size_t>(t)] =
          profile.raw[static_cast<std::size_t>(t)] * w.multiplier;
      out.profile.users[static_cast<std::size_t>(t)] =
          scaled_users(profile.raw[static_cast<std::size_t>(t)], w.multiplier);
    }
    out.labels.push_back({lo, hi, w.multiplier});
  }
  std::sort(out.labels.begin(), out.labels.end(),
            [](const LoadAnomalyLabel& a, const LoadAnomalyLabel& b) {
              return a.start_tick < b.start_tick;
            });
  out.profile.spawn_rate = spawn_rate_series(out.profile.users);
  return out;
}

double expected_anomaly_count(const LoadAnomalyConfig& cfg, std::int64_t n_ticks) {
  check_config(cfg);
  if (cfg.probability == 0.0 || n_ticks <= 0) return 0.0;
  const double mean_duration = 0.5 * (cfg.duration_min + cfg.duration_max);
  return static_cast<double>(n_ticks) * cfg.probability /
         (1.0 + cfg.probability * mean_duration);
}

}  // namespace msim
