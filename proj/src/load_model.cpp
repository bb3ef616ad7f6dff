#include "microsim/load_model.hpp"

#include <algorithm>
#include <cmath>

#include "microsim/errors.hpp"

namespace msim {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

void check_trend_config(const TrendConfig& cfg) {
  if (cfg.num_intervals < 1) throw ConfigError("trend: num_intervals must be >= 1");
  if (cfg.slope_min > cfg.slope_max) throw ConfigError("trend: empty slope range");
  if (cfg.slope_min <= -1.0)
    throw ConfigError("trend: slope range lower bound must be > -1");
  if (cfg.sudden_shift_prob < 0.0 || cfg.sudden_shift_prob > 1.0)
    throw ConfigError("trend: sudden_shift_prob outside [0,1]");
}

void check_load_config(const LoadConfig& cfg) {
  if (cfg.base_load <= 0.0) throw ConfigError("load: base_load must be > 0");
  if (cfg.duration_ticks < 2) throw ConfigError("load: duration must be >= 2 ticks");
  if (cfg.components.empty()) throw ConfigError("load: at least one seasonal component");
  for (const auto& c : cfg.components) {
    if (c.period_ticks <= 0.0) throw ConfigError("load: component period must be > 0");
    if (c.amplitude < 0.0) throw ConfigError("load: component amplitude must be >= 0");
    if (c.noise_variance < 0.0) throw ConfigError("load: noise variance must be >= 0");
  }
}

// Single tick of the additive model, emitting each addend separately so the
// decomposition view recombines to the exact same double.
struct TickEval {
  double trend_part;
  double raw;
};

inline double seasonal_value(const SeasonalComponent& c, std::int64_t t) {
  // Phase folded into one period before the sine keeps the value exactly
  // periodic in t (and well conditioned at large t).
  double phase = std::fmod(static_cast<double>(t), c.period_ticks) / c.period_ticks;
  double s = std::sin(kTwoPi * phase);
  return c.amplitude * (s * s);
}

}  // namespace

TrendProfile generate_trend(const TrendConfig& cfg, std::int64_t duration_ticks, Rng& rng) {
  check_trend_config(cfg);
  if (duration_ticks < cfg.num_intervals)
    throw ConfigError("trend: duration shorter than num_intervals");

  const std::int64_t m = cfg.num_intervals;
  const std::int64_t len = duration_ticks / m;
  TrendProfile profile;
  profile.intervals.reserve(static_cast<std::size_t>(m));
  for (std::int64_t i = 0; i < m; ++i) {
    TrendInterval iv;
    iv.start_tick = i * len;
    iv.end_tick = (i + 1 == m) ? duration_ticks : (i + 1) * len;
    iv.slope = rng.uniform(cfg.slope_min, cfg.slope_max);
    iv.sudden_shift = rng.bernoulli(cfg.sudden_shift_prob);
    profile.intervals.push_back(iv);
  }
  return profile;
}

double eval_trend(const TrendProfile& profile, std::int64_t t) {
  if (profile.intervals.empty() || t < 0 || t >= profile.duration())
    throw ContractError("eval_trend: tick outside trend profile");

  auto it = std::upper_bound(
      profile.intervals.begin(), profile.intervals.end(), t,
      [](std::int64_t tick, const TrendInterval& iv) { return tick < iv.start_tick; });
  const std::size_t i = static_cast<std::size_t>(it - profile.intervals.begin()) - 1;
  const TrendInterval& iv = profile.intervals[i];

  if (iv.sudden_shift) return iv.slope;
  const double prev = (i == 0) ? 0.0 : profile.intervals[i - 1].slope;
  const double u = static_cast<double>(t - iv.start_tick) /
                   static_cast<double>(iv.end_tick - iv.start_tick);
  return prev * (1.0 - u) + iv.slope * u;
}

LoadProfile generate_load(const LoadConfig& cfg, const TrendProfile& trend, Rng& rng) {
  check_load_config(cfg);
  if (trend.duration() != cfg.duration_ticks)
    throw ContractError("generate_load: trend and config duration mismatch");

  const std::int64_t n = cfg.duration_ticks;
  LoadProfile profile;
  profile.users.resize(static_cast<std::size_t>(n));
  profile.raw.resize(static_cast<std::size_t>(n));

  for (std::int64_t t = 0; t < n; ++t) {
    double raw = (1.0 + eval_trend(trend, t)) * cfg.base_load;
    for (const auto& c : cfg.components) {
      double sd = std::sqrt(c.noise_variance);
      raw += seasonal_value(c, t);
      raw += c.amplitude * rng.gaussian(0.0, sd);
    }
    profile.raw[static_cast<std::size_t>(t)] = raw;
    profile.users[static_cast<std::size_t>(t)] =
        std::max<std::int64_t>(0, static_cast<std::int64_t>(std::llround(raw)));
  }
  profile.spawn_rate = spawn_rate_series(profile.users);
  return profile;
}

DecomposedLoad decompose_load(const LoadConfig& cfg, const TrendProfile& trend, Rng& rng) {
  check_load_config(cfg);
  if (trend.duration() != cfg.duration_ticks)
    throw ContractError("decompose_load: trend and config duration mismatch");

  const std::size_t n = static_cast<std::size_t>(cfg.duration_ticks);
  const std::size_t k = cfg.components.size();
  DecomposedLoad out;
  out.trend_part.resize(n);
  out.total.resize(n);
  out.seasonal.assign(k, std::vector<double>(n));
  out.noise.assign(k, std::vector<double>(n));

  // Same draw order and same addend order as generate_load, so `total`
  // matches its raw series bitwise for the same seed.
  for (std::size_t t = 0; t < n; ++t) {
    double trend_part = (1.0 + eval_trend(trend, static_cast<std::int64_t>(t))) * cfg.base_load;
    out.trend_part[t] = trend_part;
    double raw = trend_part;
    for (std::size_t i = 0; i < k; ++i) {
      const auto& c = cfg.components[i];
      double seasonal = seasonal_value(c, static_cast<std::int64_t>(t));
      double noise = c.amplitude * rng.gaussian(0.0, std::sqrt(c.noise_variance));
      out.seasonal[i][t] = seasonal;
      out.noise[i][t] = noise;
      raw += seasonal;
      raw += noise;
    }
    out.total[t] = raw;
  }
  return out;
}

std::vector<double> spawn_rate_series(const std::vector<std::int64_t>& users) {
  if (users.size() < 2)
    throw ContractError("spawn_rate: series must have at least 2 ticks");
  const std::size_t n = users.size();
  std::vector<double> rate(n);
  rate[0] = static_cast<double>(users[1] - users[0]);
  rate[n - 1] = static_cast<double>(users[n - 1] - users[n - 2]);
  for (std::size_t t = 1; t + 1 < n; ++t)
    rate[t] = static_cast<double>(users[t + 1] - users[t - 1]) / 2.0;
  return rate;
}

}  // namespace msim
