#include "microsim/scenario.hpp"

#include <algorithm>

#include "microsim/errors.hpp"

namespace msim {

namespace {

void check_mix(const ScenarioMix& mix) {
  if (mix.visitor_fraction < 0.0 || mix.visitor_fraction > 1.0)
    throw ConfigError("scenarios: visitor_fraction outside [0,1]");
  if (mix.new_shopper_prob < 0.0 || mix.new_shopper_prob > 1.0)
    throw ConfigError("scenarios: new_shopper_prob outside [0,1]");
  if (mix.think_time_s <= 0.0) throw ConfigError("scenarios: think_time must be > 0");
}

void check_scenario(const UserScenario& s) {
  if (s.steps.empty()) throw ConfigError("scenarios: step list must be non-empty");
  for (const auto& step : s.steps)
    if (step.requests_per_loop < 1)
      throw ConfigError("scenarios: requests_per_loop must be >= 1");
}

}  // namespace

ScenarioSet default_scenarios() {
  ScenarioSet set;
  set.visitor = {ScenarioKind::Visitor, {{"frontend", 1}, {"catalogue", 1}}};
  set.new_shopper = {ScenarioKind::NewShopper,
                     {{"user", 1}, {"catalogue", 1}, {"cart", 1}, {"orders", 1}}};
  set.returning_shopper = {ScenarioKind::ReturningShopper,
                           {{"user", 1}, {"catalogue", 1}, {"cart", 1}, {"orders", 1}}};
  return set;
}

std::map<std::string, double> service_request_rates(std::int64_t n_users,
                                                    const ScenarioMix& mix,
                                                    const ScenarioSet& scenarios) {
  check_mix(mix);
  check_scenario(scenarios.visitor);
  check_scenario(scenarios.new_shopper);
  check_scenario(scenarios.returning_shopper);
  if (n_users < 0) throw ContractError("service_request_rates: negative user count");

  const double users = static_cast<double>(n_users);
  const double visitor_users = users * mix.visitor_fraction;
  const double shopper_users = users - visitor_users;
  const double new_users = shopper_users * mix.new_shopper_prob;
  const double returning_users = shopper_users - new_users;

  std::map<std::string, double> rates;
  auto add = [&](const UserScenario& s, double class_users) {
    const double loops_per_s = class_users / mix.think_time_s;
    for (const auto& step : s.steps)
      rates[step.service_id] += loops_per_s * step.requests_per_loop;
  };
  add(scenarios.visitor, visitor_users);
  add(scenarios.new_shopper, new_users);
  add(scenarios.returning_shopper, returning_users);
  return rates;
}

CompiledScenarios::CompiledScenarios(const ScenarioMix& mix, const ScenarioSet& scenarios,
                                     const std::vector<std::string>& service_ids)
    : n_services_(service_ids.size()), think_time_s_(mix.think_time_s) {
  check_mix(mix);
  class_fraction_[0] = mix.visitor_fraction;
  class_fraction_[1] = (1.0 - mix.visitor_fraction) * mix.new_shopper_prob;
  class_fraction_[2] = (1.0 - mix.visitor_fraction) * (1.0 - mix.new_shopper_prob);

  const UserScenario* all[3] = {&scenarios.visitor, &scenarios.new_shopper,
                                &scenarios.returning_shopper};
  for (int c = 0; c < 3; ++c) {
    check_scenario(*all[c]);
    for (const auto& step : all[c]->steps) {
      auto it = std::find(service_ids.begin(), service_ids.end(), step.service_id);
      if (it == service_ids.end())
        throw ConfigError("scenarios: unknown service '" + step.service_id + "'");
      weighted_steps_[c].push_back(
          {static_cast<std::size_t>(it - service_ids.begin()),
           static_cast<double>(step.requests_per_loop)});
    }
  }
}

void CompiledScenarios::rates_for(std::int64_t n_users, std::vector<double>& rates) const {
  rates.assign(n_services_, 0.0);
  const double users = static_cast<double>(n_users);
  for (int c = 0; c < 3; ++c) {
    const double loops_per_s = users * class_fraction_[c] / think_time_s_;
    for (const auto& [svc, weight] : weighted_steps_[c]) rates[svc] += loops_per_s * weight;
  }
}

}  // namespace msim
