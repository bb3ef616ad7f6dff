#ifndef MICROSIM_SCENARIO_HPP
#define MICROSIM_SCENARIO_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace msim {

enum class ScenarioKind { Visitor, NewShopper, ReturningShopper };

struct ScenarioStep {
  std::string service_id;
  int requests_per_loop = 1;
};

struct UserScenario {
  ScenarioKind kind = ScenarioKind::Visitor;
  std::vector<ScenarioStep> steps;
};

// User-class mix. Non-visitors split into new shoppers (probability x) and
// returning shoppers (1 - x).
struct ScenarioMix {
  double visitor_fraction = 0.5;
  double new_shopper_prob = 0.5;  // x
  double think_time_s = 5.0;
};

struct ScenarioSet {
  UserScenario visitor;
  UserScenario new_shopper;
  UserScenario returning_shopper;
};

// Step lists for the default e-commerce topology. Registration and login are
// both served by the `user` service there.
ScenarioSet default_scenarios();

// Fluid request-rate model: each user class runs class_users / think_time
// loops per second, and every loop issues requests_per_loop requests to each
// service in its step list. Deterministic in its inputs.
std::map<std::string, double> service_request_rates(std::int64_t n_users,
                                                    const ScenarioMix& mix,
                                                    const ScenarioSet& scenarios);

// Precompiled form for the per-tick hot path: service ids resolved to dense
// indices once, rates written into a caller-owned vector.
class CompiledScenarios {
 public:
  CompiledScenarios(const ScenarioMix& mix, const ScenarioSet& scenarios,
                    const std::vector<std::string>& service_ids);

  // rates[i] = req/s for service_ids[i]; resized and overwritten.
  void rates_for(std::int64_t n_users, std::vector<double>& rates) const;

 private:
  std::size_t n_services_;
  // (service index, requests per second per user of this class)
  std::vector<std::pair<std::size_t, double>> weighted_steps_[3];
  double class_fraction_[3];
  double think_time_s_;
};

}  // namespace msim

#endif
