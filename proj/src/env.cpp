#include "pricelab/env.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pricelab::env {

namespace {

constexpr double kMinAdjust = 0.01;
constexpr double kMaxAdjust = 2.0;

double softplus(double x) {
  // softplus(x) = x + log1p(exp(-x)) for x > 0 avoids overflow.
  if (x > 0.0) return x + std::log1p(std::exp(-x));
  return std::log1p(std::exp(x));
}

}  // namespace

ActionGrid build_action_grid(int size) {
  if (size < 3 || size % 2 == 0) {
    throw std::invalid_argument("action grid size must be odd and >= 3");
  }
  const int half = (size - 1) / 2;
  std::vector<double> mags(half);
  if (half == 1) {
    mags[0] = kMaxAdjust;
  } else {
    const double ratio = kMaxAdjust / kMinAdjust;
    for (int k = 0; k < half; ++k) {
      mags[k] = kMinAdjust * std::pow(ratio, static_cast<double>(k) / (half - 1));
    }
    mags.front() = kMinAdjust;
    mags.back() = kMaxAdjust;
  }
  ActionGrid grid;
  grid.deltas.reserve(size);
  for (int k = half - 1; k >= 0; --k) grid.deltas.push_back(-mags[k]);
  grid.deltas.push_back(0.0);
  for (int k = 0; k < half; ++k) grid.deltas.push_back(mags[k]);
  return grid;
}

void EnvConfig::validate() const {
  if (n_agents < 2) throw std::invalid_argument("need at least 2 agents");
  if (!(init_price_low < init_price_high)) {
    throw std::invalid_argument("init price interval is empty");
  }
  if (steps_per_episode < 1) {
    throw std::invalid_argument("steps_per_episode must be >= 1");
  }
  if (action_grid.size() < 3) {
    throw std::invalid_argument("action grid not built");
  }
  market.validate();
  demand.validate();
}

int EnvConfig::observation_size() const {
  return scenario == Scenario::kA ? n_agents + 1 : 2;
}

double apply_price_update(double p_prev, double delta, UpdateRule rule) {
  if (rule == UpdateRule::kClamped) return std::max(p_prev + delta, 0.0);
  return softplus(p_prev + delta);
}

EnvState initial_state(const EnvConfig& config) {
  EnvState state;
  state.prices.assign(config.n_agents, 0.0);
  state.capitals.assign(config.n_agents, 0.0);
  state.forced.assign(config.n_agents, 0);
  state.step_index = 0;
  state.episode_index = -1;  // first reset lands on episode 0
  return state;
}

std::vector<Observation> reset(EnvState& state, const EnvConfig& config,
                               Rng& rng) {
  for (int i = 0; i < config.n_agents; ++i) {
    state.prices[i] = rng.uniform(config.init_price_low, config.init_price_high);
  }
  std::fill(state.forced.begin(), state.forced.end(), 0);
  state.step_index = 0;
  ++state.episode_index;
  std::vector<Observation> obs(config.n_agents);
  for (int i = 0; i < config.n_agents; ++i) obs[i] = observe(state, i, config);
  return obs;
}

StepResult step(EnvState& state, std::span<const int> actions,
                const EnvConfig& config) {
  if (static_cast<int>(actions.size()) != config.n_agents) {
    throw std::invalid_argument("one action per agent required");
  }
  for (int a : actions) {
    if (a < 0 || a >= config.action_grid.size()) {
      throw std::invalid_argument("action index out of range");
    }
  }
  StepResult result;
  result.interventions.assign(state.forced.begin(), state.forced.end());
  std::fill(state.forced.begin(), state.forced.end(), 0);

  for (int i = 0; i < config.n_agents; ++i) {
    state.prices[i] = apply_price_update(
        state.prices[i], config.action_grid.deltas[actions[i]],
        config.update_rule);
  }
  result.rewards = econ::step_rewards(state.prices, config.demand, config.market);
  for (int i = 0; i < config.n_agents; ++i) {
    state.capitals[i] += result.rewards[i];
  }
  ++state.step_index;

  result.observations.resize(config.n_agents);
  for (int i = 0; i < config.n_agents; ++i) {
    result.observations[i] = observe(state, i, config);
  }
  return result;
}

Observation observe(const EnvState& state, int agent_index,
                    const EnvConfig& config) {
  if (agent_index < 0 || agent_index >= static_cast<int>(state.prices.size())) {
    throw std::invalid_argument("agent index out of range");
  }
  const double scale = 1.0 / config.market.p_max;
  Observation obs;
  if (config.scenario == Scenario::kA) {
    obs.reserve(state.prices.size() + 1);
    for (double p : state.prices) obs.push_back(p * scale);
  } else {
    obs.reserve(2);
    obs.push_back(state.prices[agent_index] * scale);
  }
  obs.push_back(config.market.c * scale);
  return obs;
}

void force_price(EnvState& state, int agent_index, double price) {
  if (agent_index < 0 || agent_index >= static_cast<int>(state.prices.size())) {
    throw std::invalid_argument("agent index out of range");
  }
  if (!(price > 0.0)) {
    throw std::invalid_argument("forced price must be positive");
  }
  state.prices[agent_index] = price;
  state.forced[agent_index] = 1;
}

}  // namespace pricelab::env
