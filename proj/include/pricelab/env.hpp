#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pricelab/econ.hpp"
#include "pricelab/rng.hpp"

namespace pricelab::env {

enum class Scenario { kA, kB };

// How a chosen price adjustment turns into the next price.
// kSoftplus is the literal update rule p' = softplus(p + delta); kClamped
// (p' = max(p + delta, 0)) is kept as a sensitivity variant because the
// softplus rule has no fixed point at market-relevant prices.
enum class UpdateRule { kSoftplus, kClamped };

// Odd-length price-adjustment menu, symmetric about zero, with magnitudes
// geometrically spaced between 0.01 and 2.
struct ActionGrid {
  std::vector<double> deltas;

  int size() const { return static_cast<int>(deltas.size()); }
};

ActionGrid build_action_grid(int size);

struct EnvConfig {
  int n_agents = 3;
  Scenario scenario = Scenario::kA;
  ActionGrid action_grid;
  double init_price_low = 0.5;
  double init_price_high = 1.5;
  int steps_per_episode = 365;
  UpdateRule update_rule = UpdateRule::kSoftplus;
  econ::MarketParams market;
  econ::DemandSpec demand;

  void validate() const;
  int observation_size() const;
};

struct EnvState {
  std::vector<double> prices;
  std::vector<double> capitals;
  std::vector<std::uint8_t> forced;  // price overwritten since last step
  int step_index = 0;
  long episode_index = 0;
};

// Normalized per-agent view of the market; length n_agents+1 in Scenario A
// (all prices + cost) and 2 in Scenario B (own price + cost).
using Observation = std::vector<double>;

struct StepResult {
  std::vector<double> rewards;
  std::vector<Observation> observations;
  std::vector<std::uint8_t> interventions;  // forced-price flags consumed
};

// Overflow-safe softplus price update; kClamped variant clips at zero.
double apply_price_update(double p_prev, double delta, UpdateRule rule);

// Run-start state: zero capital ledger, no prices drawn yet.
EnvState initial_state(const EnvConfig& config);

// Episode start: redraw prices uniformly from the init interval, reset the
// step counter, keep the cumulative capital ledger.
std::vector<Observation> reset(EnvState& state, const EnvConfig& config,
                               Rng& rng);

// Simultaneous move: every price updates from the same pre-step state, then
// rewards are computed on the new prices and added to the capital ledger.
StepResult step(EnvState& state, std::span<const int> actions,
                const EnvConfig& config);

Observation observe(const EnvState& state, int agent_index,
                    const EnvConfig& config);

// Deviation probe: overwrite one agent's price ahead of the next step. The
// overwrite is reported through StepResult::interventions.
void force_price(EnvState& state, int agent_index, double price);

}  // namespace pricelab::env
