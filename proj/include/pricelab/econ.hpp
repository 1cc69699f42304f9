#pragma once

#include <span>
#include <vector>

namespace pricelab::econ {

// How the per-step reward scales demand into sold units.
//
// kQuantityAtMinPrice evaluates the market demand curve at the cheapest
// offered price and splits that quantity by the selling probabilities; it
// reproduces the published worked profit examples. kLiteralM multiplies the
// selling probability by the full consumer count instead.
enum class RewardModel { kQuantityAtMinPrice, kLiteralM };

struct MarketParams {
  int m = 200;                // consumer count
  double p_max = 2.0;         // maximum market price
  double c = 1.0;             // unit cost
  double grid_unit = 0.01;    // smallest price increment for benchmark scans
  RewardModel reward_model = RewardModel::kQuantityAtMinPrice;

  void validate() const;      // throws std::invalid_argument
};

// Demand blend configuration. The background-knowledge slot currently holds
// the built-in {Bertrand, roulette} pair; mu interpolates between them.
struct DemandSpec {
  double mu = 0.5;            // 1 = pure Bertrand, 0 = pure roulette
  double tie_tolerance = 1e-9;

  void validate() const;
};

// Per-seller selling probabilities. Sums to 1 whenever at least one price is
// strictly below p_max; all-zero when nobody prices below p_max.
using DemandVector = std::vector<double>;

struct Benchmarks {
  double mp_price = 0;
  double mp_quantity = 0;
  double mp_profit = 0;
  double cb_price = 0;
  double cb_quantity = 0;
  double cb_total_profit = 0;
};

// Winner-takes-all demand: cheapest sellers split the market evenly, using
// spec.tie_tolerance for price equality.
DemandVector bertrand_demand(std::span<const double> prices,
                             const DemandSpec& spec);

// Roulette-wheel demand: weight is the price headroom below p_max, clamped
// at zero. Returns the all-zero vector when no seller prices below p_max.
DemandVector roulette_demand(std::span<const double> prices,
                             const MarketParams& params);

// mu * bertrand + (1 - mu) * roulette, entrywise.
DemandVector blend_demand(std::span<const double> prices,
                          const DemandSpec& spec, const MarketParams& params);

// Linear market demand curve q(p) = m * (1 - p / p_max), clamped to [0, m].
double market_quantity(double p_ref, const MarketParams& params);

// Per-seller step rewards for one simultaneous price vector.
std::vector<double> step_rewards(std::span<const double> prices,
                                 const DemandSpec& spec,
                                 const MarketParams& params);

// Brute-force scan of the price grid for the monopoly optimum plus the
// competitive benchmark one grid unit above cost.
Benchmarks compute_benchmarks(const MarketParams& params);

}  // namespace pricelab::econ
