#include "pricelab/econ.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace pricelab::econ {

namespace {

void check_prices(std::span<const double> prices) {
  if (prices.empty()) {
    throw std::invalid_argument("price vector must not be empty");
  }
  for (double p : prices) {
    if (!std::isfinite(p)) {
      throw std::invalid_argument("prices must be finite");
    }
    if (p < 0.0) {
      throw std::invalid_argument("prices must be non-negative");
    }
  }
}

}  // namespace

void MarketParams::validate() const {
  if (m < 1) throw std::invalid_argument("consumer count m must be >= 1");
  if (!(p_max > c) || !(c > 0.0)) {
    throw std::invalid_argument("require p_max > c > 0");
  }
  if (!(grid_unit > 0.0)) {
    throw std::invalid_argument("grid_unit must be positive");
  }
}

void DemandSpec::validate() const {
  if (!(mu >= 0.0 && mu <= 1.0)) {
    throw std::invalid_argument("mu must lie in [0, 1]");
  }
  if (!(tie_tolerance >= 0.0)) {
    throw std::invalid_argument("tie_tolerance must be non-negative");
  }
}

DemandVector bertrand_demand(std::span<const double> prices,
                             const DemandSpec& spec) {
  check_prices(prices);
  const double p_min = *std::min_element(prices.begin(), prices.end());
  int winners = 0;
  for (double p : prices) {
    if (p - p_min <= spec.tie_tolerance) ++winners;
  }
  DemandVector d(prices.size(), 0.0);
  const double share = 1.0 / winners;
  for (std::size_t i = 0; i < prices.size(); ++i) {
    if (prices[i] - p_min <= spec.tie_tolerance) d[i] = share;
  }
  return d;
}

DemandVector roulette_demand(std::span<const double> prices,
                             const MarketParams& params) {
  check_prices(prices);
  DemandVector w(prices.size());
  double total = 0.0;
  for (std::size_t i = 0; i < prices.size(); ++i) {
    w[i] = std::max(params.p_max - prices[i], 0.0);
    total += w[i];
  }
  if (total == 0.0) return DemandVector(prices.size(), 0.0);
  for (double& x : w) x /= total;
  return w;
}

DemandVector blend_demand(std::span<const double> prices,
                          const DemandSpec& spec, const MarketParams& params) {
  spec.validate();
  const DemandVector b = bertrand_demand(prices, spec);
  const DemandVector r = roulette_demand(prices, params);
  DemandVector d(prices.size());
  for (std::size_t i = 0; i < prices.size(); ++i) {
    d[i] = spec.mu * b[i] + (1.0 - spec.mu) * r[i];
  }
  return d;
}

double market_quantity(double p_ref, const MarketParams& params) {
  if (!(p_ref >= 0.0)) {
    throw std::invalid_argument("reference price must be non-negative");
  }
  const double q = params.m * (1.0 - p_ref / params.p_max);
  return std::clamp(q, 0.0, static_cast<double>(params.m));
}

std::vector<double> step_rewards(std::span<const double> prices,
                                 const DemandSpec& spec,
                                 const MarketParams& params) {
  const DemandVector d = blend_demand(prices, spec, params);
  double quantity;
  if (params.reward_model == RewardModel::kQuantityAtMinPrice) {
    const double p_min = *std::min_element(prices.begin(), prices.end());
    quantity = market_quantity(p_min, params);
  } else {
    quantity = static_cast<double>(params.m);
  }
  std::vector<double> rewards(prices.size());
  for (std::size_t i = 0; i < prices.size(); ++i) {
    rewards[i] = quantity * d[i] * (prices[i] - params.c);
  }
  return rewards;
}

Benchmarks compute_benchmarks(const MarketParams& params) {
  params.validate();
  Benchmarks bench;
  bench.cb_price = params.c + params.grid_unit;
  bench.cb_quantity = market_quantity(bench.cb_price, params);
  bench.cb_total_profit = (bench.cb_price - params.c) * bench.cb_quantity;

  // Monopoly scan over grid prices strictly above cost; lowest price wins
  // ties. A price at or below cost can never beat a positive-margin point.
  const long steps =
      static_cast<long>(std::floor(params.p_max / params.grid_unit + 1e-9));
  bool found = false;
  for (long k = 0; k <= steps; ++k) {
    const double p = static_cast<double>(k) * params.grid_unit;
    if (p <= params.c) continue;
    const double profit = (p - params.c) * market_quantity(p, params);
    if (!found || profit > bench.mp_profit) {
      found = true;
      bench.mp_price = p;
      bench.mp_quantity = market_quantity(p, params);
      bench.mp_profit = profit;
    }
  }
  if (!found) {
    bench.mp_price = bench.cb_price;
    bench.mp_quantity = bench.cb_quantity;
    bench.mp_profit = bench.cb_total_profit;
  }
  return bench;
}

}  // namespace pricelab::econ
