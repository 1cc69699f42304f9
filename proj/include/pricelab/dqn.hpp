#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "pricelab/mlp.hpp"
#include "pricelab/rng.hpp"

namespace pricelab::learn {

struct DqnHyperparams {
  double gamma = 0.99;
  double learning_rate = 1e-4;
  int batch_size = 32;
  int target_sync_interval = 500;  // gradient steps between full copies
  int train_interval = 4;          // environment steps between updates
  int warmup_steps = 1000;         // environment steps before training
  double epsilon_start = 1.0;
  double epsilon_end = 0.05;
  double epsilon_decay_fraction = 0.10;  // fraction of total run steps
  int replay_capacity = 50000;
  std::vector<int> hidden_sizes = {64, 64};
};

// Ring buffer of transitions in flat arrays. Logical index 0 is the oldest
// stored transition; pushes past capacity evict oldest first.
class ReplayBuffer {
 public:
  ReplayBuffer(std::size_t capacity, int obs_dim);

  void push(std::span<const double> obs, int action, double reward,
            std::span<const double> next_obs, bool truncated);

  std::size_t size() const { return full_ ? capacity_ : next_; }
  std::size_t capacity() const { return capacity_; }

  std::span<const double> obs_row(std::size_t i) const;
  std::span<const double> next_obs_row(std::size_t i) const;
  int action(std::size_t i) const { return actions_[physical(i)]; }
  double reward(std::size_t i) const { return rewards_[physical(i)]; }
  bool truncated(std::size_t i) const { return truncated_[physical(i)] != 0; }

  // Uniform sample without replacement, returned sorted so downstream
  // accumulation order is fixed.
  std::vector<std::size_t> sample_indices(std::size_t batch, Rng& rng) const;

 private:
  std::size_t physical(std::size_t logical) const {
    return full_ ? (next_ + logical) % capacity_ : logical;
  }

  std::size_t capacity_;
  int obs_dim_;
  std::vector<double> obs_, next_obs_;
  std::vector<int> actions_;
  std::vector<double> rewards_;
  std::vector<std::uint8_t> truncated_;
  std::size_t next_ = 0;
  bool full_ = false;
};

// Epsilon-greedy over a Q row: argmax (lowest index on ties) with
// probability 1 - epsilon, otherwise uniform.
int dqn_select_action(std::span<const double> q_values, double epsilon,
                      Rng& rng);

// One-step TD targets y = r + gamma * max_a Q_target(s', a). Episode ends
// are truncations of an infinite-horizon game, so the bootstrap is never
// zeroed.
std::vector<double> dqn_td_targets(const MlpSpec& spec,
                                   std::span<const double> target_params,
                                   int obs_dim,
                                   std::span<const double> next_obs,
                                   std::span<const double> rewards,
                                   double gamma);

// Mean Huber loss (delta = 1) between Q(s, a) and fixed targets over a
// staged batch. The gradient kernel runs per-sample backward passes in
// parallel and reduces per-sample slots in a fixed order, so results are
// bitwise identical to the serial reference for any thread count.
class DqnLoss final : public Objective {
 public:
  DqnLoss(const MlpSpec& spec, bool parallel) : spec_(spec), parallel_(parallel) {}

  void set_batch(int obs_dim, std::span<const double> obs,
                 std::span<const int> actions,
                 std::span<const double> targets);

  double value(std::span<const double> params) const override;
  double value_and_grad(std::span<const double> params,
                        std::span<double> grad) const override;

 private:
  double grad_serial(std::span<const double> params,
                     std::span<double> grad) const;
  double grad_parallel(std::span<const double> params,
                       std::span<double> grad) const;

  MlpSpec spec_;
  bool parallel_;
  int obs_dim_ = 0;
  std::span<const double> obs_;
  std::span<const int> actions_;
  std::span<const double> targets_;
  mutable std::vector<double> slots_;
  mutable std::vector<double> losses_;
};

// One independent Q-learner: online and target network, replay buffer,
// epsilon schedule, and its own random stream.
class DqnAgent {
 public:
  DqnAgent(int obs_dim, int n_actions, const DqnHyperparams& hp,
           std::uint64_t seed, long total_env_steps);

  int act(std::span<const double> obs);
  void record(std::span<const double> obs, int action, double reward,
              std::span<const double> next_obs, bool truncated);
  // Runs one gradient step when the cadence and warm-up allow it.
  std::optional<double> train_if_due();

  double current_epsilon() const;
  std::span<const double> online_params() const { return online_; }
  std::span<const double> target_params() const { return target_; }
  const ReplayBuffer& buffer() const { return buffer_; }
  long gradient_steps() const { return gradient_steps_; }

 private:
  DqnHyperparams hp_;
  MlpSpec spec_;
  std::vector<double> online_, target_;
  AdamState opt_;
  ReplayBuffer buffer_;
  Rng rng_;
  DqnLoss loss_;
  long env_steps_ = 0;
  long gradient_steps_ = 0;
  long decay_steps_;
  int obs_dim_;
  int n_actions_;
  // staging for one minibatch
  std::vector<double> batch_obs_, batch_next_obs_, batch_rewards_;
  std::vector<int> batch_actions_;
  std::vector<double> q_row_;
};

}  // namespace pricelab::learn
