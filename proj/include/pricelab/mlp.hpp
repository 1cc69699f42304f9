#pragma once

#include <span>
#include <vector>

#include "pricelab/rng.hpp"

namespace pricelab::learn {

enum class Activation { kRelu, kTanh };

// Fully connected network description. Parameters live in one flat vector
// with a fixed layout: for each layer transition l, the weight matrix
// row-major [layers[l+1] x layers[l]] followed by the bias [layers[l+1]].
// Hidden layers use the configured activation; the output layer is linear.
struct MlpSpec {
  std::vector<int> layers;
  Activation hidden = Activation::kTanh;

  int param_count() const;
  int input_size() const { return layers.front(); }
  int output_size() const { return layers.back(); }
};

// Post-activation values of every non-input layer, saved by the forward
// pass and consumed by the backward pass.
struct ForwardCache {
  std::vector<double> acts;
};

// Xavier-uniform weights, zero biases.
std::vector<double> init_params(const MlpSpec& spec, Rng& rng);

void mlp_forward(const MlpSpec& spec, std::span<const double> params,
                 std::span<const double> input, std::span<double> output,
                 ForwardCache* cache = nullptr);

// Reverse-mode pass for one sample. Writes (not accumulates) the exact
// gradient of the scalar loss whose output sensitivity is d_output into
// grad, which must have param_count() entries.
void mlp_backward(const MlpSpec& spec, std::span<const double> params,
                  std::span<const double> input, const ForwardCache& cache,
                  std::span<const double> d_output, std::span<double> grad);

// Adam optimizer state over a flat parameter vector.
struct AdamState {
  std::vector<double> m;
  std::vector<double> v;
  long step = 0;
  double learning_rate;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  AdamState(std::size_t n, double lr)
      : m(n, 0.0), v(n, 0.0), learning_rate(lr) {}
};

void adam_update(std::span<double> params, std::span<const double> grad,
                 AdamState& state);

// A differentiable scalar objective over a flat parameter vector. The
// training losses implement this; tests check each implementation against
// central finite differences of value().
class Objective {
 public:
  virtual ~Objective() = default;
  virtual double value(std::span<const double> params) const = 0;
  // Writes the exact gradient into grad and returns the value.
  virtual double value_and_grad(std::span<const double> params,
                                std::span<double> grad) const = 0;
};

}  // namespace pricelab::learn
