#include "pricelab/mlp.hpp"

#include <cmath>
#include <stdexcept>

namespace pricelab::learn {

int MlpSpec::param_count() const {
  int count = 0;
  for (std::size_t l = 0; l + 1 < layers.size(); ++l) {
    count += (layers[l] + 1) * layers[l + 1];
  }
  return count;
}

std::vector<double> init_params(const MlpSpec& spec, Rng& rng) {
  std::vector<double> params(spec.param_count());
  std::size_t offset = 0;
  for (std::size_t l = 0; l + 1 < spec.layers.size(); ++l) {
    const int fan_in = spec.layers[l];
    const int fan_out = spec.layers[l + 1];
    const double bound = std::sqrt(6.0 / (fan_in + fan_out));
    for (int i = 0; i < fan_in * fan_out; ++i) {
      params[offset + i] = rng.uniform(-bound, bound);
    }
    offset += static_cast<std::size_t>(fan_in) * fan_out;
    offset += fan_out;  // biases stay zero
  }
  return params;
}

void mlp_forward(const MlpSpec& spec, std::span<const double> params,
                 std::span<const double> input, std::span<double> output,
                 ForwardCache* cache) {
  if (static_cast<int>(input.size()) != spec.input_size() ||
      static_cast<int>(output.size()) != spec.output_size()) {
    throw std::invalid_argument("mlp_forward: shape mismatch");
  }
  const std::size_t n_trans = spec.layers.size() - 1;
  std::size_t acts_size = 0;
  for (std::size_t l = 1; l < spec.layers.size(); ++l) acts_size += spec.layers[l];
  std::vector<double> local;
  double* acts;
  if (cache != nullptr) {
    cache->acts.resize(acts_size);
    acts = cache->acts.data();
  } else {
    local.resize(acts_size);
    acts = local.data();
  }

  const double* in = input.data();
  std::size_t p = 0;
  std::size_t a = 0;
  for (std::size_t l = 0; l < n_trans; ++l) {
    const int fan_in = spec.layers[l];
    const int fan_out = spec.layers[l + 1];
    const double* w = params.data() + p;
    const double* b = w + static_cast<std::size_t>(fan_in) * fan_out;
    double* out = acts + a;
    for (int j = 0; j < fan_out; ++j) {
      double sum = b[j];
      const double* row = w + static_cast<std::size_t>(j) * fan_in;
      for (int k = 0; k < fan_in; ++k) sum += row[k] * in[k];
      out[j] = sum;
    }
    if (l + 1 < n_trans) {
      if (spec.hidden == Activation::kRelu) {
        for (int j = 0; j < fan_out; ++j) out[j] = out[j] > 0.0 ? out[j] : 0.0;
      } else {
        for (int j = 0; j < fan_out; ++j) out[j] = std::tanh(out[j]);
      }
    }
    in = out;
    p += static_cast<std::size_t>(fan_in + 1) * fan_out;
    a += fan_out;
  }
  std::copy(acts + acts_size - spec.output_size(), acts + acts_size,
            output.begin());
}

void mlp_backward(const MlpSpec& spec, std::span<const double> params,
                  std::span<const double> input, const ForwardCache& cache,
                  std::span<const double> d_output, std::span<double> grad) {
  const std::size_t n_trans = spec.layers.size() - 1;
  // delta holds dL/d(pre-activation output of the current layer); for the
  // hidden layers the activation derivative is recovered from the cached
  // post-activation value (valid for both ReLU and tanh).
  std::vector<double> delta(d_output.begin(), d_output.end());
  std::vector<double> delta_prev;

  // Offsets of each transition's parameters and activations.
  std::vector<std::size_t> p_off(n_trans), a_off(n_trans);
  std::size_t p = 0, a = 0;
  for (std::size_t l = 0; l < n_trans; ++l) {
    p_off[l] = p;
    a_off[l] = a;
    p += static_cast<std::size_t>(spec.layers[l] + 1) * spec.layers[l + 1];
    a += spec.layers[l + 1];
  }

  for (std::size_t li = n_trans; li-- > 0;) {
    const int fan_in = spec.layers[li];
    const int fan_out = spec.layers[li + 1];
    const double* w = params.data() + p_off[li];
    const double* prev_act =
        li == 0 ? input.data() : cache.acts.data() + a_off[li - 1];
    double* gw = grad.data() + p_off[li];
    double* gb = gw + static_cast<std::size_t>(fan_in) * fan_out;

    for (int j = 0; j < fan_out; ++j) {
      const double dj = delta[j];
      double* grow = gw + static_cast<std::size_t>(j) * fan_in;
      for (int k = 0; k < fan_in; ++k) grow[k] = dj * prev_act[k];
      gb[j] = dj;
    }

    if (li == 0) break;
    delta_prev.assign(fan_in, 0.0);
    for (int j = 0; j < fan_out; ++j) {
      const double dj = delta[j];
      const double* row = w + static_cast<std::size_t>(j) * fan_in;
      for (int k = 0; k < fan_in; ++k) delta_prev[k] += dj * row[k];
    }
    // Activation derivative of the previous (hidden) layer.
    const double* act = cache.acts.data() + a_off[li - 1];
    if (spec.hidden == Activation::kRelu) {
      for (int k = 0; k < fan_in; ++k) {
        if (act[k] <= 0.0) delta_prev[k] = 0.0;
      }
    } else {
      for (int k = 0; k < fan_in; ++k) {
        delta_prev[k] *= 1.0 - act[k] * act[k];
      }
    }
    delta.swap(delta_prev);
  }
}

void adam_update(std::span<double> params, std::span<const double> grad,
                 AdamState& state) {
  if (params.size() != grad.size() || params.size() != state.m.size()) {
    throw std::invalid_argument("adam_update: shape mismatch");
  }
  ++state.step;
  const double b1 = state.beta1;
  const double b2 = state.beta2;
  const double corr1 = 1.0 - std::pow(b1, static_cast<double>(state.step));
  const double corr2 = 1.0 - std::pow(b2, static_cast<double>(state.step));
  for (std::size_t i = 0; i < params.size(); ++i) {
    state.m[i] = b1 * state.m[i] + (1.0 - b1) * grad[i];
    state.v[i] = b2 * state.v[i] + (1.0 - b2) * grad[i] * grad[i];
    const double m_hat = state.m[i] / corr1;
    const double v_hat = state.v[i] / corr2;
    params[i] -= state.learning_rate * m_hat / (std::sqrt(v_hat) + state.epsilon);
  }
}

}  // namespace pricelab::learn
