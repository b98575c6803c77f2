#pragma once

#include "plunet/network.hpp"

namespace plunet {

// Adam state for one training run. Moments are shaped like the model's
// gradients and start at zero with t = 0. Defaults are the standard
// beta1 = 0.9, beta2 = 0.999, epsilon = 1e-8, with epsilon added outside
// the square root:  p -= lr * m_hat / (sqrt(v_hat) + epsilon).
struct AdamState {
    double lr;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    long long t = 0;
    Gradients m;
    Gradients v;
};

AdamState adam_init(const Mlp& model, double lr);

// One Adam update, in place:
//   t += 1
//   m = beta1 m + (1 - beta1) g        v = beta2 v + (1 - beta2) g^2
//   m_hat = m / (1 - beta1^t)          v_hat = v / (1 - beta2^t)
//   p -= lr * m_hat / (sqrt(v_hat) + epsilon)
void adam_step(AdamState& state, Mlp& model, const Gradients& grads);

}  // namespace plunet
