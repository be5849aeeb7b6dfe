#pragma once

#include "cdt/tensor.hpp"

#include <cstdint>

namespace cdt::nn {

struct AdamConfig {
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

// Per-parameter-tensor moment accumulators.
struct AdamState {
    Tensor m; // first moment
    Tensor v; // second moment
    std::uint64_t step = 0;
};

AdamState make_adam_state(const Tensor& param);

// Bias-corrected Adam update. The gradient is augmented by l2 * param
// (coupled L2 weight decay) before entering the moment estimates.
void adam_step(Tensor& param, const Tensor& grad, AdamState& state, double lr, double l2,
               const AdamConfig& cfg = {});

} // namespace cdt::nn
