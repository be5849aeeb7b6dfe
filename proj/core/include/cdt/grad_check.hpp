#pragma once

#include "cdt/tensor.hpp"

#include <functional>
#include <span>
#include <utility>

namespace cdt::nn {

struct GradCheckResult {
    double max_rel_error = 0.0;
    std::size_t checked = 0;
};

// Central-difference verification of analytic gradients.
//
// `objective` evaluates a scalar function of the current contents of the
// checked tensors. Each entry pairs a tensor to perturb with the analytic
// gradient claimed for it. Every element is perturbed by +/- eps and the
// numeric slope compared to the analytic one. The per-element error is
// measured relative to max(|analytic|, |numeric|, overall gradient scale),
// which keeps near-zero components from being judged against pure roundoff.
GradCheckResult grad_check(const std::function<double()>& objective,
                           std::span<const std::pair<Tensor*, const Tensor*>> checks,
                           double eps = 1e-5);

} // namespace cdt::nn
