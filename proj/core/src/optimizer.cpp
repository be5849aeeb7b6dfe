#include "cdt/optimizer.hpp"

#include "cdt/errors.hpp"

#include <cmath>

namespace cdt::nn {

AdamState make_adam_state(const Tensor& param) {
    AdamState s;
    s.m = Tensor(param.dims());
    s.v = Tensor(param.dims());
    return s;
}

void adam_step(Tensor& param, const Tensor& grad, AdamState& state, double lr, double l2,
               const AdamConfig& cfg) {
    if (!param.same_shape(grad) || !param.same_shape(state.m)) {
        throw ConfigError("adam_step shape mismatch");
    }
    if (lr <= 0.0) throw ConfigError("adam learning rate must be > 0");

    ++state.step;
    const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(state.step));
    const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(state.step));
    for (std::size_t i = 0; i < param.size(); ++i) {
        const double g = grad[i] + l2 * param[i];
        state.m[i] = cfg.beta1 * state.m[i] + (1.0 - cfg.beta1) * g;
        state.v[i] = cfg.beta2 * state.v[i] + (1.0 - cfg.beta2) * g * g;
        const double m_hat = state.m[i] / bc1;
        const double v_hat = state.v[i] / bc2;
        param[i] -= lr * m_hat / (std::sqrt(v_hat) + cfg.epsilon);
    }
}

} // namespace cdt::nn
