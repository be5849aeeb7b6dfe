#include "cdt/grad_check.hpp"

#include "cdt/errors.hpp"

#include <algorithm>
#include <cmath>

namespace cdt::nn {

GradCheckResult grad_check(const std::function<double()>& objective,
                           std::span<const std::pair<Tensor*, const Tensor*>> checks,
                           double eps) {
    if (eps <= 0.0) throw ConfigError("grad_check eps must be > 0");

    double scale = 0.0;
    for (const auto& [param, analytic] : checks) {
        if (!param->same_shape(*analytic)) {
            throw ConfigError("grad_check: analytic gradient shape mismatch");
        }
        for (std::size_t i = 0; i < analytic->size(); ++i) {
            scale = std::max(scale, std::abs((*analytic)[i]));
        }
    }
    scale = std::max(scale, 1e-8);

    GradCheckResult result;
    for (const auto& [param, analytic] : checks) {
        for (std::size_t i = 0; i < param->size(); ++i) {
            const double saved = (*param)[i];
            (*param)[i] = saved + eps;
            const double f_plus = objective();
            (*param)[i] = saved - eps;
            const double f_minus = objective();
            (*param)[i] = saved;

            const double numeric = (f_plus - f_minus) / (2.0 * eps);
            const double a = (*analytic)[i];
            const double denom = std::max({std::abs(a), std::abs(numeric), scale});
            result.max_rel_error = std::max(result.max_rel_error, std::abs(a - numeric) / denom);
            ++result.checked;
        }
    }
    return result;
}

} // namespace cdt::nn
