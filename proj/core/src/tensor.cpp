#include "cdt/tensor.hpp"

#include "cdt/errors.hpp"

#include <cmath>
#include <string>

namespace cdt::nn {

namespace {
std::size_t product(const std::vector<std::size_t>& dims) {
    std::size_t n = 1;
    for (std::size_t d : dims) n *= d;
    return n;
}
} // namespace

Tensor::Tensor(std::vector<std::size_t> dims, double fill)
    : dims_(std::move(dims)), values_(product(dims_), fill) {}

Tensor Tensor::from(std::vector<std::size_t> dims, std::vector<double> values) {
    if (product(dims) != values.size()) {
        throw ConfigError("tensor shape/value count mismatch");
    }
    Tensor t;
    t.dims_ = std::move(dims);
    t.values_ = std::move(values);
    return t;
}

void Tensor::fill(double v) {
    for (double& x : values_) x = v;
}

bool Tensor::all_finite() const {
    for (double x : values_) {
        if (!std::isfinite(x)) return false;
    }
    return true;
}

void check_finite(const Tensor& t, const char* where) {
    if (!t.all_finite()) {
        throw NumericError(std::string("non-finite value at ") + where);
    }
}

} // namespace cdt::nn
