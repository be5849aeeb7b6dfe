#pragma once

#include <cstddef>
#include <vector>

namespace cdt::nn {

// Dense n-dimensional double array, row-major. Shapes used here are rank-3
// (rows x time x channels) for conv/pool activations, rank-2 (out x in) for
// dense weights, and rank-1 for vectors and biases.
class Tensor {
public:
    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> dims, double fill = 0.0);
    static Tensor from(std::vector<std::size_t> dims, std::vector<double> values);

    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t rank() const { return dims_.size(); }
    std::size_t size() const { return values_.size(); }
    std::size_t dim(std::size_t i) const { return dims_[i]; }

    double* data() { return values_.data(); }
    const double* data() const { return values_.data(); }
    double& operator[](std::size_t i) { return values_[i]; }
    double operator[](std::size_t i) const { return values_[i]; }

    // rank-3 access: (i, j, k) -> values[(i*dims[1] + j)*dims[2] + k]
    double& at(std::size_t i, std::size_t j, std::size_t k) {
        return values_[(i * dims_[1] + j) * dims_[2] + k];
    }
    double at(std::size_t i, std::size_t j, std::size_t k) const {
        return values_[(i * dims_[1] + j) * dims_[2] + k];
    }

    bool same_shape(const Tensor& other) const { return dims_ == other.dims_; }
    void fill(double v);
    bool all_finite() const;

    bool operator==(const Tensor&) const = default;

private:
    std::vector<std::size_t> dims_;
    std::vector<double> values_;
};

// Throws NumericError naming `where` when t contains NaN/Inf. Applied at
// layer boundaries.
void check_finite(const Tensor& t, const char* where);

} // namespace cdt::nn
