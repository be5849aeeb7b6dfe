#pragma once

#include "cdt/rng.hpp"
#include "cdt/tensor.hpp"

#include <cstddef>
#include <vector>

namespace cdt::nn {

// ---------------------------------------------------------------------------
// Cross-data-type 1-D convolution
//
// One set of 1-D kernels slides along the time axis of EVERY data-type row
// with stride 1; rows never mix inside a kernel application, and all rows
// share the same weights. Same-length zero padding keeps the time axis
// fixed so only pooling shrinks it: pad_left = (k-1)/2, pad_right the rest.
// ---------------------------------------------------------------------------

struct ConvParams {
    Tensor weights; // {k, in_channels, out_channels}
    Tensor bias;    // {out_channels}

    std::size_t width() const { return weights.dim(0); }
    std::size_t in_channels() const { return weights.dim(1); }
    std::size_t out_channels() const { return weights.dim(2); }
};

// input {D, L, Cin} -> output {D, L, Cout}
Tensor cdt_conv1d_forward(const Tensor& input, const ConvParams& params);

struct ConvGrads {
    Tensor input;
    Tensor weights;
    Tensor bias;
};

// Exact analytic gradients of the forward map.
ConvGrads cdt_conv1d_backward(const Tensor& upstream, const Tensor& input,
                              const ConvParams& params);

// ---------------------------------------------------------------------------
// Non-overlapping max pooling along the time axis (stride == window).
// ---------------------------------------------------------------------------

struct PoolResult {
    Tensor output;                  // {D, ceil(L/w), C}
    std::vector<std::size_t> argmax; // winning time index per output cell; ties -> lowest
};

PoolResult maxpool1d(const Tensor& input, std::size_t window);

Tensor maxpool1d_backward(const Tensor& upstream, const PoolResult& cache,
                          const std::vector<std::size_t>& input_dims);

// ---------------------------------------------------------------------------
// Dense (affine) layer over flat vectors.
// ---------------------------------------------------------------------------

struct DenseParams {
    Tensor weights; // {out, in}
    Tensor bias;    // {out}
};

Tensor dense_forward(const Tensor& input, const DenseParams& params);

struct DenseGrads {
    Tensor input;
    Tensor weights;
    Tensor bias;
};

DenseGrads dense_backward(const Tensor& upstream, const Tensor& input,
                          const DenseParams& params);

// ---------------------------------------------------------------------------
// Activations, dropout, loss
// ---------------------------------------------------------------------------

Tensor relu(const Tensor& input);
Tensor relu_backward(const Tensor& upstream, const Tensor& input);

// Inverted dropout: kept units scale by 1/keep_prob so evaluation needs no
// rescaling. Consumes RNG only when training is true.
struct DropoutResult {
    Tensor output;
    Tensor mask; // per-element factor (0 or 1/keep_prob); identity mask when not training
};

DropoutResult dropout(const Tensor& input, double keep_prob, Rng& rng, bool training);
Tensor dropout_backward(const Tensor& upstream, const Tensor& mask);

struct CrossEntropyResult {
    double loss = 0.0;
    Tensor probs;       // softmax(logits), sums to 1 within 1e-12
    Tensor logits_grad; // probs - one_hot(label)
};

// loss = -log softmax(logits)[label], computed via the log-sum-exp shift.
CrossEntropyResult softmax_cross_entropy(const Tensor& logits, std::size_t label);

// ---------------------------------------------------------------------------
// Initialization
// ---------------------------------------------------------------------------

// Uniform on +/- sqrt(6 / (fan_in + fan_out)). Conv weights {k,Cin,Cout}
// use fan_in = k*Cin, fan_out = k*Cout; dense weights {out,in} use
// fan_in = in, fan_out = out.
Tensor glorot_init(const std::vector<std::size_t>& dims, Rng& rng);

} // namespace cdt::nn
