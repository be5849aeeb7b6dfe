#include "cdt/layers.hpp"

#include "cdt/errors.hpp"

#include <algorithm>
#include <cmath>

namespace cdt::nn {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw ConfigError(msg);
}

} // namespace

Tensor cdt_conv1d_forward(const Tensor& input, const ConvParams& params) {
    require(input.rank() == 3, "conv input must be rank 3 (rows x time x channels)");
    require(params.weights.rank() == 3, "conv weights must be rank 3");
    require(input.dim(2) == params.in_channels(), "conv input channel mismatch");
    require(params.bias.size() == params.out_channels(), "conv bias size mismatch");

    const std::size_t rows = input.dim(0);
    const std::size_t len = input.dim(1);
    const std::size_t cin = params.in_channels();
    const std::size_t cout = params.out_channels();
    const std::size_t k = params.width();
    const std::size_t pad_left = (k - 1) / 2;

    Tensor out({rows, len, cout});
    for (std::size_t d = 0; d < rows; ++d) {
        for (std::size_t t = 0; t < len; ++t) {
            for (std::size_t co = 0; co < cout; ++co) {
                double acc = params.bias[co];
                for (std::size_t j = 0; j < k; ++j) {
                    const std::ptrdiff_t src = static_cast<std::ptrdiff_t>(t + j) -
                                               static_cast<std::ptrdiff_t>(pad_left);
                    if (src < 0 || src >= static_cast<std::ptrdiff_t>(len)) continue;
                    for (std::size_t ci = 0; ci < cin; ++ci) {
                        acc += params.weights.at(j, ci, co) *
                               input.at(d, static_cast<std::size_t>(src), ci);
                    }
                }
                out.at(d, t, co) = acc;
            }
        }
    }
    return out;
}

ConvGrads cdt_conv1d_backward(const Tensor& upstream, const Tensor& input,
                              const ConvParams& params) {
    require(upstream.rank() == 3 && input.rank() == 3, "conv backward expects rank-3 tensors");
    require(upstream.dim(0) == input.dim(0) && upstream.dim(1) == input.dim(1),
            "conv upstream shape mismatch");
    require(upstream.dim(2) == params.out_channels(), "conv upstream channel mismatch");

    const std::size_t rows = input.dim(0);
    const std::size_t len = input.dim(1);
    const std::size_t cin = params.in_channels();
    const std::size_t cout = params.out_channels();
    const std::size_t k = params.width();
    const std::size_t pad_left = (k - 1) / 2;

    ConvGrads g;
    g.input = Tensor(input.dims());
    g.weights = Tensor(params.weights.dims());
    g.bias = Tensor(params.bias.dims());

    for (std::size_t d = 0; d < rows; ++d) {
        for (std::size_t t = 0; t < len; ++t) {
            for (std::size_t co = 0; co < cout; ++co) {
                const double up = upstream.at(d, t, co);
                if (up == 0.0) continue;
                g.bias[co] += up;
                for (std::size_t j = 0; j < k; ++j) {
                    const std::ptrdiff_t src = static_cast<std::ptrdiff_t>(t + j) -
                                               static_cast<std::ptrdiff_t>(pad_left);
                    if (src < 0 || src >= static_cast<std::ptrdiff_t>(len)) continue;
                    for (std::size_t ci = 0; ci < cin; ++ci) {
                        g.weights.at(j, ci, co) +=
                            up * input.at(d, static_cast<std::size_t>(src), ci);
                        g.input.at(d, static_cast<std::size_t>(src), ci) +=
                            up * params.weights.at(j, ci, co);
                    }
                }
            }
        }
    }
    return g;
}

PoolResult maxpool1d(const Tensor& input, std::size_t window) {
    require(input.rank() == 3, "pool input must be rank 3");
    require(window >= 1, "pool window must be >= 1");

    const std::size_t rows = input.dim(0);
    const std::size_t len = input.dim(1);
    const std::size_t ch = input.dim(2);
    const std::size_t out_len = (len + window - 1) / window;

    PoolResult result;
    result.output = Tensor({rows, out_len, ch});
    result.argmax.resize(rows * out_len * ch);
    for (std::size_t d = 0; d < rows; ++d) {
        for (std::size_t t = 0; t < out_len; ++t) {
            const std::size_t begin = t * window;
            const std::size_t end = std::min(begin + window, len);
            for (std::size_t c = 0; c < ch; ++c) {
                std::size_t best = begin;
                double best_val = input.at(d, begin, c);
                for (std::size_t s = begin + 1; s < end; ++s) {
                    const double v = input.at(d, s, c);
                    if (v > best_val) { // strict: ties keep the lowest index
                        best_val = v;
                        best = s;
                    }
                }
                result.output.at(d, t, c) = best_val;
                result.argmax[(d * out_len + t) * ch + c] = best;
            }
        }
    }
    return result;
}

Tensor maxpool1d_backward(const Tensor& upstream, const PoolResult& cache,
                          const std::vector<std::size_t>& input_dims) {
    require(input_dims.size() == 3, "pool backward expects rank-3 input dims");
    require(upstream.same_shape(cache.output), "pool upstream shape mismatch");

    const std::size_t rows = upstream.dim(0);
    const std::size_t out_len = upstream.dim(1);
    const std::size_t ch = upstream.dim(2);

    Tensor grad(input_dims);
    for (std::size_t d = 0; d < rows; ++d) {
        for (std::size_t t = 0; t < out_len; ++t) {
            for (std::size_t c = 0; c < ch; ++c) {
                const std::size_t src = cache.argmax[(d * out_len + t) * ch + c];
                grad.at(d, src, c) += upstream.at(d, t, c);
            }
        }
    }
    return grad;
}

Tensor dense_forward(const Tensor& input, const DenseParams& params) {
    require(params.weights.rank() == 2, "dense weights must be rank 2");
    require(input.size() == params.weights.dim(1), "dense input size mismatch");
    require(params.bias.size() == params.weights.dim(0), "dense bias size mismatch");

    const std::size_t out_n = params.weights.dim(0);
    const std::size_t in_n = params.weights.dim(1);
    Tensor out({out_n});
    for (std::size_t o = 0; o < out_n; ++o) {
        double acc = params.bias[o];
        const double* w = params.weights.data() + o * in_n;
        for (std::size_t i = 0; i < in_n; ++i) acc += w[i] * input[i];
        out[o] = acc;
    }
    return out;
}

DenseGrads dense_backward(const Tensor& upstream, const Tensor& input,
                          const DenseParams& params) {
    require(upstream.size() == params.weights.dim(0), "dense upstream size mismatch");
    require(input.size() == params.weights.dim(1), "dense input size mismatch");

    const std::size_t out_n = params.weights.dim(0);
    const std::size_t in_n = params.weights.dim(1);

    DenseGrads g;
    g.input = Tensor({in_n});
    g.weights = Tensor(params.weights.dims());
    g.bias = Tensor(params.bias.dims());
    for (std::size_t o = 0; o < out_n; ++o) {
        const double up = upstream[o];
        g.bias[o] = up;
        double* gw = g.weights.data() + o * in_n;
        const double* w = params.weights.data() + o * in_n;
        for (std::size_t i = 0; i < in_n; ++i) {
            gw[i] = up * input[i];
            g.input[i] += up * w[i];
        }
    }
    return g;
}

Tensor relu(const Tensor& input) {
    Tensor out(input.dims());
    for (std::size_t i = 0; i < input.size(); ++i) out[i] = input[i] > 0.0 ? input[i] : 0.0;
    return out;
}

Tensor relu_backward(const Tensor& upstream, const Tensor& input) {
    Tensor grad(input.dims());
    for (std::size_t i = 0; i < input.size(); ++i) {
        grad[i] = input[i] > 0.0 ? upstream[i] : 0.0;
    }
    return grad;
}

DropoutResult dropout(const Tensor& input, double keep_prob, Rng& rng, bool training) {
    require(keep_prob > 0.0 && keep_prob <= 1.0, "dropout keep_prob must lie in (0, 1]");
    DropoutResult result;
    result.mask = Tensor(input.dims(), 1.0);
    if (training && keep_prob < 1.0) {
        const double scale = 1.0 / keep_prob;
        for (std::size_t i = 0; i < result.mask.size(); ++i) {
            result.mask[i] = rng.uniform() < keep_prob ? scale : 0.0;
        }
    }
    result.output = Tensor(input.dims());
    for (std::size_t i = 0; i < input.size(); ++i) {
        result.output[i] = input[i] * result.mask[i];
    }
    return result;
}

Tensor dropout_backward(const Tensor& upstream, const Tensor& mask) {
    Tensor grad(upstream.dims());
    for (std::size_t i = 0; i < upstream.size(); ++i) grad[i] = upstream[i] * mask[i];
    return grad;
}

CrossEntropyResult softmax_cross_entropy(const Tensor& logits, std::size_t label) {
    if (label >= logits.size()) throw ConfigError("cross entropy label out of range");
    check_finite(logits, "softmax logits");

    double max_logit = logits[0];
    for (std::size_t i = 1; i < logits.size(); ++i) max_logit = std::max(max_logit, logits[i]);
    double sum = 0.0;
    CrossEntropyResult r;
    r.probs = Tensor(logits.dims());
    for (std::size_t i = 0; i < logits.size(); ++i) {
        r.probs[i] = std::exp(logits[i] - max_logit);
        sum += r.probs[i];
    }
    for (std::size_t i = 0; i < logits.size(); ++i) r.probs[i] /= sum;
    r.loss = -(logits[label] - max_logit - std::log(sum));
    r.logits_grad = r.probs;
    r.logits_grad[label] -= 1.0;
    return r;
}

Tensor glorot_init(const std::vector<std::size_t>& dims, Rng& rng) {
    std::size_t fan_in = 0, fan_out = 0;
    if (dims.size() == 3) {
        fan_in = dims[0] * dims[1];
        fan_out = dims[0] * dims[2];
    } else if (dims.size() == 2) {
        fan_in = dims[1];
        fan_out = dims[0];
    } else if (dims.size() == 1) {
        fan_in = fan_out = dims[0];
    } else {
        throw ConfigError("glorot_init: unsupported tensor rank");
    }
    const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    Tensor t(dims);
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = rng.uniform(-limit, limit);
    return t;
}

} // namespace cdt::nn
