#pragma once

#include <functional>
#include <vector>

#include "reachrl/tensor.hpp"

namespace reachrl::ad {

using VarId = int;

/// Reverse-mode autodiff tape. Operations evaluate eagerly and append one
/// record each, so records are in topological order by construction; a
/// backward pass walks the records exactly once in reverse.
///
/// Gradients are only tracked through nodes whose inputs require them, so a
/// tape built from constant leaves doubles as a plain evaluator.
class Tape {
  public:
    /// Leaf holding an externally owned value (copied in).
    VarId leaf(Tensor value, bool requires_grad);
    VarId constant(Tensor value) { return leaf(std::move(value), false); }

    // Elementwise arithmetic. add/sub/mul/div require equal shapes, except
    // add which also broadcasts a [n]/[1,n] bias across the rows of [m,n].
    VarId add(VarId a, VarId b);
    VarId sub(VarId a, VarId b);
    VarId mul(VarId a, VarId b);
    VarId div(VarId a, VarId b);
    VarId scale(VarId a, double c);
    VarId add_scalar(VarId a, double c);

    // Nonlinearities.
    VarId relu(VarId a);
    VarId tanh(VarId a);
    VarId exp(VarId a);
    VarId log(VarId a);
    VarId softplus(VarId a);
    VarId sqrt(VarId a);
    VarId square(VarId a);
    /// min(a, cap); gradient is zero where the cap is active.
    VarId min_scalar(VarId a, double cap);

    // Linear algebra. matmul is [m,k] x [k,n] -> [m,n].
    VarId matmul(VarId a, VarId b);

    /// 2-D convolution over [batch, h, w, c_in] with kernel
    /// [kh, kw, c_in, c_out] and bias [c_out]; SAME padding, stride 1 or 2.
    VarId conv2d(VarId input, VarId kernel, VarId bias, int stride);

    // Reductions and shape plumbing.
    VarId sum_all(VarId a);        // -> [1]
    VarId mean_all(VarId a);       // -> [1]
    VarId row_sum(VarId a);        // [m,n] -> [m,1]
    VarId concat_cols(const std::vector<VarId>& parts);
    VarId slice_cols(VarId a, int col_begin, int col_end);
    VarId repeat_rows(VarId a, int times);  // [m,n] -> [m*times,n], row i at i*times..
    VarId reshape(VarId a, std::vector<int> shape);

    const Tensor& value(VarId v) const { return nodes_[check(v)].value; }
    /// Gradient of the last backward() seed w.r.t. node v. Zero tensor if the
    /// node was not reached.
    const Tensor& grad(VarId v) const;
    bool requires_grad(VarId v) const { return nodes_[check(v)].requires_grad; }

    /// Backpropagates from a scalar output (seed gradient 1).
    void backward(VarId output);
    /// Backpropagates an explicit seed gradient (same shape as the output).
    void backward(VarId output, const Tensor& seed);

    std::size_t num_records() const { return nodes_.size(); }

  private:
    struct Node {
        Tensor value;
        Tensor grad;
        bool requires_grad = false;
        std::function<void(Tape&)> backward_fn;  // empty for leaves
    };

    VarId push(Tensor value, bool requires_grad, std::function<void(Tape&)> fn);
    int check(VarId v) const;
    Tensor& grad_buffer(VarId v);

    std::vector<Node> nodes_;

    friend struct TapeOps;
};

}  // namespace reachrl::ad
