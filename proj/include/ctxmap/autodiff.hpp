#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "ctxmap/tensor.hpp"

namespace ctxmap {

// Handle into a Tape. Default-constructed handles are invalid.
struct Var {
    int id = -1;
    bool valid() const { return id >= 0; }
};

// Reverse-mode autodiff over whole tensors. A Tape records one forward pass;
// backward() walks the nodes in reverse and accumulates gradients. Parameters
// live outside the tape (see param()) so one ParamStore can feed many tapes.
class Tape {
public:
    // Leaves -------------------------------------------------------------
    Var constant(Tensor t);
    // External parameter: value is read at record time, gradient is
    // accumulated into *grad during backward(). Both pointers must outlive
    // the tape.
    Var param(const Tensor* value, Tensor* grad);

    const Tensor& val(Var v) const { return nodes_[static_cast<size_t>(v.id)].value; }
    const Tensor& grad(Var v) const { return nodes_[static_cast<size_t>(v.id)].grad; }

    void backward(Var scalar_loss);

    // Elementwise --------------------------------------------------------
    Var add(Var a, Var b);
    Var sub(Var a, Var b);
    Var mul(Var a, Var b);
    Var scale(Var a, double s);
    Var add_scalar(Var a, double s);
    Var relu(Var a);
    Var sigmoid(Var a);
    Var tanh_op(Var a);
    Var softplus(Var a);  // log(1 + exp(x)), overflow-safe
    Var square(Var a);
    Var abs_op(Var a);
    Var cwise_max(Var a, Var b);  // ties route gradient to a
    Var mask(Var a, const Tensor& m);  // elementwise multiply by a constant mask

    // Shape --------------------------------------------------------------
    Var reshape(Var a, std::vector<int> shape);
    Var concat_cols(Var a, Var b);            // (n,p)+(n,q) -> (n,p+q)
    Var cols(Var a, int c0, int c1);          // column slice [c0,c1)
    Var row(Var a, int r);                    // (n,d) -> (d)
    Var stack_rows(const std::vector<Var>& rows);  // k vectors (d) -> (k,d)

    // Linear algebra -----------------------------------------------------
    Var matmul(Var a, Var b);                       // (m,k)x(k,n)
    Var linear(Var x, Var w, Var b);                // (n,i)x(o,i)^T + b -> (n,o)
    Var add_row_broadcast(Var m, Var v);            // (n,d) + (d) per row

    // Reductions ---------------------------------------------------------
    Var sum(Var a);        // scalar (shape {1})
    Var mean(Var a);

    // Spatial ops on (H, W, C) tensors -----------------------------------
    // Weights (Cout, kh, kw, Cin); zero padding; cross-correlation.
    Var conv2d(Var x, Var w, Var b, int stride, int pad);
    Var maxpool2d(Var x, int k, int stride, int pad);
    Var upsample_bilinear(Var x, int out_h, int out_w);
    // Extracts a size x size patch whose row range is [cy - size/2, ...) as
    // in MapStore::select_patch; out-of-bounds entries are zero. Backward
    // scatter-adds into the in-bounds region only.
    Var gather_patch(Var map, int cy, int cx, int size);

    size_t node_count() const { return nodes_.size(); }

private:
    struct Node {
        Tensor value;
        Tensor grad;
        std::function<void()> backward;  // empty for leaves
        Tensor* external_grad = nullptr;
    };

    std::vector<Node> nodes_;

    Var push(Tensor value, std::function<void()> backward = {});
    Tensor& g(Var v) { return nodes_[static_cast<size_t>(v.id)].grad; }
    const Tensor& v(Var x) const { return nodes_[static_cast<size_t>(x.id)].value; }
};

}  // namespace ctxmap
