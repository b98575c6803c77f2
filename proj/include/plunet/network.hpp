#pragma once

#include <iosfwd>
#include <vector>

#include "plunet/activation.hpp"
#include "plunet/matrix.hpp"
#include "plunet/rng.hpp"

namespace plunet {

struct Layer {
    Matrix w;  // out_dim x in_dim
    Matrix b;  // out_dim x 1
};

// Fully connected network
//
//     y = W_L a(... a(W_2 a(W_1 x + b_1) + b_2) ...) + b_L
//
// with the activation a between layers, never after the last one. Batches
// are column-wise: x is in_dim x batch and each column is one sample.
struct Mlp {
    std::vector<Layer> layers;
    Activation activation;

    std::size_t depth() const { return layers.size(); }
    std::size_t in_dim() const { return layers.front().w.cols(); }
    std::size_t out_dim() const { return layers.back().w.rows(); }
};

// Intermediates of one forward pass, consumed by backward().
// pre[i] is z_i = W_i a_{i-1} + b_i; post[i] is a_i = act(z_i). The output
// layer has no activation, so post has one entry fewer than pre.
struct ForwardCache {
    Matrix input;
    std::vector<Matrix> pre;
    std::vector<Matrix> post;
};

struct ForwardResult {
    Matrix output;
    ForwardCache cache;
};

struct LayerGrads {
    Matrix dw;
    Matrix db;
};

// Parameter gradients, one entry per layer, shapes matching the Mlp.
struct Gradients {
    std::vector<LayerGrads> layers;
};

struct MseResult {
    double loss;
    Matrix grad;
};

// Builds an MLP with the given layer sizes: weights i.i.d. standard normal,
// drawn layer by layer in row-major order, biases zero.
Mlp init_mlp(const std::vector<std::size_t>& layer_dims, const Activation& activation,
             Rng& rng);

ForwardResult forward(const Mlp& mlp, const Matrix& x);

// Mean squared error over all entries, with its gradient (2/N)(y_pred - y_true).
MseResult mse_loss(const Matrix& y_pred, const Matrix& y_true);

// Reverse-mode gradients of whatever scalar dy is the gradient of.
// db is the row sum of the layer's delta (bias broadcasts over the batch).
Gradients backward(const Mlp& mlp, const ForwardCache& cache, const Matrix& dy);

// Exact inverse of a square network: per layer, subtract the bias, solve
// against W, and undo the activation (the output layer is affine only).
// Requires every layer n x n and an invertible activation.
Matrix invert_mlp(const Mlp& mlp, const Matrix& y);

// Plain-text model format: layer dims, activation kind with alpha and c,
// then row-major weight and bias entries at 17 significant digits, so a
// save/load round trip reproduces the network bit for bit.
void save_mlp(const Mlp& mlp, std::ostream& out);
Mlp load_mlp(std::istream& in);

}  // namespace plunet
