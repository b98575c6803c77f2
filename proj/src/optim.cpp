#include "plunet/optim.hpp"

#include <cmath>
#include <string>

namespace plunet {

namespace {

void update_tensor(const AdamState& s, double bc1, double bc2, Matrix& p, const Matrix& g,
                   Matrix& m, Matrix& v) {
    if (!p.same_shape(g) || !p.same_shape(m) || !p.same_shape(v)) {
        throw ShapeError("adam_step: parameter, gradient, and moment shapes disagree");
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        const double gi = g.data()[i];
        m.data()[i] = s.beta1 * m.data()[i] + (1.0 - s.beta1) * gi;
        v.data()[i] = s.beta2 * v.data()[i] + (1.0 - s.beta2) * gi * gi;
        const double m_hat = m.data()[i] / bc1;
        const double v_hat = v.data()[i] / bc2;
        p.data()[i] -= s.lr * m_hat / (std::sqrt(v_hat) + s.epsilon);
    }
}

}  // namespace

AdamState adam_init(const Mlp& model, double lr) {
    if (!(lr > 0.0)) {
        throw ConfigError("adam_init: learning rate must be positive, got " + std::to_string(lr));
    }
    AdamState state;
    state.lr = lr;
    state.m.layers.reserve(model.depth());
    state.v.layers.reserve(model.depth());
    for (const Layer& layer : model.layers) {
        state.m.layers.push_back({Matrix(layer.w.rows(), layer.w.cols()), Matrix(layer.b.rows(), 1)});
        state.v.layers.push_back({Matrix(layer.w.rows(), layer.w.cols()), Matrix(layer.b.rows(), 1)});
    }
    return state;
}

void adam_step(AdamState& state, Mlp& model, const Gradients& grads) {
    if (grads.layers.size() != model.depth() || state.m.layers.size() != model.depth()) {
        throw ShapeError("adam_step: layer counts disagree");
    }
    state.t += 1;
    const double bc1 = 1.0 - std::pow(state.beta1, static_cast<double>(state.t));
    const double bc2 = 1.0 - std::pow(state.beta2, static_cast<double>(state.t));
    for (std::size_t i = 0; i < model.depth(); ++i) {
        update_tensor(state, bc1, bc2, model.layers[i].w, grads.layers[i].dw,
                      state.m.layers[i].dw, state.v.layers[i].dw);
        update_tensor(state, bc1, bc2, model.layers[i].b, grads.layers[i].db,
                      state.m.layers[i].db, state.v.layers[i].db);
    }
}

}  // namespace plunet
