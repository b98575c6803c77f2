#include "plunet/network.hpp"

#include <istream>
#include <ostream>
#include <string>

#include "plunet/numfmt.hpp"

namespace plunet {

namespace {

constexpr const char* kModelMagic = "plunet-mlp-v1";

std::string dims_str(const Matrix& m) {
    return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

// z = W a + b with the bias column added to every batch column.
Matrix affine(const Matrix& w, const Matrix& a, const Matrix& b) {
    Matrix z = matmul(w, a);
    for (std::size_t i = 0; i < z.rows(); ++i) {
        for (std::size_t j = 0; j < z.cols(); ++j) {
            z(i, j) += b(i, 0);
        }
    }
    return z;
}

Matrix row_sum(const Matrix& m) {
    Matrix out(m.rows(), 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        double s = 0.0;
        for (std::size_t j = 0; j < m.cols(); ++j) s += m(i, j);
        out(i, 0) = s;
    }
    return out;
}

Matrix map_elementwise(const Matrix& m, const Activation& act, double (Activation::*f)(double) const) {
    Matrix out = m;
    for (double& v : out.data()) v = (act.*f)(v);
    return out;
}

}  // namespace

Mlp init_mlp(const std::vector<std::size_t>& layer_dims, const Activation& activation,
             Rng& rng) {
    if (layer_dims.size() < 2) {
        throw ConfigError("init_mlp: need at least an input and an output dim, got " +
                          std::to_string(layer_dims.size()));
    }
    for (std::size_t d : layer_dims) {
        if (d == 0) throw ConfigError("init_mlp: layer dims must be positive");
    }
    Mlp mlp{{}, activation};
    mlp.layers.reserve(layer_dims.size() - 1);
    for (std::size_t i = 1; i < layer_dims.size(); ++i) {
        Layer layer{Matrix(layer_dims[i], layer_dims[i - 1]), Matrix(layer_dims[i], 1)};
        for (double& v : layer.w.data()) v = rng.normal();
        mlp.layers.push_back(std::move(layer));
    }
    return mlp;
}

ForwardResult forward(const Mlp& mlp, const Matrix& x) {
    if (x.rows() != mlp.in_dim()) {
        throw ShapeError("forward: input is " + dims_str(x) + " but the network takes " +
                         std::to_string(mlp.in_dim()) + " rows");
    }
    ForwardCache cache;
    cache.input = x;
    cache.pre.reserve(mlp.depth());
    cache.post.reserve(mlp.depth() - 1);

    Matrix a = x;
    for (std::size_t i = 0; i < mlp.depth(); ++i) {
        Matrix z = affine(mlp.layers[i].w, a, mlp.layers[i].b);
        cache.pre.push_back(z);
        if (i + 1 < mlp.depth()) {
            a = map_elementwise(z, mlp.activation, &Activation::forward);
            cache.post.push_back(a);
        }
    }
    return {cache.pre.back(), std::move(cache)};
}

MseResult mse_loss(const Matrix& y_pred, const Matrix& y_true) {
    if (!y_pred.same_shape(y_true)) {
        throw ShapeError("mse_loss: prediction is " + dims_str(y_pred) + " but target is " +
                         dims_str(y_true));
    }
    const double n = static_cast<double>(y_pred.size());
    Matrix grad(y_pred.rows(), y_pred.cols());
    double loss = 0.0;
    for (std::size_t i = 0; i < y_pred.size(); ++i) {
        const double r = y_pred.data()[i] - y_true.data()[i];
        loss += r * r;
        grad.data()[i] = 2.0 / n * r;
    }
    return {loss / n, std::move(grad)};
}

Gradients backward(const Mlp& mlp, const ForwardCache& cache, const Matrix& dy) {
    const std::size_t depth = mlp.depth();
    if (cache.pre.size() != depth || cache.post.size() + 1 != depth) {
        throw ShapeError("backward: cache depth does not match the network");
    }
    if (!dy.same_shape(cache.pre.back())) {
        throw ShapeError("backward: upstream gradient is " + dims_str(dy) +
                         " but the output is " + dims_str(cache.pre.back()));
    }

    Gradients grads;
    grads.layers.resize(depth);
    Matrix delta = dy;
    for (std::size_t i = depth; i-- > 0;) {
        const Matrix& a_prev = (i == 0) ? cache.input : cache.post[i - 1];
        grads.layers[i].dw = matmul(delta, transpose(a_prev));
        grads.layers[i].db = row_sum(delta);
        if (i > 0) {
            const Matrix da = matmul(transpose(mlp.layers[i].w), delta);
            delta = hadamard(da, map_elementwise(cache.pre[i - 1], mlp.activation,
                                                 &Activation::derivative));
        }
    }
    return grads;
}

Matrix invert_mlp(const Mlp& mlp, const Matrix& y) {
    if (!mlp.activation.invertible()) {
        throw NotInvertibleError(std::string(mlp.activation.name()) +
                                 " networks cannot be inverted");
    }
    const std::size_t n = mlp.in_dim();
    for (const Layer& layer : mlp.layers) {
        if (layer.w.rows() != n || layer.w.cols() != n) {
            throw ShapeError("invert_mlp: layer weight is " + dims_str(layer.w) +
                             ", inversion needs every layer " + std::to_string(n) + "x" +
                             std::to_string(n));
        }
    }
    if (y.rows() != n) {
        throw ShapeError("invert_mlp: output is " + dims_str(y) + " but the network emits " +
                         std::to_string(n) + " rows");
    }

    // Walk the layers backwards; the output layer is affine only, every
    // earlier layer is an affine map followed by the activation.
    Matrix x = y;
    for (std::size_t i = mlp.depth(); i-- > 0;) {
        Matrix rhs = x;
        for (std::size_t r = 0; r < rhs.rows(); ++r) {
            for (std::size_t col = 0; col < rhs.cols(); ++col) {
                rhs(r, col) -= mlp.layers[i].b(r, 0);
            }
        }
        x = solve_linear(mlp.layers[i].w, rhs);
        if (i > 0) {
            x = map_elementwise(x, mlp.activation, &Activation::inverse);
        }
    }
    return x;
}

void save_mlp(const Mlp& mlp, std::ostream& out) {
    out << kModelMagic << "\n";
    out << "layers " << mlp.depth() << "\n";
    out << "dims " << mlp.in_dim();
    for (const Layer& layer : mlp.layers) out << " " << layer.w.rows();
    out << "\n";
    out << "activation " << mlp.activation.name() << " " << format_g17(mlp.activation.alpha())
        << " " << format_g17(mlp.activation.c()) << "\n";
    for (std::size_t i = 0; i < mlp.depth(); ++i) {
        const Layer& layer = mlp.layers[i];
        out << "w " << i << "\n";
        for (std::size_t r = 0; r < layer.w.rows(); ++r) {
            for (std::size_t c = 0; c < layer.w.cols(); ++c) {
                out << (c == 0 ? "" : " ") << format_g17(layer.w(r, c));
            }
            out << "\n";
        }
        out << "b " << i << "\n";
        for (std::size_t r = 0; r < layer.b.rows(); ++r) {
            out << (r == 0 ? "" : " ") << format_g17(layer.b(r, 0));
        }
        out << "\n";
    }
}

namespace {

void expect_token(std::istream& in, const std::string& want) {
    std::string got;
    if (!(in >> got) || got != want) {
        throw IoError("model parse error: expected '" + want + "', got '" + got + "'");
    }
}

double read_double(std::istream& in) {
    double v;
    if (!(in >> v)) throw IoError("model parse error: expected a number");
    return v;
}

std::size_t read_count(std::istream& in) {
    long long v;
    if (!(in >> v) || v < 0) throw IoError("model parse error: expected a count");
    return static_cast<std::size_t>(v);
}

}  // namespace

Mlp load_mlp(std::istream& in) {
    expect_token(in, kModelMagic);
    expect_token(in, "layers");
    const std::size_t depth = read_count(in);
    if (depth == 0) throw IoError("model parse error: zero layers");

    expect_token(in, "dims");
    std::vector<std::size_t> dims(depth + 1);
    for (std::size_t& d : dims) {
        d = read_count(in);
        if (d == 0) throw IoError("model parse error: zero layer dim");
    }

    expect_token(in, "activation");
    std::string kind_name;
    if (!(in >> kind_name)) throw IoError("model parse error: missing activation kind");
    const double alpha = read_double(in);
    const double c = read_double(in);

    Mlp mlp{{}, Activation(act_kind_from_name(kind_name), alpha, c)};
    mlp.layers.reserve(depth);
    for (std::size_t i = 0; i < depth; ++i) {
        expect_token(in, "w");
        if (read_count(in) != i) throw IoError("model parse error: layer index mismatch");
        Layer layer{Matrix(dims[i + 1], dims[i]), Matrix(dims[i + 1], 1)};
        for (double& v : layer.w.data()) v = read_double(in);
        expect_token(in, "b");
        if (read_count(in) != i) throw IoError("model parse error: layer index mismatch");
        for (double& v : layer.b.data()) v = read_double(in);
        mlp.layers.push_back(std::move(layer));
    }
    return mlp;
}

}  // namespace plunet
