#pragma once

#include <string_view>

#include "plunet/errors.hpp"

namespace plunet {

enum class ActKind { kPlu, kTanh, kRelu, kLeakyRelu, kIdentity };

const char* act_kind_name(ActKind kind);
ActKind act_kind_from_name(std::string_view name);

// Scalar activation applied elementwise by the network.
//
// The piecewise linear unit (plu) is the odd three-segment function
//
//     plu(x) = max(alpha*(x+c) - c, min(alpha*(x-c) + c, x))
//
// i.e. the identity on [-c, c] with slope-alpha tails. It is strictly
// increasing for 0 < alpha < 1, so it has an inverse on all of R, unlike
// relu (not injective) or tanh (inverse only on (-1, 1)).
//
// alpha is the outer-segment slope of plu and the negative-side slope of
// leaky_relu; c is the plu knee location. Both are stored, and ignored,
// for the remaining kinds.
class Activation {
public:
    explicit Activation(ActKind kind, double alpha = 0.1, double c = 1.0);

    static Activation plu(double alpha = 0.1, double c = 1.0) {
        return Activation(ActKind::kPlu, alpha, c);
    }
    static Activation tanh() { return Activation(ActKind::kTanh); }
    static Activation relu() { return Activation(ActKind::kRelu); }
    static Activation leaky_relu(double alpha = 0.1) {
        return Activation(ActKind::kLeakyRelu, alpha);
    }
    static Activation identity() { return Activation(ActKind::kIdentity); }

    ActKind kind() const { return kind_; }
    double alpha() const { return alpha_; }
    double c() const { return c_; }
    const char* name() const { return act_kind_name(kind_); }

    bool invertible() const { return kind_ != ActKind::kRelu; }

    double forward(double x) const;

    // Slope of the segment containing x. At a kink the inner segment wins:
    // plu'(+-c) = 1, relu'(0) = 0, leaky_relu'(0) = 1.
    double derivative(double x) const;

    // Exact inverse. Throws NotInvertibleError for relu and DomainError for
    // tanh when |y| >= 1.
    double inverse(double y) const;

private:
    ActKind kind_;
    double alpha_;
    double c_;
};

}  // namespace plunet
