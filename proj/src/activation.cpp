#include "plunet/activation.hpp"

#include <cmath>
#include <string>

namespace plunet {

const char* act_kind_name(ActKind kind) {
    switch (kind) {
        case ActKind::kPlu: return "plu";
        case ActKind::kTanh: return "tanh";
        case ActKind::kRelu: return "relu";
        case ActKind::kLeakyRelu: return "leaky_relu";
        case ActKind::kIdentity: return "identity";
    }
    throw ConfigError("unknown activation kind");
}

ActKind act_kind_from_name(std::string_view name) {
    if (name == "plu") return ActKind::kPlu;
    if (name == "tanh") return ActKind::kTanh;
    if (name == "relu") return ActKind::kRelu;
    if (name == "leaky_relu") return ActKind::kLeakyRelu;
    if (name == "identity") return ActKind::kIdentity;
    throw ConfigError("unknown activation '" + std::string(name) + "'");
}

Activation::Activation(ActKind kind, double alpha, double c)
    : kind_(kind), alpha_(alpha), c_(c) {
    if (kind == ActKind::kPlu) {
        if (!(alpha > 0.0 && alpha < 1.0)) {
            throw ConfigError("plu requires 0 < alpha < 1, got " + std::to_string(alpha));
        }
        if (!(c > 0.0)) {
            throw ConfigError("plu requires c > 0, got " + std::to_string(c));
        }
    } else if (kind == ActKind::kLeakyRelu) {
        if (!(alpha > 0.0 && alpha < 1.0)) {
            throw ConfigError("leaky_relu requires 0 < alpha < 1, got " + std::to_string(alpha));
        }
    }
}

double Activation::forward(double x) const {
    switch (kind_) {
        case ActKind::kPlu:
            // Branch form of max(alpha*(x+c)-c, min(alpha*(x-c)+c, x));
            // bit-identical to the max/min composition for 0 < alpha < 1.
            if (x > c_) return alpha_ * (x - c_) + c_;
            if (x < -c_) return alpha_ * (x + c_) - c_;
            return x;
        case ActKind::kTanh:
            return std::tanh(x);
        case ActKind::kRelu:
            return x > 0.0 ? x : 0.0;
        case ActKind::kLeakyRelu:
            return x > 0.0 ? x : alpha_ * x;
        case ActKind::kIdentity:
            return x;
    }
    throw ConfigError("unknown activation kind");
}

double Activation::derivative(double x) const {
    switch (kind_) {
        case ActKind::kPlu:
            return std::abs(x) <= c_ ? 1.0 : alpha_;
        case ActKind::kTanh: {
            const double t = std::tanh(x);
            return 1.0 - t * t;
        }
        case ActKind::kRelu:
            return x > 0.0 ? 1.0 : 0.0;
        case ActKind::kLeakyRelu:
            return x < 0.0 ? alpha_ : 1.0;
        case ActKind::kIdentity:
            return 1.0;
    }
    throw ConfigError("unknown activation kind");
}

double Activation::inverse(double y) const {
    switch (kind_) {
        case ActKind::kPlu:
            if (y > c_) return (y - c_) / alpha_ + c_;
            if (y < -c_) return (y + c_) / alpha_ - c_;
            return y;
        case ActKind::kTanh:
            if (!(std::abs(y) < 1.0)) {
                throw DomainError("tanh inverse is defined only on (-1, 1), got " +
                                  std::to_string(y));
            }
            return std::atanh(y);
        case ActKind::kRelu:
            throw NotInvertibleError("relu is not invertible");
        case ActKind::kLeakyRelu:
            return y < 0.0 ? y / alpha_ : y;
        case ActKind::kIdentity:
            return y;
    }
    throw ConfigError("unknown activation kind");
}

}  // namespace plunet
