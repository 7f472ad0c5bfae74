#include "fods/fractional.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fods {

FractionalOrder::FractionalOrder(Vector values) : values_(std::move(values)) {
    if (values_.size() < 1) {
        throw std::invalid_argument("FractionalOrder: dimension must be >= 1");
    }
    for (int i = 0; i < values_.size(); ++i) {
        const double a = values_[i];
        if (!std::isfinite(a) || a <= 0.0 || a > 1.0) {
            throw std::invalid_argument(
                "FractionalOrder: alpha_" + std::to_string(i + 1) + " = " +
                std::to_string(a) + " outside supported range (0, 1]");
        }
    }
}

FractionalOrder FractionalOrder::scalar(double alpha) {
    Vector v(1);
    v[0] = alpha;
    return FractionalOrder(std::move(v));
}

GlCoefficients::GlCoefficients(FractionalOrder order, int horizon)
    : order_(std::move(order)), table_(horizon + 1, order_.dim()) {
    const int d = order_.dim();
    table_.row(0).setOnes();
    for (int i = 0; i < d; ++i) {
        const double a = order_[i];
        for (int j = 1; j <= horizon; ++j) {
            // psi(a, j) = psi(a, j-1) (j - 1 - a) / j; for a = 1 the factor
            // vanishes at j = 2, reproducing the Gamma(-1) pole.
            table_(j, i) = table_(j - 1, i) * (j - 1 - a) / j;
        }
    }
}

GlCoefficients gl_coefficients(const FractionalOrder& order, int horizon) {
    if (horizon < 0) {
        throw std::invalid_argument("gl_coefficients: horizon must be >= 0");
    }
    return GlCoefficients(order, horizon);
}

Vector fractional_difference(const GlCoefficients& coeffs,
                             std::span<const Vector> states) {
    if (states.empty()) {
        throw std::invalid_argument("fractional_difference: empty state sequence");
    }
    const int k = static_cast<int>(states.size()) - 1;
    if (k > coeffs.horizon()) {
        throw std::invalid_argument(
            "fractional_difference: sequence length " + std::to_string(k + 1) +
            " exceeds precomputed horizon " + std::to_string(coeffs.horizon()));
    }
    const int d = coeffs.dim();
    Vector acc = Vector::Zero(d);
    for (int j = 0; j <= k; ++j) {
        const Vector& x = states[k - j];
        if (x.size() != d) {
            throw std::invalid_argument(
                "fractional_difference: state dimension mismatch at lag " +
                std::to_string(j));
        }
        acc.array() += coeffs.table().row(j).transpose().array() * x.array();
    }
    return acc;
}

} // namespace fods
