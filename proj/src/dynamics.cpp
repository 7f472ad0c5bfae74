#include "fods/dynamics.hpp"

#include <cmath>
#include <numbers>

namespace fods {

DynamicsFn logistic_cosexp(double mu, double a, double b, double c, int dim) {
    DynamicsFn dyn;
    dyn.state_dim = dim;
    dyn.input_dim = 1;
    dyn.f = [mu, dim](const Vector& x) {
        Vector out(dim);
        for (int i = 0; i < dim; ++i) {
            out[i] = mu * x[i] * (1.0 - x[i]);
        }
        return out;
    };
    dyn.g = [a, b, c, dim](const Vector& x) {
        Matrix out(dim, 1);
        for (int i = 0; i < dim; ++i) {
            out(i, 0) = a * std::cos(x[i]) *
                        std::exp(b * (std::sin(x[i] - c * std::numbers::pi) - 1.0));
        }
        return out;
    };
    return dyn;
}

DynamicsFn zero_dynamics(int state_dim, int input_dim) {
    DynamicsFn dyn;
    dyn.state_dim = state_dim;
    dyn.input_dim = input_dim;
    dyn.f = [state_dim](const Vector&) { return Vector::Zero(state_dim); };
    dyn.g = [state_dim, input_dim](const Vector&) {
        return Matrix::Zero(state_dim, input_dim);
    };
    return dyn;
}

} // namespace fods
