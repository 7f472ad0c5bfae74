#pragma once

#include <functional>

#include "fods/types.hpp"

namespace fods {

/// Affine-in-input dynamics x -> f(x) + g(x) u. Both maps take the full
/// state vector; f returns a d-vector and g a d x m matrix. The maps must be
/// deterministic and total on the state domain.
struct DynamicsFn {
    std::function<Vector(const Vector&)> f;
    std::function<Matrix(const Vector&)> g;
    int state_dim = 0; // d
    int input_dim = 0; // m
};

/// The logistic/cos-exp benchmark system, applied coordinate-wise:
///   f_i(x) = mu x_i (1 - x_i)
///   g_i(x) = a cos(x_i) exp(b [sin(x_i - c pi) - 1])
/// with a single input channel (m = 1). Defaults are the benchmark
/// parameters mu = 1, a = -1, b = 4, c = 0.7.
DynamicsFn logistic_cosexp(double mu = 1.0,
                           double a = -1.0,
                           double b = 4.0,
                           double c = 0.7,
                           int dim = 1);

/// Zero dynamics (f = 0, g = 0); the state evolves on memory alone.
DynamicsFn zero_dynamics(int state_dim, int input_dim = 1);

} // namespace fods
