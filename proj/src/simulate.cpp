#include "fods/simulate.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fods/rng.hpp"

namespace fods {

namespace {
constexpr double kDivergenceLimit = 1e12;
}

NoiseSpec NoiseSpec::isotropic(int dim, double sigma, std::uint64_t seed) {
    NoiseSpec spec;
    spec.variance = Vector::Constant(dim, sigma * sigma);
    spec.seed = seed;
    return spec;
}

void NoiseSpec::validate() const {
    if (variance.size() < 1) {
        throw std::invalid_argument("NoiseSpec: empty variance diagonal");
    }
    for (int i = 0; i < variance.size(); ++i) {
        if (!(variance[i] > 0.0) || !std::isfinite(variance[i])) {
            throw std::invalid_argument(
                "NoiseSpec: variance entry " + std::to_string(i) +
                " must be finite and > 0");
        }
    }
}

Vector step(const DynamicsFn& dyn,
            const GlCoefficients& coeffs,
            std::span<const Vector> history,
            const Vector& input) {
    if (history.empty()) {
        throw std::invalid_argument("step: history must contain x_0");
    }
    const int d = coeffs.dim();
    const int k = static_cast<int>(history.size()) - 1;
    if (k + 1 > coeffs.horizon()) {
        throw std::invalid_argument(
            "step: memory sum needs lag " + std::to_string(k + 1) +
            " but coefficients stop at " + std::to_string(coeffs.horizon()));
    }
    const Vector& xk = history[k];
    if (xk.size() != d || dyn.state_dim != d) {
        throw std::invalid_argument("step: state dimension mismatch");
    }
    if (input.size() != dyn.input_dim) {
        throw std::invalid_argument("step: input dimension mismatch");
    }

    Vector next = dyn.f(xk) + dyn.g(xk) * input;
    // memory term: j = 1..k+1 reaches back to x_0
    for (int j = 1; j <= k + 1; ++j) {
        const Vector& past = history[k + 1 - j];
        if (past.size() != d) {
            throw std::invalid_argument("step: history dimension mismatch at lag " +
                                        std::to_string(j));
        }
        next.array() -= coeffs.table().row(j).transpose().array() * past.array();
    }
    return next;
}

Trajectory simulate(const DynamicsFn& dyn,
                    const FractionalOrder& order,
                    const Vector& x0,
                    const std::vector<Vector>& inputs,
                    const std::optional<NoiseSpec>& noise) {
    const int T = static_cast<int>(inputs.size());
    const GlCoefficients coeffs = gl_coefficients(order, T + 1);
    if (noise) {
        noise->validate();
        if (noise->dim() != order.dim()) {
            throw std::invalid_argument("simulate: noise dimension mismatch");
        }
    }

    Trajectory traj;
    traj.noisy = noise.has_value();
    traj.inputs = inputs;
    traj.states.reserve(T + 1);
    traj.states.push_back(x0);

    std::optional<Rng> rng;
    Vector sigma;
    if (noise) {
        rng.emplace(noise->seed);
        sigma = noise->variance.array().sqrt();
    }

    for (int k = 0; k < T; ++k) {
        Vector next = step(dyn, coeffs, traj.states, inputs[k]);
        if (noise) {
            for (int i = 0; i < next.size(); ++i) {
                next[i] += sigma[i] * rng->normal();
            }
        }
        for (int i = 0; i < next.size(); ++i) {
            if (!std::isfinite(next[i]) || std::abs(next[i]) > kDivergenceLimit) {
                throw std::runtime_error(
                    "simulate: state diverged at step " + std::to_string(k + 1) +
                    " (component " + std::to_string(i + 1) + ")");
            }
        }
        traj.states.push_back(std::move(next));
    }
    return traj;
}

} // namespace fods
