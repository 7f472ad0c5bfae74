#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "fods/dynamics.hpp"
#include "fods/fractional.hpp"
#include "fods/types.hpp"

namespace fods {

/// Additive white Gaussian measurement noise N(0, K_w) with diagonal K_w.
/// The seed is part of the spec so every noisy experiment is replayable.
struct NoiseSpec {
    Vector variance;          // diagonal of K_w, strictly positive entries
    std::uint64_t seed = 0;

    static NoiseSpec isotropic(int dim, double sigma, std::uint64_t seed);
    void validate() const;
    int dim() const { return static_cast<int>(variance.size()); }
};

struct Trajectory {
    std::vector<Vector> states; // x_0 .. x_T
    std::vector<Vector> inputs; // u_0 .. u_{T-1}
    bool noisy = false;

    int length() const { return static_cast<int>(inputs.size()); } // T
};

/// One noiseless update of the memory-dependent system
///   x_{k+1} = f(x_k) + g(x_k) u_k - sum_{j=1}^{k+1} psi(alpha, j) x_{k+1-j},
/// where history holds x_0..x_k. Requires k + 1 <= coeffs.horizon().
Vector step(const DynamicsFn& dyn,
            const GlCoefficients& coeffs,
            std::span<const Vector> history,
            const Vector& input);

/// Iterates step() over the input sequence. With a NoiseSpec, an independent
/// N(0, K_w) draw is added to every x_{k+1} (x_0 stays noise-free) and the
/// noisy value feeds back into the memory history, matching the one-step
/// data model used by the estimators. The memory sum is never truncated.
/// Aborts with the step index if any state component exceeds 1e12.
Trajectory simulate(const DynamicsFn& dyn,
                    const FractionalOrder& order,
                    const Vector& x0,
                    const std::vector<Vector>& inputs,
                    const std::optional<NoiseSpec>& noise = std::nullopt);

} // namespace fods
