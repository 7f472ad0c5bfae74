#pragma once

#include <optional>

#include "fods/basis.hpp"
#include "fods/experiment.hpp"
#include "fods/types.hpp"

#include "json.hpp"

namespace fods {

/// Least-squares identification output. residual_norm is ||X - xi theta||_2
/// recomputed from the returned estimate; design_condition is the condition
/// number of the regressor matrix that was solved.
struct IdentResult {
    Vector alpha_hat;
    std::optional<Vector> gamma_hat;
    std::optional<Vector> beta_hat;
    double residual_norm = 0.0;
    double design_condition = 0.0;
    double ridge_lambda = 0.0;
    bool design_warning = false;

    nlohmann::json to_json() const;
    static IdentResult from_json(const nlohmann::json& j);
};

/// Ridge configuration for the joint (gamma, beta, alpha) estimate.
/// By default the L2 penalty covers the whole coefficient vector; setting
/// penalize_alpha = false exempts the alpha block. allow_rank_deficient
/// switches a singular lambda = 0 solve from a hard error to the
/// minimum-norm solution (diagnostic use only; a non-unique alpha estimate
/// is not meaningful).
struct RidgeOptions {
    double lambda = 1e-6;
    bool penalize_alpha = true;
    bool allow_rank_deficient = false;
};

/// Problem 1: f and g known. Moves them to the left-hand side,
///   y^i = x1^i - f(x0^i) - g(x0^i) u0^i,
/// and solves min ||y - C alpha|| over the stacked design C = [diag(x0^i)]
/// by Householder QR (never an explicit normal-equations inverse).
IdentResult identify_known(const ExperimentBatch& batch, const DynamicsFn& dyn);

/// Problem 2: f and g unknown. Minimizes
///   ||X - xi theta||^2 + lambda ||S theta||^2,  xi = [pi phi Omega],
/// and unpacks theta into (gamma, beta, alpha).
IdentResult identify_unknown(const ExperimentBatch& batch,
                             const BasisSpec& f_spec,
                             const BasisSpec& g_spec,
                             const RidgeOptions& ridge = {});

/// Repeated-observation estimate: averages the N samples first, then solves
/// one least-squares problem in Ybar -- algebraically equal to stacking all
/// N copies of C.
IdentResult estimate_from_repeated(const RepeatedObservations& obs);

/// Shared QR least-squares kernel: min ||b - A theta||. Throws on rank
/// deficiency unless min-norm fallback is requested.
Vector solve_least_squares(const Matrix& A, const Vector& b,
                           bool allow_rank_deficient = false);

} // namespace fods
