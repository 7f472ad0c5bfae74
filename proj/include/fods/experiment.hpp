#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "fods/dynamics.hpp"
#include "fods/fractional.hpp"
#include "fods/rng.hpp"
#include "fods/simulate.hpp"
#include "fods/types.hpp"

namespace fods {

/// One one-step experiment: initial state, input, and the measured next state.
struct ExperimentRecord {
    Vector x0;
    Vector u0;
    Vector x1;
};

/// Synthetic provenance attached to generated batches.
struct BatchTruth {
    FractionalOrder order;
    DynamicsFn dynamics;
};

/// p one-step records sharing dimensions d and m; the identification dataset.
struct ExperimentBatch {
    std::vector<ExperimentRecord> records;
    NoiseSpec noise;
    std::optional<BatchTruth> truth;

    int size() const { return static_cast<int>(records.size()); } // p
    int state_dim() const {
        return records.empty() ? 0 : static_cast<int>(records.front().x0.size());
    }
    int input_dim() const {
        return records.empty() ? 0 : static_cast<int>(records.front().u0.size());
    }
    void validate() const;
};

/// Stacked diag(x0^i) design matrix C (dp x d) built from the initial states.
Matrix design_matrix(const std::vector<Vector>& inits);

/// Throws if some column of C is numerically zero, naming the coordinate.
void check_design_rank(const Matrix& design);

/// Runs p one-step experiments: x1^i = f(x0^i) + g(x0^i) u0^i + A x0^i + w0^i
/// with A = diag(alpha) and independent w0^i ~ N(0, K_w). Record i draws its
/// noise from the substream derive_seed(noise.seed, i), so generation order
/// does not matter.
ExperimentBatch generate_batch(const DynamicsFn& dyn,
                               const FractionalOrder& order,
                               const std::vector<std::pair<Vector, Vector>>& inits,
                               const NoiseSpec& noise);

/// N repeated measurements y_k = C beta + w_k under a fixed design C.
struct RepeatedObservations {
    Matrix design;               // C: dp x d
    std::vector<Vector> samples; // y_1..y_N, each in R^{dp}
    NoiseSpec noise;             // per-record d-dim spec, tiled across the stack

    int sample_count() const { return static_cast<int>(samples.size()); }

    /// Mean of the samples, accumulated in sample order.
    Vector mean() const;
};

/// Emits N i.i.d. samples y_k = C beta + w_k with beta = truth and
/// w_k ~ N(0, I_p (x) K_w). Sample k draws from derive_seed(noise.seed, k).
/// Throws if C is rank deficient.
RepeatedObservations generate_repeated(const FractionalOrder& truth,
                                       const std::vector<Vector>& design_inits,
                                       int sample_count,
                                       const NoiseSpec& noise);

/// Streaming equivalent of generate_repeated(...).mean(): identical RNG
/// streams and summation order, without materializing the samples.
Vector repeated_mean(const FractionalOrder& truth,
                     const std::vector<Vector>& design_inits,
                     int sample_count,
                     const NoiseSpec& noise);

/// Uniform draws used for experiment designs. Bounds may be scalars
/// (size 1, broadcast over coordinates) or per-coordinate vectors.
std::vector<Vector> draw_states(Rng& rng, int count, int dim,
                                const Vector& lo, const Vector& hi);
std::vector<Vector> draw_inputs(Rng& rng, int count, int dim,
                                double lo, double hi);

} // namespace fods
