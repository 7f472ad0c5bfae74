#pragma once

#include <string>

#include "fods/experiment.hpp"
#include "fods/types.hpp"

#include "json.hpp"

namespace fods {

enum class BasisFamily { Trigonometric, ChebyshevGap };

/// Declarative description of an orthogonal basis used to approximate the
/// unknown dynamics functions. count is the number of basis terms (H for
/// f-bases, L for g-bases). For the Chebyshev family, skip_linear drops T_1
/// from the term list; keeping it makes the d = 1 regression singular
/// because the T_1 column coincides with the diag(x0) regressor.
struct BasisSpec {
    BasisFamily family = BasisFamily::Trigonometric;
    int count = 1;
    bool skip_linear = false;

    static BasisSpec trigonometric(int terms);
    static BasisSpec chebyshev_gap(int terms);  // skip_linear = true
    static BasisSpec chebyshev_full(int terms); // keeps T_1; degenerate for d = 1

    Vector evaluate(double x) const;
    void validate() const;

    nlohmann::json to_json() const;
    static BasisSpec from_json(const nlohmann::json& j);
};

/// Trigonometric terms interleaved as [sin(k pi x), cos(k pi x)] for
/// k = 1, 2, ..., truncated to count entries; count = 2 gives the benchmark
/// pair [sin(pi x), cos(pi x)].
Vector eval_trig(int count, double x);

/// Chebyshev terms [T_0, T_2, T_3, ...] (T_1 skipped), truncated to count
/// entries, via the recurrence T_0 = 1, T_1 = x, T_j = 2x T_{j-1} - T_{j-2}.
/// The polynomials are total, but |x| > 1 leaves their orthogonality domain;
/// assemble_blocks counts such evaluations.
Vector eval_chebyshev_gap(int count, double x);

/// Plain Chebyshev terms [T_0, T_1, ..., T_{count-1}].
Vector eval_chebyshev(int count, double x);

/// Stacked block regression matrices for the one-step least squares
///   X = pi gamma + phi beta + Omega alpha + w.
/// Row block i holds diag over coordinates; phi's block is scaled by u0^i.
struct RegressorBlocks {
    Matrix pi;    // dp x dH
    Matrix phi;   // dp x dL
    Matrix omega; // dp x d

    double condition = 0.0;       // cond([pi phi omega])
    bool ill_conditioned = false; // condition > 1e10
    long cheb_domain_violations = 0;

    Matrix concat() const;
};

/// Assembles pi, phi, Omega from a batch. Basis functions are applied
/// coordinate-wise: row (i, k) evaluates the bases at x0^i[k]. Requires
/// m = 1 (the multi-input extension stacks an extra phi block per input
/// channel but is not implemented). Flags rather than rejects a
/// skip_linear = false Chebyshev g-basis at d = 1 so the degeneracy can be
/// demonstrated; the least-squares layer refuses to solve it.
RegressorBlocks assemble_blocks(const ExperimentBatch& batch,
                                const BasisSpec& f_spec,
                                const BasisSpec& g_spec);

/// Stacked measurement vector X (dp) from a batch.
Vector stack_observations(const ExperimentBatch& batch);

std::string to_string(BasisFamily family);

} // namespace fods
