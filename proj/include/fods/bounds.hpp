#pragma once

#include "fods/types.hpp"

namespace fods {

/// Inputs for the sample-complexity bounds: a full-column-rank design
/// C (dp x d), the diagonal of the dp x dp noise covariance K_w, and the
/// number N of repeated observations.
struct BoundInputs {
    Matrix design;         // C
    Vector noise_variance; // diag(K_w), dp entries
    long sample_count = 1; // N

    int state_dim() const { return static_cast<int>(design.cols()); }
    Matrix gram() const { return design.transpose() * design; }
    void validate() const;
};

/// Error covariance of the repeated-observation estimator,
///   Sigma = (1/N) (C^T C)^{-1} C^T K_w C (C^T C)^{-1},
/// symmetrized against roundoff, together with its largest eigenvalue.
struct Sigma {
    Matrix matrix;
    double lambda_max = 0.0;

    static Sigma from_inputs(const BoundInputs& inputs);
};

/// Expectation bound on E[||beta_hat - beta||^2]:
///   (d/N) lambda_max(C^T C) lambda_max(K_w) / lambda_min(C^T C)^2.
double expectation_bound(const BoundInputs& inputs);

/// The exact expected squared error Trace(Sigma); the quantity the
/// expectation bound dominates.
double exact_expected_error(const BoundInputs& inputs);

/// A tail probability bound; in_region is false when the queried threshold
/// lies outside the bound's validity region, in which case value is the
/// trivial bound 1.
struct TailBound {
    double value = 1.0;
    bool in_region = false;
};

/// Chi-square (Laurent-Massart) tail bound on P(||beta_hat - beta||^2 >= t)
/// with lambda = lambda_max(Sigma):
///   exp(-(t/lambda - sqrt(2 t d / lambda - d^2)) / 2)   for t > lambda d / 2.
/// This is the exponent obtained by inverting
///   t = lambda (d + 2 sqrt(d x) + 2 x)
/// for x; note the minus sign in front of the square root.
TailBound chi2_tail_bound(const Sigma& sigma, int dim, double t);

/// Sub-exponential (Bernstein) alternative, valid for t >= lambda d:
///   exp(-d (t/(lambda d) - 1)^2 / 8)   for lambda d <= t <= 2 lambda d,
///   exp(-d (t/(lambda d) - 1) / 8)     for t > 2 lambda d;
/// continuous at the regime switch (both give exp(-d/8) at t = 2 lambda d)
/// and never tighter than the chi-square bound on the shared region.
TailBound subexp_tail_bound(const Sigma& sigma, int dim, double t);

} // namespace fods
