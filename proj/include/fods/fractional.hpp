#pragma once

#include <span>
#include <vector>

#include "fods/types.hpp"

namespace fods {

/// Vector of per-coordinate fractional orders alpha in (0, 1]^d.
/// Orders outside that range are rejected at construction; the toolkit does
/// not extrapolate beyond the regime its estimators are built for.
class FractionalOrder {
  public:
    explicit FractionalOrder(Vector values);

    /// Convenience constructor for d = 1.
    static FractionalOrder scalar(double alpha);

    int dim() const { return static_cast<int>(values_.size()); }
    const Vector& values() const { return values_; }
    double operator[](int i) const { return values_[i]; }

  private:
    Vector values_;
};

/// Memoized table of Gruenwald-Letnikov coefficients
///   psi(alpha, j) = Gamma(j - alpha) / (Gamma(-alpha) Gamma(j + 1))
/// for lags j = 0..horizon, one column per coordinate. Columns are
/// lag-contiguous so memory-sum inner products stream linearly.
/// Immutable after construction and safe to share across threads.
class GlCoefficients {
  public:
    GlCoefficients(FractionalOrder order, int horizon);

    const FractionalOrder& order() const { return order_; }
    int horizon() const { return static_cast<int>(table_.rows()) - 1; }
    int dim() const { return static_cast<int>(table_.cols()); }

    /// psi(alpha_coord, lag)
    double at(int lag, int coord) const { return table_(lag, coord); }

    const Matrix& table() const { return table_; }

  private:
    FractionalOrder order_;
    Matrix table_; // (horizon+1) x d
};

/// Computes the coefficient table for lags 0..horizon by the multiplicative
/// recurrence psi(a, 0) = 1, psi(a, j) = psi(a, j-1) (j - 1 - a) / j.
/// Direct Gamma-ratio evaluation overflows near j = 170; the recurrence is
/// stable for arbitrarily long horizons.
GlCoefficients gl_coefficients(const FractionalOrder& order, int horizon);

/// Fractional difference of the newest state in a sequence:
///   Delta^alpha x_k = sum_{j=0}^{k} diag(psi(alpha, j)) x_{k-j},
/// summed in declared order j = 0..k. Requires k <= coeffs.horizon() and all
/// states of dimension coeffs.dim().
Vector fractional_difference(const GlCoefficients& coeffs,
                             std::span<const Vector> states);

} // namespace fods
