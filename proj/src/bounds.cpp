#include "fods/bounds.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

namespace fods {

void BoundInputs::validate() const {
    if (design.rows() < design.cols() || design.cols() < 1) {
        throw std::invalid_argument("BoundInputs: design must be dp x d with dp >= d");
    }
    if (noise_variance.size() != design.rows()) {
        throw std::invalid_argument("BoundInputs: K_w diagonal must have dp entries");
    }
    for (int i = 0; i < noise_variance.size(); ++i) {
        if (!(noise_variance[i] > 0.0) || !std::isfinite(noise_variance[i])) {
            throw std::invalid_argument("BoundInputs: K_w entries must be positive");
        }
    }
    if (sample_count < 1) {
        throw std::invalid_argument("BoundInputs: N must be >= 1");
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(gram());
    if (es.eigenvalues()[0] <= 0.0) {
        throw std::invalid_argument("BoundInputs: C^T C is singular");
    }
}

Sigma Sigma::from_inputs(const BoundInputs& inputs) {
    inputs.validate();
    const Matrix& C = inputs.design;
    const Matrix ctc = C.transpose() * C;
    // B = C^T K_w C computed columnwise against the diagonal
    const Matrix kw_c = inputs.noise_variance.asDiagonal() * C;
    const Matrix B = C.transpose() * kw_c;

    Eigen::LLT<Matrix> llt(ctc);
    if (llt.info() != Eigen::Success) {
        throw std::invalid_argument("Sigma: C^T C is not positive definite");
    }
    Matrix m = llt.solve(llt.solve(B).transpose());
    m /= static_cast<double>(inputs.sample_count);
    m = 0.5 * (m + m.transpose()); // kill roundoff asymmetry before eigensolve

    Sigma s;
    s.matrix = m;
    Eigen::SelfAdjointEigenSolver<Matrix> es(m);
    if (es.eigenvalues()[0] < -1e-12) {
        throw std::runtime_error("Sigma: covariance is not numerically PSD");
    }
    s.lambda_max = es.eigenvalues()[es.eigenvalues().size() - 1];
    return s;
}

double expectation_bound(const BoundInputs& inputs) {
    inputs.validate();
    Eigen::SelfAdjointEigenSolver<Matrix> es_ctc(inputs.gram());
    const double lmin = es_ctc.eigenvalues()[0];
    const double lmax = es_ctc.eigenvalues()[es_ctc.eigenvalues().size() - 1];
    const double kw_max = inputs.noise_variance.maxCoeff();
    const double d = static_cast<double>(inputs.state_dim());
    return d / static_cast<double>(inputs.sample_count) * lmax * kw_max /
           (lmin * lmin);
}

double exact_expected_error(const BoundInputs& inputs) {
    return Sigma::from_inputs(inputs).matrix.trace();
}

TailBound chi2_tail_bound(const Sigma& sigma, int dim, double t) {
    if (!(t > 0.0)) {
        throw std::invalid_argument("chi2_tail_bound: t must be positive");
    }
    const double lambda = sigma.lambda_max;
    const double d = static_cast<double>(dim);
    TailBound out;
    if (!(t > lambda * d / 2.0)) {
        return out; // trivial bound outside the validity region
    }
    const double ratio = t / lambda;
    const double disc = 2.0 * ratio * d - d * d; // >= 0 inside the region
    out.value = std::exp(-(ratio - std::sqrt(disc)) / 2.0);
    out.in_region = true;
    return out;
}

TailBound subexp_tail_bound(const Sigma& sigma, int dim, double t) {
    if (!(t > 0.0)) {
        throw std::invalid_argument("subexp_tail_bound: t must be positive");
    }
    const double lambda = sigma.lambda_max;
    const double d = static_cast<double>(dim);
    TailBound out;
    if (!(t >= lambda * d)) {
        return out;
    }
    const double s = t / (lambda * d) - 1.0;
    out.value = s <= 1.0 ? std::exp(-d * s * s / 8.0) : std::exp(-d * s / 8.0);
    out.in_region = true;
    return out;
}

} // namespace fods
