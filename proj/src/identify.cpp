#include "fods/identify.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <Eigen/QR>
#include <Eigen/SVD>

namespace fods {

namespace {

nlohmann::json vector_to_json(const Vector& v) {
    nlohmann::json arr = nlohmann::json::array();
    for (int i = 0; i < v.size(); ++i) {
        arr.push_back(v[i]);
    }
    return arr;
}

Vector vector_from_json(const nlohmann::json& arr) {
    Vector v(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
    }
    return v;
}

double condition_number(const Matrix& A) {
    Eigen::JacobiSVD<Matrix> svd(A);
    const auto& sv = svd.singularValues();
    const double smin = sv[sv.size() - 1];
    return smin > 0.0 ? sv[0] / smin : std::numeric_limits<double>::infinity();
}

} // namespace

nlohmann::json IdentResult::to_json() const {
    nlohmann::json j;
    j["alpha_hat"] = vector_to_json(alpha_hat);
    j["gamma_hat"] = gamma_hat ? vector_to_json(*gamma_hat) : nlohmann::json();
    j["beta_hat"] = beta_hat ? vector_to_json(*beta_hat) : nlohmann::json();
    j["residual_norm"] = residual_norm;
    j["condition"] = design_condition;
    j["lambda"] = ridge_lambda;
    return j;
}

IdentResult IdentResult::from_json(const nlohmann::json& j) {
    IdentResult r;
    r.alpha_hat = vector_from_json(j.at("alpha_hat"));
    if (!j.at("gamma_hat").is_null()) {
        r.gamma_hat = vector_from_json(j["gamma_hat"]);
    }
    if (!j.at("beta_hat").is_null()) {
        r.beta_hat = vector_from_json(j["beta_hat"]);
    }
    r.residual_norm = j.at("residual_norm").get<double>();
    r.design_condition = j.at("condition").get<double>();
    r.ridge_lambda = j.at("lambda").get<double>();
    return r;
}

Vector solve_least_squares(const Matrix& A, const Vector& b,
                           bool allow_rank_deficient) {
    Eigen::ColPivHouseholderQR<Matrix> qr(A);
    if (qr.rank() < A.cols()) {
        if (!allow_rank_deficient) {
            throw std::runtime_error(
                "least squares: regressor matrix is rank deficient (rank " +
                std::to_string(qr.rank()) + " of " + std::to_string(A.cols()) +
                "); with a Chebyshev g-basis at d = 1 enable skip_linear or "
                "use lambda > 0");
        }
        return A.bdcSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).solve(b);
    }
    return qr.solve(b);
}

IdentResult identify_known(const ExperimentBatch& batch, const DynamicsFn& dyn) {
    batch.validate();
    const int p = batch.size();
    const int d = batch.state_dim();
    if (dyn.state_dim != d || dyn.input_dim != batch.input_dim()) {
        throw std::invalid_argument("identify_known: dynamics dimension mismatch");
    }

    std::vector<Vector> inits;
    inits.reserve(p);
    Vector y(static_cast<Eigen::Index>(d) * p);
    for (int i = 0; i < p; ++i) {
        const ExperimentRecord& rec = batch.records[i];
        inits.push_back(rec.x0);
        y.segment(static_cast<Eigen::Index>(i) * d, d) =
            rec.x1 - dyn.f(rec.x0) - dyn.g(rec.x0) * rec.u0;
    }
    const Matrix C = design_matrix(inits);
    check_design_rank(C);

    IdentResult res;
    res.alpha_hat = solve_least_squares(C, y);
    res.residual_norm = (y - C * res.alpha_hat).norm();
    res.design_condition = condition_number(C);
    res.ridge_lambda = 0.0;
    return res;
}

IdentResult identify_unknown(const ExperimentBatch& batch,
                             const BasisSpec& f_spec,
                             const BasisSpec& g_spec,
                             const RidgeOptions& ridge) {
    if (ridge.lambda < 0.0) {
        throw std::invalid_argument("identify_unknown: lambda must be >= 0");
    }
    const RegressorBlocks blocks = assemble_blocks(batch, f_spec, g_spec);
    const Matrix xi = blocks.concat();
    const Vector X = stack_observations(batch);

    const int d = batch.state_dim();
    const Eigen::Index n_gamma = blocks.pi.cols();
    const Eigen::Index n_beta = blocks.phi.cols();
    const Eigen::Index n = xi.cols();

    Vector theta;
    if (ridge.lambda > 0.0) {
        const Eigen::Index n_pen = ridge.penalize_alpha ? n : n_gamma + n_beta;
        Matrix aug(xi.rows() + n_pen, n);
        aug.topRows(xi.rows()) = xi;
        aug.bottomRows(n_pen).setZero();
        aug.bottomRows(n_pen).leftCols(n_pen).diagonal().setConstant(
            std::sqrt(ridge.lambda));
        Vector rhs = Vector::Zero(aug.rows());
        rhs.head(xi.rows()) = X;
        theta = solve_least_squares(aug, rhs, true);
    } else {
        theta = solve_least_squares(xi, X, ridge.allow_rank_deficient);
    }

    IdentResult res;
    res.gamma_hat = theta.head(n_gamma);
    res.beta_hat = theta.segment(n_gamma, n_beta);
    res.alpha_hat = theta.tail(d);
    res.residual_norm = (X - xi * theta).norm();
    res.design_condition = blocks.condition;
    res.ridge_lambda = ridge.lambda;
    res.design_warning = blocks.ill_conditioned || blocks.cheb_domain_violations > 0 ||
                         xi.rows() < n;
    return res;
}

IdentResult estimate_from_repeated(const RepeatedObservations& obs) {
    if (obs.samples.empty()) {
        throw std::invalid_argument("estimate_from_repeated: no samples");
    }
    check_design_rank(obs.design);
    const Vector ybar = obs.mean();

    IdentResult res;
    res.alpha_hat = solve_least_squares(obs.design, ybar);
    res.residual_norm = (ybar - obs.design * res.alpha_hat).norm();
    res.design_condition = condition_number(obs.design);
    res.ridge_lambda = 0.0;
    return res;
}

} // namespace fods
