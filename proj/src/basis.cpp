#include "fods/basis.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <Eigen/SVD>

namespace fods {

BasisSpec BasisSpec::trigonometric(int terms) {
    BasisSpec s;
    s.family = BasisFamily::Trigonometric;
    s.count = terms;
    s.skip_linear = false;
    s.validate();
    return s;
}

BasisSpec BasisSpec::chebyshev_gap(int terms) {
    BasisSpec s;
    s.family = BasisFamily::ChebyshevGap;
    s.count = terms;
    s.skip_linear = true;
    s.validate();
    return s;
}

BasisSpec BasisSpec::chebyshev_full(int terms) {
    BasisSpec s = chebyshev_gap(terms);
    s.skip_linear = false;
    return s;
}

void BasisSpec::validate() const {
    if (count < 1) {
        throw std::invalid_argument("BasisSpec: count must be >= 1");
    }
}

Vector BasisSpec::evaluate(double x) const {
    if (family == BasisFamily::Trigonometric) {
        return eval_trig(count, x);
    }
    return skip_linear ? eval_chebyshev_gap(count, x) : eval_chebyshev(count, x);
}

nlohmann::json BasisSpec::to_json() const {
    nlohmann::json j;
    j["family"] = family == BasisFamily::Trigonometric ? "trig" : "cheb_gap";
    j["count"] = count;
    // skip_linear is implied by the family; serialize only the exception
    if (family == BasisFamily::ChebyshevGap && !skip_linear) {
        j["skip_linear"] = false;
    }
    return j;
}

BasisSpec BasisSpec::from_json(const nlohmann::json& j) {
    const std::string family = j.at("family").get<std::string>();
    const int count = j.at("count").get<int>();
    BasisSpec s;
    if (family == "trig") {
        s = trigonometric(count);
    } else if (family == "cheb_gap") {
        s = chebyshev_gap(count);
        if (j.contains("skip_linear")) {
            s.skip_linear = j["skip_linear"].get<bool>();
        }
    } else {
        throw std::invalid_argument("BasisSpec: unknown family '" + family + "'");
    }
    return s;
}

std::string to_string(BasisFamily family) {
    return family == BasisFamily::Trigonometric ? "trig" : "cheb_gap";
}

Vector eval_trig(int count, double x) {
    if (count < 1) {
        throw std::invalid_argument("eval_trig: count must be >= 1");
    }
    Vector out(count);
    int idx = 0;
    for (int k = 1; idx < count; ++k) {
        out[idx++] = std::sin(k * std::numbers::pi * x);
        if (idx < count) {
            out[idx++] = std::cos(k * std::numbers::pi * x);
        }
    }
    return out;
}

namespace {

Vector eval_chebyshev_impl(int count, double x, bool skip_linear) {
    if (count < 1) {
        throw std::invalid_argument("eval_chebyshev: count must be >= 1");
    }
    Vector out(count);
    double t_prev = 1.0; // T_0
    double t_curr = x;   // T_1
    int idx = 0;
    out[idx++] = t_prev;
    if (!skip_linear && idx < count) {
        out[idx++] = t_curr;
    }
    for (int j = 2; idx < count; ++j) {
        const double t_next = 2.0 * x * t_curr - t_prev;
        t_prev = t_curr;
        t_curr = t_next;
        out[idx++] = t_curr;
    }
    return out;
}

} // namespace

Vector eval_chebyshev_gap(int count, double x) {
    return eval_chebyshev_impl(count, x, true);
}

Vector eval_chebyshev(int count, double x) {
    return eval_chebyshev_impl(count, x, false);
}

Matrix RegressorBlocks::concat() const {
    Matrix xi(pi.rows(), pi.cols() + phi.cols() + omega.cols());
    xi << pi, phi, omega;
    return xi;
}

RegressorBlocks assemble_blocks(const ExperimentBatch& batch,
                                const BasisSpec& f_spec,
                                const BasisSpec& g_spec) {
    batch.validate();
    f_spec.validate();
    g_spec.validate();
    if (batch.input_dim() != 1) {
        throw std::invalid_argument(
            "assemble_blocks: implemented for m = 1; for m > 1 stack one "
            "input-scaled phi block per channel");
    }
    const int p = batch.size();
    const int d = batch.state_dim();
    const int H = f_spec.count;
    const int L = g_spec.count;
    const Eigen::Index dp = static_cast<Eigen::Index>(d) * p;

    RegressorBlocks blocks;
    blocks.pi = Matrix::Zero(dp, static_cast<Eigen::Index>(d) * H);
    blocks.phi = Matrix::Zero(dp, static_cast<Eigen::Index>(d) * L);
    blocks.omega = Matrix::Zero(dp, d);

    for (int i = 0; i < p; ++i) {
        const ExperimentRecord& rec = batch.records[i];
        const double u = rec.u0[0];
        for (int k = 0; k < d; ++k) {
            const double xk = rec.x0[k];
            const Eigen::Index row = static_cast<Eigen::Index>(i) * d + k;
            blocks.pi.block(row, static_cast<Eigen::Index>(k) * H, 1, H) =
                f_spec.evaluate(xk).transpose();
            blocks.phi.block(row, static_cast<Eigen::Index>(k) * L, 1, L) =
                g_spec.evaluate(xk).transpose() * u;
            blocks.omega(row, k) = xk;
            if (g_spec.family == BasisFamily::ChebyshevGap && std::abs(xk) > 1.0) {
                ++blocks.cheb_domain_violations;
            }
        }
    }

    const Matrix xi = blocks.concat();
    Eigen::JacobiSVD<Matrix> svd(xi);
    const auto& sv = svd.singularValues();
    const double smin = sv[sv.size() - 1];
    blocks.condition = smin > 0.0 ? sv[0] / smin
                                  : std::numeric_limits<double>::infinity();
    blocks.ill_conditioned = !(blocks.condition < 1e10);
    return blocks;
}

Vector stack_observations(const ExperimentBatch& batch) {
    const int p = batch.size();
    const int d = batch.state_dim();
    Vector X(static_cast<Eigen::Index>(d) * p);
    for (int i = 0; i < p; ++i) {
        X.segment(static_cast<Eigen::Index>(i) * d, d) = batch.records[i].x1;
    }
    return X;
}

} // namespace fods
