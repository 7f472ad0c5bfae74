#include "fods/experiment.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace fods {

void ExperimentBatch::validate() const {
    if (records.empty()) {
        throw std::invalid_argument("ExperimentBatch: needs at least one record");
    }
    const int d = state_dim();
    const int m = input_dim();
    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& r = records[i];
        if (r.x0.size() != d || r.x1.size() != d || r.u0.size() != m) {
            throw std::invalid_argument(
                "ExperimentBatch: dimension mismatch in record " +
                std::to_string(i + 1));
        }
    }
}

Matrix design_matrix(const std::vector<Vector>& inits) {
    if (inits.empty()) {
        throw std::invalid_argument("design_matrix: no initial states");
    }
    const int d = static_cast<int>(inits.front().size());
    const int p = static_cast<int>(inits.size());
    Matrix C = Matrix::Zero(static_cast<Eigen::Index>(d) * p, d);
    for (int i = 0; i < p; ++i) {
        if (inits[i].size() != d) {
            throw std::invalid_argument("design_matrix: inconsistent state dims");
        }
        for (int j = 0; j < d; ++j) {
            C(static_cast<Eigen::Index>(i) * d + j, j) = inits[i][j];
        }
    }
    return C;
}

void check_design_rank(const Matrix& design) {
    if (design.rows() < design.cols()) {
        throw std::invalid_argument(
            "design error: C has fewer rows than columns (dp < d)");
    }
    for (int j = 0; j < design.cols(); ++j) {
        if (design.col(j).norm() <= 1e-12) {
            throw std::invalid_argument(
                "design error: coordinate " + std::to_string(j + 1) +
                " of every initial state is (near) zero; C is rank deficient");
        }
    }
}

ExperimentBatch generate_batch(const DynamicsFn& dyn,
                               const FractionalOrder& order,
                               const std::vector<std::pair<Vector, Vector>>& inits,
                               const NoiseSpec& noise) {
    if (inits.empty()) {
        throw std::invalid_argument("generate_batch: no initial conditions");
    }
    noise.validate();
    const int d = order.dim();
    if (noise.dim() != d || dyn.state_dim != d) {
        throw std::invalid_argument("generate_batch: dimension mismatch");
    }
    const Vector sigma = noise.variance.array().sqrt();

    ExperimentBatch batch;
    batch.noise = noise;
    batch.truth = BatchTruth{order, dyn};
    batch.records.reserve(inits.size());

    for (std::size_t i = 0; i < inits.size(); ++i) {
        const auto& [x0, u0] = inits[i];
        ExperimentRecord rec;
        rec.x0 = x0;
        rec.u0 = u0;
        try {
            // x1 = f(x0) + g(x0) u0 + A x0 + w0, A = diag(alpha) = -psi(alpha, 1)
            rec.x1 = dyn.f(x0) + dyn.g(x0) * u0 +
                     (order.values().array() * x0.array()).matrix();
        } catch (const std::exception& e) {
            throw std::runtime_error("generate_batch: dynamics evaluation failed "
                                     "on record " + std::to_string(i + 1) + ": " +
                                     e.what());
        }
        Rng rng(derive_seed(noise.seed, static_cast<std::uint64_t>(i)));
        for (int c = 0; c < d; ++c) {
            rec.x1[c] += sigma[c] * rng.normal();
        }
        batch.records.push_back(std::move(rec));
    }
    batch.validate();
    return batch;
}

Vector RepeatedObservations::mean() const {
    if (samples.empty()) {
        throw std::invalid_argument("RepeatedObservations: no samples");
    }
    Vector acc = Vector::Zero(samples.front().size());
    for (const Vector& y : samples) {
        acc += y;
    }
    return acc / static_cast<double>(samples.size());
}

namespace {

struct RepeatedSetup {
    Matrix design;
    Vector clean;      // C beta
    Vector sigma_tile; // dp-dim noise std, K_w tiled over records
};

RepeatedSetup repeated_setup(const FractionalOrder& truth,
                             const std::vector<Vector>& design_inits,
                             int sample_count,
                             const NoiseSpec& noise) {
    if (sample_count < 1) {
        throw std::invalid_argument("generate_repeated: sample count must be >= 1");
    }
    noise.validate();
    const int d = truth.dim();
    if (noise.dim() != d) {
        throw std::invalid_argument("generate_repeated: noise dimension mismatch");
    }
    RepeatedSetup s;
    s.design = design_matrix(design_inits);
    if (s.design.cols() != d) {
        throw std::invalid_argument("generate_repeated: design/order dimension mismatch");
    }
    check_design_rank(s.design);
    s.clean = s.design * truth.values();
    const int p = static_cast<int>(design_inits.size());
    s.sigma_tile.resize(static_cast<Eigen::Index>(d) * p);
    const Vector sd = noise.variance.array().sqrt();
    for (int i = 0; i < p; ++i) {
        s.sigma_tile.segment(static_cast<Eigen::Index>(i) * d, d) = sd;
    }
    return s;
}

Vector draw_sample(const RepeatedSetup& s, const NoiseSpec& noise, int k) {
    Rng rng(derive_seed(noise.seed, static_cast<std::uint64_t>(k)));
    Vector y = s.clean;
    for (int c = 0; c < y.size(); ++c) {
        y[c] += s.sigma_tile[c] * rng.normal();
    }
    return y;
}

} // namespace

RepeatedObservations generate_repeated(const FractionalOrder& truth,
                                       const std::vector<Vector>& design_inits,
                                       int sample_count,
                                       const NoiseSpec& noise) {
    const RepeatedSetup s = repeated_setup(truth, design_inits, sample_count, noise);
    RepeatedObservations obs;
    obs.design = s.design;
    obs.noise = noise;
    obs.samples.reserve(sample_count);
    for (int k = 0; k < sample_count; ++k) {
        obs.samples.push_back(draw_sample(s, noise, k));
    }
    return obs;
}

Vector repeated_mean(const FractionalOrder& truth,
                     const std::vector<Vector>& design_inits,
                     int sample_count,
                     const NoiseSpec& noise) {
    const RepeatedSetup s = repeated_setup(truth, design_inits, sample_count, noise);
    Vector acc = Vector::Zero(s.clean.size());
    for (int k = 0; k < sample_count; ++k) {
        acc += draw_sample(s, noise, k);
    }
    return acc / static_cast<double>(sample_count);
}

std::vector<Vector> draw_states(Rng& rng, int count, int dim,
                                const Vector& lo, const Vector& hi) {
    if (!(lo.size() == 1 || lo.size() == dim) ||
        !(hi.size() == 1 || hi.size() == dim)) {
        throw std::invalid_argument("draw_states: bound size must be 1 or dim");
    }
    auto bound = [](const Vector& v, int j) {
        return v.size() == 1 ? v[0] : v[j];
    };
    std::vector<Vector> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Vector x(dim);
        for (int j = 0; j < dim; ++j) {
            x[j] = rng.uniform(bound(lo, j), bound(hi, j));
        }
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<Vector> draw_inputs(Rng& rng, int count, int dim,
                                double lo, double hi) {
    std::vector<Vector> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) {
        Vector u(dim);
        for (int j = 0; j < dim; ++j) {
            u[j] = rng.uniform(lo, hi);
        }
        out.push_back(std::move(u));
    }
    return out;
}

} // namespace fods
