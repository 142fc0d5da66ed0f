#include "sparsekit/signal_model.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sparsekit/rng.hpp"

namespace sparsekit {

std::vector<Index> Rng::sample_without_replacement(Index n, Index k) {
    // Partial Fisher-Yates over [0, n).
    std::vector<Index> pool(static_cast<std::size_t>(n));
    for (Index i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i;
    std::vector<Index> out(static_cast<std::size_t>(k));
    for (Index i = 0; i < k; ++i) {
        const auto j = i + static_cast<Index>(below(static_cast<std::uint64_t>(n - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        out[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(i)];
    }
    std::sort(out.begin(), out.end());
    return out;
}

Matrix dct_synthesis_matrix(Index n) {
    // Analysis D has rows indexed by frequency k: D(k, i) = c_k cos(pi (2i+1) k / 2n).
    // The synthesis (inverse) transform is D^T.
    Matrix d(n, n);
    const double c0 = std::sqrt(1.0 / static_cast<double>(n));
    const double ck = std::sqrt(2.0 / static_cast<double>(n));
    for (Index k = 0; k < n; ++k)
        for (Index i = 0; i < n; ++i)
            d(k, i) = (k == 0 ? c0 : ck) *
                      std::cos(std::numbers::pi * (2.0 * static_cast<double>(i) + 1.0) *
                               static_cast<double>(k) / (2.0 * static_cast<double>(n)));
    return d.transpose();
}

SparseSignal gen_sparse_signal(Index n, Index s, std::uint64_t seed) {
    if (s < 1 || s > n)
        throw std::invalid_argument("gen_sparse_signal: need 1 <= s <= n");
    Rng rng(seed);
    SparseSignal sig;
    sig.support = rng.sample_without_replacement(n, s);
    sig.values = Vector::Zero(n);
    for (Index idx : sig.support) {
        double a = rng.normal();
        while (a == 0.0) a = rng.normal();
        sig.values[idx] = a;
    }
    return sig;
}

SensingOperator gen_sensing(OperatorKind kind, Index m, Index n, std::uint64_t seed,
                            SynthesisTransform synthesis) {
    if (m < 1 || m > n)
        throw std::invalid_argument("gen_sensing: need 1 <= m <= n");
    SensingOperator op;
    op.kind = kind;
    op.seed = seed;
    Rng rng(seed);
    if (kind == OperatorKind::gaussian) {
        op.matrix = rng.normal_matrix(m, n) / std::sqrt(static_cast<double>(m));
    } else {
        op.synthesis = synthesis;
        op.sample_rows = rng.sample_without_replacement(n, m);
        if (synthesis == SynthesisTransform::identity) {
            op.matrix = Matrix::Zero(m, n);
            for (Index i = 0; i < m; ++i) op.matrix(i, op.sample_rows[static_cast<std::size_t>(i)]) = 1.0;
        } else {
            const Matrix psi = dct_synthesis_matrix(n);
            op.matrix.resize(m, n);
            for (Index i = 0; i < m; ++i)
                op.matrix.row(i) = psi.row(op.sample_rows[static_cast<std::size_t>(i)]);
        }
    }
    return op;
}

MeasurementSet measure(const SensingOperator& op, const Vector& x) {
    if (x.size() != op.cols())
        throw std::invalid_argument("measure: signal length does not match operator");
    require_finite(x, "measure: x");
    MeasurementSet ms;
    ms.y = op.matrix * x;
    return ms;
}

MeasurementSet add_noise_at_snr(const Vector& y, double snr_db, std::uint64_t seed) {
    require_finite(y, "add_noise_at_snr: y");
    if (!std::isfinite(snr_db))
        throw std::invalid_argument("add_noise_at_snr: snr_db must be finite");
    const double ny = y.norm();
    if (ny == 0.0)
        throw std::invalid_argument("add_noise_at_snr: SNR undefined for zero signal");
    Rng rng(seed);
    Vector noise = rng.normal_vector(y.size());
    const double nn = noise.norm();
    noise *= (ny / nn) * std::pow(10.0, -snr_db / 20.0);
    MeasurementSet ms;
    ms.y = y + noise;
    ms.input_snr_db = snr_db;
    ms.noise_seed = seed;
    return ms;
}

namespace {

double snr_from_norms(double ref_norm, double err_norm) {
    if (ref_norm == 0.0)
        throw std::invalid_argument("snr_db: zero reference");
    if (err_norm == 0.0) return kInfiniteSnr;
    return 20.0 * std::log10(ref_norm / err_norm);
}

} // namespace

double snr_db(const Vector& reference, const Vector& estimate) {
    if (reference.size() != estimate.size())
        throw std::invalid_argument("snr_db: shape mismatch");
    return snr_from_norms(reference.norm(), (reference - estimate).norm());
}

double snr_db(const Matrix& reference, const Matrix& estimate) {
    if (reference.rows() != estimate.rows() || reference.cols() != estimate.cols())
        throw std::invalid_argument("snr_db: shape mismatch");
    return snr_from_norms(reference.norm(), (reference - estimate).norm());
}

double rmse(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("rmse: shape mismatch");
    const double count = static_cast<double>(a.size());
    return (a - b).norm() / std::sqrt(count);
}

double rmse(const Matrix& a, const Matrix& b,
            const std::vector<std::pair<Index, Index>>& mask) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("rmse: shape mismatch");
    if (mask.empty()) throw std::invalid_argument("rmse: empty mask");
    double ss = 0.0;
    for (const auto& [i, j] : mask) {
        const double d = a(i, j) - b(i, j);
        ss += d * d;
    }
    return std::sqrt(ss / static_cast<double>(mask.size()));
}

Matrix gen_low_rank(Index m, Index n, Index r, std::uint64_t seed) {
    if (r < 1 || r > std::min(m, n))
        throw std::invalid_argument("gen_low_rank: need 1 <= r <= min(m, n)");
    Rng rng(seed);
    Matrix out = rng.normal_matrix(m, r) * rng.normal_matrix(r, n);
    const double rms = out.norm() / std::sqrt(static_cast<double>(m * n));
    return out / rms;
}

double coherence(const Matrix& phi) {
    require_finite(phi, "coherence: input");
    const Index n = phi.cols();
    Vector norms(n);
    for (Index j = 0; j < n; ++j) {
        norms[j] = phi.col(j).norm();
        if (norms[j] == 0.0)
            throw std::invalid_argument("coherence: zero column");
    }
    double mu = 0.0;
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            mu = std::max(mu, std::abs(phi.col(i).dot(phi.col(j))) / (norms[i] * norms[j]));
    return mu;
}

CompletionProblem subsample_matrix(const Matrix& m, double missing_fraction,
                                   std::uint64_t seed) {
    if (missing_fraction < 0.0 || missing_fraction >= 1.0)
        throw std::invalid_argument("subsample_matrix: missing_fraction in [0, 1)");
    require_finite(m, "subsample_matrix: input");
    const Index total = m.size();
    const auto kept = static_cast<Index>(std::llround((1.0 - missing_fraction) *
                                                      static_cast<double>(total)));
    if (kept < 1) throw std::invalid_argument("subsample_matrix: empty observation set");
    Rng rng(seed);
    const std::vector<Index> flat = rng.sample_without_replacement(total, kept);
    CompletionProblem problem;
    problem.observed = Matrix::Zero(m.rows(), m.cols());
    problem.omega.reserve(static_cast<std::size_t>(kept));
    for (Index f : flat) {
        const Index i = f / m.cols();
        const Index j = f % m.cols();
        problem.omega.emplace_back(i, j);
        problem.observed(i, j) = m(i, j);
    }
    problem.true_matrix = m;
    return problem;
}

} // namespace sparsekit
