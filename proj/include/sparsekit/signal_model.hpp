#ifndef SPARSEKIT_SIGNAL_MODEL_HPP
#define SPARSEKIT_SIGNAL_MODEL_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "sparsekit/types.hpp"

namespace sparsekit {

struct SparseSignal {
    Vector values;
    std::vector<Index> support;  // ascending indices of the nonzeros
};

enum class OperatorKind { gaussian, random_sampling };
enum class SynthesisTransform { identity, dct };

/// An m x n measurement map. Gaussian operators have i.i.d. N(0, 1/m)
/// entries; random-sampling operators select m distinct rows of an
/// orthonormal synthesis transform, so phi * phi^T = I.
struct SensingOperator {
    OperatorKind kind = OperatorKind::gaussian;
    Matrix matrix;
    std::vector<Index> sample_rows;                       // random-sampling only
    SynthesisTransform synthesis = SynthesisTransform::identity;  // random-sampling only
    std::uint64_t seed = 0;

    Index rows() const { return matrix.rows(); }
    Index cols() const { return matrix.cols(); }
};

constexpr double kInfiniteSnr = std::numeric_limits<double>::infinity();

struct MeasurementSet {
    Vector y;
    double input_snr_db = kInfiniteSnr;
    std::optional<std::uint64_t> noise_seed;
};

struct CompletionProblem {
    Matrix observed;                               // zero outside omega
    std::vector<std::pair<Index, Index>> omega;    // observed (row, col), sorted
    std::optional<Matrix> true_matrix;             // benchmarks only
};

/// Orthonormal DCT-II synthesis matrix (maps DCT coefficients to samples).
Matrix dct_synthesis_matrix(Index n);

SparseSignal gen_sparse_signal(Index n, Index s, std::uint64_t seed);

SensingOperator gen_sensing(OperatorKind kind, Index m, Index n, std::uint64_t seed,
                            SynthesisTransform synthesis = SynthesisTransform::dct);

MeasurementSet measure(const SensingOperator& op, const Vector& x);

/// Adds Gaussian noise scaled so the realized ratio ||y|| / ||noise|| hits
/// `snr_db` exactly (not just in expectation).
MeasurementSet add_noise_at_snr(const Vector& y, double snr_db, std::uint64_t seed);

double snr_db(const Vector& reference, const Vector& estimate);
double snr_db(const Matrix& reference, const Matrix& estimate);

double rmse(const Matrix& a, const Matrix& b);
double rmse(const Matrix& a, const Matrix& b,
            const std::vector<std::pair<Index, Index>>& mask);

Matrix gen_low_rank(Index m, Index n, Index r, std::uint64_t seed);

double coherence(const Matrix& phi);

CompletionProblem subsample_matrix(const Matrix& m, double missing_fraction,
                                   std::uint64_t seed);

} // namespace sparsekit

#endif
