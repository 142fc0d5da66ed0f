#include "sparsekit/numerics.hpp"

#include <Eigen/SVD>
#include <Eigen/Cholesky>
#include <limits>

namespace sparsekit {

namespace {

double default_rank_tol(const Matrix& m) {
    return static_cast<double>(std::max(m.rows(), m.cols())) *
           std::numeric_limits<double>::epsilon();
}

} // namespace

SvdFactors svd(const Matrix& m) {
    require_finite(m, "svd: input");
    Eigen::BDCSVD<Matrix> dec(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (dec.info() != Eigen::Success)
        throw NumericError("svd: factorization did not converge");
    return SvdFactors{dec.matrixU(), dec.singularValues(), dec.matrixV()};
}

Matrix pseudo_inverse(const Matrix& m, double rank_tol) {
    require_finite(m, "pseudo_inverse: input");
    if (rank_tol < 0.0) rank_tol = default_rank_tol(m);
    SvdFactors f = svd(m);
    const double cutoff = f.singular_values.size() > 0
                              ? rank_tol * f.singular_values[0]
                              : 0.0;
    Vector inv = Vector::Zero(f.singular_values.size());
    for (Index i = 0; i < inv.size(); ++i)
        if (f.singular_values[i] > cutoff) inv[i] = 1.0 / f.singular_values[i];
    return f.V * inv.asDiagonal() * f.U.transpose();
}

Matrix null_space_projector(const Matrix& phi, double rank_tol) {
    require_finite(phi, "null_space_projector: input");
    if (rank_tol < 0.0) rank_tol = default_rank_tol(phi);
    SvdFactors f = svd(phi);
    const double cutoff = f.singular_values.size() > 0
                              ? rank_tol * f.singular_values[0]
                              : 0.0;
    Index rank = 0;
    while (rank < f.singular_values.size() && f.singular_values[rank] > cutoff) ++rank;
    const Index n = phi.cols();
    // I - V_r V_r^T keeps the projector exactly symmetric.
    return Matrix::Identity(n, n) - f.V.leftCols(rank) * f.V.leftCols(rank).transpose();
}

Vector tikhonov_solve(const Matrix& phi, const Vector& y, double mu) {
    require_finite(phi, "tikhonov_solve: phi");
    require_finite(y, "tikhonov_solve: y");
    if (mu < 0.0) throw std::invalid_argument("tikhonov_solve: mu must be >= 0");
    if (y.size() != phi.rows())
        throw std::invalid_argument("tikhonov_solve: dimension mismatch");
    if (mu == 0.0) return pseudo_inverse(phi) * y;
    const Index n = phi.cols();
    Matrix normal = phi.transpose() * phi;
    normal.diagonal().array() += mu;
    Eigen::LDLT<Matrix> chol(normal);
    if (chol.info() != Eigen::Success)
        throw NumericError("tikhonov_solve: factorization failed");
    return chol.solve(phi.transpose() * y);
}

Matrix soft_threshold_singular(const Matrix& x, double mu) {
    require_finite(x, "soft_threshold_singular: input");
    if (mu < 0.0) throw std::invalid_argument("soft_threshold_singular: mu must be >= 0");
    if (mu == 0.0) return x;
    SvdFactors f = svd(x);
    Vector shrunk = (f.singular_values.array() - mu).max(0.0);
    return f.U * shrunk.asDiagonal() * f.V.transpose();
}

} // namespace sparsekit
