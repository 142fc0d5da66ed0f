#ifndef SPARSEKIT_NUMERICS_HPP
#define SPARSEKIT_NUMERICS_HPP

#include "sparsekit/types.hpp"

namespace sparsekit {

/// Thin SVD M = U diag(singular_values) V^T with singular values in
/// non-increasing order.
struct SvdFactors {
    Matrix U;
    Vector singular_values;
    Matrix V;

    Matrix reconstruct() const { return U * singular_values.asDiagonal() * V.transpose(); }
};

SvdFactors svd(const Matrix& m);

/// Moore-Penrose pseudo-inverse. `rank_tol` is relative to the largest
/// singular value; negative means the default max(rows, cols) * eps.
Matrix pseudo_inverse(const Matrix& m, double rank_tol = -1.0);

/// P = I - pinv(phi) * phi, the orthogonal projector onto null(phi).
Matrix null_space_projector(const Matrix& phi, double rank_tol = -1.0);

/// argmin_x ||y - phi x||^2 + mu ||x||^2. mu = 0 falls back to the
/// pseudo-inverse solution.
Vector tikhonov_solve(const Matrix& phi, const Vector& y, double mu);

/// Replaces every singular value sigma_i by max(sigma_i - mu, 0).
Matrix soft_threshold_singular(const Matrix& x, double mu);

} // namespace sparsekit

#endif
