#ifndef SPARSEKIT_TYPES_HPP
#define SPARSEKIT_TYPES_HPP

#include <Eigen/Dense>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sparsekit {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Thrown when a numeric routine cannot produce a valid result
/// (factorization failure, bound undefined, infeasible search).
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

inline void require_finite(const Matrix& m, const char* name) {
    if (!m.allFinite())
        throw std::invalid_argument(std::string(name) + ": non-finite entries");
}

inline void require_finite(const Vector& v, const char* name) {
    if (!v.allFinite())
        throw std::invalid_argument(std::string(name) + ": non-finite entries");
}

} // namespace sparsekit

#endif
