#ifndef ADE_LINALG_HPP
#define ADE_LINALG_HPP

// Exact linear algebra over the rationals, enough for small Cartan-type
// matrices: a fraction-free determinant and a Gauss-Jordan inverse.

#include <Eigen/Dense>

#include "ade/rational.hpp"

namespace ade {

using IntMatrix = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;

// Bareiss fraction-free elimination; every intermediate value stays integral.
Int determinant(const IntMatrix& a);

// Exact inverse; throws std::domain_error if the matrix is singular.
RationalMatrix inverse(const RationalMatrix& a);

// Plain product written out by hand. Eigen's own operator* cannot be used
// with this scalar: overload resolution probes Matrix -> scalar conversions,
// and boost 1.74's byte-container constructor trait hard-errors on any type
// whose const_iterator is not an iterator, which Eigen 3.4 matrices are.
RationalMatrix multiply(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace ade

#endif  // ADE_LINALG_HPP
