#ifndef ADE_RATIONAL_HPP
#define ADE_RATIONAL_HPP

// Exact scalar types shared by the whole library. Rationals are arbitrary
// precision: inverse Cartan entries and cyclotomic coefficients must never
// saturate a fixed-width type.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace ade {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

}  // namespace ade

#endif  // ADE_RATIONAL_HPP
