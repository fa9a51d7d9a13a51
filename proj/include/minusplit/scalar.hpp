#pragma once

// Exact scalar types and the dense Eigen aliases used throughout the library.
// Everything is exact: GMP-backed integers and rationals, expression templates
// disabled so that Eigen sees plain value types.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <string>

namespace minusplit {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RationalMatrix = Matrix<Rational>;
using RationalVector = Vector<Rational>;
using IntegerMatrix = Matrix<Integer>;
using IntMatrix = Eigen::MatrixXi;
using IntVector = Eigen::VectorXi;

using Index = Eigen::Index;

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace minusplit
