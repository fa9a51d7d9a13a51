#pragma once

// Dense exact linear algebra over Q.
//
// Elimination is fraction-free (Bareiss) over the integers: a rational input is
// first scaled row by row to an integer matrix of the same rank and row space,
// eliminated without any division except the exact Bareiss quotient, and only
// the final back-substitution for kernels returns to rationals.

#include "minusplit/scalar.hpp"

#include <vector>

namespace minusplit {

/// Row echelon form produced by Bareiss elimination. `rows` holds the
/// eliminated integer matrix (rows past `pivots.size()` are zero).
struct EchelonForm {
  IntegerMatrix rows;
  std::vector<Index> pivots;  // pivot column of each nonzero row

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

/// Multiplies every row by the lcm of its denominators.
IntegerMatrix clear_denominators(const RationalMatrix& m);

EchelonForm bareiss_echelon(IntegerMatrix m);

Index rank(const IntegerMatrix& m);
Index rank(const RationalMatrix& m);

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if constexpr (std::is_same_v<Scalar, Integer>) {
    return rank(IntegerMatrix(m));
  } else if constexpr (std::is_same_v<Scalar, Rational>) {
    return rank(RationalMatrix(m));
  } else {
    return rank(IntegerMatrix(m.template cast<Integer>()));
  }
}

/// Columns form a basis of {x : m x = 0}. Each basis vector has a 1 in its
/// free coordinate and zeros in the other free coordinates.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Rows form a basis of {y : y m = 0}.
RationalMatrix left_kernel_basis(const RationalMatrix& m);

inline Index kernel_dim(const RationalMatrix& m) { return m.cols() - rank(m); }
inline Index cokernel_dim(const RationalMatrix& m) { return m.rows() - rank(m); }

/// A basis (as columns) of the column space, chosen among the columns of m.
RationalMatrix column_space_basis(const RationalMatrix& m);

/// Solves m x = b exactly; returns false when the system is inconsistent.
bool solve(const RationalMatrix& m, const RationalVector& b, RationalVector& x);

/// R with m R = I, for m of full row rank.
RationalMatrix right_inverse(const RationalMatrix& m);
/// L with L m = I, for m of full column rank.
RationalMatrix left_inverse(const RationalMatrix& m);

// Univariate polynomials over Q, coefficients in increasing degree.
using UniPoly = std::vector<Rational>;

UniPoly characteristic_polynomial(const RationalMatrix& m);
UniPoly poly_gcd(UniPoly a, UniPoly b);
UniPoly derivative(const UniPoly& p);
/// True when p has deg(p) distinct complex roots (p and p' coprime).
bool is_squarefree(const UniPoly& p);

}  // namespace minusplit
