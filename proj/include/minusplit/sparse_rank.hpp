#pragma once

// Exact rank of large, structurally sparse rational matrices (the assembled
// cohomology and Cech matrices). Rows are scaled to primitive integer vectors
// and eliminated fraction-free with a Markowitz-style pivot choice; every row
// update divides out the content, so no rational arithmetic happens after the
// initial scaling.

#include "minusplit/scalar.hpp"

#include <Eigen/Sparse>

namespace minusplit {

using SparseRationalMatrix = Eigen::SparseMatrix<Rational, Eigen::RowMajor>;
using RationalTriplet = Eigen::Triplet<Rational>;

Index sparse_rank(const SparseRationalMatrix& m);

SparseRationalMatrix to_sparse(const RationalMatrix& m);

}  // namespace minusplit
