#pragma once

// Root systems of types A_n, B_n, C_n, D_n, E6 and E7 in their standard
// epsilon-coordinate realizations, with Bourbaki node numbering.
//
// Conventions:
//  * A_n lives in the sum-zero hyperplane of Q^{n+1}; B_n, C_n, D_n in Q^n;
//    E6 and E7 are spanned by the first simple roots of E8 inside Q^8.
//  * The invariant form is the standard dot product. Simply-laced roots have
//    squared length 2; in B_n and C_n every coroot is an integral vector.
//  * cartan_matrix()(i, j) = <alpha_i, alpha_j^vee>.
//  * Nodes are 1-based in the public API (node k is simple root k-1).

#include "minusplit/scalar.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minusplit {

enum class CartanType { A, B, C, D, E };

char to_char(CartanType t);

class UnsupportedTypeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A root with its ambient coordinates and its coefficients in the basis of
/// simple roots.
struct RootVector {
  RationalVector coords;
  IntVector coefficients;
  int height = 0;
};

class RootSystem;
using RootSystemPtr = std::shared_ptr<const RootSystem>;

class RootSystem {
 public:
  CartanType type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const;
  Index ambient_dim() const { return form_.rows(); }

  const std::vector<RationalVector>& simple_roots() const { return simple_roots_; }
  const std::vector<RootVector>& positive_roots() const { return positive_roots_; }
  const IntMatrix& cartan_matrix() const { return cartan_; }
  const std::vector<RationalVector>& fundamental_weights() const { return fundamental_weights_; }
  const RationalMatrix& form() const { return form_; }

  Rational pairing(const RationalVector& x, const RationalVector& y) const;
  RationalVector combination(const IntVector& coefficients) const;

  /// Index in positive_roots() of the root with these simple-root
  /// coefficients, or -1.
  Index find_positive_root(const IntVector& coefficients) const;

  bool same_system(const RootSystem& o) const { return type_ == o.type_ && rank_ == o.rank_; }

  friend RootSystemPtr build_root_system(CartanType type, int rank);

 private:
  RootSystem() = default;

  CartanType type_ = CartanType::A;
  int rank_ = 0;
  std::vector<RationalVector> simple_roots_;
  std::vector<RootVector> positive_roots_;
  IntMatrix cartan_;
  std::vector<RationalVector> fundamental_weights_;
  RationalMatrix form_;
};

/// Throws UnsupportedTypeError outside A_n (n>=1), B_n (n>=2), C_n (n>=2),
/// D_n (n>=3), E6, E7.
RootSystemPtr build_root_system(CartanType type, int rank);
RootSystemPtr build_root_system(std::string_view type_letter, int rank);

/// 2β/(β,β). Throws std::invalid_argument("not a root") unless ±β is a root.
RationalVector coroot(const RationalVector& beta, const RootSystem& rs);

/// (omega_node, beta^vee) for a positive root.
Rational weight_coroot_pairing(const RootSystem& rs, int node, const RootVector& beta);

/// Nodes (1-based) whose fundamental weight pairs to 0 or 1 with every
/// positive coroot.
std::vector<int> minuscule_nodes(const RootSystem& rs);
bool is_minuscule(const RootSystem& rs, int node);

/// Dimension of the simple group of this type (used for root-count checks).
int group_dimension(CartanType type, int rank);

}  // namespace minusplit
