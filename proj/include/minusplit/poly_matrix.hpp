#pragma once

#include "minusplit/polynomial.hpp"

#include <vector>

namespace minusplit {

/// A homogeneous map ⊕O(source[k]) → ⊕O(target[j]); rows index the target,
/// columns the source. Entry (j,k) is zero or homogeneous of degree
/// target[j] - source[k]; a negative required degree forces zero.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(int nvars, std::vector<int> source_twists, std::vector<int> target_twists);

  static PolyMatrix identity(int nvars, const std::vector<int>& twists);

  int nvars() const { return nvars_; }
  Index rows() const { return static_cast<Index>(target_.size()); }
  Index cols() const { return static_cast<Index>(source_.size()); }
  const std::vector<int>& source_twists() const { return source_; }
  const std::vector<int>& target_twists() const { return target_; }

  int required_degree(Index r, Index c) const {
    return target_[static_cast<std::size_t>(r)] - source_[static_cast<std::size_t>(c)];
  }

  const Polynomial& operator()(Index r, Index c) const {
    return entries_[static_cast<std::size_t>(r * cols() + c)];
  }
  /// Throws std::invalid_argument when p does not fit the degree profile.
  void set(Index r, Index c, Polynomial p);

  bool is_zero() const;

  /// The dual map ⊕O(-target) → ⊕O(-source) (transposed matrix).
  PolyMatrix dual() const;

  /// Sets variable `var` to zero and drops it.
  PolyMatrix restrict_to_hyperplane(int var) const;

  RationalMatrix evaluate(const std::vector<Rational>& point) const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) = default;

 private:
  int nvars_ = 3;
  std::vector<int> source_;
  std::vector<int> target_;
  std::vector<Polynomial> entries_;
};

/// a ∘ b; requires b's target profile to equal a's source profile.
PolyMatrix compose(const PolyMatrix& a, const PolyMatrix& b);

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix operator*(const Rational& c, const PolyMatrix& a);

}  // namespace minusplit
