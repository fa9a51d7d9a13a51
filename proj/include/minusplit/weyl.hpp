#pragma once

// Weyl group elements and parabolic quotients W^P.
//
// An element is stored as its action on the root lattice in simple-root
// coordinates (column j holds the coefficients of w(alpha_j)). That integer
// matrix is canonical, so equality and hashing never look at words; a reduced
// word is recovered from the matrix by peeling right descents.

#include "minusplit/rootsys.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <unordered_map>
#include <vector>

namespace minusplit {

class WeylElement {
 public:
  static WeylElement identity(RootSystemPtr rs);
  /// Simple reflection s_i, i 0-based.
  static WeylElement simple_reflection(RootSystemPtr rs, int i);
  static WeylElement from_word(RootSystemPtr rs, const std::vector<int>& word);
  /// Reflection in a positive root.
  static WeylElement reflection(RootSystemPtr rs, const RootVector& beta);
  /// Wraps an action matrix that is known to come from a group element.
  static WeylElement from_action(RootSystemPtr rs, IntMatrix action);

  const RootSystemPtr& system() const { return system_; }
  const IntMatrix& action() const { return action_; }
  /// A reduced word, 0-based simple-reflection indices, leftmost factor first.
  const std::vector<int>& word() const { return word_; }
  int length() const { return static_cast<int>(word_.size()); }

  IntVector apply(const IntVector& root_coefficients) const { return action_ * root_coefficients; }
  /// True when w(alpha_i) is a negative root.
  bool has_right_descent(int i) const;

  WeylElement inverse() const;

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.action_ == b.action_; }

  std::size_t hash() const;
  std::string word_string() const;

 private:
  WeylElement(RootSystemPtr rs, IntMatrix action);

  RootSystemPtr system_;
  IntMatrix action_;
  std::vector<int> word_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const { return w.hash(); }
};

/// a·b. Throws std::invalid_argument for elements of different systems.
WeylElement multiply(const WeylElement& a, const WeylElement& b);

/// Number of positive roots sent to negative roots.
int inversion_count(const WeylElement& w);

/// Rational matrix of w acting on the ambient space (product of reflections).
RationalMatrix ambient_action(const WeylElement& w);

/// Longest element of the parabolic subgroup generated by `nodes` (1-based).
/// An empty set gives the identity.
WeylElement longest_element(RootSystemPtr rs, const std::vector<int>& nodes);

std::vector<int> all_nodes(const RootSystem& rs);
std::vector<int> levi_nodes(const RootSystem& rs, int node);

/// Minimal-length representative of u W_P, W_P generated by `levi` (1-based).
WeylElement min_coset_representative(const WeylElement& u, const std::vector<int>& levi);

/// Covering relation w → w' = w·s_beta of the Bruhat order on W^P.
struct Cover {
  Index from = 0;
  Index to = 0;
  Index root = 0;  // index of beta in positive_roots()
};

/// W^P for the maximal parabolic P defined by omitting `node`, with its
/// Hasse diagram and the (reflexive) Bruhat order. Representatives are stored
/// in breadth-first order, so lengths are non-decreasing; index 0 is the
/// identity and the last index is w_0^P. Immutable after construction.
class CosetPoset {
 public:
  const RootSystemPtr& system() const { return system_; }
  int node() const { return node_; }
  const std::vector<int>& levi() const { return levi_; }

  Index size() const { return static_cast<Index>(reps_.size()); }
  const WeylElement& rep(Index i) const { return reps_[static_cast<std::size_t>(i)]; }
  const std::vector<WeylElement>& reps() const { return reps_; }
  int length(Index i) const { return rep(i).length(); }
  int max_length() const { return reps_.back().length(); }

  /// Index of w in W^P or -1.
  Index find(const WeylElement& w) const;

  const std::vector<Cover>& covers() const { return covers_; }
  const std::vector<Index>& successors(Index i) const { return succ_[static_cast<std::size_t>(i)]; }
  const std::vector<Index>& predecessors(Index i) const { return pred_[static_cast<std::size_t>(i)]; }
  /// The cover i → j, or nullptr.
  const Cover* cover(Index i, Index j) const;

  /// u ≥ i in the Bruhat order (reflexive), as a bitset over indices.
  const boost::dynamic_bitset<>& upper_set(Index i) const { return upper_[static_cast<std::size_t>(i)]; }
  bool leq(Index i, Index j) const { return upper_set(i).test(static_cast<std::size_t>(j)); }

  const WeylElement& w0() const { return w0_; }
  const WeylElement& w0_levi() const { return w0_levi_; }
  const WeylElement& w0_upper() const { return reps_.back(); }

  /// Number of representatives of each length 0..max_length.
  std::vector<long> rank_sizes() const;

  friend CosetPoset coset_reps(RootSystemPtr rs, int node);

 private:
  CosetPoset() = default;

  RootSystemPtr system_;
  int node_ = 0;
  std::vector<int> levi_;
  std::vector<WeylElement> reps_;
  std::unordered_map<WeylElement, Index, WeylElementHash> index_;
  std::vector<Cover> covers_;
  std::vector<std::vector<Index>> succ_;
  std::vector<std::vector<Index>> pred_;
  std::vector<boost::dynamic_bitset<>> upper_;
  WeylElement w0_ = WeylElement::identity(nullptr);
  WeylElement w0_levi_ = WeylElement::identity(nullptr);
};

/// Breadth-first construction of W^P by left multiplication with simple
/// reflections, keeping minimal representatives only.
CosetPoset coset_reps(RootSystemPtr rs, int node);

/// Poincaré duality on W^P: the minimal representative of w_0 · w · w_{0,P}.
/// Returns its index. Throws std::invalid_argument when w is not in W^P.
Index duality(const CosetPoset& poset, const WeylElement& w);
Index duality(const CosetPoset& poset, Index i);

const std::vector<Cover>& hasse_edges(const CosetPoset& poset);

}  // namespace minusplit
