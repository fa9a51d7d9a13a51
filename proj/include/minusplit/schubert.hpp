#pragma once

// Schubert classes on G/P indexed by codimension: X(w) has codimension
// length(w) for w in W^P. The class of the identity is the fundamental class,
// the class of w_0^P is the point.

#include "minusplit/weyl.hpp"

#include <map>
#include <string>
#include <vector>

namespace minusplit {

struct SchubertClass {
  Index rep = 0;  // index into CosetPoset::reps()
  int codim = 0;
  int dim = 0;

  friend auto operator<=>(const SchubertClass&, const SchubertClass&) = default;
};

/// Integer formal sum of Schubert classes of one poset, keyed by rep index.
struct CycleClass {
  std::map<Index, Integer> terms;

  Integer max_coefficient() const;
  friend bool operator==(const CycleClass&, const CycleClass&) = default;
};

SchubertClass schubert_class(const CosetPoset& poset, Index rep);

/// D · X(w) = Σ (omega, beta^vee) X(w s_beta) over the Hasse covers of w.
CycleClass pieri_product(const CosetPoset& poset, const SchubertClass& w);

/// Coefficient (omega_node, beta^vee) carried by a cover.
Integer pieri_coefficient(const CosetPoset& poset, const Cover& cover);

/// Classes of dimension exactly d. Throws std::out_of_range for d outside
/// [0, dim G/P].
std::vector<SchubertClass> x_d(const CosetPoset& poset, int d);

/// The codimension-one Schubert subvarieties of X(w). Throws
/// std::invalid_argument for the point class.
std::vector<SchubertClass> boundary(const CosetPoset& poset, const SchubertClass& w);

/// Degree of X(w) in the minimal embedding: the number of saturated Hasse
/// chains from w down to the point. Minuscule nodes only; throws
/// std::domain_error otherwise.
Integer degree(const CosetPoset& poset, const SchubertClass& w);

/// Number of saturated chains from the fundamental class to X(w).
Integer chains_from_fundamental(const CosetPoset& poset, Index rep);

/// Components of X(w1) ∩ X(w2): the minimal common upper bounds of w1, w2 in
/// the codimension order (reduced decomposition only).
std::vector<SchubertClass> intersect_schubert(const CosetPoset& poset, const SchubertClass& w1,
                                              const SchubertClass& w2);

inline constexpr const char* kVerdictPlane = "P2";
inline constexpr const char* kVerdictWedge = "P2 wedge P2 along line";
inline constexpr const char* kVerdictOther = "other";

struct X2Intersection {
  Index first = 0;  // positions in X2Report::components
  Index second = 0;
  std::vector<SchubertClass> classes;
};

struct X2Report {
  std::string system;
  int node = 0;
  int variety_dim = 0;
  std::vector<SchubertClass> components;
  std::vector<Integer> degrees;
  std::vector<X2Intersection> intersections;
  bool connected = false;
  std::string verdict;
};

/// Structure of the union of two-dimensional Schubert varieties. "P2" means a
/// single component of degree one; "P2 wedge P2 along line" two degree-one
/// components meeting in exactly the Schubert line. Degree one in the
/// minimal embedding stands in for "is a linear plane".
/// Throws std::domain_error for a non-minuscule node.
X2Report classify_x2(RootSystemPtr rs, int node);

}  // namespace minusplit
