#pragma once

// Sheaf cohomology on P^2 (and on the line P^1) of bundles presented by short
// complexes of sums of twisted line bundles.
//
// A FreeComplex is quasi-isomorphic to the bundle it presents, sitting in
// degree 0. Its hypercohomology is read off the spectral sequence with
// E1^{p,q} = H^q(T^p(t)): only the rows q = 0 and q = top are nonzero, the
// horizontal differentials are the induced maps on H^0 and H^top, and for at
// most top+1 terms no higher differential can connect the two rows.

#include "minusplit/poly_matrix.hpp"
#include "minusplit/sparse_rank.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace minusplit {

struct LineBundleSum {
  std::vector<int> twists;

  Index rank() const { return static_cast<Index>(twists.size()); }
  LineBundleSum twisted(int t) const;
  LineBundleSum dual() const;

  friend bool operator==(const LineBundleSum&, const LineBundleSum&) = default;
};

enum class PresentationKind { Kernel, Cokernel, Monad };

std::string to_string(PresentationKind k);
/// "kernel", "cokernel" or "monad"; throws std::invalid_argument otherwise.
PresentationKind parse_presentation_kind(std::string_view s);

/// T^0 -> T^1 (kernel, degrees 0,1), T^-1 -> T^0 (cokernel, degrees -1,0) or
/// T^-1 -> T^0 -> T^1 (monad). maps[k] goes from terms[k] to terms[k+1].
struct FreeComplex {
  PresentationKind kind = PresentationKind::Cokernel;
  int nvars = 3;
  std::vector<LineBundleSum> terms;
  std::vector<PolyMatrix> maps;

  int first_degree() const { return kind == PresentationKind::Kernel ? 0 : -1; }
  /// The term in degree 0 (the bundle is a sub of it for kernels and a
  /// quotient of it for cokernels).
  const LineBundleSum& degree_zero_term() const;
  long rank() const;

  friend bool operator==(const FreeComplex&, const FreeComplex&) = default;
};

FreeComplex kernel_presentation(PolyMatrix phi);
FreeComplex cokernel_presentation(PolyMatrix phi);
/// Throws std::invalid_argument when b's source profile is not a's target.
FreeComplex monad(PolyMatrix a, PolyMatrix b);
/// ⊕O(a_i), as the cokernel of the map from the empty sum.
FreeComplex split_bundle(const std::vector<int>& twists, int nvars = 3);

/// Presentation of the dual bundle (kernels and cokernels swap).
FreeComplex dual(const FreeComplex& c);
FreeComplex twisted(const FreeComplex& c, int t);

/// Thrown for presentations that violate their kind's invariants.
class PresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Thrown by the Cech engine when no stable cutoff is found below the cap.
class CutoffExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CohomologyDims {
  long h0 = 0;
  long h1 = 0;
  long h2 = 0;

  long euler() const { return h0 - h1 + h2; }
  friend bool operator==(const CohomologyDims&, const CohomologyDims&) = default;
};

/// Line bundle cohomology on P^{nvars-1}; Bott's formula on P^2.
CohomologyDims line_bundle_cohomology(int nvars, int d);
inline CohomologyDims bott(int d) { return line_bundle_cohomology(3, d); }
CohomologyDims sum_cohomology(int nvars, const LineBundleSum& s, int twist);

enum class CohomologyDegree { H0, Top };

/// Matrix of H^q(φ(twist)) in monomial bases (H^0) or in bases of Laurent
/// monomials with every exponent <= -1 (H^top). Columns follow the source
/// summands in order, rows the target summands.
RationalMatrix induced_map(const PolyMatrix& phi, CohomologyDegree q, int twist);
/// Same, after checking φ's profile against explicit source and target sums.
RationalMatrix induced_map(const PolyMatrix& phi, const LineBundleSum& source, const LineBundleSum& target,
                           CohomologyDegree q, int twist);
SparseRationalMatrix induced_map_sparse(const PolyMatrix& phi, CohomologyDegree q, int twist);

struct ChernData {
  long rank = 0;
  long c1 = 0;
  Rational ch2;  // Σ (-1)^p Σ a^2 / 2

  Rational c2() const { return (Rational(c1) * c1 - 2 * ch2) / 2; }
};

ChernData chern_data(const FreeComplex& c);
/// χ(V(t)) by Riemann–Roch: rk + c1 on P^1, rk + (3/2) c1 + ch2 on P^2.
Rational riemann_roch(const ChernData& ch, int twist, int nvars = 3);

enum class Engine { Graded, Cech };

std::string to_string(Engine e);
Engine parse_engine(std::string_view s);

struct CohomologyOptions {
  Engine engine = Engine::Graded;
  /// Check composition and local freeness before computing.
  bool validate = true;
  int max_cutoff = 64;
  /// How many twists past global generation the surjectivity search tries.
  int surjectivity_search = 24;
};

struct CutoffCertificate {
  int cutoff = 0;
  CohomologyDims at_cutoff;
  CohomologyDims at_next;
};

struct CohomologyResult {
  CohomologyDims dims;
  Engine engine = Engine::Graded;
  std::optional<CutoffCertificate> cutoff;  // present for the Cech engine
  Rational euler_characteristic;            // Riemann–Roch value, equal to dims.euler()
};

/// Verifies the kind's invariants: composition zero ("not a complex") and
/// local freeness ("presentation not locally free"). Local freeness is
/// certified exactly: a map of line-bundle sums is surjective as a sheaf map
/// iff H^0 of it is surjective at some twist where the target is globally
/// generated. Cokernels and monads test the dual of their injective map.
void validate(const FreeComplex& c, int surjectivity_search = 24);

/// True when φ is surjective as a map of sheaves, found within `search`
/// twists past global generation of its target.
bool is_sheaf_surjective(const PolyMatrix& phi, int search = 24);

/// h^i of the presented bundle twisted by `twist`. Throws PresentationError,
/// CutoffExhausted, or std::logic_error when the Riemann–Roch cross-check
/// fails.
CohomologyResult complex_cohomology(const FreeComplex& c, int twist, const CohomologyOptions& options = {});

/// Presentation of V ⊗ V^* for a kernel or cokernel presentation of V: the
/// tensor product with the dual presentation, a monad F⊗G^* -> F⊗F^* ⊕ G⊗G^*
/// -> G⊗F^*. Throws std::invalid_argument for monads.
FreeComplex end_complex(const FreeComplex& c);

}  // namespace minusplit
