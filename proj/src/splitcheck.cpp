#include "minusplit/splitcheck.hpp"

#include "minusplit/exactla.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace minusplit {

namespace {

CohomologyOptions quiet(const CohomologyOptions& o) {
  CohomologyOptions q = o;
  q.validate = false;
  return q;
}

long h0_line_bundle(int nvars, int a) { return line_bundle_cohomology(nvars, a).h0; }

// Bounds on the twists of a split bundle presented by c: kernels are
// subbundles of T^0, cokernels quotients of it; the other side follows from c1.
std::pair<int, int> twist_bounds(const FreeComplex& c) {
  const auto& t0 = c.degree_zero_term().twists;
  const long r = c.rank();
  const long c1 = chern_data(c).c1;
  const int lo = t0.empty() ? 0 : *std::min_element(t0.begin(), t0.end());
  const int hi = t0.empty() ? 0 : *std::max_element(t0.begin(), t0.end());
  if (c.kind == PresentationKind::Kernel) return {static_cast<int>(c1 - (r - 1) * hi), hi};
  return {lo, static_cast<int>(c1 - (r - 1) * lo)};
}

// Greedy peeling of the Hilbert function: at twist d the summands O(-d)
// contribute their first section.
std::optional<std::vector<int>> peel(const FreeComplex& c, const CohomologyOptions& opts) {
  const auto [lo, hi] = twist_bounds(c);
  std::vector<int> found;
  for (int d = -hi; d <= -lo; ++d) {
    const long actual = complex_cohomology(c, d, opts).dims.h0;
    long predicted = 0;
    for (int a : found) predicted += h0_line_bundle(c.nvars, a + d);
    const long fresh = actual - predicted;
    if (fresh < 0) return std::nullopt;
    for (long k = 0; k < fresh; ++k) found.push_back(-d);
  }
  if (static_cast<long>(found.size()) != c.rank()) return std::nullopt;
  std::sort(found.begin(), found.end(), std::greater<>());
  return found;
}

void require_plane_presentation(const FreeComplex& c, const char* who) {
  if (c.nvars != 3) throw std::invalid_argument(std::string(who) + ": expected a presentation on P^2");
  if (c.kind == PresentationKind::Monad)
    throw std::invalid_argument(std::string(who) + ": kernel or cokernel presentation required");
}

// Coordinates of Hom(⊕O(src), ⊕O(tgt)): one per entry and monomial.
struct HomSpace {
  int nvars;
  std::vector<int> src, tgt;
  std::vector<Index> entry_offset;  // (r * cols + c) -> first coordinate
  Index dim = 0;

  HomSpace(int nv, std::vector<int> s, std::vector<int> t) : nvars(nv), src(std::move(s)), tgt(std::move(t)) {
    entry_offset.assign(src.size() * tgt.size() + 1, 0);
    for (std::size_t r = 0; r < tgt.size(); ++r)
      for (std::size_t c = 0; c < src.size(); ++c) {
        const std::size_t e = r * src.size() + c;
        entry_offset[e + 1] = entry_offset[e] + static_cast<Index>(monomial_basis(nvars, tgt[r] - src[c]).size());
      }
    dim = entry_offset.back();
  }

  PolyMatrix unit(Index coord) const {
    PolyMatrix m(nvars, src, tgt);
    const auto it = std::upper_bound(entry_offset.begin(), entry_offset.end(), coord) - 1;
    const std::size_t e = static_cast<std::size_t>(it - entry_offset.begin());
    const Index r = static_cast<Index>(e / src.size());
    const Index c = static_cast<Index>(e % src.size());
    const auto mons = monomial_basis(nvars, tgt[static_cast<std::size_t>(r)] - src[static_cast<std::size_t>(c)]);
    m.set(r, c, Polynomial::monomial(nvars, mons[static_cast<std::size_t>(coord - *it)]));
    return m;
  }

  PolyMatrix matrix(const RationalVector& v, Index offset = 0) const {
    PolyMatrix m(nvars, src, tgt);
    for (std::size_t r = 0; r < tgt.size(); ++r)
      for (std::size_t c = 0; c < src.size(); ++c) {
        const std::size_t e = r * src.size() + c;
        const auto mons = monomial_basis(nvars, tgt[r] - src[c]);
        Polynomial p(nvars);
        for (std::size_t k = 0; k < mons.size(); ++k) {
          const Rational& coeff = v(offset + entry_offset[e] + static_cast<Index>(k));
          if (coeff != 0) p.add_term(mons[k], coeff);
        }
        m.set(static_cast<Index>(r), static_cast<Index>(c), std::move(p));
      }
    return m;
  }

  RationalVector flatten(const PolyMatrix& m) const {
    RationalVector v = RationalVector::Zero(dim);
    for (std::size_t r = 0; r < tgt.size(); ++r)
      for (std::size_t c = 0; c < src.size(); ++c) {
        const std::size_t e = r * src.size() + c;
        for (const auto& [mono, coeff] : m(static_cast<Index>(r), static_cast<Index>(c)).terms())
          v(entry_offset[e] + monomial_index(nvars, mono)) = coeff;
      }
    return v;
  }
};

// Chain endomorphisms (α on the source term, β on the target term) of a
// two-term presentation, i.e. φα = βφ, as a basis of columns in the
// coordinates of Hom(A,A) ⊕ Hom(B,B).
struct ChainEndomorphisms {
  HomSpace alpha, beta;
  RationalMatrix basis;
  long homotopy_rank = 0;

  long induced_dimension() const { return static_cast<long>(basis.cols()) - homotopy_rank; }

  // The endomorphism of the degree-0 term for basis vector k.
  PolyMatrix degree_zero(const FreeComplex& c, Index k) const {
    const RationalVector v = basis.col(k);
    if (c.kind == PresentationKind::Kernel) return alpha.matrix(v, 0);
    return beta.matrix(v, alpha.dim);
  }
};

ChainEndomorphisms chain_endomorphisms(const FreeComplex& c) {
  const PolyMatrix& phi = c.maps[0];
  const auto& a = phi.source_twists();
  const auto& b = phi.target_twists();
  ChainEndomorphisms out{HomSpace(c.nvars, a, a), HomSpace(c.nvars, b, b), {}, 0};
  const HomSpace eq(c.nvars, a, b);

  RationalMatrix m(eq.dim, out.alpha.dim + out.beta.dim);
  for (Index k = 0; k < out.alpha.dim; ++k) m.col(k) = eq.flatten(compose(phi, out.alpha.unit(k)));
  for (Index k = 0; k < out.beta.dim; ++k)
    m.col(out.alpha.dim + k) = -eq.flatten(compose(out.beta.unit(k), phi));
  out.basis = kernel_basis(m);

  // Null-homotopic pairs (hφ, φh) for h : B -> A induce zero on the bundle.
  const HomSpace homotopy(c.nvars, b, a);
  RationalMatrix h(out.alpha.dim + out.beta.dim, homotopy.dim);
  for (Index k = 0; k < homotopy.dim; ++k) {
    const PolyMatrix u = homotopy.unit(k);
    h.col(k) << out.alpha.flatten(compose(u, phi)), out.beta.flatten(compose(phi, u));
  }
  out.homotopy_rank = static_cast<long>(rank(h));
  return out;
}

// A basis of the fibre V_p lifted into the degree-0 term, and the coordinate
// map from the degree-0 term (or its subspace V_p) onto that basis.
struct FibreFrame {
  RationalMatrix lift;    // n x r
  RationalMatrix coords;  // r x n
};

RationalMatrix complete_basis(const RationalMatrix& start, Index n) {
  RationalMatrix b = start;
  Index current = start.cols() == 0 ? 0 : rank(start);
  for (Index i = 0; i < n && b.cols() < n; ++i) {
    RationalMatrix trial(n, b.cols() + 1);
    trial << b, RationalMatrix::Identity(n, n).col(i);
    const Index r = rank(trial);
    if (r > current) {
      b = trial;
      current = r;
    }
  }
  return b;
}

FibreFrame fibre_frame(const FreeComplex& c, const std::vector<Rational>& point) {
  const RationalMatrix phi = c.maps[0].evaluate(point);
  FibreFrame f;
  if (c.kind == PresentationKind::Kernel) {
    const Index n = phi.cols();
    const RationalMatrix k = kernel_basis(phi);
    const RationalMatrix b = complete_basis(k, n);
    const RationalMatrix inv = left_inverse(b);
    f.lift = k;
    f.coords = inv.topRows(k.cols());
  } else {
    const Index n = phi.rows();
    const RationalMatrix b = complete_basis(phi, n);
    const RationalMatrix inv = left_inverse(b);
    const Index r = n - phi.cols();
    f.lift = b.rightCols(r);
    f.coords = inv.bottomRows(r);
  }
  return f;
}

// Sections of V1|L(d) inside H^0 of the degree-0 term, and the map killing
// what is zero in V2|L(d).
RationalMatrix sections_of_bundle(const FreeComplex& line, int d) {
  const RationalMatrix m = induced_map(line.maps[0], CohomologyDegree::H0, d);
  if (line.kind == PresentationKind::Kernel) return kernel_basis(m);
  return RationalMatrix::Identity(m.rows(), m.rows());
}

RationalMatrix quotient_to_bundle(const FreeComplex& line, int d) {
  const RationalMatrix m = induced_map(line.maps[0], CohomologyDegree::H0, d);
  if (line.kind == PresentationKind::Cokernel) return left_kernel_basis(m);
  return RationalMatrix::Identity(m.cols(), m.cols());
}

RationalVector vectorize(const RationalMatrix& m) {
  RationalVector v(m.size());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) v(j * m.rows() + i) = m(i, j);
  return v;
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// Twist on L at which every map from V1|L is detected on global sections.
int detection_twist(const FreeComplex& left, const std::vector<int>& left_type) {
  int d = 0;
  for (int a : left_type) d = std::max(d, -a);
  for (const auto& term : left.terms)
    for (int a : term.twists) d = std::max(d, -a);
  return d;
}

// Uniform integer in [-bound, bound]; the modulus keeps it portable.
Integer sample(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t span = 2 * bound + 1;
  return Integer(static_cast<long long>(rng() % span)) - Integer(static_cast<long long>(bound));
}

constexpr std::uint64_t kSampleBound = 1U << 20;

Polynomial random_form(int nvars, int degree, std::mt19937_64& rng) {
  const auto mons = monomial_basis(nvars, degree);
  Polynomial p(nvars);
  const int terms = 1 + static_cast<int>(rng() % 2);
  for (int k = 0; k < terms; ++k) {
    Rational c(static_cast<long>(rng() % 4) + 1);
    if (rng() % 2) c = -c;
    p.add_term(mons[rng() % mons.size()], c);
  }
  return p;
}

// Unipotent in the order of increasing twist, hence invertible.
PolyMatrix random_automorphism(const std::vector<int>& twists, std::mt19937_64& rng) {
  const int nv = 3;
  PolyMatrix u = PolyMatrix::identity(nv, twists);
  const std::size_t n = twists.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return twists[x] < twists[y]; });
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (rng() % 2) continue;
      const std::size_t row = order[i];
      const std::size_t col = order[j];
      u.set(static_cast<Index>(row), static_cast<Index>(col), random_form(nv, twists[row] - twists[col], rng));
    }
  return u;
}

}  // namespace

SplitVerdict is_split_p2(const FreeComplex& c, const SplitOptions& options) {
  require_plane_presentation(c, "is_split_p2");
  if (options.cohomology.validate) validate(c, options.cohomology.surjectivity_search);
  const CohomologyOptions opts = quiet(options.cohomology);

  SplitVerdict v;
  v.h1_end = complex_cohomology(end_complex(c), -1, opts).dims.h1;
  if (v.h1_end > 0) {
    v.certificate = "h^1(End(V)(-1)) = " + std::to_string(v.h1_end);
    return v;
  }
  const auto twists = peel(c, opts);
  const ChernData ch = chern_data(c);
  bool consistent = twists.has_value();
  if (consistent) {
    long c1 = 0;
    Rational ch2 = 0;
    for (int a : *twists) {
      c1 += a;
      ch2 += Rational(a * a, 2);
    }
    consistent = c1 == ch.c1 && ch2 == ch.ch2;
  }
  if (!consistent)
    throw std::logic_error("internal inconsistency: h^1(End(V)(-1)) = 0 but the Hilbert function is not split");
  v.split = true;
  v.twists = *twists;
  v.certificate = "h^1(End(V)(-1)) = 0; V = sum of O(a) for a in {" + join(v.twists) + "}";
  return v;
}

FreeComplex restrict_to_line(const FreeComplex& c, int var, int surjectivity_search) {
  if (c.nvars != 3 || var < 0 || var > 2) throw std::invalid_argument("restrict_to_line: coordinate line of P^2 expected");
  FreeComplex out = c;
  out.nvars = 2;
  for (auto& m : out.maps) m = m.restrict_to_hyperplane(var);
  try {
    validate(out, surjectivity_search);
  } catch (const PresentationError&) {
    throw PresentationError("restriction not locally free along chosen line");
  }
  return out;
}

std::vector<int> splitting_type_on_line(const FreeComplex& line) {
  if (line.nvars != 2) throw std::invalid_argument("splitting_type_on_line: presentation on P^1 expected");
  CohomologyOptions opts;
  opts.validate = false;
  const auto t = peel(line, opts);
  if (!t) throw std::logic_error("internal inconsistency: Hilbert function on the line is not split");
  return *t;
}

void validate_wedge(const WedgeBundle& w) {
  require_plane_presentation(w.left, "wedge left");
  require_plane_presentation(w.right, "wedge right");
  const PolyMatrix& g = w.gluing;
  if (g.nvars() != 2) throw std::invalid_argument("gluing must be a matrix over the 2 coordinates of the line");
  if (g.source_twists() != w.left.degree_zero_term().twists || g.target_twists() != w.right.degree_zero_term().twists)
    throw std::invalid_argument("profile mismatch: gluing must map the left degree-0 term to the right one");
  if (w.left.rank() != w.right.rank()) throw std::invalid_argument("gluing: components have different ranks");
  if (chern_data(w.left).c1 != chern_data(w.right).c1)
    throw std::invalid_argument("gluing: restrictions to the line have different degrees");

  const FreeComplex l1 = restrict_to_line(w.left, 2);
  const FreeComplex l2 = restrict_to_line(w.right, 2);
  const int d = detection_twist(w.left, splitting_type_on_line(l1));
  const RationalMatrix gd = induced_map(g, CohomologyDegree::H0, d);
  if (w.left.kind == PresentationKind::Cokernel) {
    const RationalMatrix rel = gd * induced_map(l1.maps[0], CohomologyDegree::H0, d);
    if (!(quotient_to_bundle(l2, d) * rel).isZero())
      throw std::invalid_argument("gluing does not respect the left presentation");
  }
  if (w.right.kind == PresentationKind::Kernel) {
    const RationalMatrix img = induced_map(l2.maps[0], CohomologyDegree::H0, d) * gd;
    if (!(img * sections_of_bundle(l1, d)).isZero())
      throw std::invalid_argument("gluing does not land in the right bundle");
  }
  const std::vector<Rational> p{Rational(1), Rational(0), Rational(0)};
  const FibreFrame f1 = fibre_frame(w.left, p);
  const FibreFrame f2 = fibre_frame(w.right, p);
  const RationalMatrix gp = f2.coords * g.evaluate({Rational(1), Rational(0)}) * f1.lift;
  if (rank(gp) != gp.rows()) throw std::invalid_argument("gluing is not an isomorphism on the line");
}

SplitVerdict is_split_wedge(const WedgeBundle& w, const SplitOptions& options) {
  if (options.cohomology.validate) {
    validate(w.left, options.cohomology.surjectivity_search);
    validate(w.right, options.cohomology.surjectivity_search);
  }
  validate_wedge(w);
  SplitOptions inner = options;
  inner.cohomology.validate = false;
  const CohomologyOptions opts = quiet(options.cohomology);

  SplitVerdict v;
  WedgeDetails details;
  details.seed = options.seed;
  const FreeComplex l1 = restrict_to_line(w.left, 2);
  const FreeComplex l2 = restrict_to_line(w.right, 2);
  details.left_line_type = splitting_type_on_line(l1);
  details.right_line_type = splitting_type_on_line(l2);

  const SplitVerdict left = is_split_p2(w.left, inner);
  const SplitVerdict right = is_split_p2(w.right, inner);
  if (!left.split || !right.split) {
    const bool left_bad = !left.split;
    v.h1_end = left_bad ? left.h1_end : right.h1_end;
    v.certificate = std::string(left_bad ? "left" : "right") + " plane does not split: h^1(End(V)(-1)) = " +
                    std::to_string(v.h1_end);
    v.wedge = details;
    return v;
  }

  const ChainEndomorphisms e1 = chain_endomorphisms(w.left);
  const ChainEndomorphisms e2 = chain_endomorphisms(w.right);
  details.left_h0_end = complex_cohomology(end_complex(w.left), 0, opts).dims.h0;
  details.right_h0_end = complex_cohomology(end_complex(w.right), 0, opts).dims.h0;
  if (e1.induced_dimension() != details.left_h0_end || e2.induced_dimension() != details.right_h0_end) {
    std::ostringstream os;
    os << "presentation inadequate for wedge test: chain endomorphisms give " << e1.induced_dimension() << " and "
       << e2.induced_dimension() << " sections, h^0(End) is " << details.left_h0_end << " and "
       << details.right_h0_end;
    throw std::runtime_error(os.str());
  }

  // Matching on L: Q2 · H^0(g E1 - E2 g)(d) · S1 = 0.
  const int d = detection_twist(w.left, details.left_line_type);
  const RationalMatrix s1 = sections_of_bundle(l1, d);
  const RationalMatrix q2 = quotient_to_bundle(l2, d);
  const Index n1 = e1.basis.cols();
  const Index n2 = e2.basis.cols();
  RationalMatrix constraints(q2.rows() * s1.cols(), n1 + n2);
  for (Index k = 0; k < n1; ++k) {
    const PolyMatrix psi = compose(w.gluing, e1.degree_zero(w.left, k).restrict_to_hyperplane(2));
    constraints.col(k) = vectorize(q2 * induced_map(psi, CohomologyDegree::H0, d) * s1);
  }
  for (Index k = 0; k < n2; ++k) {
    const PolyMatrix psi = compose(e2.degree_zero(w.right, k).restrict_to_hyperplane(2), w.gluing);
    constraints.col(n1 + k) = -vectorize(q2 * induced_map(psi, CohomologyDegree::H0, d) * s1);
  }
  const RationalMatrix matched = kernel_basis(constraints);
  details.matched_dimension = static_cast<long>(matched.cols());

  // Fibre endomorphisms of V1 at a point for each left basis vector; the
  // characteristic polynomial of a global endomorphism is constant.
  const std::vector<Rational> p{Rational(1), Rational(0), Rational(0)};
  const FibreFrame f1 = fibre_frame(w.left, p);
  std::vector<RationalMatrix> fibre;
  for (Index k = 0; k < n1; ++k) fibre.push_back(f1.coords * e1.degree_zero(w.left, k).evaluate(p) * f1.lift);

  const long r = w.left.rank();
  std::mt19937_64 rng(options.seed);
  bool distinct = false;
  for (int t = 0; t < options.trials && !distinct; ++t) {
    ++details.trials;
    RationalVector y(matched.cols());
    for (Index i = 0; i < y.size(); ++i) y(i) = Rational(sample(rng, kSampleBound));
    const RationalVector coeff = matched * y;
    RationalMatrix endo = RationalMatrix::Zero(r, r);
    for (Index k = 0; k < n1; ++k)
      if (coeff(k) != 0) endo += coeff(k) * fibre[static_cast<std::size_t>(k)];
    distinct = is_squarefree(characteristic_polynomial(endo));
  }
  {
    std::ostringstream os;
    os << "(" << r * (r - 1) << "/" << 2 * kSampleBound + 1 << ")^" << details.trials;
    details.failure_bound = os.str();
  }

  if (distinct) {
    if (details.left_line_type != details.right_line_type)
      throw std::logic_error("internal inconsistency: split wedge with different restriction types");
    v.split = true;
    v.twists = left.twists;
    v.certificate = "matched endomorphism with " + std::to_string(r) + " distinct eigenvalues after " +
                    std::to_string(details.trials) + " trial(s); V = sum of O(a) for a in {" + join(v.twists) + "}";
  } else {
    v.certificate = "no distinct-eigenvalue matched section found at confidence level 1 - " + details.failure_bound;
  }
  v.wedge = details;
  return v;
}

FreeComplex random_split_presentation(const std::vector<int>& twists, std::mt19937_64& rng) {
  const bool kernel = rng() % 2 == 0;
  const int extra = static_cast<int>(rng() % 3);
  std::vector<int> extras;
  for (int k = 0; k < extra; ++k) extras.push_back(static_cast<int>(rng() % 9) - 4);

  // Big term: the bundle's summands and the cancelling ones, shuffled.
  std::vector<int> big = twists;
  big.insert(big.end(), extras.begin(), extras.end());
  std::vector<std::size_t> perm(big.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = perm.size(); i > 1; --i) std::swap(perm[i - 1], perm[rng() % i]);
  std::vector<int> shuffled(big.size());
  for (std::size_t i = 0; i < big.size(); ++i) shuffled[i] = big[perm[i]];

  // Position of extra summand k inside the shuffled term.
  std::vector<Index> where(extras.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    if (perm[i] >= twists.size()) where[perm[i] - twists.size()] = static_cast<Index>(i);

  const PolyMatrix ub = random_automorphism(shuffled, rng);
  const PolyMatrix ue = random_automorphism(extras, rng);
  if (kernel) {
    PolyMatrix proj(3, shuffled, extras);
    for (std::size_t k = 0; k < extras.size(); ++k) proj.set(static_cast<Index>(k), where[k], Polynomial(3, Rational(1)));
    return kernel_presentation(compose(ue, compose(proj, ub)));
  }
  PolyMatrix incl(3, extras, shuffled);
  for (std::size_t k = 0; k < extras.size(); ++k) incl.set(where[k], static_cast<Index>(k), Polynomial(3, Rational(1)));
  return cokernel_presentation(compose(ub, compose(incl, ue)));
}

}  // namespace minusplit
