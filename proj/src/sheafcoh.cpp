#include "minusplit/sheafcoh.hpp"

#include "minusplit/cech.hpp"

#include <algorithm>
#include <sstream>

namespace minusplit {

namespace {

long binom(long n, long k) {
  if (k < 0 || n < k) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

int top_degree(int nvars) { return nvars - 1; }

// Number of basis elements of H^q(O(a)) on P^{nvars-1}.
long basis_size(int nvars, CohomologyDegree q, int a) {
  const long n = nvars - 1;
  if (q == CohomologyDegree::H0) return a >= 0 ? binom(a + n, n) : 0;
  return a <= -nvars ? binom(-a - 1, n) : 0;
}

// Position of a monomial in the H^q basis of its degree, or -1 when it is not
// a basis element (H^top keeps only monomials with every exponent <= -1).
Index basis_index(int nvars, CohomologyDegree q, const Monomial& m) {
  if (q == CohomologyDegree::H0) return monomial_index(nvars, m);
  Monomial f{0, 0, 0};
  for (int v = 0; v < nvars; ++v) {
    const int e = m[static_cast<std::size_t>(v)];
    if (e > -1) return -1;
    f[static_cast<std::size_t>(v)] = -1 - e;
  }
  return monomial_index(nvars, f);
}

std::vector<Monomial> basis(int nvars, CohomologyDegree q, int a) {
  if (q == CohomologyDegree::H0) return monomial_basis(nvars, a);
  std::vector<Monomial> out = monomial_basis(nvars, -a - nvars);
  for (auto& m : out)
    for (int v = 0; v < nvars; ++v) m[static_cast<std::size_t>(v)] = -1 - m[static_cast<std::size_t>(v)];
  return out;
}

std::vector<Index> offsets(int nvars, CohomologyDegree q, const std::vector<int>& twists, int t) {
  std::vector<Index> off(twists.size() + 1, 0);
  for (std::size_t k = 0; k < twists.size(); ++k) off[k + 1] = off[k] + basis_size(nvars, q, twists[k] + t);
  return off;
}

Index induced_rank(const PolyMatrix& phi, CohomologyDegree q, int twist) {
  const SparseRationalMatrix m = induced_map_sparse(phi, q, twist);
  if (m.rows() == 0 || m.cols() == 0 || m.nonZeros() == 0) return 0;
  return sparse_rank(m);
}

int min_twist(const std::vector<int>& v) { return v.empty() ? 0 : *std::min_element(v.begin(), v.end()); }

// Kronecker products with identities: (A ⊗ I_Y) and (I_X ⊗ B), indexed
// (r, s) -> r * |Y| + s.
std::vector<int> tensor_twists(const std::vector<int>& x, const std::vector<int>& y) {
  std::vector<int> out;
  out.reserve(x.size() * y.size());
  for (int a : x)
    for (int b : y) out.push_back(a + b);
  return out;
}

void place_left(PolyMatrix& out, Index row0, Index col0, const PolyMatrix& a, std::size_t ny,
                const Rational& sign) {
  const Index n = static_cast<Index>(ny);
  for (Index r2 = 0; r2 < a.rows(); ++r2)
    for (Index r = 0; r < a.cols(); ++r)
      if (!a(r2, r).is_zero())
        for (Index s = 0; s < n; ++s) out.set(row0 + r2 * n + s, col0 + r * n + s, sign * a(r2, r));
}

void place_right(PolyMatrix& out, Index row0, Index col0, std::size_t nx, const PolyMatrix& b,
                 const Rational& sign) {
  const Index m = b.rows();
  const Index n = b.cols();
  for (Index r = 0; r < static_cast<Index>(nx); ++r)
    for (Index s2 = 0; s2 < m; ++s2)
      for (Index s = 0; s < n; ++s)
        if (!b(s2, s).is_zero()) out.set(row0 + r * m + s2, col0 + r * n + s, sign * b(s2, s));
}

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

}  // namespace

LineBundleSum LineBundleSum::twisted(int t) const {
  LineBundleSum out = *this;
  for (int& a : out.twists) a += t;
  return out;
}

LineBundleSum LineBundleSum::dual() const {
  LineBundleSum out = *this;
  for (int& a : out.twists) a = -a;
  return out;
}

std::string to_string(PresentationKind k) {
  switch (k) {
    case PresentationKind::Kernel: return "kernel";
    case PresentationKind::Cokernel: return "cokernel";
    case PresentationKind::Monad: return "monad";
  }
  return "?";
}

PresentationKind parse_presentation_kind(std::string_view s) {
  if (s == "kernel") return PresentationKind::Kernel;
  if (s == "cokernel") return PresentationKind::Cokernel;
  if (s == "monad") return PresentationKind::Monad;
  throw std::invalid_argument("unknown presentation kind '" + std::string(s) + "'");
}

std::string to_string(Engine e) { return e == Engine::Graded ? "graded" : "cech"; }

Engine parse_engine(std::string_view s) {
  if (s == "graded") return Engine::Graded;
  if (s == "cech") return Engine::Cech;
  throw std::invalid_argument("unknown engine '" + std::string(s) + "'");
}

const LineBundleSum& FreeComplex::degree_zero_term() const {
  return terms.at(static_cast<std::size_t>(-first_degree()));
}

long FreeComplex::rank() const {
  long r = 0;
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const int p = first_degree() + static_cast<int>(k);
    r += (p % 2 == 0 ? 1 : -1) * static_cast<long>(terms[k].rank());
  }
  return r;
}

FreeComplex kernel_presentation(PolyMatrix phi) {
  FreeComplex c;
  c.kind = PresentationKind::Kernel;
  c.nvars = phi.nvars();
  c.terms = {{phi.source_twists()}, {phi.target_twists()}};
  c.maps = {std::move(phi)};
  return c;
}

FreeComplex cokernel_presentation(PolyMatrix phi) {
  FreeComplex c = kernel_presentation(std::move(phi));
  c.kind = PresentationKind::Cokernel;
  return c;
}

FreeComplex monad(PolyMatrix a, PolyMatrix b) {
  if (a.nvars() != b.nvars() || a.target_twists() != b.source_twists())
    throw std::invalid_argument("profile mismatch: monad maps do not chain");
  FreeComplex c;
  c.kind = PresentationKind::Monad;
  c.nvars = a.nvars();
  c.terms = {{a.source_twists()}, {a.target_twists()}, {b.target_twists()}};
  c.maps = {std::move(a), std::move(b)};
  return c;
}

FreeComplex split_bundle(const std::vector<int>& twists, int nvars) {
  return cokernel_presentation(PolyMatrix(nvars, {}, twists));
}

FreeComplex dual(const FreeComplex& c) {
  FreeComplex out;
  out.nvars = c.nvars;
  switch (c.kind) {
    case PresentationKind::Kernel: return cokernel_presentation(c.maps[0].dual());
    case PresentationKind::Cokernel: return kernel_presentation(c.maps[0].dual());
    case PresentationKind::Monad: return monad(c.maps[1].dual(), c.maps[0].dual());
  }
  return out;
}

FreeComplex twisted(const FreeComplex& c, int t) {
  FreeComplex out = c;
  for (auto& term : out.terms) term = term.twisted(t);
  for (auto& m : out.maps) {
    PolyMatrix shifted(m.nvars(), LineBundleSum{m.source_twists()}.twisted(t).twists,
                       LineBundleSum{m.target_twists()}.twisted(t).twists);
    for (Index r = 0; r < m.rows(); ++r)
      for (Index k = 0; k < m.cols(); ++k) shifted.set(r, k, m(r, k));
    m = std::move(shifted);
  }
  return out;
}

CohomologyDims line_bundle_cohomology(int nvars, int d) {
  CohomologyDims h;
  h.h0 = basis_size(nvars, CohomologyDegree::H0, d);
  const long top = basis_size(nvars, CohomologyDegree::Top, d);
  if (nvars == 3) h.h2 = top;
  else if (nvars == 2) h.h1 = top;
  return h;
}

CohomologyDims sum_cohomology(int nvars, const LineBundleSum& s, int twist) {
  CohomologyDims h;
  for (int a : s.twists) {
    const CohomologyDims b = line_bundle_cohomology(nvars, a + twist);
    h.h0 += b.h0;
    h.h1 += b.h1;
    h.h2 += b.h2;
  }
  return h;
}

SparseRationalMatrix induced_map_sparse(const PolyMatrix& phi, CohomologyDegree q, int twist) {
  const int nv = phi.nvars();
  const auto& src = phi.source_twists();
  const auto& tgt = phi.target_twists();
  const std::vector<Index> row_off = offsets(nv, q, tgt, twist);
  const std::vector<Index> col_off = offsets(nv, q, src, twist);
  std::vector<RationalTriplet> triplets;
  for (Index k = 0; k < phi.cols(); ++k) {
    const std::vector<Monomial> b = basis(nv, q, src[static_cast<std::size_t>(k)] + twist);
    for (Index j = 0; j < phi.rows(); ++j) {
      const Polynomial& e = phi(j, k);
      if (e.is_zero()) continue;
      for (std::size_t i = 0; i < b.size(); ++i) {
        for (const auto& [mu, c] : e.terms()) {
          const Index row = basis_index(nv, q, b[i] + mu);
          if (row < 0) continue;
          triplets.emplace_back(row_off[static_cast<std::size_t>(j)] + row,
                                col_off[static_cast<std::size_t>(k)] + static_cast<Index>(i), c);
        }
      }
    }
  }
  SparseRationalMatrix m(row_off.back(), col_off.back());
  m.setFromTriplets(triplets.begin(), triplets.end());
  return m;
}

RationalMatrix induced_map(const PolyMatrix& phi, CohomologyDegree q, int twist) {
  const SparseRationalMatrix s = induced_map_sparse(phi, q, twist);
  RationalMatrix d = RationalMatrix::Zero(s.rows(), s.cols());
  for (Index r = 0; r < s.outerSize(); ++r)
    for (SparseRationalMatrix::InnerIterator it(s, r); it; ++it) d(it.row(), it.col()) = it.value();
  return d;
}

RationalMatrix induced_map(const PolyMatrix& phi, const LineBundleSum& source, const LineBundleSum& target,
                           CohomologyDegree q, int twist) {
  if (phi.source_twists() != source.twists || phi.target_twists() != target.twists)
    throw std::invalid_argument("profile mismatch: map does not go between the given sums");
  return induced_map(phi, q, twist);
}

ChernData chern_data(const FreeComplex& c) {
  ChernData ch;
  for (std::size_t k = 0; k < c.terms.size(); ++k) {
    const int p = c.first_degree() + static_cast<int>(k);
    const long sign = p % 2 == 0 ? 1 : -1;
    for (int a : c.terms[k].twists) {
      ch.rank += sign;
      ch.c1 += sign * a;
      ch.ch2 += Rational(sign * a * a, 2);
    }
  }
  return ch;
}

Rational riemann_roch(const ChernData& ch, int twist, int nvars) {
  const Rational t(twist);
  const Rational rk(ch.rank);
  const Rational c1 = Rational(ch.c1) + rk * t;
  if (nvars == 2) return rk + c1;
  const Rational ch2 = ch.ch2 + t * Rational(ch.c1) + rk * t * t / 2;
  return rk + Rational(3, 2) * c1 + ch2;
}

bool is_sheaf_surjective(const PolyMatrix& phi, int search) {
  if (phi.rows() == 0) return true;
  const int t0 = -min_twist(phi.target_twists());
  for (int t = t0; t <= t0 + search; ++t) {
    const SparseRationalMatrix m = induced_map_sparse(phi, CohomologyDegree::H0, t);
    if (m.cols() < m.rows()) continue;
    if (sparse_rank(m) == m.rows()) return true;
  }
  return false;
}

void validate(const FreeComplex& c, int search) {
  const std::size_t expected = c.kind == PresentationKind::Monad ? 2 : 1;
  if (c.maps.size() != expected || c.terms.size() != expected + 1)
    throw PresentationError("malformed " + to_string(c.kind) + " presentation");
  if (c.nvars != 2 && c.nvars != 3) throw PresentationError("presentations live on P^1 or P^2");
  if (c.nvars == 2 && c.kind == PresentationKind::Monad)
    throw PresentationError("monads on the line are not supported");
  for (std::size_t k = 0; k < c.maps.size(); ++k) {
    if (c.maps[k].nvars() != c.nvars || c.maps[k].source_twists() != c.terms[k].twists ||
        c.maps[k].target_twists() != c.terms[k + 1].twists)
      throw PresentationError("profile mismatch: map " + std::to_string(k) + " does not match its terms");
  }
  if (c.kind == PresentationKind::Monad && !compose(c.maps[1], c.maps[0]).is_zero())
    throw PresentationError("not a complex: consecutive maps do not compose to zero");

  bool ok = true;
  switch (c.kind) {
    case PresentationKind::Kernel: ok = is_sheaf_surjective(c.maps[0], search); break;
    case PresentationKind::Cokernel: ok = is_sheaf_surjective(c.maps[0].dual(), search); break;
    case PresentationKind::Monad:
      ok = is_sheaf_surjective(c.maps[0].dual(), search) && is_sheaf_surjective(c.maps[1], search);
      break;
  }
  if (!ok)
    throw PresentationError("presentation not locally free: no surjectivity certificate within " +
                            std::to_string(search) + " twists");
}

CohomologyResult complex_cohomology(const FreeComplex& c, int twist, const CohomologyOptions& options) {
  if (options.validate) validate(c, options.surjectivity_search);
  const Rational chi = riemann_roch(chern_data(c), twist, c.nvars);

  CohomologyResult result;
  result.euler_characteristic = chi;
  if (options.engine == Engine::Cech) {
    result = cech_cohomology(c, twist, options.max_cutoff);
    result.euler_characteristic = chi;
  } else {
    const int top = top_degree(c.nvars);
    if (static_cast<int>(c.terms.size()) > top + 1)
      throw PresentationError("graded engine needs at most " + std::to_string(top + 1) + " terms");
    const int p0 = c.first_degree();
    const int len = static_cast<int>(c.terms.size());
    std::vector<long> h(static_cast<std::size_t>(len + top + 2), 0);  // index n - p0
    for (CohomologyDegree q : {CohomologyDegree::H0, CohomologyDegree::Top}) {
      const int qdeg = q == CohomologyDegree::H0 ? 0 : top;
      std::vector<long> ranks(static_cast<std::size_t>(len), 0);  // ranks[k]: map out of term k
      for (int k = 0; k + 1 < len; ++k) ranks[static_cast<std::size_t>(k)] = induced_rank(c.maps[static_cast<std::size_t>(k)], q, twist);
      for (int k = 0; k < len; ++k) {
        long dim = 0;
        for (int a : c.terms[static_cast<std::size_t>(k)].twists) dim += basis_size(c.nvars, q, a + twist);
        const long e2 = dim - ranks[static_cast<std::size_t>(k)] - (k > 0 ? ranks[static_cast<std::size_t>(k - 1)] : 0);
        h[static_cast<std::size_t>(k + qdeg)] += e2;
      }
    }
    for (int n = p0; n < p0 + len + top; ++n) {
      const long v = h[static_cast<std::size_t>(n - p0)];
      if (n < 0 || n > top) {
        if (v != 0) throw PresentationError("presentation not locally free: cohomology in degree " + std::to_string(n));
        continue;
      }
      if (n == 0) result.dims.h0 = v;
      else if (n == 1) result.dims.h1 = v;
      else result.dims.h2 = v;
    }
    result.engine = Engine::Graded;
  }
  if (Rational(result.dims.euler()) != chi) {
    std::ostringstream os;
    os << "Euler characteristic mismatch: dimensions give " << result.dims.euler() << ", Riemann-Roch gives "
       << chi;
    throw std::logic_error(os.str());
  }
  return result;
}

FreeComplex end_complex(const FreeComplex& c) {
  if (c.kind == PresentationKind::Monad) throw std::invalid_argument("end_complex: monads are not supported");
  const PolyMatrix& phi = c.maps.at(0);
  const PolyMatrix phid = phi.dual();
  const std::vector<int>& f = phi.source_twists();
  const std::vector<int>& g = phi.target_twists();
  const std::vector<int> fd = LineBundleSum{f}.dual().twists;
  const std::vector<int> gd = LineBundleSum{g}.dual().twists;
  const int a = c.first_degree();
  const Rational sign = a % 2 == 0 ? Rational(1) : Rational(-1);

  const std::vector<int> t_minus = tensor_twists(f, gd);
  const std::vector<int> ff = tensor_twists(f, fd);
  const std::vector<int> gg = tensor_twists(g, gd);
  const std::vector<int> t_zero = concat(ff, gg);
  const std::vector<int> t_plus = tensor_twists(g, fd);

  // d(x ⊗ y) = dx ⊗ y + (-1)^|x| x ⊗ dy, with x from C and y from C^*.
  PolyMatrix d0(c.nvars, t_minus, t_zero);
  place_right(d0, 0, 0, f.size(), phid, sign);
  place_left(d0, static_cast<Index>(ff.size()), 0, phi, gd.size(), Rational(1));

  PolyMatrix d1(c.nvars, t_zero, t_plus);
  place_left(d1, 0, 0, phi, fd.size(), Rational(1));
  place_right(d1, 0, static_cast<Index>(ff.size()), g.size(), phid, -sign);

  if (!compose(d1, d0).is_zero()) throw std::logic_error("end_complex: tensor differential does not square to zero");
  return monad(std::move(d0), std::move(d1));
}

}  // namespace minusplit
