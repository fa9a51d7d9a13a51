#include "minusplit/cech.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace minusplit {

namespace {

struct Block {
  int k;         // term index
  int s;         // summand within the term
  unsigned set;  // charts inverted, as a bitmask
  int degree;    // total degree p + |set| - 1
  Index offset;  // within its total degree
  Index size;
};

// Monomials of degree a with e_i >= -B on the charts in `set` and e_i >= 0
// elsewhere, indexed through the shift f = e - lower.
struct Region {
  int nvars;
  Monomial lower{0, 0, 0};
  int shifted_degree;

  Region(int nv, unsigned set, int a, int cutoff) : nvars(nv) {
    int low = 0;
    for (int i = 0; i < nv; ++i) {
      lower[static_cast<std::size_t>(i)] = (set >> i) & 1U ? -cutoff : 0;
      low += lower[static_cast<std::size_t>(i)];
    }
    shifted_degree = a - low;
  }

  Index size() const { return static_cast<Index>(monomial_basis(nvars, shifted_degree).size()); }

  std::vector<Monomial> monomials() const {
    std::vector<Monomial> out = monomial_basis(nvars, shifted_degree);
    for (auto& m : out)
      for (int i = 0; i < nvars; ++i) m[static_cast<std::size_t>(i)] += lower[static_cast<std::size_t>(i)];
    return out;
  }

  Index index(const Monomial& m) const {
    Monomial f{0, 0, 0};
    for (int i = 0; i < nvars; ++i) f[static_cast<std::size_t>(i)] = m[static_cast<std::size_t>(i)] - lower[static_cast<std::size_t>(i)];
    return monomial_index(nvars, f);
  }
};

}  // namespace

int initial_cutoff(const FreeComplex& c, int twist) {
  int spread = 0;
  for (const auto& term : c.terms)
    for (int a : term.twists) spread = std::max(spread, std::abs(a));
  return spread + std::abs(twist) + 3;
}

CohomologyDims cech_truncated(const FreeComplex& c, int twist, int cutoff) {
  const int nv = c.nvars;
  const int p0 = c.first_degree();
  const int len = static_cast<int>(c.terms.size());
  const int nmin = p0;
  const int nmax = p0 + len - 1 + nv - 1;
  const unsigned full = (1U << nv) - 1;

  std::vector<Block> blocks;
  std::vector<Index> dims(static_cast<std::size_t>(nmax - nmin + 2), 0);
  for (int k = 0; k < len; ++k) {
    const auto& tw = c.terms[static_cast<std::size_t>(k)].twists;
    for (int s = 0; s < static_cast<int>(tw.size()); ++s) {
      for (unsigned set = 1; set <= full; ++set) {
        const int n = p0 + k + std::popcount(set) - 1;
        const Region r(nv, set, tw[static_cast<std::size_t>(s)] + twist, cutoff);
        Block b{k, s, set, n, dims[static_cast<std::size_t>(n - nmin)], r.size()};
        dims[static_cast<std::size_t>(n - nmin)] += b.size;
        blocks.push_back(b);
      }
    }
  }
  auto find_block = [&](int k, int s, unsigned set) -> const Block& {
    for (const auto& b : blocks)
      if (b.k == k && b.s == s && b.set == set) return b;
    throw std::logic_error("cech: missing block");
  };

  std::vector<Index> ranks(static_cast<std::size_t>(nmax - nmin + 2), 0);  // rank of D^n
  for (int n = nmin; n < nmax; ++n) {
    std::vector<RationalTriplet> trip;
    for (const auto& b : blocks) {
      if (b.degree != n || b.size == 0) continue;
      const auto& tw = c.terms[static_cast<std::size_t>(b.k)].twists;
      const Region src(nv, b.set, tw[static_cast<std::size_t>(b.s)] + twist, cutoff);
      const std::vector<Monomial> mons = src.monomials();
      const Rational psign = (p0 + b.k) % 2 == 0 ? Rational(1) : Rational(-1);

      // Cech part, (-1)^p δ.
      for (int i = 0; i < nv; ++i) {
        if ((b.set >> i) & 1U) continue;
        const unsigned target = b.set | (1U << i);
        const int pos = std::popcount(b.set & ((1U << i) - 1));
        const Rational sign = pos % 2 == 0 ? psign : Rational(-psign);
        const Block& tb = find_block(b.k, b.s, target);
        const Region dst(nv, target, tw[static_cast<std::size_t>(b.s)] + twist, cutoff);
        for (std::size_t m = 0; m < mons.size(); ++m)
          trip.emplace_back(tb.offset + dst.index(mons[m]), b.offset + static_cast<Index>(m), sign);
      }
      // Complex part.
      if (b.k + 1 < len) {
        const PolyMatrix& phi = c.maps[static_cast<std::size_t>(b.k)];
        const auto& tw2 = c.terms[static_cast<std::size_t>(b.k + 1)].twists;
        for (Index j = 0; j < phi.rows(); ++j) {
          const Polynomial& e = phi(j, b.s);
          if (e.is_zero()) continue;
          const Block& tb = find_block(b.k + 1, static_cast<int>(j), b.set);
          const Region dst(nv, b.set, tw2[static_cast<std::size_t>(j)] + twist, cutoff);
          for (std::size_t m = 0; m < mons.size(); ++m)
            for (const auto& [mu, coeff] : e.terms())
              trip.emplace_back(tb.offset + dst.index(mons[m] + mu), b.offset + static_cast<Index>(m), coeff);
        }
      }
    }
    SparseRationalMatrix d(dims[static_cast<std::size_t>(n + 1 - nmin)], dims[static_cast<std::size_t>(n - nmin)]);
    d.setFromTriplets(trip.begin(), trip.end());
    ranks[static_cast<std::size_t>(n - nmin)] = d.nonZeros() == 0 ? 0 : sparse_rank(d);
  }

  CohomologyDims h;
  for (int n = nmin; n <= nmax; ++n) {
    const Index v = dims[static_cast<std::size_t>(n - nmin)] - ranks[static_cast<std::size_t>(n - nmin)] -
                    (n > nmin ? ranks[static_cast<std::size_t>(n - 1 - nmin)] : 0);
    if (n < 0 || n > nv - 1) {
      if (v != 0) throw PresentationError("presentation not locally free: cohomology in degree " + std::to_string(n));
      continue;
    }
    if (n == 0) h.h0 = v;
    else if (n == 1) h.h1 = v;
    else h.h2 = v;
  }
  return h;
}

CohomologyResult cech_cohomology(const FreeComplex& c, int twist, int max_cutoff) {
  int cutoff = initial_cutoff(c, twist);
  while (cutoff + 1 <= max_cutoff) {
    const CohomologyDims a = cech_truncated(c, twist, cutoff);
    const CohomologyDims b = cech_truncated(c, twist, cutoff + 1);
    if (a == b) {
      CohomologyResult r;
      r.dims = a;
      r.engine = Engine::Cech;
      r.cutoff = CutoffCertificate{cutoff, a, b};
      return r;
    }
    cutoff *= 2;
  }
  throw CutoffExhausted("cutoff exhausted: no stable cutoff up to " + std::to_string(max_cutoff));
}

}  // namespace minusplit
