#include "minusplit/exactla.hpp"

#include <stdexcept>
#include <utility>

namespace minusplit {

namespace {

Integer lcm(const Integer& a, const Integer& b) {
  return a / boost::multiprecision::gcd(a, b) * b;
}

// Back substitution on an echelon form; `free_value` assigns the free
// coordinates, the pivot coordinates are solved against `rhs`.
RationalVector back_substitute(const EchelonForm& ef, const RationalVector& free_value,
                               const std::vector<Rational>& rhs) {
  RationalVector x = free_value;
  for (Index k = ef.rank() - 1; k >= 0; --k) {
    const Index p = ef.pivots[static_cast<std::size_t>(k)];
    Rational acc = rhs[static_cast<std::size_t>(k)];
    for (Index j = p + 1; j < ef.rows.cols(); ++j) {
      if (ef.rows(k, j) != 0 && x[j] != 0) acc -= Rational(ef.rows(k, j)) * x[j];
    }
    x[p] = acc / Rational(ef.rows(k, p));
  }
  return x;
}

}  // namespace

IntegerMatrix clear_denominators(const RationalMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (Index j = 0; j < m.cols(); ++j) l = lcm(l, denominator(m(i, j)));
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = numerator(m(i, j)) * (l / denominator(m(i, j)));
  }
  return out;
}

EchelonForm bareiss_echelon(IntegerMatrix a) {
  const Index n = a.rows();
  const Index m = a.cols();
  EchelonForm ef;
  Integer prev = 1;
  Index r = 0;
  for (Index c = 0; c < m && r < n; ++c) {
    // smallest nonzero candidate keeps the intermediate minors small
    Index p = -1;
    for (Index i = r; i < n; ++i) {
      if (a(i, c) == 0) continue;
      if (p < 0 || abs(a(i, c)) < abs(a(p, c))) p = i;
    }
    if (p < 0) continue;
    if (p != r) a.row(p).swap(a.row(r));
    const Integer& piv = a(r, c);
    for (Index i = r + 1; i < n; ++i) {
      const Integer f = a(i, c);
      for (Index j = c + 1; j < m; ++j) {
        Integer v = piv * a(i, j);
        if (f != 0 && a(r, j) != 0) v -= f * a(r, j);
        if (prev != 1) v /= prev;
        a(i, j) = std::move(v);
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ef.pivots.push_back(c);
    ++r;
  }
  ef.rows = std::move(a);
  return ef;
}

Index rank(const IntegerMatrix& m) { return bareiss_echelon(m).rank(); }

Index rank(const RationalMatrix& m) { return bareiss_echelon(clear_denominators(m)).rank(); }

RationalMatrix kernel_basis(const RationalMatrix& m) {
  const EchelonForm ef = bareiss_echelon(clear_denominators(m));
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index p : ef.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  const std::vector<Rational> zero_rhs(static_cast<std::size_t>(ef.rank()), Rational(0));
  RationalMatrix basis(m.cols(), m.cols() - ef.rank());
  Index k = 0;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    RationalVector start = RationalVector::Zero(m.cols());
    start[f] = 1;
    basis.col(k++) = back_substitute(ef, start, zero_rhs);
  }
  return basis;
}

RationalMatrix left_kernel_basis(const RationalMatrix& m) {
  return kernel_basis(m.transpose()).transpose();
}

RationalMatrix column_space_basis(const RationalMatrix& m) {
  const EchelonForm ef = bareiss_echelon(clear_denominators(m));
  RationalMatrix out(m.rows(), ef.rank());
  for (Index k = 0; k < ef.rank(); ++k) out.col(k) = m.col(ef.pivots[static_cast<std::size_t>(k)]);
  return out;
}

bool solve(const RationalMatrix& m, const RationalVector& b, RationalVector& x) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: dimension mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  aug << m, b;
  // Scaling a row of the augmented system does not change its solutions.
  const EchelonForm ef = bareiss_echelon(clear_denominators(aug));
  if (!ef.pivots.empty() && ef.pivots.back() == m.cols()) return false;
  // Split the augmented echelon form into coefficient part and right-hand side.
  EchelonForm coeff;
  coeff.rows = ef.rows.leftCols(m.cols());
  coeff.pivots = ef.pivots;
  std::vector<Rational> rhs;
  for (Index k = 0; k < ef.rank(); ++k) rhs.emplace_back(ef.rows(k, m.cols()));
  x = back_substitute(coeff, RationalVector::Zero(m.cols()), rhs);
  return true;
}

RationalMatrix right_inverse(const RationalMatrix& m) {
  const RationalMatrix gram = m * m.transpose();
  if (rank(gram) != gram.rows())
    throw std::invalid_argument("right_inverse: matrix does not have full row rank");
  RationalMatrix inv(gram.rows(), gram.cols());
  for (Index j = 0; j < gram.cols(); ++j) {
    RationalVector e = RationalVector::Zero(gram.rows());
    e[j] = 1;
    RationalVector x;
    solve(gram, e, x);
    inv.col(j) = x;
  }
  return m.transpose() * inv;
}

RationalMatrix left_inverse(const RationalMatrix& m) {
  return right_inverse(m.transpose()).transpose();
}

UniPoly characteristic_polynomial(const RationalMatrix& a) {
  // Faddeev-LeVerrier; exact over Q.
  const Index n = a.rows();
  UniPoly c(static_cast<std::size_t>(n) + 1, Rational(0));
  c[static_cast<std::size_t>(n)] = 1;
  RationalMatrix mk = RationalMatrix::Zero(n, n);
  const RationalMatrix id = RationalMatrix::Identity(n, n);
  for (Index k = 1; k <= n; ++k) {
    mk = a * mk + c[static_cast<std::size_t>(n - k + 1)] * id;
    const RationalMatrix am = a * mk;
    c[static_cast<std::size_t>(n - k)] = -am.trace() / Rational(k);
  }
  return c;
}

namespace {

void trim(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UniPoly poly_mod(UniPoly a, const UniPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    UniPoly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& x : a) x /= lead;
  }
  return a;
}

UniPoly derivative(const UniPoly& p) {
  UniPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(static_cast<long>(i)));
  return d;
}

bool is_squarefree(const UniPoly& p) {
  UniPoly q = p;
  trim(q);
  if (q.size() <= 2) return true;
  return poly_gcd(q, derivative(q)).size() == 1;
}

}  // namespace minusplit
