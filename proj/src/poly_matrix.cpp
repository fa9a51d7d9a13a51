#include "minusplit/poly_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace minusplit {

PolyMatrix::PolyMatrix(int nvars, std::vector<int> source_twists, std::vector<int> target_twists)
    : nvars_(nvars), source_(std::move(source_twists)), target_(std::move(target_twists)) {
  entries_.assign(source_.size() * target_.size(), Polynomial(nvars_));
}

PolyMatrix PolyMatrix::identity(int nvars, const std::vector<int>& twists) {
  PolyMatrix m(nvars, twists, twists);
  for (Index i = 0; i < m.rows(); ++i) m.set(i, i, Polynomial(nvars, Rational(1)));
  return m;
}

void PolyMatrix::set(Index r, Index c, Polynomial p) {
  if (r < 0 || r >= rows() || c < 0 || c >= cols()) throw std::out_of_range("PolyMatrix::set");
  if (p.nvars() != nvars_) {
    std::ostringstream os;
    os << "profile mismatch: entry (" << r << "," << c << ") has " << p.nvars()
       << " variables, expected " << nvars_;
    throw std::invalid_argument(os.str());
  }
  const int d = required_degree(r, c);
  bool ok = p.is_zero() || (d >= 0 && p.is_homogeneous_of_degree(d));
  if (ok) {
    for (const auto& [m, coeff] : p.terms())
      for (int v = 0; v < 3; ++v)
        if (m[static_cast<std::size_t>(v)] < 0) ok = false;
  }
  if (!ok) {
    std::ostringstream os;
    os << "profile mismatch: entry (" << r << "," << c << ") = " << p.to_string()
       << " must be zero or a polynomial homogeneous of degree " << d;
    throw std::invalid_argument(os.str());
  }
  entries_[static_cast<std::size_t>(r * cols() + c)] = std::move(p);
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::dual() const {
  std::vector<int> src, tgt;
  for (int t : target_) src.push_back(-t);
  for (int s : source_) tgt.push_back(-s);
  PolyMatrix out(nvars_, src, tgt);
  for (Index r = 0; r < rows(); ++r)
    for (Index c = 0; c < cols(); ++c) out.entries_[static_cast<std::size_t>(c * out.cols() + r)] = (*this)(r, c);
  return out;
}

PolyMatrix PolyMatrix::restrict_to_hyperplane(int var) const {
  PolyMatrix out(nvars_ - 1, source_, target_);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].restrict_to_hyperplane(var);
  return out;
}

RationalMatrix PolyMatrix::evaluate(const std::vector<Rational>& point) const {
  RationalMatrix m(rows(), cols());
  for (Index r = 0; r < rows(); ++r)
    for (Index c = 0; c < cols(); ++c) m(r, c) = (*this)(r, c).evaluate(point);
  return m;
}

PolyMatrix compose(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.nvars() != b.nvars() || a.source_twists() != b.target_twists())
    throw std::invalid_argument("profile mismatch: cannot compose maps with incompatible twists");
  PolyMatrix out(a.nvars(), b.source_twists(), a.target_twists());
  for (Index r = 0; r < a.rows(); ++r) {
    for (Index c = 0; c < b.cols(); ++c) {
      Polynomial acc(a.nvars());
      for (Index k = 0; k < a.cols(); ++k) {
        if (a(r, k).is_zero() || b(k, c).is_zero()) continue;
        acc += a(r, k) * b(k, c);
      }
      out.set(r, c, std::move(acc));
    }
  }
  return out;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.nvars() != b.nvars() || a.source_twists() != b.source_twists() ||
      a.target_twists() != b.target_twists())
    throw std::invalid_argument("profile mismatch: cannot add maps with different profiles");
  PolyMatrix out = a;
  for (Index r = 0; r < a.rows(); ++r)
    for (Index c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c) + b(r, c));
  return out;
}

PolyMatrix operator*(const Rational& c, const PolyMatrix& a) {
  PolyMatrix out = a;
  for (Index r = 0; r < a.rows(); ++r)
    for (Index k = 0; k < a.cols(); ++k) out.set(r, k, c * a(r, k));
  return out;
}

}  // namespace minusplit
