#pragma once

// Sparse Laurent polynomials with rational coefficients in two or three
// variables (x, y and optionally z). Ordinary homogeneous polynomials are the
// common case; negative exponents appear only in the top cohomology bases.

#include "minusplit/scalar.hpp"

#include <array>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minusplit {

using Monomial = std::array<int, 3>;

inline int total_degree(const Monomial& m) { return m[0] + m[1] + m[2]; }

inline Monomial operator+(const Monomial& a, const Monomial& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

/// All exponent vectors of total degree d in nvars variables, in descending
/// lexicographic order (x^d first). Empty for d < 0.
std::vector<Monomial> monomial_basis(int nvars, int d);

/// Index of m in monomial_basis(nvars, total_degree(m)), or -1.
Index monomial_index(int nvars, const Monomial& m);

/// Raised on malformed polynomial text; `column` is 1-based within the text.
class PolynomialParseError : public std::runtime_error {
 public:
  PolynomialParseError(std::size_t column, const std::string& what)
      : std::runtime_error(what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational>;

  explicit Polynomial(int nvars = 3) : nvars_(nvars) {}
  Polynomial(int nvars, const Rational& constant);

  static Polynomial monomial(int nvars, const Monomial& m, const Rational& coeff = Rational(1));
  static Polynomial variable(int nvars, int index);

  /// Parses "c*x^a*y^b*z^c" style sums; throws PolynomialParseError.
  static Polynomial parse(std::string_view text, int nvars);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const Monomial& m) const;

  /// Degree of a nonzero homogeneous polynomial; throws otherwise.
  int degree() const;
  bool is_homogeneous() const;
  bool is_homogeneous_of_degree(int d) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Rational& c);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  void add_term(const Monomial& m, const Rational& c);

  Rational evaluate(const std::vector<Rational>& point) const;

  /// Sets variable `var` to zero and drops it, giving a polynomial in one
  /// fewer variable (remaining variables keep their order).
  Polynomial restrict_to_hyperplane(int var) const;

  std::string to_string() const;

 private:
  int nvars_;
  Terms terms_;
};

}  // namespace minusplit
