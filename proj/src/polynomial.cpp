#include "minusplit/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace minusplit {

namespace {

constexpr char kVarNames[3] = {'x', 'y', 'z'};

void check_nvars(int nvars) {
  if (nvars < 1 || nvars > 3) throw std::invalid_argument("polynomials support 1 to 3 variables");
}

class Parser {
 public:
  Parser(std::string_view text, int nvars) : text_(text), nvars_(nvars) {}

  Polynomial run() {
    Polynomial p(nvars_);
    skip_ws();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      auto [mono, coeff] = term();
      p.add_term(mono, sign > 0 ? coeff : -coeff);
      first = false;
      skip_ws();
    }
    return p;
  }

 private:
  std::pair<Monomial, Rational> term() {
    Monomial m{0, 0, 0};
    Rational c = 1;
    bool need_factor = true;
    while (need_factor) {
      skip_ws();
      if (at_end()) fail("expected a coefficient or variable");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        c *= number();
      } else {
        const int v = variable();
        int e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          bool neg = false;
          if (!at_end() && peek() == '-') {
            neg = true;
            ++pos_;
          }
          e = static_cast<int>(integer_digits());
          if (neg) e = -e;
        }
        m[static_cast<std::size_t>(v)] += e;
      }
      skip_ws();
      need_factor = !at_end() && peek() == '*';
      if (need_factor) ++pos_;
    }
    return {m, c};
  }

  Rational number() {
    Integer num(digits());
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      const std::size_t at = pos_;
      Integer den(digits());
      if (den == 0) fail_at(at, "zero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  long integer_digits() {
    const std::size_t at = pos_;
    const std::string d = digits();
    if (d.size() > 6) fail_at(at, "exponent too large");
    return std::stol(d);
  }

  int variable() {
    const char ch = peek();
    for (int v = 0; v < nvars_; ++v) {
      if (ch == kVarNames[v]) {
        ++pos_;
        return v;
      }
    }
    fail(std::string("unexpected character '") + ch + "'");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& msg) const { fail_at(pos_, msg); }
  [[noreturn]] void fail_at(std::size_t at, const std::string& msg) const {
    std::ostringstream os;
    os << "column " << at + 1 << ": " << msg;
    throw PolynomialParseError(at + 1, os.str());
  }

  std::string_view text_;
  int nvars_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<Monomial> monomial_basis(int nvars, int d) {
  check_nvars(nvars);
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (nvars == 1) {
    out.push_back({d, 0, 0});
  } else if (nvars == 2) {
    for (int a = d; a >= 0; --a) out.push_back({a, d - a, 0});
  } else {
    for (int a = d; a >= 0; --a)
      for (int b = d - a; b >= 0; --b) out.push_back({a, b, d - a - b});
  }
  return out;
}

Index monomial_index(int nvars, const Monomial& m) {
  for (int v = 0; v < 3; ++v) {
    if (m[static_cast<std::size_t>(v)] < 0) return -1;
    if (v >= nvars && m[static_cast<std::size_t>(v)] != 0) return -1;
  }
  const Index d = total_degree(m);
  if (nvars == 1) return 0;
  if (nvars == 2) return d - m[0];
  const Index r = d - m[0];
  return r * (r + 1) / 2 + (r - m[1]);
}

Polynomial::Polynomial(int nvars, const Rational& constant) : nvars_(nvars) {
  add_term({0, 0, 0}, constant);
}

Polynomial Polynomial::monomial(int nvars, const Monomial& m, const Rational& coeff) {
  Polynomial p(nvars);
  p.add_term(m, coeff);
  return p;
}

Polynomial Polynomial::variable(int nvars, int index) {
  Monomial m{0, 0, 0};
  m[static_cast<std::size_t>(index)] = 1;
  return monomial(nvars, m);
}

Polynomial Polynomial::parse(std::string_view text, int nvars) {
  check_nvars(nvars);
  return Parser(text, nvars).run();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != d) return false;
  return true;
}

bool Polynomial::is_homogeneous_of_degree(int d) const {
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != d) return false;
  return true;
}

int Polynomial::degree() const {
  if (terms_.empty()) throw std::logic_error("degree of the zero polynomial");
  if (!is_homogeneous()) throw std::logic_error("degree of an inhomogeneous polynomial");
  return total_degree(terms_.begin()->first);
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.nvars_, b.nvars_));
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma + mb, ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, v] : out.terms_) v = -v;
  return out;
}

Rational Polynomial::evaluate(const std::vector<Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (int v = 0; v < nvars_; ++v) {
      const int e = m[static_cast<std::size_t>(v)];
      const Rational& base = point[static_cast<std::size_t>(v)];
      if (e < 0 && base == 0) throw std::domain_error("evaluate: Laurent term at a zero coordinate");
      Rational pw = 1;
      for (int k = 0; k < std::abs(e); ++k) pw *= base;
      t *= e >= 0 ? pw : Rational(1) / pw;
    }
    total += t;
  }
  return total;
}

Polynomial Polynomial::restrict_to_hyperplane(int var) const {
  if (var < 0 || var >= nvars_) throw std::out_of_range("restrict_to_hyperplane: bad variable");
  Polynomial out(nvars_ - 1);
  for (const auto& [m, c] : terms_) {
    if (m[static_cast<std::size_t>(var)] != 0) continue;
    Monomial r{0, 0, 0};
    int k = 0;
    for (int v = 0; v < nvars_; ++v)
      if (v != var) r[static_cast<std::size_t>(k++)] = m[static_cast<std::size_t>(v)];
    out.add_term(r, c);
  }
  return out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending order reads naturally: x^2 before x*y before z^2.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool constant = m == Monomial{0, 0, 0};
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || constant) {
      os << mag.str();
      need_star = true;
    }
    for (int v = 0; v < nvars_; ++v) {
      const int e = m[static_cast<std::size_t>(v)];
      if (e == 0) continue;
      if (need_star) os << "*";
      os << kVarNames[v];
      if (e != 1) os << "^" << e;
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace minusplit
