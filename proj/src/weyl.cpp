#include "minusplit/weyl.hpp"

#include <boost/functional/hash.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace minusplit {

namespace {

// M · s_i, acting on columns: col_j <- col_j - <alpha_j, alpha_i^vee> col_i.
void right_multiply_simple(IntMatrix& m, const IntMatrix& cartan, int i) {
  const IntVector ci = m.col(i);
  for (Index j = 0; j < m.cols(); ++j)
    if (cartan(j, i) != 0) m.col(j) -= cartan(j, i) * ci;
}

bool is_negative(const IntVector& v) { return (v.array() <= 0).all() && !v.isZero(); }

}  // namespace

WeylElement::WeylElement(RootSystemPtr rs, IntMatrix action)
    : system_(std::move(rs)), action_(std::move(action)) {
  if (!system_) return;
  IntMatrix m = action_;
  const IntMatrix& cartan = system_->cartan_matrix();
  bool descended = true;
  while (descended) {
    descended = false;
    for (int i = 0; i < system_->rank(); ++i) {
      if (is_negative(m.col(i))) {
        right_multiply_simple(m, cartan, i);
        word_.push_back(i);
        descended = true;
        break;
      }
    }
  }
  std::reverse(word_.begin(), word_.end());
}

WeylElement WeylElement::identity(RootSystemPtr rs) {
  const int n = rs ? rs->rank() : 0;
  return WeylElement(std::move(rs), IntMatrix::Identity(n, n));
}

WeylElement WeylElement::simple_reflection(RootSystemPtr rs, int i) {
  if (!rs || i < 0 || i >= rs->rank()) throw std::out_of_range("simple reflection index");
  IntMatrix m = IntMatrix::Identity(rs->rank(), rs->rank());
  right_multiply_simple(m, rs->cartan_matrix(), i);
  return WeylElement(std::move(rs), std::move(m));
}

WeylElement WeylElement::from_action(RootSystemPtr rs, IntMatrix action) {
  return WeylElement(std::move(rs), std::move(action));
}

WeylElement WeylElement::from_word(RootSystemPtr rs, const std::vector<int>& word) {
  IntMatrix m = IntMatrix::Identity(rs->rank(), rs->rank());
  for (int i : word) {
    if (i < 0 || i >= rs->rank()) throw std::out_of_range("simple reflection index");
    right_multiply_simple(m, rs->cartan_matrix(), i);
  }
  return WeylElement(std::move(rs), std::move(m));
}

WeylElement WeylElement::reflection(RootSystemPtr rs, const RootVector& beta) {
  const int n = rs->rank();
  IntMatrix m = IntMatrix::Identity(n, n);
  const Rational norm = rs->pairing(beta.coords, beta.coords);
  for (int j = 0; j < n; ++j) {
    const Rational p = Rational(2) * rs->pairing(rs->simple_roots()[static_cast<std::size_t>(j)], beta.coords) / norm;
    m.col(j) -= static_cast<int>(numerator(p)) * beta.coefficients;
  }
  return WeylElement(std::move(rs), std::move(m));
}

bool WeylElement::has_right_descent(int i) const { return is_negative(action_.col(i)); }

WeylElement WeylElement::inverse() const {
  std::vector<int> w(word_.rbegin(), word_.rend());
  return from_word(system_, w);
}

std::size_t WeylElement::hash() const {
  return boost::hash_range(action_.data(), action_.data() + action_.size());
}

std::string WeylElement::word_string() const {
  if (word_.empty()) return "e";
  std::ostringstream os;
  for (std::size_t k = 0; k < word_.size(); ++k) os << (k ? " " : "") << "s" << word_[k] + 1;
  return os.str();
}

WeylElement multiply(const WeylElement& a, const WeylElement& b) {
  if (!a.system() || !b.system() || !a.system()->same_system(*b.system()))
    throw std::invalid_argument("multiply: elements of different root systems");
  return WeylElement::from_word(a.system(), [&] {
    std::vector<int> w = a.word();
    w.insert(w.end(), b.word().begin(), b.word().end());
    return w;
  }());
}

int inversion_count(const WeylElement& w) {
  int count = 0;
  for (const auto& beta : w.system()->positive_roots())
    if (is_negative(w.apply(beta.coefficients))) ++count;
  return count;
}

RationalMatrix ambient_action(const WeylElement& w) {
  const RootSystem& rs = *w.system();
  const Index dim = rs.ambient_dim();
  RationalMatrix m = RationalMatrix::Identity(dim, dim);
  for (int i : w.word()) {
    const RationalVector& a = rs.simple_roots()[static_cast<std::size_t>(i)];
    const RationalMatrix r = RationalMatrix::Identity(dim, dim) -
                             (Rational(2) / rs.pairing(a, a)) * (a * (rs.form() * a).transpose());
    m = m * r;
  }
  return m;
}

std::vector<int> all_nodes(const RootSystem& rs) {
  std::vector<int> out;
  for (int k = 1; k <= rs.rank(); ++k) out.push_back(k);
  return out;
}

std::vector<int> levi_nodes(const RootSystem& rs, int node) {
  std::vector<int> out;
  for (int k = 1; k <= rs.rank(); ++k)
    if (k != node) out.push_back(k);
  return out;
}

WeylElement longest_element(RootSystemPtr rs, const std::vector<int>& nodes) {
  IntMatrix m = IntMatrix::Identity(rs->rank(), rs->rank());
  bool grew = true;
  while (grew) {
    grew = false;
    for (int node : nodes) {
      const int i = node - 1;
      if (!is_negative(m.col(i))) {
        right_multiply_simple(m, rs->cartan_matrix(), i);
        grew = true;
      }
    }
  }
  return WeylElement::from_action(std::move(rs), std::move(m));
}

WeylElement min_coset_representative(const WeylElement& u, const std::vector<int>& levi) {
  IntMatrix m = u.action();
  bool shrank = true;
  while (shrank) {
    shrank = false;
    for (int node : levi) {
      const int i = node - 1;
      if (is_negative(m.col(i))) {
        right_multiply_simple(m, u.system()->cartan_matrix(), i);
        shrank = true;
      }
    }
  }
  return WeylElement::from_action(u.system(), std::move(m));
}

Index CosetPoset::find(const WeylElement& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

const Cover* CosetPoset::cover(Index i, Index j) const {
  for (const auto& c : covers_)
    if (c.from == i && c.to == j) return &c;
  return nullptr;
}

std::vector<long> CosetPoset::rank_sizes() const {
  std::vector<long> sizes(static_cast<std::size_t>(max_length()) + 1, 0);
  for (const auto& w : reps_) ++sizes[static_cast<std::size_t>(w.length())];
  return sizes;
}

CosetPoset coset_reps(RootSystemPtr rs, int node) {
  if (!rs || node < 1 || node > rs->rank()) throw std::out_of_range("coset_reps: node out of range");
  CosetPoset p;
  p.system_ = rs;
  p.node_ = node;
  p.levi_ = levi_nodes(*rs, node);

  auto minimal = [&](const WeylElement& u) {
    for (int j : p.levi_)
      if (u.has_right_descent(j - 1)) return false;
    return true;
  };

  std::vector<WeylElement> simple;
  for (int i = 0; i < rs->rank(); ++i) simple.push_back(WeylElement::simple_reflection(rs, i));

  p.reps_.push_back(WeylElement::identity(rs));
  p.index_.emplace(p.reps_.front(), 0);
  for (std::size_t head = 0; head < p.reps_.size(); ++head) {
    for (int i = 0; i < rs->rank(); ++i) {
      WeylElement u = WeylElement::from_action(rs, simple[static_cast<std::size_t>(i)].action() *
                                                       p.reps_[head].action());
      if (u.length() != p.reps_[head].length() + 1 || !minimal(u)) continue;
      if (p.index_.count(u)) continue;
      p.index_.emplace(u, static_cast<Index>(p.reps_.size()));
      p.reps_.push_back(std::move(u));
    }
  }

  std::vector<WeylElement> reflections;
  for (const auto& beta : rs->positive_roots()) reflections.push_back(WeylElement::reflection(rs, beta));

  const std::size_t n = p.reps_.size();
  p.succ_.assign(n, {});
  p.pred_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t r = 0; r < reflections.size(); ++r) {
      const IntMatrix prod = p.reps_[i].action() * reflections[r].action();
      auto it = p.index_.find(WeylElement::from_action(nullptr, prod));
      if (it == p.index_.end()) continue;
      const Index j = it->second;
      if (p.reps_[static_cast<std::size_t>(j)].length() != p.reps_[i].length() + 1) continue;
      p.covers_.push_back({static_cast<Index>(i), j, static_cast<Index>(r)});
      p.succ_[i].push_back(j);
      p.pred_[static_cast<std::size_t>(j)].push_back(static_cast<Index>(i));
    }
  }

  p.upper_.assign(n, boost::dynamic_bitset<>(n));
  for (std::size_t k = n; k-- > 0;) {
    p.upper_[k].set(k);
    for (Index j : p.succ_[k]) p.upper_[k] |= p.upper_[static_cast<std::size_t>(j)];
  }

  p.w0_ = longest_element(rs, all_nodes(*rs));
  p.w0_levi_ = longest_element(rs, p.levi_);
  return p;
}

Index duality(const CosetPoset& poset, const WeylElement& w) {
  if (poset.find(w) < 0) throw std::invalid_argument("duality: element is not a minimal coset representative");
  const WeylElement u = multiply(multiply(poset.w0(), w), poset.w0_levi());
  return poset.find(min_coset_representative(u, poset.levi()));
}

Index duality(const CosetPoset& poset, Index i) { return duality(poset, poset.rep(i)); }

const std::vector<Cover>& hasse_edges(const CosetPoset& poset) { return poset.covers(); }

}  // namespace minusplit
