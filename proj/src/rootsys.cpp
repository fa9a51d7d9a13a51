#include "minusplit/rootsys.hpp"

#include "minusplit/exactla.hpp"

#include <cctype>
#include <deque>
#include <map>
#include <sstream>

namespace minusplit {

namespace {

RationalVector unit(Index dim, Index i, const Rational& scale = Rational(1)) {
  RationalVector v = RationalVector::Zero(dim);
  v[i] = scale;
  return v;
}

std::vector<RationalVector> classical_simple_roots(CartanType type, int n) {
  std::vector<RationalVector> roots;
  const Index dim = type == CartanType::A ? n + 1 : n;
  const int chain = type == CartanType::A ? n : n - 1;
  for (int i = 0; i < chain; ++i) roots.push_back(unit(dim, i) - unit(dim, i + 1));
  switch (type) {
    case CartanType::B: roots.push_back(unit(dim, n - 1)); break;
    case CartanType::C: roots.push_back(unit(dim, n - 1, 2)); break;
    case CartanType::D: roots.push_back(unit(dim, n - 2) + unit(dim, n - 1)); break;
    default: break;
  }
  return roots;
}

std::vector<RationalVector> exceptional_simple_roots(int n) {
  // First n simple roots of E8 in Bourbaki's realization inside Q^8.
  std::vector<RationalVector> roots;
  const Rational h(1, 2);
  RationalVector a1(8);
  a1 << h, -h, -h, -h, -h, -h, -h, h;
  roots.push_back(a1);
  roots.push_back(unit(8, 0) + unit(8, 1));
  for (int i = 1; i < n - 1; ++i) roots.push_back(unit(8, i) - unit(8, i - 1));
  return roots;
}

void check_supported(CartanType type, int rank) {
  bool ok = false;
  switch (type) {
    case CartanType::A: ok = rank >= 1; break;
    case CartanType::B: ok = rank >= 2; break;
    case CartanType::C: ok = rank >= 2; break;
    case CartanType::D: ok = rank >= 3; break;
    case CartanType::E: ok = rank == 6 || rank == 7; break;
  }
  if (!ok) {
    std::ostringstream os;
    os << "unsupported type " << to_char(type) << rank;
    if (type == CartanType::E && rank == 8) os << " (E8 has no minuscule node)";
    throw UnsupportedTypeError(os.str());
  }
}

}  // namespace

char to_char(CartanType t) {
  switch (t) {
    case CartanType::A: return 'A';
    case CartanType::B: return 'B';
    case CartanType::C: return 'C';
    case CartanType::D: return 'D';
    case CartanType::E: return 'E';
  }
  return '?';
}

std::string RootSystem::label() const { return std::string(1, to_char(type_)) + std::to_string(rank_); }

Rational RootSystem::pairing(const RationalVector& x, const RationalVector& y) const {
  return x.dot(form_ * y);
}

RationalVector RootSystem::combination(const IntVector& coefficients) const {
  RationalVector v = RationalVector::Zero(ambient_dim());
  for (int i = 0; i < rank_; ++i)
    if (coefficients[i] != 0) v += Rational(coefficients[i]) * simple_roots_[static_cast<std::size_t>(i)];
  return v;
}

Index RootSystem::find_positive_root(const IntVector& coefficients) const {
  for (std::size_t k = 0; k < positive_roots_.size(); ++k)
    if (positive_roots_[k].coefficients == coefficients) return static_cast<Index>(k);
  return -1;
}

RootSystemPtr build_root_system(CartanType type, int rank) {
  check_supported(type, rank);
  std::shared_ptr<RootSystem> rs(new RootSystem());
  rs->type_ = type;
  rs->rank_ = rank;
  rs->simple_roots_ = type == CartanType::E ? exceptional_simple_roots(rank)
                                            : classical_simple_roots(type, rank);
  const Index dim = rs->simple_roots_.front().size();
  rs->form_ = RationalMatrix::Identity(dim, dim);

  rs->cartan_.resize(rank, rank);
  for (int i = 0; i < rank; ++i) {
    for (int j = 0; j < rank; ++j) {
      const auto& ai = rs->simple_roots_[static_cast<std::size_t>(i)];
      const auto& aj = rs->simple_roots_[static_cast<std::size_t>(j)];
      const Rational c = Rational(2) * rs->pairing(ai, aj) / rs->pairing(aj, aj);
      rs->cartan_(i, j) = static_cast<int>(numerator(c));
    }
  }

  // Positive roots: close the simple roots under simple reflections, which
  // act on simple-root coefficients through the Cartan matrix.
  std::map<std::vector<int>, bool> seen;
  std::deque<IntVector> queue;
  std::vector<IntVector> found;
  for (int i = 0; i < rank; ++i) {
    IntVector e = IntVector::Zero(rank);
    e[i] = 1;
    seen[std::vector<int>(e.data(), e.data() + rank)] = true;
    queue.push_back(e);
  }
  while (!queue.empty()) {
    IntVector beta = queue.front();
    queue.pop_front();
    found.push_back(beta);
    for (int i = 0; i < rank; ++i) {
      int pair = 0;
      for (int j = 0; j < rank; ++j) pair += beta[j] * rs->cartan_(j, i);
      IntVector image = beta;
      image[i] -= pair;
      if ((image.array() < 0).any()) continue;
      std::vector<int> key(image.data(), image.data() + rank);
      if (seen.emplace(key, true).second) queue.push_back(image);
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const IntVector& a, const IntVector& b) { return a.sum() < b.sum(); });
  for (const auto& c : found) rs->positive_roots_.push_back({rs->combination(c), c, c.sum()});

  // omega_i = sum_j (C^{-1})_{ij} alpha_j
  RationalMatrix cartan_q = rs->cartan_.cast<Rational>();
  for (int i = 0; i < rank; ++i) {
    RationalVector e = RationalVector::Zero(rank);
    e[i] = 1;
    RationalVector row;
    solve(cartan_q.transpose(), e, row);
    RationalVector w = RationalVector::Zero(dim);
    for (int j = 0; j < rank; ++j) w += row[j] * rs->simple_roots_[static_cast<std::size_t>(j)];
    rs->fundamental_weights_.push_back(w);
  }
  return rs;
}

RootSystemPtr build_root_system(std::string_view type_letter, int rank) {
  if (type_letter.size() != 1) throw UnsupportedTypeError("unsupported type " + std::string(type_letter));
  switch (std::toupper(static_cast<unsigned char>(type_letter.front()))) {
    case 'A': return build_root_system(CartanType::A, rank);
    case 'B': return build_root_system(CartanType::B, rank);
    case 'C': return build_root_system(CartanType::C, rank);
    case 'D': return build_root_system(CartanType::D, rank);
    case 'E': return build_root_system(CartanType::E, rank);
    default: break;
  }
  throw UnsupportedTypeError("unsupported type " + std::string(type_letter) + std::to_string(rank) +
                             " (F4 and G2 have no minuscule node)");
}

RationalVector coroot(const RationalVector& beta, const RootSystem& rs) {
  if (beta.size() != rs.ambient_dim() || beta.isZero()) throw std::invalid_argument("not a root");
  bool is_root = false;
  for (const auto& r : rs.positive_roots())
    if (r.coords == beta || r.coords == RationalVector(-beta)) is_root = true;
  if (!is_root) throw std::invalid_argument("not a root");
  return (Rational(2) / rs.pairing(beta, beta)) * beta;
}

Rational weight_coroot_pairing(const RootSystem& rs, int node, const RootVector& beta) {
  const auto& w = rs.fundamental_weights().at(static_cast<std::size_t>(node - 1));
  return Rational(2) * rs.pairing(w, beta.coords) / rs.pairing(beta.coords, beta.coords);
}

bool is_minuscule(const RootSystem& rs, int node) {
  if (node < 1 || node > rs.rank()) throw std::out_of_range("node out of range");
  for (const auto& beta : rs.positive_roots()) {
    const Rational p = weight_coroot_pairing(rs, node, beta);
    if (p != 0 && p != 1) return false;
  }
  return true;
}

std::vector<int> minuscule_nodes(const RootSystem& rs) {
  std::vector<int> out;
  for (int node = 1; node <= rs.rank(); ++node)
    if (is_minuscule(rs, node)) out.push_back(node);
  return out;
}

int group_dimension(CartanType type, int n) {
  switch (type) {
    case CartanType::A: return n * (n + 2);
    case CartanType::B:
    case CartanType::C: return n * (2 * n + 1);
    case CartanType::D: return n * (2 * n - 1);
    case CartanType::E: return n == 6 ? 78 : (n == 7 ? 133 : 248);
  }
  return 0;
}

}  // namespace minusplit
