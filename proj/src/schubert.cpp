#include "minusplit/schubert.hpp"

#include <numeric>
#include <stdexcept>

namespace minusplit {

Integer CycleClass::max_coefficient() const {
  Integer m = 0;
  for (const auto& [k, c] : terms)
    if (c > m) m = c;
  return m;
}

SchubertClass schubert_class(const CosetPoset& poset, Index rep) {
  if (rep < 0 || rep >= poset.size()) throw std::out_of_range("schubert_class: index out of range");
  const int codim = poset.length(rep);
  return {rep, codim, poset.max_length() - codim};
}

Integer pieri_coefficient(const CosetPoset& poset, const Cover& cover) {
  const RootSystem& rs = *poset.system();
  const Rational c =
      weight_coroot_pairing(rs, poset.node(), rs.positive_roots()[static_cast<std::size_t>(cover.root)]);
  if (!is_integral(c)) throw std::logic_error("non-integral Pieri coefficient");
  return numerator(c);
}

CycleClass pieri_product(const CosetPoset& poset, const SchubertClass& w) {
  CycleClass out;
  for (const auto& cover : poset.covers()) {
    if (cover.from != w.rep) continue;
    const Integer c = pieri_coefficient(poset, cover);
    if (c != 0) out.terms[cover.to] += c;
  }
  return out;
}

std::vector<SchubertClass> x_d(const CosetPoset& poset, int d) {
  if (d < 0 || d > poset.max_length()) throw std::out_of_range("x_d: dimension out of range");
  std::vector<SchubertClass> out;
  for (Index i = 0; i < poset.size(); ++i)
    if (poset.max_length() - poset.length(i) == d) out.push_back(schubert_class(poset, i));
  return out;
}

std::vector<SchubertClass> boundary(const CosetPoset& poset, const SchubertClass& w) {
  if (w.dim < 1) throw std::invalid_argument("boundary: the point class has empty boundary");
  std::vector<SchubertClass> out;
  for (Index j : poset.successors(w.rep)) out.push_back(schubert_class(poset, j));
  return out;
}

Integer degree(const CosetPoset& poset, const SchubertClass& w) {
  if (!is_minuscule(*poset.system(), poset.node()))
    throw std::domain_error("multiplicity-aware degree not supported: node is not minuscule");
  // chains[i] = saturated chains from i down to the point; successors have
  // larger indices, so a reverse sweep sees them first.
  std::vector<Integer> chains(static_cast<std::size_t>(poset.size()), Integer(0));
  const Index top = poset.size() - 1;
  chains[static_cast<std::size_t>(top)] = 1;
  for (Index i = top - 1; i >= w.rep; --i)
    for (Index j : poset.successors(i)) chains[static_cast<std::size_t>(i)] += chains[static_cast<std::size_t>(j)];
  return chains[static_cast<std::size_t>(w.rep)];
}

Integer chains_from_fundamental(const CosetPoset& poset, Index rep) {
  std::vector<Integer> chains(static_cast<std::size_t>(poset.size()), Integer(0));
  chains[0] = 1;
  for (Index i = 1; i <= rep; ++i)
    for (Index j : poset.predecessors(i)) chains[static_cast<std::size_t>(i)] += chains[static_cast<std::size_t>(j)];
  return chains[static_cast<std::size_t>(rep)];
}

std::vector<SchubertClass> intersect_schubert(const CosetPoset& poset, const SchubertClass& w1,
                                              const SchubertClass& w2) {
  const boost::dynamic_bitset<> common = poset.upper_set(w1.rep) & poset.upper_set(w2.rep);
  std::vector<SchubertClass> out;
  for (auto v = common.find_first(); v != boost::dynamic_bitset<>::npos; v = common.find_next(v)) {
    bool minimal = true;
    for (auto u = common.find_first(); u != boost::dynamic_bitset<>::npos && minimal; u = common.find_next(u))
      if (u != v && poset.leq(static_cast<Index>(u), static_cast<Index>(v))) minimal = false;
    if (minimal) out.push_back(schubert_class(poset, static_cast<Index>(v)));
  }
  return out;
}

X2Report classify_x2(RootSystemPtr rs, int node) {
  if (!is_minuscule(*rs, node)) throw std::domain_error("classify_x2: node is not minuscule");
  const CosetPoset poset = coset_reps(rs, node);
  X2Report report;
  report.system = rs->label();
  report.node = node;
  report.variety_dim = poset.max_length();
  report.components = x_d(poset, 2);
  for (const auto& c : report.components) report.degrees.push_back(degree(poset, c));

  const std::size_t n = report.components.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a];
    return a;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      X2Intersection x{static_cast<Index>(i), static_cast<Index>(j),
                       intersect_schubert(poset, report.components[i], report.components[j])};
      if (!x.classes.empty()) parent[root(i)] = root(j);
      report.intersections.push_back(std::move(x));
    }
  }
  std::size_t roots = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (root(i) == i) ++roots;
  report.connected = roots == 1;

  bool planes = n > 0;
  for (const auto& d : report.degrees) planes = planes && d == 1;
  report.verdict = kVerdictOther;
  if (planes && n == 1) {
    report.verdict = kVerdictPlane;
  } else if (planes && n == 2) {
    const auto& meet = report.intersections.front().classes;
    if (meet.size() == 1 && meet.front().dim == 1) report.verdict = kVerdictWedge;
  }
  return report;
}

}  // namespace minusplit
