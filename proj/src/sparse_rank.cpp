#include "minusplit/sparse_rank.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace minusplit {

namespace {

struct Row {
  std::vector<Index> cols;  // strictly increasing
  std::vector<Integer> vals;

  Index size() const { return static_cast<Index>(cols.size()); }

  const Integer* find(Index c) const {
    auto it = std::lower_bound(cols.begin(), cols.end(), c);
    if (it == cols.end() || *it != c) return nullptr;
    return &vals[static_cast<std::size_t>(it - cols.begin())];
  }
};

void make_primitive(Row& r) {
  if (r.vals.empty()) return;
  Integer g = 0;
  for (const auto& v : r.vals) {
    g = boost::multiprecision::gcd(g, v);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& v : r.vals) v /= g;
}

// s <- a*s - b*r, zero entries dropped.
Row combine(const Row& s, const Integer& a, const Row& r, const Integer& b) {
  Row out;
  out.cols.reserve(s.cols.size() + r.cols.size());
  out.vals.reserve(s.cols.size() + r.cols.size());
  std::size_t i = 0, j = 0;
  while (i < s.cols.size() || j < r.cols.size()) {
    if (j == r.cols.size() || (i < s.cols.size() && s.cols[i] < r.cols[j])) {
      out.cols.push_back(s.cols[i]);
      out.vals.push_back(a * s.vals[i]);
      ++i;
    } else if (i == s.cols.size() || r.cols[j] < s.cols[i]) {
      out.cols.push_back(r.cols[j]);
      out.vals.push_back(-(b * r.vals[j]));
      ++j;
    } else {
      Integer v = a * s.vals[i] - b * r.vals[j];
      if (v != 0) {
        out.cols.push_back(s.cols[i]);
        out.vals.push_back(std::move(v));
      }
      ++i;
      ++j;
    }
  }
  make_primitive(out);
  return out;
}

}  // namespace

SparseRationalMatrix to_sparse(const RationalMatrix& m) {
  std::vector<RationalTriplet> triplets;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) triplets.emplace_back(i, j, m(i, j));
  SparseRationalMatrix s(m.rows(), m.cols());
  s.setFromTriplets(triplets.begin(), triplets.end());
  return s;
}

Index sparse_rank(const SparseRationalMatrix& m) {
  const Index n = m.rows();
  std::vector<Row> rows(static_cast<std::size_t>(n));
  std::vector<std::vector<Index>> col_rows(static_cast<std::size_t>(m.cols()));
  std::vector<Index> col_count(static_cast<std::size_t>(m.cols()), 0);

  for (Index i = 0; i < n; ++i) {
    Integer l = 1;
    for (SparseRationalMatrix::InnerIterator it(m, i); it; ++it) {
      if (it.value() == 0) continue;
      const Integer d = denominator(it.value());
      l = l / boost::multiprecision::gcd(l, d) * d;
    }
    Row& r = rows[static_cast<std::size_t>(i)];
    for (SparseRationalMatrix::InnerIterator it(m, i); it; ++it) {
      if (it.value() == 0) continue;
      r.cols.push_back(it.col());
      r.vals.push_back(numerator(it.value()) * (l / denominator(it.value())));
    }
    make_primitive(r);
    for (Index c : r.cols) {
      col_rows[static_cast<std::size_t>(c)].push_back(i);
      ++col_count[static_cast<std::size_t>(c)];
    }
  }

  std::set<std::pair<Index, Index>> queue;  // (nnz, row)
  for (Index i = 0; i < n; ++i) queue.emplace(rows[static_cast<std::size_t>(i)].size(), i);
  std::vector<bool> alive(static_cast<std::size_t>(n), true);

  Index rank = 0;
  while (!queue.empty()) {
    const Index pr = queue.begin()->second;
    queue.erase(queue.begin());
    alive[static_cast<std::size_t>(pr)] = false;
    const Row& pivot_row = rows[static_cast<std::size_t>(pr)];
    if (pivot_row.cols.empty()) continue;

    std::size_t best = 0;
    for (std::size_t k = 1; k < pivot_row.cols.size(); ++k) {
      const Index ck = col_count[static_cast<std::size_t>(pivot_row.cols[k])];
      const Index cb = col_count[static_cast<std::size_t>(pivot_row.cols[best])];
      if (ck < cb || (ck == cb && abs(pivot_row.vals[k]) < abs(pivot_row.vals[best]))) best = k;
    }
    const Index pc = pivot_row.cols[best];
    const Integer pv = pivot_row.vals[best];
    ++rank;
    for (Index c : pivot_row.cols) --col_count[static_cast<std::size_t>(c)];

    std::vector<Index> targets = std::move(col_rows[static_cast<std::size_t>(pc)]);
    col_rows[static_cast<std::size_t>(pc)].clear();
    std::sort(targets.begin(), targets.end());
    targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
    for (Index s : targets) {
      if (!alive[static_cast<std::size_t>(s)]) continue;
      Row& row = rows[static_cast<std::size_t>(s)];
      const Integer* sv = row.find(pc);
      if (sv == nullptr) continue;
      const Integer g = boost::multiprecision::gcd(pv, *sv);
      const Integer a = pv / g;
      const Integer b = *sv / g;
      queue.erase({row.size(), s});
      for (Index c : row.cols) --col_count[static_cast<std::size_t>(c)];
      Row updated = combine(row, a, pivot_row, b);
      for (Index c : updated.cols) {
        ++col_count[static_cast<std::size_t>(c)];
        if (!std::binary_search(row.cols.begin(), row.cols.end(), c))
          col_rows[static_cast<std::size_t>(c)].push_back(s);
      }
      row = std::move(updated);
      queue.emplace(row.size(), s);
    }
  }
  return rank;
}

}  // namespace minusplit
