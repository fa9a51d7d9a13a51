#include "minusplit/weyl.hpp"

#include <doctest.h>

#include <numeric>

using namespace minusplit;

namespace {

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("sizes of parabolic quotients") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) CHECK(coset_reps(build_root_system("A", n), k).size() == binomial(n + 1, k));
  for (int n = 3; n <= 6; ++n) {
    CHECK(coset_reps(build_root_system("D", n), 1).size() == 2 * n);
    CHECK(coset_reps(build_root_system("D", n), n).size() == (1L << (n - 1)));
    CHECK(coset_reps(build_root_system("B", n), 1).size() == 2 * n);
    CHECK(coset_reps(build_root_system("C", n), n).size() == (1L << n));
  }
  CHECK(coset_reps(build_root_system("E", 6), 6).size() == 27);
  CHECK(coset_reps(build_root_system("E", 6), 1).size() == 27);
  CHECK(coset_reps(build_root_system("E", 7), 7).size() == 56);
}

TEST_CASE("dimensions of G/P") {
  CHECK(coset_reps(build_root_system("E", 6), 6).max_length() == 16);
  CHECK(coset_reps(build_root_system("E", 7), 7).max_length() == 27);
  for (int n = 3; n <= 6; ++n) CHECK(coset_reps(build_root_system("D", n), n).max_length() == n * (n - 1) / 2);
  for (int n = 2; n <= 5; ++n) CHECK(coset_reps(build_root_system("C", n), n).max_length() == n * (n + 1) / 2);
  for (int n = 2; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) CHECK(coset_reps(build_root_system("A", n), k).max_length() == k * (n + 1 - k));
}

TEST_CASE("poset structure") {
  for (const auto& [type, rank, node] : std::vector<std::tuple<const char*, int, int>>{
           {"A", 3, 2}, {"A", 5, 3}, {"D", 5, 5}, {"D", 4, 1}, {"E", 6, 6}, {"E", 7, 7}, {"C", 3, 3}, {"B", 3, 1}}) {
    const CosetPoset p = coset_reps(build_root_system(type, rank), node);
    CAPTURE(type);
    CAPTURE(rank);
    const auto sizes = p.rank_sizes();
    CHECK(std::accumulate(sizes.begin(), sizes.end(), 0L) == p.size());
    for (std::size_t i = 0; i < sizes.size(); ++i) CHECK(sizes[i] == sizes[sizes.size() - 1 - i]);
    CHECK(p.rep(0).length() == 0);
    for (const Cover& c : p.covers()) {
      CHECK(p.length(c.to) == p.length(c.from) + 1);
      CHECK(p.leq(c.from, c.to));
      CHECK_FALSE(p.leq(c.to, c.from));
    }
    for (Index i = 0; i < p.size(); ++i) {
      CHECK(p.leq(0, i));
      CHECK(p.leq(i, p.size() - 1));
      const Index j = duality(p, i);
      CHECK(duality(p, j) == i);
      CHECK(p.length(i) + p.length(j) == p.max_length());
      for (std::size_t s = 0; s < static_cast<std::size_t>(rank); ++s) {
        // Representatives have no right descents inside the Levi.
        if (static_cast<int>(s) + 1 != node) CHECK_FALSE(p.rep(i).has_right_descent(static_cast<int>(s)));
      }
    }
    CHECK(&hasse_edges(p) == &p.covers());
  }
}

TEST_CASE("Bruhat order is the transitive closure of the covers") {
  const CosetPoset p = coset_reps(build_root_system("D", 5), 5);
  for (Index i = 0; i < p.size(); ++i) {
    std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
    std::vector<Index> stack = {i};
    seen[static_cast<std::size_t>(i)] = true;
    while (!stack.empty()) {
      const Index v = stack.back();
      stack.pop_back();
      for (Index s : p.successors(v))
        if (!seen[static_cast<std::size_t>(s)]) {
          seen[static_cast<std::size_t>(s)] = true;
          stack.push_back(s);
        }
    }
    for (Index j = 0; j < p.size(); ++j) CHECK(p.leq(i, j) == seen[static_cast<std::size_t>(j)]);
  }
}

TEST_CASE("minimal coset representatives") {
  const RootSystemPtr rs = build_root_system("A", 3);
  const WeylElement w = WeylElement::from_word(rs, {1, 0, 2, 1});
  const WeylElement m = min_coset_representative(w, levi_nodes(*rs, 2));
  const CosetPoset p = coset_reps(rs, 2);
  CHECK(p.find(m) >= 0);
  CHECK(m.length() <= w.length());
  CHECK(p.find(WeylElement::from_word(rs, {0})) == -1);
}
