#include "minusplit/weyl.hpp"

#include <doctest.h>

#include <random>

using namespace minusplit;

namespace {

struct Case {
  CartanType type;
  int rank;
};

std::vector<Case> all_cases() {
  std::vector<Case> out;
  for (int n = 1; n <= 7; ++n) out.push_back({CartanType::A, n});
  for (int n = 2; n <= 6; ++n) out.push_back({CartanType::B, n});
  for (int n = 2; n <= 6; ++n) out.push_back({CartanType::C, n});
  for (int n = 3; n <= 6; ++n) out.push_back({CartanType::D, n});
  out.push_back({CartanType::E, 6});
  out.push_back({CartanType::E, 7});
  return out;
}

// Positive-root counts from the classical formulas.
std::size_t expected_positive_roots(Case c) {
  const std::size_t n = static_cast<std::size_t>(c.rank);
  switch (c.type) {
    case CartanType::A: return n * (n + 1) / 2;
    case CartanType::B:
    case CartanType::C: return n * n;
    case CartanType::D: return n * (n - 1);
    case CartanType::E: return n == 6 ? 36 : 63;
  }
  return 0;
}

}  // namespace

TEST_CASE("positive root counts and group dimensions") {
  for (const Case c : all_cases()) {
    const RootSystemPtr rs = build_root_system(c.type, c.rank);
    CAPTURE(rs->label());
    CHECK(rs->positive_roots().size() == expected_positive_roots(c));
    CHECK(group_dimension(c.type, c.rank) == c.rank + 2 * static_cast<int>(expected_positive_roots(c)));
    int top = 0;
    for (const auto& r : rs->positive_roots()) top = std::max(top, r.height);
    // Highest root height is the Coxeter number minus one.
    CHECK(static_cast<std::size_t>(top + 1) * static_cast<std::size_t>(c.rank) == 2 * expected_positive_roots(c));
  }
}

TEST_CASE("unsupported types") {
  CHECK_THROWS_AS(build_root_system("E", 8), UnsupportedTypeError);
  CHECK_THROWS_AS(build_root_system("F", 4), UnsupportedTypeError);
  CHECK_THROWS_AS(build_root_system("D", 2), UnsupportedTypeError);
  CHECK_THROWS_AS(build_root_system("G", 2), UnsupportedTypeError);
  CHECK_NOTHROW(build_root_system("a", 3));
}

TEST_CASE("Cartan matrices in Bourbaki numbering") {
  const IntMatrix b2 = build_root_system("B", 2)->cartan_matrix();
  CHECK(b2(0, 1) == -2);  // <alpha_1, alpha_2^vee> with alpha_2 short
  CHECK(b2(1, 0) == -1);
  const IntMatrix c3 = build_root_system("C", 3)->cartan_matrix();
  CHECK(c3(2, 1) == -2);
  CHECK(c3(1, 2) == -1);
  const IntMatrix e6 = build_root_system("E", 6)->cartan_matrix();
  CHECK(e6(1, 3) == -1);  // node 2 hangs off node 4
  CHECK(e6(0, 2) == -1);
  CHECK(e6(1, 2) == 0);
  const IntMatrix d5 = build_root_system("D", 5)->cartan_matrix();
  CHECK(d5(2, 3) == -1);
  CHECK(d5(2, 4) == -1);
  CHECK(d5(3, 4) == 0);
  for (const Case c : all_cases()) {
    const RootSystemPtr rs = build_root_system(c.type, c.rank);
    for (int i = 0; i < c.rank; ++i) CHECK(rs->cartan_matrix()(i, i) == 2);
  }
}

TEST_CASE("minuscule nodes") {
  CHECK(minuscule_nodes(*build_root_system("A", 3)) == std::vector<int>{1, 2, 3});
  CHECK(minuscule_nodes(*build_root_system("B", 4)) == std::vector<int>{4});
  CHECK(minuscule_nodes(*build_root_system("C", 3)) == std::vector<int>{1});
  CHECK(minuscule_nodes(*build_root_system("D", 5)) == std::vector<int>{1, 4, 5});
  CHECK(minuscule_nodes(*build_root_system("E", 6)) == std::vector<int>{1, 6});
  CHECK(minuscule_nodes(*build_root_system("E", 7)) == std::vector<int>{7});
}

TEST_CASE("fundamental weights are dual to the simple coroots") {
  for (const Case c : all_cases()) {
    const RootSystemPtr rs = build_root_system(c.type, c.rank);
    for (int i = 0; i < c.rank; ++i)
      for (int j = 0; j < c.rank; ++j) {
        const RationalVector cj = coroot(rs->simple_roots()[static_cast<std::size_t>(j)], *rs);
        CHECK(rs->pairing(rs->fundamental_weights()[static_cast<std::size_t>(i)], cj) == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("random words: length, inversions and products") {
  std::mt19937_64 rng(3);
  const std::vector<RootSystemPtr> systems = {build_root_system("A", 4), build_root_system("B", 3),
                                              build_root_system("D", 5), build_root_system("E", 6)};
  for (int trial = 0; trial < 1000; ++trial) {
    const RootSystemPtr& rs = systems[static_cast<std::size_t>(trial) % systems.size()];
    std::vector<int> u(rng() % 12), v(rng() % 12);
    for (int& s : u) s = static_cast<int>(rng() % static_cast<unsigned>(rs->rank()));
    for (int& s : v) s = static_cast<int>(rng() % static_cast<unsigned>(rs->rank()));
    const WeylElement a = WeylElement::from_word(rs, u), b = WeylElement::from_word(rs, v);
    std::vector<int> uv = u;
    uv.insert(uv.end(), v.begin(), v.end());
    CHECK(multiply(a, b) == WeylElement::from_word(rs, uv));
    CHECK(inversion_count(a) == a.length());
    CHECK(a.length() <= static_cast<int>(u.size()));
    CHECK(a.length() % 2 == static_cast<int>(u.size()) % 2);
    CHECK(WeylElement::from_word(rs, a.word()) == a);
    CHECK(multiply(a, a.inverse()) == WeylElement::identity(rs));
  }
}

TEST_CASE("longest elements") {
  for (const Case c : all_cases()) {
    const RootSystemPtr rs = build_root_system(c.type, c.rank);
    CHECK(longest_element(rs, all_nodes(*rs)).length() == static_cast<int>(expected_positive_roots(c)));
  }
}
