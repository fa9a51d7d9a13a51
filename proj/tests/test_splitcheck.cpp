#include "corpus.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace minusplit;
using namespace minusplit::testing;

namespace {

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

}  // namespace

TEST_CASE("plane test examples") {
  const SplitVerdict a = is_split_p2(split_bundle({1, -2}));
  CHECK(a.split);
  CHECK(a.twists == std::vector<int>{1, -2});
  CHECK(a.h1_end == 0);

  const SplitVerdict b = is_split_p2(euler_kernel());
  CHECK_FALSE(b.split);
  CHECK(b.h1_end == 3);
  CHECK(b.twists.empty());

  for (int d = -5; d <= 5; ++d) {
    const SplitVerdict c = is_split_p2(split_bundle({d}));
    CHECK(c.split);
    CHECK(c.twists == std::vector<int>{d});
  }
  CHECK(is_split_p2(euler_cokernel()).h1_end == 3);
  CHECK(is_split_p2(twisted(euler_cokernel(), 3)).h1_end == 3);
  CHECK(is_split_p2(twisted_line_kernel()).twists == std::vector<int>{-2});
  CHECK_THROWS_AS(is_split_p2(rank_two_monad()), std::invalid_argument);
}

TEST_CASE("the Cech engine gives the same verdicts") {
  SplitOptions o;
  o.cohomology.engine = Engine::Cech;
  CHECK(is_split_p2(euler_kernel(), o).h1_end == 3);
  const SplitVerdict v = is_split_p2(load_bundle(data_path("disguised_split.json")), o);
  CHECK(v.split);
  CHECK(v.twists == std::vector<int>{2, 0});
}

TEST_CASE("random split presentations are recognised") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> twists(1 + rng() % 5);
    for (int& a : twists) a = static_cast<int>(rng() % 9) - 4;
    const FreeComplex c = random_split_presentation(twists, rng);
    const SplitVerdict v = is_split_p2(c);
    CAPTURE(trial);
    REQUIRE(v.split);
    CHECK(v.twists == sorted_desc(twists));
    CHECK(static_cast<long>(v.twists.size()) == c.rank());
    long sum = 0;
    for (int a : v.twists) sum += a;
    CHECK(sum == chern_data(c).c1);
  }
}

TEST_CASE("random presentations are reproducible") {
  std::mt19937_64 a(99), b(99);
  CHECK(random_split_presentation({1, 0, -3}, a) == random_split_presentation({1, 0, -3}, b));
}

TEST_CASE("restriction to coordinate lines") {
  for (int var = 0; var < 3; ++var) {
    CHECK(splitting_type_on_line(restrict_to_line(euler_kernel(), var)) == std::vector<int>{0, -1});
    CHECK(splitting_type_on_line(restrict_to_line(euler_cokernel(), var)) == std::vector<int>{1, 0});
    CHECK(splitting_type_on_line(restrict_to_line(split_bundle({3, -1}), var)) == std::vector<int>{3, -1});
  }
  // (x, y, 0) drops rank at [0:0:1], which lies on {x = 0} but not on {z = 0}
  const FreeComplex degenerate = kernel_presentation(matrix_of(3, {0, 0, 0}, {1}, {{"x", "y", "0"}}));
  CHECK_THROWS_WITH_AS(restrict_to_line(degenerate, 0), doctest::Contains("restriction not locally free"),
                       PresentationError);
  CHECK(splitting_type_on_line(restrict_to_line(degenerate, 2)) == std::vector<int>{0, -1});
}

TEST_CASE("wedge examples with seed 0") {
  SplitOptions o;
  o.seed = 0;
  const SplitVerdict constant = is_split_wedge(load_wedge(data_path("wedge_constant.json")), o);
  CHECK(constant.split);
  CHECK(constant.twists == std::vector<int>{0, 0});
  REQUIRE(constant.wedge.has_value());
  CHECK(constant.wedge->matched_dimension >= 2);

  const SplitVerdict conic = is_split_wedge(load_wedge(data_path("wedge_conic.json")), o);
  CHECK(conic.split);
  CHECK(conic.twists == std::vector<int>{2, 0});

  const SplitVerdict omega = is_split_wedge(load_wedge(data_path("wedge_omega.json")), o);
  CHECK_FALSE(omega.split);
  CHECK(omega.h1_end == 3);
  CHECK(omega.certificate.find("does not split") != std::string::npos);
}

TEST_CASE("a non-split component forces a non-split wedge for any gluing") {
  WedgeBundle w{euler_kernel(), euler_kernel(), PolyMatrix(2, {0, 0, 0}, {0, 0, 0})};
  w.gluing.set(0, 0, Polynomial(2, Rational(1)));
  w.gluing.set(1, 1, Polynomial(2, Rational(1)));
  w.gluing.set(2, 2, Polynomial(2, Rational(5)));
  w.gluing.set(2, 0, Polynomial(2, Rational(2)));
  w.gluing.set(2, 1, Polynomial(2, Rational(-3)));
  CHECK_FALSE(is_split_wedge(w).split);
}

TEST_CASE("wedge necessity across random split wedges") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> twists(1 + rng() % 3);
    for (int& a : twists) a = static_cast<int>(rng() % 5) - 2;
    WedgeBundle w{split_bundle(twists), split_bundle(twists), PolyMatrix::identity(2, twists)};
    SplitOptions o;
    o.seed = trial;
    const SplitVerdict v = is_split_wedge(w, o);
    REQUIRE(v.split);
    CHECK(is_split_p2(w.left).split);
    CHECK(is_split_p2(w.right).split);
    CHECK(v.wedge->left_line_type == v.wedge->right_line_type);
    CHECK(v.twists == sorted_desc(twists));
  }
}

TEST_CASE("gluing validation") {
  WedgeBundle w{split_bundle({0, 0}), split_bundle({0, 0}), PolyMatrix(2, {0, 0}, {0, 0})};
  w.gluing.set(0, 0, Polynomial(2, Rational(1)));
  w.gluing.set(0, 1, Polynomial(2, Rational(1)));
  w.gluing.set(1, 0, Polynomial(2, Rational(1)));
  w.gluing.set(1, 1, Polynomial(2, Rational(1)));
  CHECK_THROWS_AS(validate_wedge(w), std::invalid_argument);  // singular
  WedgeBundle mismatch{split_bundle({0, 1}), split_bundle({0, 0}), PolyMatrix::identity(2, {0, 0})};
  CHECK_THROWS_AS(validate_wedge(mismatch), std::invalid_argument);
  WedgeBundle wrong_ring{split_bundle({0}), split_bundle({0}), PolyMatrix::identity(3, {0})};
  CHECK_THROWS_AS(validate_wedge(wrong_ring), std::invalid_argument);
}

TEST_CASE("verdicts are deterministic for a fixed seed") {
  const WedgeBundle w = load_wedge(data_path("wedge_conic.json"));
  SplitOptions o;
  o.seed = 12345;
  const SplitVerdict a = is_split_wedge(w, o), b = is_split_wedge(w, o);
  CHECK(a.split == b.split);
  CHECK(a.certificate == b.certificate);
  CHECK(a.wedge->failure_bound == b.wedge->failure_bound);
  CHECK(a.wedge->seed == 12345);
}
