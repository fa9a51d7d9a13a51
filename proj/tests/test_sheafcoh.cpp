#include "corpus.hpp"
#include "minusplit/cech.hpp"
#include "minusplit/exactla.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace minusplit;
using namespace minusplit::testing;

namespace {

long binom2(long n) { return n < 0 ? 0 : n * (n - 1) / 2; }

// Bott on P^2 written out directly: h^0 = C(d+2,2), h^2 = C(-d-1,2).
CohomologyDims bott_oracle(int d) {
  return {d >= 0 ? binom2(d + 2) : 0, 0, d <= -3 ? binom2(-d - 1) : 0};
}

CohomologyDims sum_of_bott(const std::vector<int>& twists, int t) {
  CohomologyDims out;
  for (int a : twists) {
    const CohomologyDims h = bott_oracle(a + t);
    out.h0 += h.h0;
    out.h1 += h.h1;
    out.h2 += h.h2;
  }
  return out;
}

CohomologyOptions cech_options() {
  CohomologyOptions o;
  o.engine = Engine::Cech;
  return o;
}

}  // namespace

TEST_CASE("Bott formula") {
  CHECK(bott(0) == CohomologyDims{1, 0, 0});
  CHECK(bott(2) == CohomologyDims{6, 0, 0});
  CHECK(bott(-1) == CohomologyDims{0, 0, 0});
  CHECK(bott(-3) == CohomologyDims{0, 0, 1});
  CHECK(bott(-5) == CohomologyDims{0, 0, 6});
  for (int d = -20; d <= 20; ++d) CHECK(bott(d) == bott_oracle(d));
  CHECK(line_bundle_cohomology(2, -2) == CohomologyDims{0, 1, 0});
  CHECK(line_bundle_cohomology(2, 3) == CohomologyDims{4, 0, 0});
}

TEST_CASE("split bundles: every multiset of at most four twists in -6..6") {
  std::vector<int> twists;
  long checked = 0;
  std::function<void(int)> rec = [&](int lo) {
    const FreeComplex c = split_bundle(twists);
    for (int t = -6; t <= 6; ++t) {
      const CohomologyResult r = complex_cohomology(c, t);
      REQUIRE(r.dims == sum_of_bott(twists, t));
      ++checked;
    }
    if (twists.size() == 4) return;
    for (int a = lo; a <= 6; ++a) {
      twists.push_back(a);
      rec(a);
      twists.pop_back();
    }
  };
  rec(-6);
  CHECK(checked == 13 * 2380);
}

TEST_CASE("zero-map complexes are sums of shifted line bundle cohomology") {
  std::mt19937_64 rng(5);
  CohomologyOptions o;
  o.validate = false;
  for (int trial = 0; trial < 300; ++trial) {
    const int kind = static_cast<int>(rng() % 3);
    auto random_sum = [&] {
      std::vector<int> t(rng() % 3);
      for (int& a : t) a = static_cast<int>(rng() % 13) - 6;
      return t;
    };
    const auto t0 = random_sum(), t1 = random_sum(), t2 = random_sum();
    FreeComplex c;
    if (kind == 0) c = kernel_presentation(PolyMatrix(3, t0, t1));
    else if (kind == 1) c = cokernel_presentation(PolyMatrix(3, t0, t1));
    else c = monad(PolyMatrix(3, t0, t1), PolyMatrix(3, t1, t2));
    const int twist = static_cast<int>(rng() % 13) - 6;
    long h[6] = {0, 0, 0, 0, 0, 0};  // hypercohomology in degrees -2..3
    for (std::size_t p = 0; p < c.terms.size(); ++p) {
      const int deg = c.first_degree() + static_cast<int>(p);
      const CohomologyDims d = sum_of_bott(c.terms[p].twists, twist);
      h[deg + 2] += d.h0;
      h[deg + 3] += d.h1;
      h[deg + 4] += d.h2;
    }
    const bool in_range = h[0] == 0 && h[1] == 0 && h[5] == 0;
    if (in_range) {
      const CohomologyResult r = complex_cohomology(c, twist, o);
      CHECK(r.dims == CohomologyDims{h[2], h[3], h[4]});
      const CohomologyDims cech = cech_cohomology(c, twist).dims;
      CHECK(cech == r.dims);
    } else {
      CHECK_THROWS_AS(complex_cohomology(c, twist, o), PresentationError);
    }
  }
}

TEST_CASE("Euler sequence bundles") {
  const FreeComplex omega1 = euler_kernel();
  CHECK(complex_cohomology(omega1, 0).dims == CohomologyDims{0, 0, 0});
  CHECK(complex_cohomology(omega1, 1).dims == CohomologyDims{3, 0, 0});
  CHECK(complex_cohomology(omega1, -1).dims == CohomologyDims{0, 1, 0});  // h^1(Omega) = 1
  const FreeComplex tm1 = euler_cokernel();
  CHECK(complex_cohomology(tm1, 0).dims == CohomologyDims{3, 0, 0});
  CHECK(complex_cohomology(tm1, 1).dims == CohomologyDims{8, 0, 0});  // h^0(T)
  CHECK(complex_cohomology(tm1, -2).dims == CohomologyDims{0, 1, 0});
  CHECK(complex_cohomology(tm1, 0, cech_options()).dims == CohomologyDims{3, 0, 0});
  const ChernData ch = chern_data(omega1);
  CHECK(ch.rank == 2);
  CHECK(ch.c1 == -1);
  CHECK(ch.c2() == 1);
  const ChernData cht = chern_data(tm1);
  CHECK(cht.c1 == 1);
  CHECK(cht.c2() == 1);
}

TEST_CASE("monad with c1 = 0, c2 = 1") {
  const FreeComplex m = rank_two_monad();
  CHECK(m.rank() == 2);
  const ChernData ch = chern_data(m);
  CHECK(ch.c1 == 0);
  CHECK(ch.c2() == 1);
  CHECK(complex_cohomology(m, -1).dims == CohomologyDims{0, 1, 0});
  CHECK(complex_cohomology(m, 0).dims == complex_cohomology(m, 0, cech_options()).dims);
}

TEST_CASE("Riemann-Roch, Serre duality and engine agreement on the corpus") {
  for (const auto& [name, c] : regression_corpus()) {
    CAPTURE(name);
    const bool end_like = c.kind == PresentationKind::Monad && c.terms[0].rank() > 2;
    for (int t = -4; t <= 3; ++t) {
      CAPTURE(t);
      const CohomologyResult r = complex_cohomology(c, t);
      CHECK(Rational(r.dims.euler()) == riemann_roch(chern_data(c), t));
      CHECK(r.euler_characteristic == riemann_roch(chern_data(c), t));
      if (c.kind != PresentationKind::Monad) {
        const CohomologyResult s = complex_cohomology(dual(c), -t - 3);
        CHECK(r.dims.h0 == s.dims.h2);
        CHECK(r.dims.h1 == s.dims.h1);
        CHECK(r.dims.h2 == s.dims.h0);
      }
      if (!end_like || (t >= -2 && t <= 0)) {
        const CohomologyResult e = complex_cohomology(c, t, cech_options());
        CHECK(e.dims == r.dims);
        REQUIRE(e.cutoff.has_value());
        CHECK(e.cutoff->at_cutoff == e.cutoff->at_next);
        CHECK(e.cutoff->at_cutoff == e.dims);
      }
    }
  }
}

TEST_CASE("Cech truncation is exact past the bound") {
  const FreeComplex c = euler_kernel();
  const int b0 = initial_cutoff(c, -2);
  CHECK(b0 >= 3);
  for (int b = b0; b < b0 + 3; ++b) CHECK(cech_truncated(c, -2, b) == CohomologyDims{0, 0, 0});
  CHECK(cech_truncated(split_bundle({0}), -5, 8) == CohomologyDims{0, 0, 6});
  CHECK_THROWS_AS(cech_cohomology(split_bundle({-20}), 0, 8), CutoffExhausted);
}

TEST_CASE("validation") {
  // (x y 0) vanishes at [0:0:1]
  CHECK_THROWS_WITH_AS(validate(kernel_presentation(matrix_of(3, {0, 0, 0}, {1}, {{"x", "y", "0"}}))),
                       doctest::Contains("not locally free"), PresentationError);
  CHECK_THROWS_WITH_AS(
      validate(monad(matrix_of(3, {-1}, {0, 0, 0}, {{"x"}, {"y"}, {"z"}}), matrix_of(3, {0, 0, 0}, {1}, {{"x", "y", "z"}}))),
      doctest::Contains("not a complex"), PresentationError);
  CHECK_NOTHROW(validate(euler_kernel()));
  CHECK_NOTHROW(validate(rank_two_monad()));
  CHECK(is_sheaf_surjective(matrix_of(3, {0, 0}, {2}, {{"x^2", "y^2"}})) == false);
  CHECK(is_sheaf_surjective(matrix_of(3, {0, 0, 0}, {2}, {{"x^2", "y^2", "z^2"}})));
  CHECK_THROWS_AS(complex_cohomology(kernel_presentation(matrix_of(3, {0, 0}, {1}, {{"x", "y"}})), 0), PresentationError);
}

TEST_CASE("presentation kinds and engines by name") {
  CHECK(parse_presentation_kind("kernel") == PresentationKind::Kernel);
  CHECK(to_string(PresentationKind::Monad) == "monad");
  CHECK_THROWS_AS(parse_presentation_kind("complex"), std::invalid_argument);
  CHECK(parse_engine("cech") == Engine::Cech);
  CHECK_THROWS_AS(parse_engine("spectral"), std::invalid_argument);
}

TEST_CASE("induced maps") {
  const PolyMatrix phi = matrix_of(3, {0, 0, 0}, {1}, {{"x", "y", "z"}});
  const RationalMatrix h0 = induced_map(phi, CohomologyDegree::H0, 1);
  CHECK(h0.rows() == 6);
  CHECK(h0.cols() == 9);
  CHECK(rank(h0) == 6);
  CHECK_THROWS_WITH(induced_map(phi, LineBundleSum{{0, 0}}, LineBundleSum{{1}}, CohomologyDegree::H0, 0),
                    doctest::Contains("profile mismatch"));
  const RationalMatrix top = induced_map(phi, CohomologyDegree::Top, -4);
  CHECK(top.rows() == 1);  // h^2(O(-3))
  CHECK(top.cols() == 9);
  CHECK(rank(top) == 1);
}

TEST_CASE("endomorphism complexes") {
  const FreeComplex line = end_complex(split_bundle({4}));
  CHECK(complex_cohomology(line, 0).dims == CohomologyDims{1, 0, 0});
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) {
      const FreeComplex e = end_complex(split_bundle({a, b}));
      const long expected = 2 + bott_oracle(a - b).h0 + bott_oracle(b - a).h0;
      CHECK(complex_cohomology(e, 0).dims.h0 == expected);
    }
  const FreeComplex end_omega = end_complex(euler_kernel());
  CHECK(end_omega.rank() == 4);
  CHECK(complex_cohomology(end_omega, -1).dims == CohomologyDims{0, 3, 0});
  CHECK(complex_cohomology(end_omega, -1, cech_options()).dims == CohomologyDims{0, 3, 0});
  CHECK(riemann_roch(chern_data(end_omega), -1) == -3);
  CHECK(complex_cohomology(end_omega, 0).dims == CohomologyDims{1, 0, 0});  // simple
  CHECK(complex_cohomology(end_complex(euler_cokernel()), -1).dims == CohomologyDims{0, 3, 0});
  CHECK_THROWS_AS(end_complex(rank_two_monad()), std::invalid_argument);
}

TEST_CASE("bundles on the line") {
  const FreeComplex o = split_bundle({2, -3}, 2);
  CHECK(complex_cohomology(o, 0).dims == CohomologyDims{3, 2, 0});
  const FreeComplex k = kernel_presentation(matrix_of(2, {0, 0}, {1}, {{"x", "y"}}));
  CHECK(complex_cohomology(k, 0).dims == CohomologyDims{0, 0, 0});  // O(-1)
  CHECK(complex_cohomology(k, 1).dims == CohomologyDims{1, 0, 0});
  CHECK(complex_cohomology(k, 0, cech_options()).dims == CohomologyDims{0, 0, 0});
  CHECK(riemann_roch(chern_data(k), 3, 2) == 3);
}
