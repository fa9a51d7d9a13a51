#include "corpus.hpp"

#include <doctest.h>

using namespace minusplit;
using namespace minusplit::testing;

namespace {

BundleFileError error_of(const std::string& text) {
  try {
    parse_bundle(text);
  } catch (const BundleFileError& e) {
    return e;
  }
  FAIL("no error for " << text);
  return BundleFileError("", 0, 0, "");
}

}  // namespace

TEST_CASE("shipped bundle files round-trip") {
  for (const std::string& f : bundle_files()) {
    CAPTURE(f);
    const FreeComplex c = load_bundle(data_path(f));
    const FreeComplex again = parse_bundle(bundle_to_json(c).dump());
    CHECK(again == c);
    CHECK(bundle_to_json(again) == bundle_to_json(c));
  }
  for (const std::string& f : wedge_files()) {
    CAPTURE(f);
    const WedgeBundle w = load_wedge(data_path(f));
    CHECK(parse_wedge(wedge_to_json(w).dump(2)) == w);
  }
}

TEST_CASE("parsed files match hand-built presentations") {
  CHECK(load_bundle(data_path("omega1.json")) == euler_kernel());
  CHECK(load_bundle(data_path("tangent_minus1.json")) == euler_cokernel());
  CHECK(load_bundle(data_path("split_1_m2.json")) == split_bundle({1, -2}));
}

TEST_CASE("malformed polynomial position") {
  try {
    load_bundle(data_path("bad_polynomial.json"));
    FAIL("expected an error");
  } catch (const BundleFileError& e) {
    CHECK(e.line() == 6);
    CHECK(e.column() == 23);
    CHECK(e.path() == "/matrix/0/1");
  }
}

TEST_CASE("structural errors carry positions") {
  const BundleFileError syntax = error_of("{\n  \"variables\": 3,\n  \"kind\": }");
  CHECK(syntax.line() == 3);
  CHECK(syntax.message().find("invalid JSON") != std::string::npos);

  const BundleFileError field = error_of(
      "{\"variables\": 3, \"kind\": \"kernel\", \"source_twists\": [0], \"target_twists\": [1],\n"
      " \"matrix\": [[\"x\"]], \"colour\": 1}");
  CHECK(field.line() == 2);
  CHECK(field.path() == "/colour");

  const BundleFileError kind = error_of(
      "{\"variables\": 3, \"kind\": \"monad\", \"source_twists\": [0], \"target_twists\": [1], \"matrix\": [[\"x\"]]}");
  CHECK(kind.path() == "/kind");
  CHECK(kind.column() == 26);

  const BundleFileError rows = error_of(
      "{\"variables\": 3, \"kind\": \"kernel\", \"source_twists\": [0], \"target_twists\": [1, 1], \"matrix\": [[\"x\"]]}");
  CHECK(rows.message().find("expected 2 rows") != std::string::npos);

  const BundleFileError profile = error_of(
      "{\"variables\": 3, \"kind\": \"kernel\", \"source_twists\": [0], \"target_twists\": [1], \"matrix\": [[\"x^2\"]]}");
  CHECK(profile.path() == "/matrix/0/0");

  const BundleFileError vars = error_of(
      "{\"variables\": 4, \"kind\": \"kernel\", \"source_twists\": [0], \"target_twists\": [1], \"matrix\": [[\"x\"]]}");
  CHECK(vars.path() == "/variables");
  CHECK(error_of("[]").message().find("bundle object") != std::string::npos);
}

TEST_CASE("monads are not bundle files") {
  CHECK_THROWS_AS(bundle_to_json(rank_two_monad()), std::invalid_argument);
}
