#pragma once

// Shared fixtures: the shipped example files and a small regression corpus of
// presentations on P^2.

#include "minusplit/bundle_io.hpp"

#include <string>
#include <utility>
#include <vector>

namespace minusplit::testing {

inline std::filesystem::path data_path(const std::string& name) {
  return std::filesystem::path(MINUSPLIT_DATA_DIR) / name;
}

inline PolyMatrix matrix_of(int nvars, std::vector<int> source, std::vector<int> target,
                            const std::vector<std::vector<std::string>>& rows) {
  PolyMatrix m(nvars, std::move(source), std::move(target));
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c)
      m.set(static_cast<Index>(r), static_cast<Index>(c), Polynomial::parse(rows[r][c], nvars));
  return m;
}

inline FreeComplex euler_kernel() { return kernel_presentation(matrix_of(3, {0, 0, 0}, {1}, {{"x", "y", "z"}})); }

inline FreeComplex euler_cokernel() {
  return cokernel_presentation(matrix_of(3, {-1}, {0, 0, 0}, {{"x"}, {"y"}, {"z"}}));
}

// Rank-2 bundle with c1 = 0, c2 = 1: cohomology of O(-1) -> O^4 -> O(1).
inline FreeComplex rank_two_monad() {
  return monad(matrix_of(3, {-1}, {0, 0, 0, 0}, {{"x"}, {"y"}, {"z"}, {"0"}}),
               matrix_of(3, {0, 0, 0, 0}, {1}, {{"y", "-x", "0", "z"}}));
}

// O(-2) as the kernel of (x^2 - y*z, 1): O(-2) + O -> O.
inline FreeComplex twisted_line_kernel() {
  return kernel_presentation(matrix_of(3, {-2, 0}, {0}, {{"x^2 - y*z", "1"}}));
}

struct NamedComplex {
  std::string name;
  FreeComplex complex;
};

inline std::vector<NamedComplex> regression_corpus() {
  std::vector<NamedComplex> out = {
      {"omega(1)", euler_kernel()},
      {"T(-1)", euler_cokernel()},
      {"T", twisted(euler_cokernel(), 1)},
      {"omega", twisted(euler_kernel(), -1)},
      {"monad c2=1", rank_two_monad()},
      {"kernel with unit", twisted_line_kernel()},
      {"O(1)+O(-2)", split_bundle({1, -2})},
      {"O+O(2)+O(-3)", split_bundle({0, 2, -3})},
      {"end omega(1)", end_complex(euler_kernel())},
  };
  for (const char* f : {"omega1.json", "tangent_minus1.json", "split_1_m2.json", "disguised_split.json"})
    out.push_back({f, load_bundle(data_path(f))});
  return out;
}

inline const std::vector<std::string>& bundle_files() {
  static const std::vector<std::string> files = {"omega1.json", "tangent_minus1.json", "split_1_m2.json",
                                                 "disguised_split.json"};
  return files;
}

inline const std::vector<std::string>& wedge_files() {
  static const std::vector<std::string> files = {"wedge_constant.json", "wedge_conic.json", "wedge_omega.json"};
  return files;
}

}  // namespace minusplit::testing
