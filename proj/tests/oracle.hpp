#pragma once

// Independent reference computations for tests. These work on dense
// matrices only and never touch Kernel, SubDist or the interpreter.

#include <cstddef>

#include "causal/term.hpp"

namespace causal::oracle {

inline Matrix identity(std::size_t n) {
  Matrix m(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// (a ; b): rows of a pushed through b.
inline Matrix matmul(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix out(n, std::vector<Rational>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < m; ++l) out[i][l] += a[i][j] * b[j][l];
  return out;
}

// Row (i, u) -> i * rows(b) + u, column (j, v) -> j * cols(b) + v.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  std::size_t ar = a.size(), ac = a[0].size(), br = b.size(), bc = b[0].size();
  Matrix out(ar * br, std::vector<Rational>(ac * bc));
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t u = 0; u < br; ++u)
      for (std::size_t j = 0; j < ac; ++j)
        for (std::size_t v = 0; v < bc; ++v) out[i * br + u][j * bc + v] = a[i][j] * b[u][v];
  return out;
}

inline Matrix mix(const Rational& p, const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] = p * a[i][j] + (1 - p) * b[i][j];
  return out;
}

// Fixes row block x of a matrix over X ⊗ A: rows x * |A| .. x * |A| + |A| - 1.
inline Matrix slice_rows(const Matrix& m, std::size_t x, std::size_t block) {
  return Matrix(m.begin() + static_cast<std::ptrdiff_t>(x * block),
                m.begin() + static_cast<std::ptrdiff_t>((x + 1) * block));
}

}  // namespace causal::oracle
