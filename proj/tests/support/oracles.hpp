#pragma once

// Slow but independently-written reference computations used to pin down
// expected values in the test suites.  Everything here favours obvious
// correctness over speed and avoids the library's own elimination routines
// wherever the checked routine is itself part of elimination.

#include "stratalab/rational.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace stratalab::testing {

/// Determinant by cofactor expansion along the first row.
inline Rational cofactor_determinant(const std::vector<std::vector<Rational>>& m) {
  std::size_t n = m.size();
  if (n == 0) return Rational(1);
  if (n == 1) return m[0][0];
  Rational s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<Rational>> minor;
    minor.reserve(n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Rational> row;
      row.reserve(n - 1);
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Rational c = m[0][j] * cofactor_determinant(minor);
    s += (j % 2 == 0) ? c : -c;
  }
  return s;
}

/// Number of degree-d monomials in n variables: C(d+n-1, n-1).
inline std::int64_t monomial_count(int nvars, int degree) {
  if (degree < 0 || nvars <= 0) return 0;
  std::int64_t num = 1, den = 1;
  for (int k = 1; k <= nvars - 1; ++k) {
    num *= degree + k;
    den *= k;
  }
  return num / den;
}

/// All exponent vectors of total degree d in n variables.
inline std::vector<std::vector<int>> all_exponents(int nvars, int degree) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(nvars), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == nvars - 1) {
      cur[static_cast<std::size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[static_cast<std::size_t>(pos)] = e;
      self(self, pos + 1, left - e);
    }
  };
  if (nvars > 0 && degree >= 0) rec(rec, 0, degree);
  return out;
}

/// Dimension of the degree-d slice of the monomial ideal generated by the
/// given exponent vectors, by direct divisibility counting.
inline std::int64_t monomial_ideal_slice_dim(int nvars, int degree,
                                             const std::vector<std::vector<int>>& gens) {
  std::int64_t count = 0;
  for (const auto& e : all_exponents(nvars, degree)) {
    for (const auto& g : gens) {
      bool divisible = true;
      for (int v = 0; v < nvars; ++v)
        if (e[static_cast<std::size_t>(v)] < g[static_cast<std::size_t>(v)]) {
          divisible = false;
          break;
        }
      if (divisible) {
        ++count;
        break;
      }
    }
  }
  return count;
}

}  // namespace stratalab::testing
