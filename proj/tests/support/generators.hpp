#pragma once

// Seeded random objects for property tests.  All draws go through Rng, which
// wraps the fully-specified mt19937_64 stream so sequences are identical on
// every platform.

#include "stratalab/complex.hpp"
#include "stratalab/linalg.hpp"
#include "stratalab/matrix.hpp"

#include <cstdint>
#include <map>
#include <random>
#include <vector>

namespace stratalab::testing {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  /// Uniform-ish integer in [lo, hi].  Modulo bias is irrelevant for tests.
  std::int64_t i64(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(eng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  Rational rational(std::int64_t max_num = 5, std::int64_t max_den = 3) {
    return Rational(i64(-max_num, max_num), i64(1, max_den));
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

inline RationalMatrix random_matrix(Rng& rng, std::int64_t rows, std::int64_t cols,
                                    int density_pct = 60) {
  std::vector<Triplet> t;
  for (std::int64_t i = 0; i < rows; ++i)
    for (std::int64_t j = 0; j < cols; ++j)
      if (rng.i64(0, 99) < density_pct) {
        Rational v = rng.rational();
        if (v != 0) t.push_back({i, j, v});
      }
  return RationalMatrix::from_triplets(rows, cols, std::move(t));
}

/// Product of a lower and an upper unitriangular matrix with small entries;
/// determinant 1, hence always invertible.
inline RationalMatrix random_invertible(Rng& rng, std::int64_t n) {
  RationalMatrix l = RationalMatrix::identity(n);
  RationalMatrix u = RationalMatrix::identity(n);
  for (std::int64_t i = 0; i < n; ++i)
    for (std::int64_t j = 0; j < i; ++j) {
      if (rng.i64(0, 2) == 0) l.set(i, j, Rational(rng.i64(-2, 2)));
      if (rng.i64(0, 2) == 0) u.set(j, i, Rational(rng.i64(-2, 2)));
    }
  return l * u;
}

/// Inverse via rref of [m | I]; test-support only.
inline RationalMatrix inverse(const RationalMatrix& m) {
  auto aug = hstack(m, RationalMatrix::identity(m.rows()));
  auto r = rref(aug).r;
  std::vector<std::int64_t> right(static_cast<std::size_t>(m.cols()));
  for (std::int64_t j = 0; j < m.cols(); ++j) right[static_cast<std::size_t>(j)] = m.cols() + j;
  return r.select_columns(right);
}

/// A bounded complex assembled from shifted copies of [Q -> Q] (identity) and
/// one-term summands, then conjugated by random invertible maps.  The exact
/// cohomology dimensions are known by construction.
struct KnownComplex {
  ComplexOfSpaces cx;
  std::map<int, std::int64_t> h;  // expected cohomology dims
};

inline KnownComplex random_known_complex(Rng& rng, int lo, int hi) {
  int len = hi - lo + 1;
  std::vector<std::int64_t> acyclic(static_cast<std::size_t>(len), 0);  // pairs at (n, n+1)
  std::vector<std::int64_t> harmonic(static_cast<std::size_t>(len), 0);
  std::vector<std::int64_t> dims(static_cast<std::size_t>(len), 0);
  for (int k = 0; k < len; ++k) {
    harmonic[static_cast<std::size_t>(k)] = rng.i64(0, 2);
    if (k + 1 < len) acyclic[static_cast<std::size_t>(k)] = rng.i64(0, 2);
  }
  for (int k = 0; k < len; ++k) {
    dims[static_cast<std::size_t>(k)] = harmonic[static_cast<std::size_t>(k)] +
                                        acyclic[static_cast<std::size_t>(k)] +
                                        (k > 0 ? acyclic[static_cast<std::size_t>(k - 1)] : 0);
  }
  // Layout per degree: [harmonic | outgoing pairs | incoming pairs].
  ComplexOfSpaces cx(lo, dims);
  for (int k = 0; k + 1 < len; ++k) {
    std::vector<Triplet> t;
    std::int64_t src_off = harmonic[static_cast<std::size_t>(k)];
    std::int64_t dst_off =
        harmonic[static_cast<std::size_t>(k + 1)] + acyclic[static_cast<std::size_t>(k + 1)];
    for (std::int64_t i = 0; i < acyclic[static_cast<std::size_t>(k)]; ++i)
      t.push_back({dst_off + i, src_off + i, Rational(1)});
    cx.set_differential(lo + k, RationalMatrix::from_triplets(
                                    dims[static_cast<std::size_t>(k + 1)],
                                    dims[static_cast<std::size_t>(k)], std::move(t)));
  }
  // Conjugate by a random change of basis in every degree.
  std::vector<RationalMatrix> p, pinv;
  for (int k = 0; k < len; ++k) {
    auto m = random_invertible(rng, dims[static_cast<std::size_t>(k)]);
    p.push_back(m);
    pinv.push_back(inverse(m));
  }
  ComplexOfSpaces out(lo, dims);
  for (int k = 0; k + 1 < len; ++k)
    out.set_differential(lo + k, p[static_cast<std::size_t>(k + 1)] *
                                     cx.differential(lo + k) * pinv[static_cast<std::size_t>(k)]);
  KnownComplex kc{std::move(out), {}};
  for (int k = 0; k < len; ++k) kc.h[lo + k] = harmonic[static_cast<std::size_t>(k)];
  return kc;
}

}  // namespace stratalab::testing
