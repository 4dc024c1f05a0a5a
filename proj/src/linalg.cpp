#include "stratalab/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace stratalab {

namespace {

// Clears denominators row by row; rank and row spans are unchanged.
std::vector<std::vector<Integer>> integerize_rows(const RationalMatrix& m) {
  auto d = m.dense();
  std::vector<std::vector<Integer>> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    Integer l = 1;
    for (const auto& q : d[i]) l = lcm(l, denominator(q));
    out[i].reserve(d[i].size());
    for (const auto& q : d[i]) out[i].push_back(numerator(q) * (l / denominator(q)));
  }
  return out;
}

// Fraction-free elimination; returns the echelon pivots' contribution to the
// determinant (last pivot over sign) via *det when requested.
std::int64_t bareiss_rank(std::vector<std::vector<Integer>>& a, Integer* det_out) {
  std::int64_t rows = static_cast<std::int64_t>(a.size());
  std::int64_t cols = rows == 0 ? 0 : static_cast<std::int64_t>(a[0].size());
  Integer prev = 1;
  int sign = 1;
  std::int64_t r = 0;
  for (std::int64_t c = 0; c < cols && r < rows; ++c) {
    // Pivot: smallest nonzero bit length in column c at or below row r.
    std::int64_t piv = -1;
    std::size_t best = 0;
    for (std::int64_t i = r; i < rows; ++i) {
      const Integer& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (v == 0) continue;
      std::size_t bl = bit_length(v);
      if (piv < 0 || bl < best) {
        piv = i;
        best = bl;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(r)]);
      sign = -sign;
    }
    const Integer pv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    for (std::int64_t i = r + 1; i < rows; ++i) {
      auto& rowi = a[static_cast<std::size_t>(i)];
      const Integer mult = rowi[static_cast<std::size_t>(c)];
      // Every row below is rescaled by pv/prev, even where mult vanishes;
      // the division is exact by the Bareiss identity.
      for (std::int64_t j = c; j < cols; ++j) {
        Integer t = rowi[static_cast<std::size_t>(j)] * pv -
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] * mult;
        rowi[static_cast<std::size_t>(j)] = t / prev;
      }
    }
    prev = pv;
    ++r;
  }
  if (det_out) *det_out = (rows > 0 && r == rows) ? Integer(sign) * prev : Integer(0);
  return r;
}

}  // namespace

std::int64_t rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto a = integerize_rows(m);
  return bareiss_rank(a, nullptr);
}

Rational determinant(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (m.rows() == 0) return Rational(1);
  auto d = m.dense();
  Rational scale = 1;  // product of the factors each row was multiplied by
  std::vector<std::vector<Integer>> a(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    Integer l = 1;
    for (const auto& q : d[i]) l = lcm(l, denominator(q));
    scale *= Rational(l);
    for (const auto& q : d[i]) a[i].push_back(numerator(q) * (l / denominator(q)));
  }
  Integer det_int;
  std::int64_t r = bareiss_rank(a, &det_int);
  if (r < m.rows()) return Rational(0);
  return Rational(det_int) / scale;
}

RrefResult rref(const RationalMatrix& m) {
  auto a = m.dense();
  std::int64_t rows = m.rows(), cols = m.cols();
  std::vector<std::int64_t> pivots;
  std::int64_t r = 0;
  for (std::int64_t c = 0; c < cols && r < rows; ++c) {
    std::int64_t piv = -1;
    for (std::int64_t i = r; i < rows; ++i) {
      if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(a[static_cast<std::size_t>(piv)], a[static_cast<std::size_t>(r)]);
    const Rational pv = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    for (std::int64_t j = c; j < cols; ++j) a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] /= pv;
    for (std::int64_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Rational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
      if (f == 0) continue;
      for (std::int64_t j = c; j < cols; ++j)
        a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -=
            f * a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
    }
    pivots.push_back(c);
    ++r;
  }
  return {RationalMatrix::from_dense(a), std::move(pivots)};
}

RationalMatrix kernel_basis(const RationalMatrix& m) {
  auto [r, pivots] = rref(m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (auto c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Triplet> out;
  std::int64_t k = 0;
  auto rd = r.dense();
  for (std::int64_t c = 0; c < m.cols(); ++c) {
    if (is_pivot[static_cast<std::size_t>(c)]) continue;
    // Free column c: back-substitute pivot coordinates.
    out.push_back({c, k, Rational(1)});
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Rational& v = rd[i][static_cast<std::size_t>(c)];
      if (v != 0) out.push_back({pivots[i], k, -v});
    }
    ++k;
  }
  return RationalMatrix::from_triplets(m.cols(), k, std::move(out));
}

RationalMatrix image_basis(const RationalMatrix& m) {
  auto [r, pivots] = rref(m.transpose());
  // Nonzero rows of the rref, transposed back to columns.
  auto rd = r.dense();
  std::vector<Triplet> out;
  for (std::size_t i = 0; i < pivots.size(); ++i)
    for (std::int64_t j = 0; j < r.cols(); ++j)
      if (rd[i][static_cast<std::size_t>(j)] != 0)
        out.push_back({j, static_cast<std::int64_t>(i), rd[i][static_cast<std::size_t>(j)]});
  return RationalMatrix::from_triplets(m.rows(), static_cast<std::int64_t>(pivots.size()),
                                       std::move(out));
}

std::vector<std::int64_t> image_pivot_rows(const RationalMatrix& m) {
  return rref(m.transpose()).pivots;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m,
                                           const std::vector<Rational>& b) {
  if (static_cast<std::int64_t>(b.size()) != m.rows())
    throw std::invalid_argument("rhs length mismatch in solve");
  std::vector<Triplet> bt;
  for (std::int64_t i = 0; i < m.rows(); ++i)
    if (b[static_cast<std::size_t>(i)] != 0) bt.push_back({i, 0, b[static_cast<std::size_t>(i)]});
  auto aug = hstack(m, RationalMatrix::from_triplets(m.rows(), 1, std::move(bt)));
  auto [r, pivots] = rref(aug);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;  // inconsistent
  std::vector<Rational> x(static_cast<std::size_t>(m.cols()), Rational(0));
  auto rd = r.dense();
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[static_cast<std::size_t>(pivots[i])] = rd[i][static_cast<std::size_t>(m.cols())];
  return x;
}

RationalMatrix subspace_sum(const RationalMatrix& a, const RationalMatrix& b) {
  return image_basis(hstack(a, b));
}

RationalMatrix subspace_intersection(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("ambient mismatch in intersection");
  // x = a u = b v  ⟺  (u, v) ∈ ker[a | -b].
  auto k = kernel_basis(hstack(a, b.scaled(Rational(-1))));
  std::vector<Triplet> t;
  for (const auto& e : k.triplets())
    if (e.row < a.cols()) t.push_back(e);
  auto u = RationalMatrix::from_triplets(a.cols(), k.cols(), std::move(t));
  return image_basis(a * u);
}

RationalMatrix preimage(const RationalMatrix& m, const RationalMatrix& s) {
  if (m.rows() != s.rows()) throw std::invalid_argument("ambient mismatch in preimage");
  // m x = s v  ⟺  (x, v) ∈ ker[m | -s].
  auto k = kernel_basis(hstack(m, s.scaled(Rational(-1))));
  std::vector<Triplet> t;
  for (const auto& e : k.triplets())
    if (e.row < m.cols()) t.push_back(e);
  return image_basis(RationalMatrix::from_triplets(m.cols(), k.cols(), std::move(t)));
}

bool subspace_contains(const RationalMatrix& b, const RationalMatrix& a) {
  if (a.rows() != b.rows()) throw std::invalid_argument("ambient mismatch in containment");
  return rank(hstack(b, a)) == rank(b);
}

bool subspace_equal(const RationalMatrix& a, const RationalMatrix& b) {
  return image_basis(a) == image_basis(b);
}

std::vector<Rational> Subquotient::express(const std::vector<Rational>& v) const {
  auto x = solve(hstack(denominators, representatives), v);
  if (!x) throw std::invalid_argument("vector outside the numerator space");
  std::vector<Rational> out(static_cast<std::size_t>(representatives.cols()));
  for (std::int64_t j = 0; j < representatives.cols(); ++j)
    out[static_cast<std::size_t>(j)] = (*x)[static_cast<std::size_t>(denominators.cols() + j)];
  return out;
}

Subquotient make_subquotient(const RationalMatrix& z, const RationalMatrix& d) {
  if (z.rows() != d.rows()) throw std::invalid_argument("ambient mismatch in subquotient");
  if (!subspace_contains(z, d)) throw std::invalid_argument("denominator not inside numerator");
  Subquotient sq;
  sq.ambient_dim = z.rows();
  sq.denominators = image_basis(d);
  auto dpiv = rref(sq.denominators.transpose()).pivots;
  std::vector<bool> in_d(static_cast<std::size_t>(z.rows()), false);
  for (auto p : dpiv) in_d[static_cast<std::size_t>(p)] = true;
  // Echelon columns of Z whose leading row is not a leading row of D extend
  // D to a basis of Z (leading rows are distinct within each echelon basis,
  // and a combination landing in D would need its top row in both sets).
  auto ez = image_basis(z);
  auto zpiv = image_pivot_rows(z);
  std::vector<std::int64_t> keep;
  for (std::size_t j = 0; j < zpiv.size(); ++j)
    if (!in_d[static_cast<std::size_t>(zpiv[j])]) keep.push_back(static_cast<std::int64_t>(j));
  sq.representatives = ez.select_columns(keep);
  return sq;
}

RationalMatrix induced_map(const Subquotient& source, const Subquotient& target,
                           const RationalMatrix& map) {
  if (map.cols() != source.ambient_dim || map.rows() != target.ambient_dim)
    throw std::invalid_argument("map shape mismatch in induced_map");
  auto img = map * source.representatives;
  std::vector<Triplet> out;
  auto imgd = img.dense();
  for (std::int64_t j = 0; j < img.cols(); ++j) {
    std::vector<Rational> col(static_cast<std::size_t>(img.rows()));
    for (std::int64_t i = 0; i < img.rows(); ++i) col[static_cast<std::size_t>(i)] = imgd[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    auto e = target.express(col);
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(e.size()); ++i)
      if (e[static_cast<std::size_t>(i)] != 0) out.push_back({i, j, e[static_cast<std::size_t>(i)]});
  }
  return RationalMatrix::from_triplets(target.dim(), source.dim(), std::move(out));
}

}  // namespace stratalab
