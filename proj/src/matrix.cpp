#include "stratalab/matrix.hpp"

#include <algorithm>

namespace stratalab {

namespace {

void check_dims(std::int64_t rows, std::int64_t cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("matrix dimensions must be nonnegative");
}

}  // namespace

RationalMatrix::RationalMatrix(std::int64_t rows, std::int64_t cols) : rows_(rows), cols_(cols) {
  check_dims(rows, cols);
}

RationalMatrix RationalMatrix::identity(std::int64_t n) {
  RationalMatrix m(n, n);
  m.trip_.reserve(static_cast<std::size_t>(n));
  for (std::int64_t i = 0; i < n; ++i) m.trip_.push_back({i, i, Rational(1)});
  return m;
}

RationalMatrix RationalMatrix::from_triplets(std::int64_t rows, std::int64_t cols,
                                             std::vector<Triplet> entries) {
  RationalMatrix m(rows, cols);
  for (const auto& t : entries) {
    if (t.row < 0 || t.row >= rows || t.col < 0 || t.col >= cols)
      throw std::out_of_range("triplet outside matrix bounds");
  }
  m.trip_ = std::move(entries);
  m.canonicalize();
  return m;
}

RationalMatrix RationalMatrix::from_dense(const std::vector<std::vector<Rational>>& d) {
  std::int64_t rows = static_cast<std::int64_t>(d.size());
  std::int64_t cols = rows == 0 ? 0 : static_cast<std::int64_t>(d[0].size());
  RationalMatrix m(rows, cols);
  for (std::int64_t i = 0; i < rows; ++i) {
    if (static_cast<std::int64_t>(d[i].size()) != cols)
      throw std::invalid_argument("ragged dense matrix");
    for (std::int64_t j = 0; j < cols; ++j)
      if (d[i][j] != 0) m.trip_.push_back({i, j, d[i][j]});
  }
  return m;
}

void RationalMatrix::canonicalize() {
  std::sort(trip_.begin(), trip_.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  std::vector<Triplet> out;
  out.reserve(trip_.size());
  for (auto& t : trip_) {
    if (!out.empty() && out.back().row == t.row && out.back().col == t.col) {
      out.back().value += t.value;
    } else {
      out.push_back(std::move(t));
    }
  }
  out.erase(std::remove_if(out.begin(), out.end(),
                           [](const Triplet& t) { return t.value == 0; }),
            out.end());
  trip_ = std::move(out);
}

Rational RationalMatrix::at(std::int64_t r, std::int64_t c) const {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  auto it = std::lower_bound(trip_.begin(), trip_.end(), std::pair(r, c),
                             [](const Triplet& t, const std::pair<std::int64_t, std::int64_t>& k) {
                               return t.row != k.first ? t.row < k.first : t.col < k.second;
                             });
  if (it != trip_.end() && it->row == r && it->col == c) return it->value;
  return Rational(0);
}

void RationalMatrix::set(std::int64_t r, std::int64_t c, const Rational& v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  auto it = std::lower_bound(trip_.begin(), trip_.end(), std::pair(r, c),
                             [](const Triplet& t, const std::pair<std::int64_t, std::int64_t>& k) {
                               return t.row != k.first ? t.row < k.first : t.col < k.second;
                             });
  if (it != trip_.end() && it->row == r && it->col == c) {
    if (v == 0) {
      trip_.erase(it);
    } else {
      it->value = v;
    }
  } else if (v != 0) {
    trip_.insert(it, {r, c, v});
  }
}

std::vector<std::vector<Rational>> RationalMatrix::dense() const {
  std::vector<std::vector<Rational>> d(static_cast<std::size_t>(rows_),
                                       std::vector<Rational>(static_cast<std::size_t>(cols_)));
  for (const auto& t : trip_)
    d[static_cast<std::size_t>(t.row)][static_cast<std::size_t>(t.col)] = t.value;
  return d;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix m(cols_, rows_);
  m.trip_.reserve(trip_.size());
  for (const auto& t : trip_) m.trip_.push_back({t.col, t.row, t.value});
  std::sort(m.trip_.begin(), m.trip_.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  return m;
}

RationalMatrix RationalMatrix::scaled(const Rational& s) const {
  if (s == 0) return RationalMatrix(rows_, cols_);
  RationalMatrix m(rows_, cols_);
  m.trip_.reserve(trip_.size());
  for (const auto& t : trip_) m.trip_.push_back({t.row, t.col, t.value * s});
  return m;
}

RationalMatrix RationalMatrix::select_columns(const std::vector<std::int64_t>& js) const {
  std::vector<Triplet> out;
  for (std::int64_t k = 0; k < static_cast<std::int64_t>(js.size()); ++k) {
    std::int64_t j = js[static_cast<std::size_t>(k)];
    if (j < 0 || j >= cols_) throw std::out_of_range("column index");
    for (const auto& t : trip_)
      if (t.col == j) out.push_back({t.row, k, t.value});
  }
  return from_triplets(rows_, static_cast<std::int64_t>(js.size()), std::move(out));
}

RationalMatrix RationalMatrix::column(std::int64_t j) const { return select_columns({j}); }

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw std::invalid_argument("matrix shape mismatch in +");
  std::vector<Triplet> all = a.trip_;
  all.insert(all.end(), b.trip_.begin(), b.trip_.end());
  return RationalMatrix::from_triplets(a.rows_, a.cols_, std::move(all));
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  return a + b.scaled(Rational(-1));
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  // Row-major sparse times sparse: group b by row first.
  std::vector<std::vector<const Triplet*>> brow(static_cast<std::size_t>(b.rows_));
  for (const auto& t : b.trip_) brow[static_cast<std::size_t>(t.row)].push_back(&t);
  std::vector<Triplet> out;
  for (const auto& ta : a.trip_)
    for (const Triplet* tb : brow[static_cast<std::size_t>(ta.col)])
      out.push_back({ta.row, tb->col, ta.value * tb->value});
  return RationalMatrix::from_triplets(a.rows_, b.cols_, std::move(out));
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& x) const {
  if (static_cast<std::int64_t>(x.size()) != cols_)
    throw std::invalid_argument("vector length mismatch in apply");
  std::vector<Rational> y(static_cast<std::size_t>(rows_), Rational(0));
  for (const auto& t : trip_)
    y[static_cast<std::size_t>(t.row)] += t.value * x[static_cast<std::size_t>(t.col)];
  return y;
}

RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  std::vector<Triplet> all = a.triplets();
  for (const auto& t : b.triplets()) all.push_back({t.row, t.col + a.cols(), t.value});
  return RationalMatrix::from_triplets(a.rows(), a.cols() + b.cols(), std::move(all));
}

RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  std::vector<Triplet> all = a.triplets();
  for (const auto& t : b.triplets()) all.push_back({t.row + a.rows(), t.col, t.value});
  return RationalMatrix::from_triplets(a.rows() + b.rows(), a.cols(), std::move(all));
}

}  // namespace stratalab
