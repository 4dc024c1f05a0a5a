#pragma once

// Dimension-checked matrices over the exact rationals.
//
// Storage is a canonical sparse triplet list: entries sorted row-major with
// no explicit zeros.  Two matrices are equal iff their triplet lists are
// equal, so equality, hashing and serialisation are all structural.

#include "stratalab/rational.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace stratalab {

struct Triplet {
  std::int64_t row = 0;
  std::int64_t col = 0;
  Rational value;

  friend bool operator==(const Triplet& a, const Triplet& b) {
    return a.row == b.row && a.col == b.col && a.value == b.value;
  }
};

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::int64_t rows, std::int64_t cols);

  static RationalMatrix identity(std::int64_t n);
  /// Builds from an arbitrary triplet list; duplicates are summed, zeros dropped.
  static RationalMatrix from_triplets(std::int64_t rows, std::int64_t cols,
                                      std::vector<Triplet> entries);
  static RationalMatrix from_dense(const std::vector<std::vector<Rational>>& d);

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return cols_; }
  const std::vector<Triplet>& triplets() const { return trip_; }

  Rational at(std::int64_t r, std::int64_t c) const;
  /// Replaces one entry.  Linear in the number of stored entries; use
  /// from_triplets for bulk construction.
  void set(std::int64_t r, std::int64_t c, const Rational& v);

  std::vector<std::vector<Rational>> dense() const;
  RationalMatrix transpose() const;
  RationalMatrix scaled(const Rational& s) const;

  bool is_zero() const { return trip_.empty(); }

  /// Columns js (in the given order) as a new matrix.
  RationalMatrix select_columns(const std::vector<std::int64_t>& js) const;
  RationalMatrix column(std::int64_t j) const;

  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.trip_ == b.trip_;
  }
  friend bool operator!=(const RationalMatrix& a, const RationalMatrix& b) { return !(a == b); }

  /// Matrix-vector product.
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

 private:
  std::int64_t rows_ = 0;
  std::int64_t cols_ = 0;
  std::vector<Triplet> trip_;

  void canonicalize();
};

/// [A | B], requires equal row counts.
RationalMatrix hstack(const RationalMatrix& a, const RationalMatrix& b);
/// [A ; B], requires equal column counts.
RationalMatrix vstack(const RationalMatrix& a, const RationalMatrix& b);

}  // namespace stratalab
