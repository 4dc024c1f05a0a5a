#pragma once

// Bounded cochain complexes of finite-dimensional Q-vector spaces.
//
// A complex stores its degree range [lo, hi], the dimension of each term and
// the differentials d_n : C^n -> C^(n+1).  Terms outside the range are zero.

#include "stratalab/linalg.hpp"

#include <map>
#include <string>
#include <vector>

namespace stratalab {

class ComplexOfSpaces {
 public:
  ComplexOfSpaces() = default;
  /// dims[k] is the dimension of C^(lo+k); differentials are zero until set.
  ComplexOfSpaces(int lo, std::vector<std::int64_t> dims);

  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(dims_.size()) - 1; }
  std::int64_t dim(int n) const;
  /// d_n : C^n -> C^(n+1); the zero map of matching shape outside the range.
  RationalMatrix differential(int n) const;
  void set_differential(int n, RationalMatrix d);

  /// Shape checks plus d∘d = 0.  Violations name the offending degree.
  std::vector<std::string> validate() const;

  /// dim H^n for each n in [lo, hi].  Throws std::invalid_argument when
  /// validate() is nonempty, quoting its first finding.
  std::map<int, std::int64_t> cohomology_dims() const;

  /// H^n presented as ker d_n / im d_(n-1) with canonical representatives.
  Subquotient cohomology_at(int n) const;

 private:
  int lo_ = 0;
  std::vector<std::int64_t> dims_;
  std::vector<RationalMatrix> d_;  // d_[k] : C^(lo+k) -> C^(lo+k+1); last maps to 0

  void ensure_valid() const;
};

}  // namespace stratalab
