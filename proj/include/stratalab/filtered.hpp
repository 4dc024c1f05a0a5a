#pragma once

// Descending filtrations of bounded complexes.
//
// F^0 must span every term, F^(p+1) ⊆ F^p, the differential must preserve
// each level, and F^(filt_len) = 0.  Levels outside [0, filt_len] are clamped
// (below to F^0, above to zero), which is what the page formulas expect.

#include "stratalab/complex.hpp"

#include <string>
#include <vector>

namespace stratalab {

struct FilteredComplex {
  ComplexOfSpaces cx;
  /// Smallest p with F^p = 0.
  int filt_len = 0;
  /// fbasis[p][n - cx.lo()] spans F^p C^n, for p = 0..filt_len.
  std::vector<std::vector<RationalMatrix>> fbasis;

  /// Basis of F^p C^n with index clamping.
  RationalMatrix level(int p, int n) const;

  /// Filtration axioms; empty result means valid.
  std::vector<std::string> validate() const;
};

}  // namespace stratalab
