#pragma once

// Degree-d slices of the Cech-style resolution attached to a divisor
// arrangement, the associated Koszul double complex, and the regularity
// certificates that make those slices exact.
//
// Everything here is graded: for a fixed degree d each construction is a
// finite complex of finite-dimensional rational spaces, so exactness and
// cohomology are decidable by rank computations.

#include "stratalab/arrangement.hpp"
#include "stratalab/complex.hpp"
#include "stratalab/filtered.hpp"
#include "stratalab/linalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace stratalab {

/// One direct summand of a slice term, tagged by the divisor subset it
/// belongs to.  Coordinates [offset, offset + dim) inside the term.
struct SliceBlock {
  std::vector<int> divisors;
  std::int64_t dim = 0;
  std::int64_t offset = 0;
};

/// Degree-d slice of the resolution
///   0 -> (prod f)_d -> R_d -> ⊕_i (R/f_i)_d -> ⊕_{i<j} (R/f_i,f_j)_d -> ...
/// living in complex degrees -1..N.  layout[p + 1] describes position p.
struct CechSlice {
  int degree = 0;
  ComplexOfSpaces cx;
  std::vector<std::vector<SliceBlock>> layout;
};

/// Builds the slice.  When enforce_regularity is set the divisor polynomials
/// are first certified to form a regular sequence up to the slice degree and
/// a failure throws; pass false to build the complex for a non-regular
/// arrangement anyway (the slice is still a complex, just not exact).
CechSlice build_cech_slice(const Arrangement& a, int degree,
                           bool enforce_regularity = true);

struct ExactnessReport {
  int degree = 0;
  bool exact = false;
  /// Cohomology dimension per complex position, -1..N.
  std::map<int, std::int64_t> cohomology;
};

ExactnessReport verify_exactness(const CechSlice& slice);

/// Degree-d slice of the Koszul double complex: C^{p,q} is the direct sum
/// over |J| = p, K ⊆ J, |K| = -q of the free slices R_{d - deg f_K}.
/// Horizontal maps insert a divisor into J, vertical maps contract K against
/// its own polynomial; verticals carry the (-1)^p total-complex sign, so
/// horizontal and vertical differentials anticommute as stored.
struct KoszulSlice {
  int degree = 0;
  int n = 0;
  /// Keys (p, q) with 0 <= p <= n, -p <= q <= 0 and nonzero dimension.
  std::map<std::pair<int, int>, std::int64_t> dims;
  /// blocks[(p,q)] lists (J, K) pairs in block order.
  std::map<std::pair<int, int>,
           std::vector<std::pair<std::vector<int>, std::vector<int>>>>
      blocks;
  std::map<std::pair<int, int>, RationalMatrix> horiz;
  std::map<std::pair<int, int>, RationalMatrix> vert;

  std::int64_t dim(int p, int q) const;
  RationalMatrix horizontal(int p, int q) const;
  RationalMatrix vertical(int p, int q) const;
};

KoszulSlice build_koszul_double(const Arrangement& a, int degree);

/// Total complex, degrees -n..n.
ComplexOfSpaces koszul_total(const KoszulSlice& k);

/// Row at fixed q as a complex over p = 0..n.
ComplexOfSpaces koszul_row(const KoszulSlice& k, int q);

/// Column at fixed p as a complex over q = -n..0.
ComplexOfSpaces koszul_column(const KoszulSlice& k, int p);

struct KoszulFinding {
  int degree = 0;
  /// "row", "column" or "total".
  std::string kind;
  int p = 0;
  int q = 0;
  std::int64_t dim = 0;
};

struct KoszulDegreeSummary {
  int degree = 0;
  /// Cohomology of the total complex per total degree.
  std::map<int, std::int64_t> total;
  /// Dimension of the surviving corner row q = -n at p = n.
  std::int64_t corner = 0;
};

struct KoszulReport {
  bool ok = false;
  std::vector<KoszulFinding> findings;
  std::vector<KoszulDegreeSummary> degrees;
};

/// Checks, for every degree 0..max_degree: rows with q > -n are exact, the
/// total complex is concentrated in total degree 0 with the dimension of the
/// degree-d slice of the principal ideal (prod f), and columns are exact
/// below q = 0.  Findings list every violation.
KoszulReport verify_koszul_conjecture(const Arrangement& a, int max_degree);

struct RegSeqWitness {
  int degree = 0;
  int q = 0;
  std::int64_t dim = 0;
};

struct RegSeqReport {
  bool regular = false;
  std::vector<RegSeqWitness> witnesses;
};

/// Certifies that the divisor polynomials form a regular sequence as far as
/// degrees up to max_degree can see: the full Koszul complex of the sequence
/// must have vanishing cohomology in every negative position for each slice
/// degree.  Witnesses record each (degree, position, dimension) failure.
RegSeqReport check_regular_sequence(const Arrangement& a, int max_degree);

/// Filtration of the slice by complex position: the -1 term is dropped,
/// F^i is the span of positions >= i, so F^0 is everything and F^{N+1} = 0.
FilteredComplex truncation_filtration(const CechSlice& slice);

}  // namespace stratalab
