#pragma once

// Spectral sequences of filtered complexes, computed literally from the
// cycle-space formulas:
//
//   Z_r^{p,q} = F^p C^{p+q} ∩ d^{-1}(F^{p+r} C^{p+q+1})
//   E_r^{p,q} = Z_r^{p,q} / (Z_{r-1}^{p+1,q-1} + d Z_{r-1}^{p-r+1,q+r-2})
//
// with filtration indices clamped below to 0 and above to the zero level.
// Pages are computed through a cap large enough that every differential is
// forced to vanish afterwards, so the last page is the limit page.

#include "stratalab/cech.hpp"
#include "stratalab/filtered.hpp"
#include "stratalab/linalg.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace stratalab {

struct SpectralPage {
  int r = 0;
  /// Subquotient presentation of E_r^{p,q} inside C^{p+q}, for every
  /// structural position (p in 0..filt_len, p+q in the complex range).
  std::map<std::pair<int, int>, Subquotient> entries;
  /// d_r matrices, keyed by source position (p, q); the target is
  /// (p + r, q - r + 1).
  std::map<std::pair<int, int>, RationalMatrix> differentials;

  std::int64_t dim(int p, int q) const;
  /// Stored d_r out of (p, q), or the zero map of matching shape.
  RationalMatrix differential(int p, int q) const;
  /// Positions with nonzero dimension.
  std::map<std::pair<int, int>, std::int64_t> dims() const;
};

struct SpectralSequence {
  /// Pages r = 0..r_cap; pages[r_cap] is the limit page.
  std::vector<SpectralPage> pages;
  int r_cap = 0;
  /// Smallest r whose dimensions persist through every later computed page.
  int stabilized_at = 0;

  const SpectralPage& page(int r) const { return pages.at(static_cast<std::size_t>(r)); }
  const SpectralPage& infinity() const { return pages.back(); }
};

/// Computes every page of the spectral sequence of a filtered complex.
/// Throws std::invalid_argument when the filtration fails to validate.
SpectralSequence compute_pages(const FilteredComplex& fc);

struct ConvergenceReport {
  bool converges = false;
  /// dim H^n of the underlying complex.
  std::map<int, std::int64_t> abutment;
  /// Sum over p of dim E_inf^{p, n-p}.
  std::map<int, std::int64_t> limit_totals;
};

/// Checks that the limit page computes the cohomology of the total complex.
ConvergenceReport check_convergence(const FilteredComplex& fc);
ConvergenceReport check_convergence(const FilteredComplex& fc, const SpectralSequence& ss);

struct SpectralMapReport {
  /// phi(F^p) ⊆ F^p degreewise.
  bool filtration_preserved = false;
  /// phi d = d phi degreewise.
  bool chain_map = false;
  /// Induced matrices per page r = 0..(common cap), keyed by position.
  std::vector<std::map<std::pair<int, int>, RationalMatrix>> pages;
  /// Induced map on page 1 is an isomorphism at every position.
  bool e1_iso = false;
  /// Induced map on the limit page is an isomorphism at every position.
  bool limit_iso = false;
};

/// Induced map of spectral sequences for a filtered chain map phi (one
/// matrix per complex degree, source and target over the same degree range).
/// Pages are only populated when the compatibility checks pass.
SpectralMapReport map_of_spectral_sequences(const FilteredComplex& source,
                                            const FilteredComplex& target,
                                            const std::vector<RationalMatrix>& phi);

struct DescentReport {
  int degree = 0;
  /// dim E_1^{p,0} for p = 0..N-1 on the cover complex.
  std::vector<std::int64_t> e1_row;
  /// E_1 is concentrated in the q = 0 row.
  bool single_row = false;
  /// Page-1 dimensions already equal the limit dimensions.
  bool degenerate_at_e1 = false;
  /// dim H^n of the cover complex per degree n.
  std::map<int, std::int64_t> abutment;
  /// Expected H^0: the degree-d slice of R/(prod f).
  std::int64_t expected_h0 = 0;
  /// H^0 matches and H^n vanishes for n > 0.
  bool abutment_ok = false;
  SpectralSequence ss;
};

/// Runs the position-filtration spectral sequence of the degree-d cover
/// complex C^p = ⊕_{|J|=p+1} (R/f_J)_d and compares its abutment with the
/// closed-form answer.
DescentReport descent_ss(const Arrangement& a, int degree);

}  // namespace stratalab
