#pragma once

// Divisor arrangements in a standard-graded polynomial ring over Q.
//
// An arrangement is a list of labeled, homogeneous, squarefree, pairwise
// non-proportional polynomials in up to six variables, together with a
// description of the strata of the intersections D_J: either derived
// automatically (coordinate hyperplanes only, one connected stratum per
// subset) or supplied explicitly with containment data.

#include "stratalab/polynomial.hpp"

#include <string>
#include <vector>

namespace stratalab {

struct Divisor {
  std::string label;
  Polynomial poly;
};

/// One declared stratum of the intersection of the named divisors.
/// contained_in lists the strata of the one-smaller intersections this
/// stratum lies in (exactly one per dropped divisor).
struct StratumSpec {
  std::string id;
  std::vector<std::string> divisors;
  std::vector<std::string> contained_in;
};

enum class StrataMode { kAuto, kExplicit };

struct Arrangement {
  std::vector<std::string> variables;
  std::vector<Divisor> divisors;
  StrataMode strata_mode = StrataMode::kAuto;
  std::vector<StratumSpec> strata;  // used in explicit mode only

  int nvars() const { return static_cast<int>(variables.size()); }
  /// Index of the divisor with this label, or -1.
  int divisor_index(const std::string& label) const;
};

/// Full input validation; empty result means the arrangement is usable.
/// Checks variables (1..6, unique identifiers), divisor polynomials
/// (nonzero, homogeneous of degree >= 1, squarefree, pairwise
/// non-proportional), label hygiene, and in explicit mode the stratum
/// containment coherence.
std::vector<std::string> validate_arrangement(const Arrangement& a);

/// Throws std::invalid_argument with the first finding when invalid.
void require_valid(const Arrangement& a);

}  // namespace stratalab
