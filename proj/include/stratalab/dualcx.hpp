#pragma once

// Dual complexes of divisor arrangements and the thriftiness comparison.
//
// A p-cell of the dual complex is a stratum of a (p+1)-fold intersection
// D_J.  Cell ids are "<label,label,...>:<k>" with the labels sorted
// lexicographically and k numbering the strata of the same J; the j-th face
// drops the j-th label.  An arrangement pair is thrifty over a divisor
// correspondence when relabeling the source dual complex gives a complex
// isomorphic to the target one.

#include "stratalab/arrangement.hpp"
#include "stratalab/ssimplicial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stratalab {

struct DualComplex {
  SemiSimplicialSet ss;
  /// Explicit mode: declared stratum id -> cell id (and back).  In auto mode
  /// both maps are identities on the cell ids.
  std::map<std::string, std::string> cell_of_stratum;
  std::map<std::string, std::string> stratum_of_cell;
};

/// Builds the dual complex.  Auto strata mode requires every divisor to be a
/// coordinate hyperplane (a rational multiple of one variable); every subset
/// intersection is then one connected stratum.  Explicit mode uses the
/// declared strata and their containments.  Throws std::invalid_argument on
/// invalid input.
DualComplex dual_complex(const Arrangement& a);

/// How source strata are matched with target strata: a bijective renaming of
/// divisor labels, and optionally an explicit cell-level bijection (source
/// cell id -> target cell id) to verify instead of searching for one.
struct StratumCorrespondence {
  std::map<std::string, std::string> label_map;
  std::optional<std::map<std::string, std::string>> cell_map;
};

struct ThriftyWitness {
  int dim = 0;
  std::string side;  // "source" or "target"
  std::string cell;
  std::string reason;
};

struct ThriftyReport {
  bool thrifty = false;
  std::optional<ThriftyWitness> witness;
  /// Present when the verdict is positive: an isomorphism from the relabeled
  /// source onto the target.
  std::optional<SSMap> iso;
  /// The relabeled source complex the comparison ran against.
  SemiSimplicialSet relabeled_source;
};

/// Relabels every cell id of a dual complex along the divisor renaming,
/// re-sorting labels and permuting faces accordingly.
SemiSimplicialSet relabel_cells(const SemiSimplicialSet& s,
                                const std::map<std::string, std::string>& label_map);

/// Decides whether the correspondence realises an isomorphism of dual
/// complexes.  With an explicit cell_map the map itself is verified;
/// otherwise a face-compatible bijection is searched for.  Cell ids must be
/// in dual-complex form.  Throws std::invalid_argument on malformed input
/// (non-bijective label map, unparseable ids).
ThriftyReport check_thrifty(const SemiSimplicialSet& source, const SemiSimplicialSet& target,
                            const StratumCorrespondence& corr);

}  // namespace stratalab
