#pragma once

// Finite semi-simplicial sets, presented by string-named cells per dimension
// and face maps d_0..d_k between consecutive dimensions.
//
// The face maps must satisfy face(face(x, l), k) = face(face(x, k), l-1) for
// k < l.  Cell lists are kept sorted lexicographically; `normalized` restores
// that invariant after bulk edits.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace stratalab {

struct SemiSimplicialSet {
  /// Largest dimension a cell may have; -1 means the empty set.
  int dim_bound = -1;
  /// cells[k] lists the ids of the k-cells, sorted lexicographically.
  std::vector<std::vector<std::string>> cells;
  /// faces[k][i][j] is the index (into cells[k-1]) of d_j of the i-th k-cell;
  /// faces[0] entries are empty.
  std::vector<std::vector<std::vector<int>>> faces;
  /// Optional augmentation: a token per 0-cell.  Both endpoints of every
  /// 1-cell must carry the same token.
  std::optional<std::vector<std::string>> augmentation;

  /// (dimension, index) of the cell with the given id.
  std::optional<std::pair<int, int>> find(const std::string& id) const;
  const std::string& face_id(int dim, int idx, int j) const;
  std::int64_t cell_count() const;

  friend bool operator==(const SemiSimplicialSet& a, const SemiSimplicialSet& b) = default;
};

/// Structural checks: list shapes, sortedness, face ranges, the simplicial
/// identities, and augmentation coherence.  Returns human-readable findings;
/// empty means valid.
std::vector<std::string> validate(const SemiSimplicialSet& s);

/// Same set with cell lists sorted and face indices remapped.
SemiSimplicialSet normalized(SemiSimplicialSet s);

/// Cells of dimension <= i, with dim_bound set to i.  Requires -1 <= i <=
/// s.dim_bound.
SemiSimplicialSet skeleton(const SemiSimplicialSet& s, int i);

/// All tuples (x_0, ..., x_i) of (i-1)-cell ids satisfying
/// face(x_k, j) = face(x_j, k-1) for j < k, in lexicographic order.
/// Requires t.dim_bound == i - 1.  For i == 1 without augmentation every
/// ordered pair qualifies; with augmentation the two tokens must agree.
/// For i == 0 the result is the single empty tuple.
std::vector<std::vector<std::string>> equalizer(const SemiSimplicialSet& t, int i);

/// Attaches new cells of dimension i = t.dim_bound + 1.  attach[n] lists the
/// faces (d_0, ..., d_i) of top_ids[n] and must satisfy the equalizer
/// conditions.  Throws std::invalid_argument on malformed input, including
/// an attach tuple outside the equalizer.
SemiSimplicialSet glue(const SemiSimplicialSet& t, const std::vector<std::string>& top_ids,
                       const std::vector<std::vector<std::string>>& attach);

/// A dimension-wise cell map; maps[k][i] is the index of the image of the
/// i-th source k-cell among the target k-cells.
struct SSMap {
  std::vector<std::vector<int>> maps;
};

/// Checks that m is a well-formed map src -> tgt commuting with all face
/// maps (and matching augmentation tokens when both sides carry one).
std::vector<std::string> validate_map(const SemiSimplicialSet& src, const SemiSimplicialSet& tgt,
                                      const SSMap& m);

}  // namespace stratalab
