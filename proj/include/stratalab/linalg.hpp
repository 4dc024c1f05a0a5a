#pragma once

// Exact linear algebra over Q.
//
// Rank and determinant run fraction-free (Bareiss) after clearing row
// denominators; reduced row echelon form runs in plain rational arithmetic.
// Every derived object (kernel, image, quotient representatives) is produced
// in a canonical echelon form, so results depend only on the subspaces
// involved and never on generator order.

#include "stratalab/matrix.hpp"

#include <optional>
#include <vector>

namespace stratalab {

/// Rank by fraction-free elimination; pivot rows are chosen by smallest
/// nonzero bit length (ties break to the lowest row index).
std::int64_t rank(const RationalMatrix& m);

/// Determinant of a square matrix.
Rational determinant(const RationalMatrix& m);

struct RrefResult {
  RationalMatrix r;                 // reduced row echelon form
  std::vector<std::int64_t> pivots; // pivot column per nonzero row, ascending
};

/// Unique reduced row echelon form.
RrefResult rref(const RationalMatrix& m);

/// Canonical basis of ker(m) as matrix columns: one column per free column
/// of m, carrying 1 in its free coordinate, listed in ascending column order.
RationalMatrix kernel_basis(const RationalMatrix& m);

/// Canonical basis of the column space: columns in echelon form with unit
/// leading entries (the nonzero rows of rref(m^T), transposed back).
/// Depends only on the column span, not on the generators supplied.
RationalMatrix image_basis(const RationalMatrix& m);

/// Row indices of the leading entries of image_basis(m), ascending.
std::vector<std::int64_t> image_pivot_rows(const RationalMatrix& m);

/// One solution of m x = b, if any (from the rref of the augmented matrix).
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b);

// Subspaces of Q^n are passed around as matrices whose columns span them.

/// span(a) + span(b), canonical basis.
RationalMatrix subspace_sum(const RationalMatrix& a, const RationalMatrix& b);
/// span(a) ∩ span(b), canonical basis.
RationalMatrix subspace_intersection(const RationalMatrix& a, const RationalMatrix& b);
/// {x : m x ∈ span(s)}, canonical basis.  s lives in the codomain of m.
RationalMatrix preimage(const RationalMatrix& m, const RationalMatrix& s);
/// span(a) ⊆ span(b)?
bool subspace_contains(const RationalMatrix& b, const RationalMatrix& a);
bool subspace_equal(const RationalMatrix& a, const RationalMatrix& b);

/// A presentation of Z/D for subspaces D ⊆ Z ⊆ Q^n: canonical denominator
/// basis plus coset representatives whose classes form a basis of Z/D.
struct Subquotient {
  std::int64_t ambient_dim = 0;
  RationalMatrix denominators;     // canonical echelon basis of D
  RationalMatrix representatives;  // columns of echelon(Z) extending D
  std::int64_t dim() const { return representatives.cols(); }

  /// Coordinates of [v] in the representative basis.  Throws if v ∉ Z.
  std::vector<Rational> express(const std::vector<Rational>& v) const;
};

/// Builds Z/D.  Throws std::invalid_argument unless span(d) ⊆ span(z).
Subquotient make_subquotient(const RationalMatrix& z, const RationalMatrix& d);

/// The induced matrix of `map` on subquotients: source representatives are
/// pushed through `map` and expressed in the target.  Throws if the image of
/// some representative leaves the target numerator space.
RationalMatrix induced_map(const Subquotient& source, const Subquotient& target,
                           const RationalMatrix& map);

}  // namespace stratalab
