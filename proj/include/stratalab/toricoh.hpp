#pragma once

// Closed-form line bundle cohomology on projective spaces and P^1 x P^1,
// plus the worked tables behind the `examples` subcommands: twists along an
// exceptional line of a plane blowup, the top cohomology obstruction for
// point blowups, the doubled-ruling section counts, and the rationality
// vanishing test for cones over P^1 x P^1.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace stratalab {

/// dim H^i(P^1, O(d)).
std::int64_t h_p1(int d, int i);

/// dim H^i(P^n, O(d)); only i = 0 and i = n can be nonzero.
std::int64_t h_pn(int n, int d, int i);

/// dim H^i(P^1 x P^1, O(a, b)) by the product formula.
std::int64_t h_p1xp1(int a, int b, int i);

struct TableRow {
  int d = 0;
  std::vector<std::int64_t> values;
};

struct CohomologyTable {
  std::vector<std::string> columns;
  std::vector<TableRow> rows;

  std::int64_t column_total(std::size_t column) const;
};

/// Twists restricted to the exceptional line over the intersection point of
/// two blown-up lines: row d holds h^0 and h^1 of O(d - 2) on P^1.
CohomologyTable blp2lines_table(int d_max);

/// h^{n-1}(P^{n-1}, O(-n)): the top cohomology of the conormal twist on the
/// exceptional divisor of a point blowup of P^n.
std::int64_t pn_blowup_obstruction(int n);

/// One row per n = 2..n_max with the obstruction value.
CohomologyTable pn_blowup_table(int n_max);

/// Doubled-ruling example: row d holds the count of bidegree (d, d-1)
/// monomials with both exponents of the first factor positive, which is
/// (d-1)*d, and the identically vanishing h^1.
CohomologyTable atiyah_table(int d_max);

struct ConeRationalityFailure {
  int d = 0;
  int i = 0;
  std::int64_t dim = 0;
};

struct ConeRationalityReport {
  bool pass = false;
  std::vector<ConeRationalityFailure> failures;
  /// Columns h1, h2 of O(d*L - B) for d = 0..d_max.
  CohomologyTable table;
};

/// Rationality-style vanishing for the cone over P^1 x P^1 with polarization
/// L and boundary B (both as bidegrees): h^1 and h^2 of d*L - B must vanish
/// for every d = 0..d_max.
ConeRationalityReport cone_rationality_check(std::pair<int, int> polarization,
                                             std::pair<int, int> boundary, int d_max);

}  // namespace stratalab
