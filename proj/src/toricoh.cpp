#include "stratalab/toricoh.hpp"

#include <stdexcept>

namespace stratalab {
namespace {

std::int64_t binomial(std::int64_t a, std::int64_t b) {
  if (b < 0 || a < b) return 0;
  std::int64_t r = 1;
  for (std::int64_t k = 1; k <= b; ++k) r = r * (a - b + k) / k;
  return r;
}

}  // namespace

std::int64_t h_p1(int d, int i) { return h_pn(1, d, i); }

std::int64_t h_pn(int n, int d, int i) {
  if (n < 1) throw std::invalid_argument("projective space dimension must be positive");
  if (i < 0 || i > n) return 0;
  if (i == 0) return d >= 0 ? binomial(d + n, n) : 0;
  if (i == n) return d <= -n - 1 ? binomial(-d - 1, n) : 0;
  return 0;
}

std::int64_t h_p1xp1(int a, int b, int i) {
  std::int64_t total = 0;
  for (int j = 0; j <= 1; ++j) {
    const int k = i - j;
    if (k < 0 || k > 1) continue;
    total += h_p1(a, j) * h_p1(b, k);
  }
  return total;
}

std::int64_t CohomologyTable::column_total(std::size_t column) const {
  std::int64_t total = 0;
  for (const auto& row : rows) total += row.values.at(column);
  return total;
}

CohomologyTable blp2lines_table(int d_max) {
  if (d_max < 0) throw std::invalid_argument("d_max must be nonnegative");
  CohomologyTable t;
  t.columns = {"h0", "h1"};
  for (int d = 0; d <= d_max; ++d)
    t.rows.push_back({d, {h_p1(d - 2, 0), h_p1(d - 2, 1)}});
  return t;
}

std::int64_t pn_blowup_obstruction(int n) {
  if (n < 2) throw std::invalid_argument("blowup dimension must be at least 2");
  return h_pn(n - 1, -n, n - 1);
}

CohomologyTable pn_blowup_table(int n_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  CohomologyTable t;
  t.columns = {"exceptional_h_top"};
  for (int n = 2; n <= n_max; ++n) t.rows.push_back({n, {pn_blowup_obstruction(n)}});
  return t;
}

CohomologyTable atiyah_table(int d_max) {
  if (d_max < 0) throw std::invalid_argument("d_max must be nonnegative");
  CohomologyTable t;
  t.columns = {"h0", "h1"};
  for (int d = 0; d <= d_max; ++d)
    t.rows.push_back({d, {static_cast<std::int64_t>(d - 1) * d, 0}});
  return t;
}

ConeRationalityReport cone_rationality_check(std::pair<int, int> polarization,
                                             std::pair<int, int> boundary, int d_max) {
  if (d_max < 0) throw std::invalid_argument("d_max must be nonnegative");
  ConeRationalityReport rep;
  rep.table.columns = {"h1", "h2"};
  for (int d = 0; d <= d_max; ++d) {
    const int a = d * polarization.first - boundary.first;
    const int b = d * polarization.second - boundary.second;
    TableRow row{d, {h_p1xp1(a, b, 1), h_p1xp1(a, b, 2)}};
    for (int i = 1; i <= 2; ++i)
      if (row.values[static_cast<std::size_t>(i - 1)] != 0)
        rep.failures.push_back({d, i, row.values[static_cast<std::size_t>(i - 1)]});
    rep.table.rows.push_back(std::move(row));
  }
  rep.pass = rep.failures.empty();
  return rep;
}

}  // namespace stratalab
