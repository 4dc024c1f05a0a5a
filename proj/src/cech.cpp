#include "stratalab/cech.hpp"

#include "stratalab/threads.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace stratalab {
namespace {

std::string fmt(std::int64_t v) { return std::to_string(v); }

/// Size-k subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<int>> subsets_of_range(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

/// Size-k subsets of an ascending base list, in lexicographic order.
std::vector<std::vector<int>> subsets_of(const std::vector<int>& base, int k) {
  std::vector<std::vector<int>> out;
  for (auto& pick : subsets_of_range(static_cast<int>(base.size()), k)) {
    std::vector<int> s;
    s.reserve(pick.size());
    for (int i : pick) s.push_back(base[i]);
    out.push_back(std::move(s));
  }
  return out;
}

int degree_sum(const Arrangement& a, const std::vector<int>& subset) {
  int d = 0;
  for (int i : subset) d += a.divisors[static_cast<std::size_t>(i)].poly.total_degree();
  return d;
}

/// Multiplication by f as a matrix R_{target-deg f} -> R_target in the
/// graded-lex monomial bases.
RationalMatrix multiplication_matrix(const Polynomial& f, int nvars, int target_degree) {
  const std::int64_t rows = slice_dimension(nvars, target_degree);
  const int src_degree = target_degree - f.total_degree();
  if (src_degree < 0) return RationalMatrix(rows, 0);
  auto src = monomial_basis(nvars, src_degree);
  auto tgt = monomial_basis(nvars, target_degree);
  std::map<Monomial, std::int64_t, GrlexGreater> row_of;
  for (std::size_t r = 0; r < tgt.size(); ++r) row_of[tgt[r]] = static_cast<std::int64_t>(r);
  std::vector<Triplet> ts;
  for (std::size_t c = 0; c < src.size(); ++c) {
    for (const auto& [mono, coeff] : f.terms()) {
      Monomial prod(static_cast<std::size_t>(nvars), 0);
      for (int v = 0; v < nvars; ++v)
        prod[static_cast<std::size_t>(v)] =
            src[c][static_cast<std::size_t>(v)] + mono[static_cast<std::size_t>(v)];
      ts.push_back({row_of.at(prod), static_cast<std::int64_t>(c), coeff});
    }
  }
  return RationalMatrix::from_triplets(rows, static_cast<std::int64_t>(src.size()), std::move(ts));
}

/// (R / (f_j : j in J))_degree presented inside the monomial basis of R_degree.
Subquotient quotient_slice(const Arrangement& a, const std::vector<int>& J, int degree) {
  const int nv = a.nvars();
  const std::int64_t amb = slice_dimension(nv, degree);
  RationalMatrix gens(amb, 0);
  for (int j : J)
    gens = hstack(gens, multiplication_matrix(a.divisors[static_cast<std::size_t>(j)].poly, nv, degree));
  return make_subquotient(RationalMatrix::identity(amb), gens);
}

void add_block(std::vector<Triplet>& ts, const RationalMatrix& b, std::int64_t row0,
               std::int64_t col0, int sign) {
  for (const auto& t : b.triplets())
    ts.push_back({row0 + t.row, col0 + t.col, sign < 0 ? Rational(-t.value) : t.value});
}

Polynomial product_of_divisors(const Arrangement& a) {
  Polynomial prod = Polynomial::constant(a.nvars(), 1);
  for (const auto& d : a.divisors) prod = prod * d.poly;
  return prod;
}

}  // namespace

CechSlice build_cech_slice(const Arrangement& a, int degree, bool enforce_regularity) {
  require_valid(a);
  if (degree < 0) throw std::invalid_argument("slice degree must be nonnegative");
  if (enforce_regularity) {
    auto reg = check_regular_sequence(a, degree);
    if (!reg.regular) {
      const auto& w = reg.witnesses.front();
      throw std::invalid_argument(
          "divisor polynomials do not form a regular sequence: Koszul cohomology of dimension " +
          fmt(w.dim) + " at slice degree " + fmt(w.degree) + ", position " + fmt(w.q));
    }
  }

  const int n = static_cast<int>(a.divisors.size());
  const int nv = a.nvars();

  CechSlice slice;
  slice.degree = degree;
  slice.layout.assign(static_cast<std::size_t>(n + 2), {});

  // Positions 0..n carry subquotients of R_degree, position -1 the ideal slice.
  std::vector<std::vector<Subquotient>> sqs(static_cast<std::size_t>(n + 1));
  std::vector<std::int64_t> dims(static_cast<std::size_t>(n + 2), 0);
  dims[0] = slice_dimension(nv, degree - degree_sum(a, [&] {
                              std::vector<int> all(static_cast<std::size_t>(n));
                              std::iota(all.begin(), all.end(), 0);
                              return all;
                            }()));
  slice.layout[0].push_back({{}, dims[0], 0});
  for (int p = 0; p <= n; ++p) {
    std::int64_t off = 0;
    for (auto& J : subsets_of_range(n, p)) {
      Subquotient sq = quotient_slice(a, J, degree);
      slice.layout[static_cast<std::size_t>(p + 1)].push_back({J, sq.dim(), off});
      off += sq.dim();
      sqs[static_cast<std::size_t>(p)].push_back(std::move(sq));
    }
    dims[static_cast<std::size_t>(p + 1)] = off;
  }

  ComplexOfSpaces cx(-1, std::vector<std::int64_t>(dims.begin(), dims.end()));
  cx.set_differential(-1, multiplication_matrix(product_of_divisors(a), nv, degree));
  for (int p = 0; p < n; ++p) {
    const auto& src_layout = slice.layout[static_cast<std::size_t>(p + 1)];
    const auto& tgt_layout = slice.layout[static_cast<std::size_t>(p + 2)];
    std::map<std::vector<int>, std::size_t> src_index;
    for (std::size_t i = 0; i < src_layout.size(); ++i) src_index[src_layout[i].divisors] = i;
    std::vector<Triplet> ts;
    for (std::size_t tb = 0; tb < tgt_layout.size(); ++tb) {
      const auto& Jp = tgt_layout[tb].divisors;
      for (std::size_t t = 0; t < Jp.size(); ++t) {
        std::vector<int> J = Jp;
        J.erase(J.begin() + static_cast<std::ptrdiff_t>(t));
        const std::size_t sb = src_index.at(J);
        RationalMatrix block =
            induced_map(sqs[static_cast<std::size_t>(p)][sb], sqs[static_cast<std::size_t>(p + 1)][tb],
                        RationalMatrix::identity(slice_dimension(nv, degree)));
        add_block(ts, block, tgt_layout[tb].offset, src_layout[sb].offset, t % 2 == 0 ? 1 : -1);
      }
    }
    cx.set_differential(p, RationalMatrix::from_triplets(dims[static_cast<std::size_t>(p + 2)],
                                                         dims[static_cast<std::size_t>(p + 1)],
                                                         std::move(ts)));
  }
  slice.cx = std::move(cx);
  return slice;
}

ExactnessReport verify_exactness(const CechSlice& slice) {
  ExactnessReport rep;
  rep.degree = slice.degree;
  auto h = slice.cx.cohomology_dims();
  rep.exact = true;
  for (int n = slice.cx.lo(); n <= slice.cx.hi(); ++n) {
    std::int64_t d = h.at(n);
    rep.cohomology[n] = d;
    if (d != 0) rep.exact = false;
  }
  return rep;
}

std::int64_t KoszulSlice::dim(int p, int q) const {
  auto it = dims.find({p, q});
  return it == dims.end() ? 0 : it->second;
}

RationalMatrix KoszulSlice::horizontal(int p, int q) const {
  auto it = horiz.find({p, q});
  return it == horiz.end() ? RationalMatrix(dim(p + 1, q), dim(p, q)) : it->second;
}

RationalMatrix KoszulSlice::vertical(int p, int q) const {
  auto it = vert.find({p, q});
  return it == vert.end() ? RationalMatrix(dim(p, q + 1), dim(p, q)) : it->second;
}

KoszulSlice build_koszul_double(const Arrangement& a, int degree) {
  require_valid(a);
  if (degree < 0) throw std::invalid_argument("slice degree must be nonnegative");
  const int n = static_cast<int>(a.divisors.size());
  const int nv = a.nvars();

  KoszulSlice k;
  k.degree = degree;
  k.n = n;

  // Block layout first: offsets per (p, q), (J, K) in lex order.
  std::map<std::pair<int, int>, std::vector<std::int64_t>> offsets;
  for (int p = 0; p <= n; ++p) {
    for (auto& J : subsets_of_range(n, p)) {
      for (int s = 0; s <= p; ++s) {
        const int q = -s;
        for (auto& K : subsets_of(J, s)) {
          auto& blk = k.blocks[{p, q}];
          auto& off = offsets[{p, q}];
          off.push_back(k.dims[{p, q}]);
          k.dims[{p, q}] += slice_dimension(nv, degree - degree_sum(a, K));
          blk.push_back({J, K});
        }
      }
    }
  }

  auto block_index = [&](int p, int q, const std::vector<int>& J,
                         const std::vector<int>& K) -> std::size_t {
    const auto& blk = k.blocks.at({p, q});
    for (std::size_t i = 0; i < blk.size(); ++i)
      if (blk[i].first == J && blk[i].second == K) return i;
    throw std::logic_error("missing block in double complex layout");
  };

  // Horizontal: insert a divisor into J, sign by its position in the result.
  for (int p = 0; p < n; ++p) {
    for (int q = -p; q <= 0; ++q) {
      std::vector<Triplet> ts;
      const auto& tgt_blocks = k.blocks.at({p + 1, q});
      const auto& tgt_off = offsets.at({p + 1, q});
      for (std::size_t tb = 0; tb < tgt_blocks.size(); ++tb) {
        const auto& [Jp, K] = tgt_blocks[tb];
        for (std::size_t t = 0; t < Jp.size(); ++t) {
          if (std::binary_search(K.begin(), K.end(), Jp[t])) continue;
          std::vector<int> J = Jp;
          J.erase(J.begin() + static_cast<std::ptrdiff_t>(t));
          const std::size_t sb = block_index(p, q, J, K);
          const std::int64_t bd = slice_dimension(nv, degree - degree_sum(a, K));
          add_block(ts, RationalMatrix::identity(bd), tgt_off[tb], offsets.at({p, q})[sb],
                    t % 2 == 0 ? 1 : -1);
        }
      }
      k.horiz[{p, q}] =
          RationalMatrix::from_triplets(k.dims[{p + 1, q}], k.dims[{p, q}], std::move(ts));
    }
  }

  // Vertical: contract K against its own polynomial; (-1)^p keeps the two
  // differentials anticommuting in the total complex.
  for (int p = 0; p <= n; ++p) {
    for (int q = -p; q < 0; ++q) {
      std::vector<Triplet> ts;
      const auto& src_blocks = k.blocks.at({p, q});
      const auto& src_off = offsets.at({p, q});
      const auto& tgt_off = offsets.at({p, q + 1});
      for (std::size_t sb = 0; sb < src_blocks.size(); ++sb) {
        const auto& [J, K] = src_blocks[sb];
        for (std::size_t t = 0; t < K.size(); ++t) {
          std::vector<int> Kp = K;
          Kp.erase(Kp.begin() + static_cast<std::ptrdiff_t>(t));
          const std::size_t tb = block_index(p, q + 1, J, Kp);
          RationalMatrix block = multiplication_matrix(
              a.divisors[static_cast<std::size_t>(K[t])].poly, nv, degree - degree_sum(a, Kp));
          int sign = (static_cast<int>(t) + p) % 2 == 0 ? 1 : -1;
          add_block(ts, block, tgt_off[tb], src_off[sb], sign);
        }
      }
      k.vert[{p, q}] =
          RationalMatrix::from_triplets(k.dims[{p, q + 1}], k.dims[{p, q}], std::move(ts));
    }
  }
  return k;
}

ComplexOfSpaces koszul_total(const KoszulSlice& k) {
  const int n = k.n;
  // Tot^m stacks the blocks with p + q = m by ascending p.
  std::vector<std::int64_t> dims;
  std::map<std::pair<int, int>, std::int64_t> tot_offset;
  for (int m = -n; m <= n; ++m) {
    std::int64_t total = 0;
    for (int p = std::max(0, m); p <= n; ++p) {
      const int q = m - p;
      if (q < -p || q > 0) continue;
      tot_offset[{p, q}] = total;
      total += k.dim(p, q);
    }
    dims.push_back(total);
  }
  ComplexOfSpaces tot(-n, dims);
  for (int m = -n; m < n; ++m) {
    std::vector<Triplet> ts;
    for (int p = std::max(0, m); p <= n; ++p) {
      const int q = m - p;
      if (q < -p || q > 0) continue;
      if (p < n) add_block(ts, k.horizontal(p, q), tot_offset.at({p + 1, q}), tot_offset.at({p, q}), 1);
      if (q < 0) add_block(ts, k.vertical(p, q), tot_offset.at({p, q + 1}), tot_offset.at({p, q}), 1);
    }
    tot.set_differential(m, RationalMatrix::from_triplets(tot.dim(m + 1), tot.dim(m), std::move(ts)));
  }
  return tot;
}

ComplexOfSpaces koszul_row(const KoszulSlice& k, int q) {
  std::vector<std::int64_t> dims;
  for (int p = 0; p <= k.n; ++p) dims.push_back(k.dim(p, q));
  ComplexOfSpaces row(0, dims);
  for (int p = 0; p < k.n; ++p) row.set_differential(p, k.horizontal(p, q));
  return row;
}

ComplexOfSpaces koszul_column(const KoszulSlice& k, int p) {
  std::vector<std::int64_t> dims;
  for (int q = -k.n; q <= 0; ++q) dims.push_back(k.dim(p, q));
  ComplexOfSpaces col(-k.n, dims);
  for (int q = -k.n; q < 0; ++q) col.set_differential(q, k.vertical(p, q));
  return col;
}

KoszulReport verify_koszul_conjecture(const Arrangement& a, int max_degree) {
  require_valid(a);
  if (max_degree < 0) throw std::invalid_argument("max degree must be nonnegative");
  const int n = static_cast<int>(a.divisors.size());
  const int nv = a.nvars();
  std::vector<int> all(static_cast<std::size_t>(n));
  std::iota(all.begin(), all.end(), 0);

  KoszulReport rep;
  rep.degrees.resize(static_cast<std::size_t>(max_degree + 1));
  std::vector<std::vector<KoszulFinding>> found(static_cast<std::size_t>(max_degree + 1));
  parallel_for(max_degree + 1, [&](std::int64_t di) {
    const int d = static_cast<int>(di);
    KoszulSlice k = build_koszul_double(a, d);
    KoszulDegreeSummary& sum = rep.degrees[static_cast<std::size_t>(di)];
    auto& fs = found[static_cast<std::size_t>(di)];
    sum.degree = d;
    sum.corner = k.dim(n, -n);

    for (int q = -(n - 1); q <= 0; ++q) {
      auto h = koszul_row(k, q).cohomology_dims();
      for (auto& [p, hd] : h)
        if (hd != 0) fs.push_back({d, "row", p, q, hd});
    }
    for (int p = 0; p <= n; ++p) {
      auto h = koszul_column(k, p).cohomology_dims();
      for (auto& [q, hd] : h)
        if (q < 0 && hd != 0) fs.push_back({d, "column", p, q, hd});
    }
    auto h = koszul_total(k).cohomology_dims();
    const std::int64_t expected0 = slice_dimension(nv, d - degree_sum(a, all));
    for (auto& [m, hd] : h) {
      sum.total[m] = hd;
      if (hd != (m == 0 ? expected0 : 0)) fs.push_back({d, "total", m, 0, hd});
    }
  });
  for (auto& fs : found)
    rep.findings.insert(rep.findings.end(), fs.begin(), fs.end());
  rep.ok = rep.findings.empty();
  return rep;
}

RegSeqReport check_regular_sequence(const Arrangement& a, int max_degree) {
  require_valid(a);
  if (max_degree < 0) throw std::invalid_argument("max degree must be nonnegative");
  const int n = static_cast<int>(a.divisors.size());
  const int nv = a.nvars();

  RegSeqReport rep;
  // Koszul complex of the full sequence: terms over K ⊆ {all divisors},
  // contraction differential.  Regularity up to the inspected degrees is
  // exactly the vanishing of its cohomology in negative positions.
  std::vector<std::vector<RegSeqWitness>> found(static_cast<std::size_t>(max_degree + 1));
  parallel_for(max_degree + 1, [&](std::int64_t di) {
    const int d = static_cast<int>(di);
    std::vector<std::int64_t> dims;
    std::vector<std::vector<std::vector<int>>> level_blocks;
    std::vector<std::vector<std::int64_t>> level_offsets;
    for (int q = -n; q <= 0; ++q) {
      auto Ks = subsets_of_range(n, -q);
      std::vector<std::int64_t> offs;
      std::int64_t total = 0;
      for (auto& K : Ks) {
        offs.push_back(total);
        total += slice_dimension(nv, d - degree_sum(a, K));
      }
      dims.push_back(total);
      level_blocks.push_back(std::move(Ks));
      level_offsets.push_back(std::move(offs));
    }
    ComplexOfSpaces cx(-n, dims);
    for (int q = -n; q < 0; ++q) {
      const auto& src = level_blocks[static_cast<std::size_t>(q + n)];
      const auto& tgt = level_blocks[static_cast<std::size_t>(q + n + 1)];
      std::vector<Triplet> ts;
      for (std::size_t sb = 0; sb < src.size(); ++sb) {
        const auto& K = src[sb];
        for (std::size_t t = 0; t < K.size(); ++t) {
          std::vector<int> Kp = K;
          Kp.erase(Kp.begin() + static_cast<std::ptrdiff_t>(t));
          const auto it = std::find(tgt.begin(), tgt.end(), Kp);
          const std::size_t tb = static_cast<std::size_t>(it - tgt.begin());
          RationalMatrix block = multiplication_matrix(
              a.divisors[static_cast<std::size_t>(K[t])].poly, nv, d - degree_sum(a, Kp));
          add_block(ts, block, level_offsets[static_cast<std::size_t>(q + n + 1)][tb],
                    level_offsets[static_cast<std::size_t>(q + n)][sb], t % 2 == 0 ? 1 : -1);
        }
      }
      cx.set_differential(q, RationalMatrix::from_triplets(cx.dim(q + 1), cx.dim(q), std::move(ts)));
    }
    auto h = cx.cohomology_dims();
    for (auto& [q, hd] : h)
      if (q < 0 && hd != 0) found[static_cast<std::size_t>(di)].push_back({d, q, hd});
  });
  for (auto& fs : found)
    rep.witnesses.insert(rep.witnesses.end(), fs.begin(), fs.end());
  rep.regular = rep.witnesses.empty();
  return rep;
}

FilteredComplex truncation_filtration(const CechSlice& slice) {
  const int n = slice.cx.hi();
  std::vector<std::int64_t> dims;
  for (int p = 0; p <= n; ++p) dims.push_back(slice.cx.dim(p));
  ComplexOfSpaces cx(0, dims);
  for (int p = 0; p < n; ++p) cx.set_differential(p, slice.cx.differential(p));

  FilteredComplex fc;
  fc.filt_len = n + 1;
  fc.fbasis.assign(static_cast<std::size_t>(n + 2), {});
  for (int lvl = 0; lvl <= n + 1; ++lvl)
    for (int p = 0; p <= n; ++p)
      fc.fbasis[static_cast<std::size_t>(lvl)].push_back(
          lvl <= p ? RationalMatrix::identity(cx.dim(p)) : RationalMatrix(cx.dim(p), 0));
  fc.cx = std::move(cx);
  return fc;
}

}  // namespace stratalab
