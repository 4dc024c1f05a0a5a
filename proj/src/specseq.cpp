#include "stratalab/specseq.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

namespace stratalab {
namespace {

std::string fmt(std::int64_t v) { return std::to_string(v); }

/// On-demand cycle spaces and page entries for one filtered complex.
class PageMachine {
 public:
  explicit PageMachine(const FilteredComplex& fc) : fc_(fc) {}

  const FilteredComplex& fc() const { return fc_; }
  int lo() const { return fc_.cx.lo(); }
  int hi() const { return fc_.cx.hi(); }
  int plen() const { return fc_.filt_len; }

  /// Z_r^{p, n-p}: canonical basis of F^p C^n ∩ d^{-1}(F^{p+r} C^{n+1}).
  /// r = -1 is allowed (the page-0 denominators) and degenerates to F^p.
  const RationalMatrix& cycles(int r, int p, int n) {
    auto key = std::make_tuple(r, p, n);
    auto it = zmemo_.find(key);
    if (it != zmemo_.end()) return it->second;
    RationalMatrix fp = fc_.level(p, n);
    RationalMatrix pushed = fc_.cx.differential(n) * fp;
    RationalMatrix coeffs = preimage(pushed, fc_.level(p + r, n + 1));
    return zmemo_.emplace(key, image_basis(fp * coeffs)).first->second;
  }

  const Subquotient& entry(int r, int p, int q) {
    auto key = std::make_tuple(r, p, q);
    auto it = ememo_.find(key);
    if (it != ememo_.end()) return it->second;
    const int n = p + q;
    RationalMatrix numer = cycles(r, p, n);
    // Z_{r-1}^{p-r+1, q+r-2} with the source level clamped at 0: the
    // d-target level must stay at p, so the page index clamps alongside.
    RationalMatrix boundary = image_basis(
        fc_.cx.differential(n - 1) * cycles(std::min(r - 1, p), std::max(p - r + 1, 0), n - 1));
    RationalMatrix denom = subspace_sum(cycles(r - 1, p + 1, n), boundary);
    return ememo_.emplace(key, make_subquotient(numer, denom)).first->second;
  }

  RationalMatrix page_differential(int r, int p, int q) {
    return induced_map(entry(r, p, q), entry(r, p + r, q - r + 1),
                       fc_.cx.differential(p + q));
  }

 private:
  const FilteredComplex& fc_;
  std::map<std::tuple<int, int, int>, RationalMatrix> zmemo_;
  std::map<std::tuple<int, int, int>, Subquotient> ememo_;
};

int page_cap(const FilteredComplex& fc) {
  return fc.filt_len + (fc.cx.hi() - fc.cx.lo()) + 1;
}

void require_valid_filtration(const FilteredComplex& fc) {
  auto findings = fc.validate();
  if (!findings.empty()) throw std::invalid_argument(findings.front());
}

SpectralPage build_page(PageMachine& m, int r) {
  SpectralPage page;
  page.r = r;
  for (int p = 0; p <= m.plen(); ++p)
    for (int n = m.lo(); n <= m.hi(); ++n) {
      const int q = n - p;
      page.entries.emplace(std::make_pair(p, q), m.entry(r, p, q));
      page.differentials.emplace(std::make_pair(p, q), m.page_differential(r, p, q));
    }
  return page;
}

}  // namespace

RationalMatrix FilteredComplex::level(int p, int n) const {
  if (n < cx.lo() || n > cx.hi()) return RationalMatrix(0, 0);
  if (p > filt_len) return RationalMatrix(cx.dim(n), 0);
  if (p < 0) p = 0;
  return fbasis[static_cast<std::size_t>(p)][static_cast<std::size_t>(n - cx.lo())];
}

std::vector<std::string> FilteredComplex::validate() const {
  std::vector<std::string> out = cx.validate();
  if (!out.empty()) return out;
  if (filt_len < 0) {
    out.push_back("filtration length is negative");
    return out;
  }
  if (fbasis.size() != static_cast<std::size_t>(filt_len + 1)) {
    out.push_back("expected " + fmt(filt_len + 1) + " filtration levels, found " +
                  fmt(static_cast<std::int64_t>(fbasis.size())));
    return out;
  }
  const std::size_t span = static_cast<std::size_t>(cx.hi() - cx.lo() + 1);
  for (int p = 0; p <= filt_len; ++p) {
    const auto& lev = fbasis[static_cast<std::size_t>(p)];
    if (lev.size() != span) {
      out.push_back("level " + fmt(p) + " covers " + fmt(static_cast<std::int64_t>(lev.size())) +
                    " degrees instead of " + fmt(static_cast<std::int64_t>(span)));
      return out;
    }
    for (int n = cx.lo(); n <= cx.hi(); ++n)
      if (lev[static_cast<std::size_t>(n - cx.lo())].rows() != cx.dim(n))
        out.push_back("level " + fmt(p) + " at degree " + fmt(n) + " has wrong ambient dimension");
  }
  if (!out.empty()) return out;
  for (int n = cx.lo(); n <= cx.hi(); ++n) {
    if (rank(level(0, n)) != cx.dim(n))
      out.push_back("level 0 does not span degree " + fmt(n));
    if (rank(level(filt_len, n)) != 0)
      out.push_back("level " + fmt(filt_len) + " is nonzero at degree " + fmt(n));
    for (int p = 0; p < filt_len; ++p)
      if (!subspace_contains(level(p, n), level(p + 1, n)))
        out.push_back("level " + fmt(p + 1) + " is not contained in level " + fmt(p) +
                      " at degree " + fmt(n));
    for (int p = 0; p <= filt_len; ++p)
      if (!subspace_contains(level(p, n + 1), image_basis(cx.differential(n) * level(p, n))))
        out.push_back("differential leaves level " + fmt(p) + " at degree " + fmt(n));
  }
  return out;
}

std::int64_t SpectralPage::dim(int p, int q) const {
  auto it = entries.find({p, q});
  return it == entries.end() ? 0 : it->second.dim();
}

RationalMatrix SpectralPage::differential(int p, int q) const {
  auto it = differentials.find({p, q});
  if (it != differentials.end()) return it->second;
  return RationalMatrix(dim(p + r, q - r + 1), dim(p, q));
}

std::map<std::pair<int, int>, std::int64_t> SpectralPage::dims() const {
  std::map<std::pair<int, int>, std::int64_t> out;
  for (const auto& [pos, sq] : entries)
    if (sq.dim() != 0) out[pos] = sq.dim();
  return out;
}

SpectralSequence compute_pages(const FilteredComplex& fc) {
  require_valid_filtration(fc);
  PageMachine machine(fc);
  SpectralSequence ss;
  ss.r_cap = page_cap(fc);
  for (int r = 0; r <= ss.r_cap; ++r) ss.pages.push_back(build_page(machine, r));
  ss.stabilized_at = ss.r_cap;
  auto last = ss.pages.back().dims();
  for (int r = ss.r_cap; r >= 0; --r) {
    if (ss.pages[static_cast<std::size_t>(r)].dims() != last) break;
    ss.stabilized_at = r;
  }
  return ss;
}

ConvergenceReport check_convergence(const FilteredComplex& fc) {
  return check_convergence(fc, compute_pages(fc));
}

ConvergenceReport check_convergence(const FilteredComplex& fc, const SpectralSequence& ss) {
  ConvergenceReport rep;
  rep.abutment = fc.cx.cohomology_dims();
  const SpectralPage& limit = ss.infinity();
  for (int n = fc.cx.lo(); n <= fc.cx.hi(); ++n) {
    std::int64_t total = 0;
    for (int p = 0; p <= fc.filt_len; ++p) total += limit.dim(p, n - p);
    rep.limit_totals[n] = total;
  }
  rep.converges = true;
  for (auto& [n, h] : rep.abutment)
    if (rep.limit_totals.at(n) != h) rep.converges = false;
  return rep;
}

SpectralMapReport map_of_spectral_sequences(const FilteredComplex& source,
                                            const FilteredComplex& target,
                                            const std::vector<RationalMatrix>& phi) {
  require_valid_filtration(source);
  require_valid_filtration(target);
  if (source.cx.lo() != target.cx.lo() || source.cx.hi() != target.cx.hi())
    throw std::invalid_argument("source and target complexes cover different degree ranges");
  const int lo = source.cx.lo(), hi = source.cx.hi();
  if (phi.size() != static_cast<std::size_t>(hi - lo + 1))
    throw std::invalid_argument("expected one matrix per complex degree");
  for (int n = lo; n <= hi; ++n) {
    const auto& f = phi[static_cast<std::size_t>(n - lo)];
    if (f.rows() != target.cx.dim(n) || f.cols() != source.cx.dim(n))
      throw std::invalid_argument("map at degree " + fmt(n) + " has wrong shape");
  }
  auto phi_at = [&](int n) {
    if (n < lo || n > hi) return RationalMatrix(target.cx.dim(n), source.cx.dim(n));
    return phi[static_cast<std::size_t>(n - lo)];
  };

  SpectralMapReport rep;
  rep.chain_map = true;
  rep.filtration_preserved = true;
  for (int n = lo; n <= hi; ++n) {
    if (phi_at(n + 1) * source.cx.differential(n) != target.cx.differential(n) * phi_at(n))
      rep.chain_map = false;
    const int pmax = std::max(source.filt_len, target.filt_len);
    for (int p = 0; p <= pmax; ++p)
      if (!subspace_contains(target.level(p, n), image_basis(phi_at(n) * source.level(p, n))))
        rep.filtration_preserved = false;
  }
  if (!rep.chain_map || !rep.filtration_preserved) return rep;

  PageMachine ms(source), mt(target);
  const int cap = std::max(page_cap(source), page_cap(target));
  const int plen = std::max(source.filt_len, target.filt_len);
  rep.pages.resize(static_cast<std::size_t>(cap + 1));
  rep.e1_iso = true;
  rep.limit_iso = true;
  for (int r = 0; r <= cap; ++r) {
    auto& page = rep.pages[static_cast<std::size_t>(r)];
    for (int p = 0; p <= plen; ++p)
      for (int n = lo; n <= hi; ++n) {
        const int q = n - p;
        const Subquotient& es = ms.entry(r, p, q);
        const Subquotient& et = mt.entry(r, p, q);
        RationalMatrix induced = induced_map(es, et, phi_at(n));
        const bool iso = es.dim() == et.dim() && rank(induced) == es.dim();
        if (r == 1 && !iso) rep.e1_iso = false;
        if (r == cap && !iso) rep.limit_iso = false;
        page.emplace(std::make_pair(p, q), std::move(induced));
      }
  }
  return rep;
}

DescentReport descent_ss(const Arrangement& a, int degree) {
  CechSlice slice = build_cech_slice(a, degree);
  const int n = slice.cx.hi();

  // Cover complex: positions 1..N of the slice, reindexed to 0..N-1.
  std::vector<std::int64_t> dims;
  for (int p = 1; p <= n; ++p) dims.push_back(slice.cx.dim(p));
  ComplexOfSpaces cover(0, dims);
  for (int p = 1; p < n; ++p) cover.set_differential(p - 1, slice.cx.differential(p));

  FilteredComplex fc;
  fc.filt_len = n;
  fc.fbasis.assign(static_cast<std::size_t>(n + 1), {});
  for (int lvl = 0; lvl <= n; ++lvl)
    for (int p = 0; p < n; ++p)
      fc.fbasis[static_cast<std::size_t>(lvl)].push_back(
          lvl <= p ? RationalMatrix::identity(cover.dim(p)) : RationalMatrix(cover.dim(p), 0));
  fc.cx = std::move(cover);

  DescentReport rep;
  rep.degree = degree;
  rep.ss = compute_pages(fc);
  const SpectralPage& e1 = rep.ss.page(std::min(1, rep.ss.r_cap));
  rep.single_row = true;
  for (const auto& [pos, d] : e1.dims())
    if (pos.second != 0) rep.single_row = false;
  for (int p = 0; p < n; ++p) rep.e1_row.push_back(e1.dim(p, 0));
  rep.degenerate_at_e1 = e1.dims() == rep.ss.infinity().dims();

  rep.abutment = fc.cx.cohomology_dims();
  int total = 0;
  for (const auto& d : a.divisors) total += d.poly.total_degree();
  rep.expected_h0 =
      slice_dimension(a.nvars(), degree) - slice_dimension(a.nvars(), degree - total);
  rep.abutment_ok = true;
  for (auto& [deg, h] : rep.abutment) {
    if (deg == 0 && h != rep.expected_h0) rep.abutment_ok = false;
    if (deg > 0 && h != 0) rep.abutment_ok = false;
  }
  return rep;
}

}  // namespace stratalab
