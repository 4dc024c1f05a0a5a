#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stratalab/specseq.hpp"
#include "support/filtgen.hpp"

#include <string>
#include <vector>

using namespace stratalab;
namespace tt = stratalab::testing;

namespace {

Arrangement coords(std::vector<std::string> vars) {
  Arrangement a;
  a.variables = vars;
  for (std::size_t i = 0; i < vars.size(); ++i)
    a.divisors.push_back({vars[i], Polynomial::variable(static_cast<int>(vars.size()),
                                                        static_cast<int>(i))});
  return a;
}

}  // namespace

TEST_CASE("position filtration of the full slice: pages and abutment") {
  auto fc = truncation_filtration(build_cech_slice(coords({"x", "y"}), 2));
  auto ss = compute_pages(fc);

  CHECK(ss.page(1).dim(0, 0) == 3);
  CHECK(ss.page(1).dim(1, 0) == 2);
  CHECK(ss.page(1).dim(2, 0) == 0);
  // Only the ideal slice survives, in the leftmost column.
  CHECK(ss.infinity().dim(0, 0) == 1);
  CHECK(ss.infinity().dims().size() == 1);
  CHECK(ss.stabilized_at == 2);

  auto conv = check_convergence(fc, ss);
  CHECK(conv.converges);
  CHECK(conv.abutment.at(0) == 1);
  CHECK(conv.abutment.at(1) == 0);
  CHECK(conv.abutment.at(2) == 0);
}

TEST_CASE("cover spectral sequence reports for pinned arrangements") {
  auto r2 = descent_ss(coords({"x", "y"}), 2);
  CHECK(r2.e1_row == std::vector<std::int64_t>{2, 0});
  CHECK(r2.single_row);
  CHECK(r2.degenerate_at_e1);
  CHECK(r2.expected_h0 == 2);
  CHECK(r2.abutment.at(0) == 2);
  CHECK(r2.abutment_ok);

  auto r3 = descent_ss(coords({"x", "y", "z"}), 3);
  CHECK(r3.e1_row == std::vector<std::int64_t>{12, 3, 0});
  CHECK(r3.single_row);
  CHECK_FALSE(r3.degenerate_at_e1);
  CHECK(r3.expected_h0 == 9);
  CHECK(r3.abutment.at(0) == 9);
  CHECK(r3.abutment.at(1) == 0);
  CHECK(r3.abutment_ok);
}

TEST_CASE("a differential can first appear on page two") {
  // One generator at level 0 mapping into a level-2 target: pages 1 and 2
  // have identical dimensions, yet d_2 wipes everything out.
  FilteredComplex fc;
  fc.cx = ComplexOfSpaces(0, {1, 1});
  fc.cx.set_differential(0, RationalMatrix::identity(1));
  fc.filt_len = 3;
  RationalMatrix full = RationalMatrix::identity(1);
  RationalMatrix none(1, 0);
  fc.fbasis = {{full, full}, {none, full}, {none, full}, {none, none}};
  REQUIRE(fc.validate().empty());

  auto ss = compute_pages(fc);
  CHECK(ss.page(1).dims() == ss.page(2).dims());
  CHECK(ss.page(1).dim(0, 0) == 1);
  CHECK(ss.page(1).dim(2, -1) == 1);
  CHECK(rank(ss.page(2).differential(0, 0)) == 1);
  CHECK(ss.page(3).dims().empty());
  CHECK(ss.infinity().dims().empty());
  CHECK(ss.stabilized_at == 3);
  CHECK(check_convergence(fc, ss).converges);
}

TEST_CASE("filtration validation rejects a non-preserving differential") {
  FilteredComplex fc;
  fc.cx = ComplexOfSpaces(0, {1, 1});
  fc.cx.set_differential(0, RationalMatrix::identity(1));
  fc.filt_len = 2;
  RationalMatrix full = RationalMatrix::identity(1);
  RationalMatrix none(1, 0);
  // x sits in F^1 but dx only in F^0.
  fc.fbasis = {{full, full}, {full, none}, {none, none}};
  auto findings = fc.validate();
  REQUIRE(!findings.empty());
  CHECK(findings.front().find("differential leaves level") != std::string::npos);
  CHECK_THROWS_AS(compute_pages(fc), std::invalid_argument);
}

TEST_CASE("seeded filtered complexes match their interval oracle") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    tt::Rng rng(seed);
    const int lo = 0, hi = static_cast<int>(rng.i64(1, 3));
    const int plen = static_cast<int>(rng.i64(1, 4));
    auto spec = tt::random_filt_spec(rng, lo, hi, plen);
    auto fc = tt::realize(spec, tt::random_conjugators(rng, spec));
    REQUIRE(fc.validate().empty());

    auto ss = compute_pages(fc);
    for (int r = 0; r <= ss.r_cap; ++r)
      CHECK(ss.page(r).dims() == tt::expected_page(spec, r));

    auto conv = check_convergence(fc, ss);
    CHECK(conv.converges);
    CHECK(conv.abutment == tt::expected_cohomology(spec));
  }
}

TEST_CASE("page differentials square to zero and produce the next page") {
  for (std::uint64_t seed = 31; seed <= 42; ++seed) {
    tt::Rng rng(seed);
    auto spec = tt::random_filt_spec(rng, 0, 3, 3);
    auto fc = tt::realize(spec, tt::random_conjugators(rng, spec));
    auto ss = compute_pages(fc);
    for (int r = 0; r < ss.r_cap; ++r) {
      const auto& page = ss.page(r);
      for (const auto& [pos, d1] : page.differentials) {
        auto [p, q] = pos;
        RationalMatrix d2 = page.differential(p + r, q - r + 1);
        CHECK((d2 * d1).is_zero());
        std::int64_t incoming = rank(page.differential(p - r, q + r - 1));
        std::int64_t kernel = d1.cols() - rank(d1);
        CHECK(ss.page(r + 1).dim(p, q) == kernel - incoming);
      }
    }
  }
}

TEST_CASE("maps of filtered complexes act on every page") {
  for (std::uint64_t seed = 50; seed <= 59; ++seed) {
    tt::Rng rng(seed);
    auto base = tt::random_filt_spec(rng, 0, 2, 3);
    if (base.harmonic.empty()) base.harmonic.push_back({1, 1});
    auto full = base;
    tt::add_acyclic(full, rng, static_cast<int>(rng.i64(1, 3)));

    auto gs = tt::random_conjugators(rng, base);
    auto gt = tt::random_conjugators(rng, full);
    auto fs = tt::realize(base, gs);
    auto ft = tt::realize(full, gt);
    auto incl = tt::inclusion_maps(base, full);
    std::vector<RationalMatrix> phi;
    for (std::size_t i = 0; i < incl.size(); ++i)
      phi.push_back(gt[i] * incl[i] * tt::inverse(gs[i]));

    auto rep = map_of_spectral_sequences(fs, ft, phi);
    CHECK(rep.filtration_preserved);
    CHECK(rep.chain_map);
    CHECK(rep.e1_iso);
    CHECK(rep.limit_iso);

    // Killing one surviving generator breaks both isomorphism flags.
    std::string victim;
    for (auto& e : tt::spec_basis(base, base.harmonic[0].first))
      if (e.tag[0] == 'h') victim = e.tag;
    const int vdeg = base.harmonic[0].first;
    std::vector<RationalMatrix> psi = phi;
    {
      auto b = tt::spec_basis(base, vdeg);
      RationalMatrix proj = RationalMatrix::identity(static_cast<std::int64_t>(b.size()));
      for (std::size_t k = 0; k < b.size(); ++k)
        if (b[k].tag == victim) proj.set(static_cast<std::int64_t>(k),
                                         static_cast<std::int64_t>(k), Rational(0));
      std::size_t i = static_cast<std::size_t>(vdeg - base.lo);
      psi[i] = gt[i] * incl[i] * proj * tt::inverse(gs[i]);
    }
    auto bad = map_of_spectral_sequences(fs, ft, psi);
    CHECK(bad.filtration_preserved);
    CHECK(bad.chain_map);
    CHECK_FALSE(bad.e1_iso);
    CHECK_FALSE(bad.limit_iso);
  }
}

TEST_CASE("induced page maps compose") {
  tt::Rng rng(77);
  auto a = tt::random_filt_spec(rng, 0, 2, 3);
  auto b = a;
  tt::add_acyclic(b, rng, 2);
  auto c = b;
  tt::add_acyclic(c, rng, 1);

  auto ga = tt::random_conjugators(rng, a);
  auto gb = tt::random_conjugators(rng, b);
  auto gc = tt::random_conjugators(rng, c);
  auto fa = tt::realize(a, ga), fb = tt::realize(b, gb), fc = tt::realize(c, gc);

  auto iab = tt::inclusion_maps(a, b), ibc = tt::inclusion_maps(b, c);
  std::vector<RationalMatrix> phi, psi, comp;
  for (std::size_t i = 0; i < iab.size(); ++i) {
    phi.push_back(gb[i] * iab[i] * tt::inverse(ga[i]));
    psi.push_back(gc[i] * ibc[i] * tt::inverse(gb[i]));
    comp.push_back(psi.back() * phi.back());
  }
  auto rab = map_of_spectral_sequences(fa, fb, phi);
  auto rbc = map_of_spectral_sequences(fb, fc, psi);
  auto rac = map_of_spectral_sequences(fa, fc, comp);
  REQUIRE(rab.chain_map);
  REQUIRE(rbc.chain_map);
  REQUIRE(rac.chain_map);
  const std::size_t rmax = std::min({rab.pages.size(), rbc.pages.size(), rac.pages.size()});
  for (std::size_t r = 0; r < rmax; ++r)
    for (const auto& [pos, m] : rac.pages[r])
      CHECK(m == rbc.pages[r].at(pos) * rab.pages[r].at(pos));
}

TEST_CASE("map input validation") {
  tt::Rng rng(5);
  auto spec = tt::random_filt_spec(rng, 0, 1, 2);
  auto fc = tt::realize(spec, tt::identity_conjugators(spec));
  std::vector<RationalMatrix> wrong;
  CHECK_THROWS_AS(map_of_spectral_sequences(fc, fc, wrong), std::invalid_argument);
  wrong.assign(2, RationalMatrix(99, 99));
  CHECK_THROWS_AS(map_of_spectral_sequences(fc, fc, wrong), std::invalid_argument);
}
