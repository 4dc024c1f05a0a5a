// Command line front end: scenario ingestion, command dispatch, report
// emission.  Exit codes: 0 pass-verdict, 1 fail-verdict, 2 input error.

#include "stratalab/cech.hpp"
#include "stratalab/dualcx.hpp"
#include "stratalab/report.hpp"
#include "stratalab/scenario.hpp"
#include "stratalab/specseq.hpp"
#include "stratalab/threads.hpp"
#include "stratalab/toricoh.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace {

using stratalab::Json;

Json table_json(const stratalab::CohomologyTable& t, const std::string& key_column) {
  Json cols = Json::array();
  cols.push_back(key_column);
  for (const auto& c : t.columns) cols.push_back(c);
  Json rows = Json::array();
  for (const auto& r : t.rows) {
    Json row = Json::array();
    row.push_back(r.d);
    for (auto v : r.values) row.push_back(v);
    rows.push_back(std::move(row));
  }
  Json out;
  out["columns"] = std::move(cols);
  out["rows"] = std::move(rows);
  return out;
}

/// Keys of an int-keyed map become JSON object keys in numeric order.
template <typename V>
Json int_map_json(const std::map<int, V>& m) {
  Json out = Json::object();
  for (const auto& [k, v] : m) out[std::to_string(k)] = v;
  return out;
}

struct Output {
  std::string format = "json";
  std::string path;
};

int emit(const Json& rep, const Output& out, int exit_code) {
  std::string text = stratalab::render_report(rep, out.format);
  if (out.path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out.path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write output file: " + out.path);
    f << text;
  }
  return exit_code;
}

int run_dualcx(const std::string& path, const Output& out) {
  stratalab::Scenario sc = stratalab::load_scenario(path);
  stratalab::DualComplex dc = stratalab::dual_complex(sc.arrangement);
  Json rep = stratalab::report_header("dualcx", sc.raw);
  Json cells = Json::object();
  Json faces = Json::object();
  for (int k = 0; k <= dc.ss.dim_bound; ++k) {
    cells[std::to_string(k)] = dc.ss.cells[static_cast<std::size_t>(k)];
    if (k == 0) continue;
    for (std::size_t i = 0; i < dc.ss.cells[static_cast<std::size_t>(k)].size(); ++i) {
      Json fs = Json::array();
      for (int j = 0; j <= k; ++j) fs.push_back(dc.ss.face_id(k, static_cast<int>(i), j));
      faces[dc.ss.cells[static_cast<std::size_t>(k)][i]] = std::move(fs);
    }
  }
  rep["cells"] = std::move(cells);
  rep["faces"] = std::move(faces);
  if (sc.arrangement.strata_mode == stratalab::StrataMode::kExplicit) {
    Json strata = Json::object();
    for (const auto& [sid, cid] : dc.cell_of_stratum) strata[sid] = cid;
    rep["cell_of_stratum"] = std::move(strata);
  }
  return emit(rep, out, 0);
}

int run_thrifty(const std::string& src_path, const std::string& tgt_path,
                const std::string& map_path, const Output& out) {
  stratalab::Scenario src = stratalab::load_scenario(src_path);
  stratalab::Scenario tgt = stratalab::load_scenario(tgt_path);
  stratalab::StratumCorrespondence corr;
  std::string map_raw;
  if (!map_path.empty()) {
    stratalab::CorrespondenceInput ci = stratalab::load_correspondence(map_path);
    corr = std::move(ci.corr);
    map_raw = std::move(ci.raw);
  } else {
    for (const auto& d : src.arrangement.divisors) corr.label_map[d.label] = d.label;
  }
  stratalab::DualComplex a = stratalab::dual_complex(src.arrangement);
  stratalab::DualComplex b = stratalab::dual_complex(tgt.arrangement);
  stratalab::ThriftyReport tr = stratalab::check_thrifty(a.ss, b.ss, corr);

  Json rep = stratalab::report_header("thrifty", src.raw + "\n" + tgt.raw + "\n" + map_raw);
  rep["verdict"] = tr.thrifty ? "thrifty" : "not_thrifty";
  if (tr.witness) {
    Json w;
    w["dim"] = tr.witness->dim;
    w["side"] = tr.witness->side;
    w["cell"] = tr.witness->cell;
    w["reason"] = tr.witness->reason;
    rep["witness"] = std::move(w);
  } else {
    rep["witness"] = nullptr;
  }
  if (tr.iso) {
    Json iso = Json::object();
    for (int k = 0; k <= tr.relabeled_source.dim_bound; ++k) {
      const auto& row = tr.iso->maps[static_cast<std::size_t>(k)];
      for (std::size_t i = 0; i < row.size(); ++i)
        iso[tr.relabeled_source.cells[static_cast<std::size_t>(k)][i]] =
            b.ss.cells[static_cast<std::size_t>(k)][static_cast<std::size_t>(row[i])];
    }
    rep["iso"] = std::move(iso);
  } else {
    rep["iso"] = nullptr;
  }
  return emit(rep, out, tr.thrifty ? 0 : 1);
}

int run_cech_verify(const std::string& path, int max_degree, const Output& out) {
  stratalab::Scenario sc = stratalab::load_scenario(path);
  int d_max = max_degree >= 0 ? max_degree : sc.d_max;
  stratalab::RegSeqReport rs = stratalab::check_regular_sequence(sc.arrangement, d_max);

  const int n = static_cast<int>(sc.arrangement.divisors.size());
  std::vector<std::map<int, std::int64_t>> coh(static_cast<std::size_t>(d_max) + 1);
  stratalab::parallel_for(d_max + 1, [&](std::int64_t di) {
    stratalab::CechSlice slice =
        stratalab::build_cech_slice(sc.arrangement, static_cast<int>(di), false);
    coh[static_cast<std::size_t>(di)] = stratalab::verify_exactness(slice).cohomology;
  });

  bool all_zero = true;
  Json cols = Json::array();
  cols.push_back("d");
  for (int p = -1; p <= n; ++p) cols.push_back("H^" + std::to_string(p));
  Json rows = Json::array();
  for (int d = 0; d <= d_max; ++d) {
    Json row = Json::array();
    row.push_back(d);
    for (int p = -1; p <= n; ++p) {
      std::int64_t v = coh[static_cast<std::size_t>(d)].at(p);
      if (v != 0) all_zero = false;
      row.push_back(v);
    }
    rows.push_back(std::move(row));
  }

  Json rep = stratalab::report_header("cech-verify", sc.raw);
  rep["max_degree"] = d_max;
  rep["regular_sequence"] = rs.regular;
  Json table;
  table["columns"] = std::move(cols);
  table["rows"] = std::move(rows);
  rep["cohomology"] = std::move(table);
  bool pass = rs.regular && all_zero;
  rep["verdict"] = pass ? "pass" : "fail";
  return emit(rep, out, pass ? 0 : 1);
}

int run_koszul_verify(const std::string& path, int max_degree, const Output& out) {
  stratalab::Scenario sc = stratalab::load_scenario(path);
  int d_max = max_degree >= 0 ? max_degree : sc.d_max;
  stratalab::KoszulReport kr = stratalab::verify_koszul_conjecture(sc.arrangement, d_max);

  Json rep = stratalab::report_header("koszul-verify", sc.raw);
  rep["max_degree"] = d_max;
  rep["verdict"] = kr.ok ? "pass" : "fail";
  Json findings = Json::array();
  for (const auto& f : kr.findings) {
    Json j;
    j["degree"] = f.degree;
    j["kind"] = f.kind;
    j["p"] = f.p;
    j["q"] = f.q;
    j["dim"] = f.dim;
    findings.push_back(std::move(j));
  }
  rep["findings"] = std::move(findings);
  Json degrees = Json::array();
  for (const auto& s : kr.degrees) {
    Json j;
    j["degree"] = s.degree;
    j["total_cohomology"] = int_map_json(s.total);
    j["corner_dim"] = s.corner;
    degrees.push_back(std::move(j));
  }
  rep["degrees"] = std::move(degrees);
  return emit(rep, out, kr.ok ? 0 : 1);
}

int run_regseq(const std::string& path, int max_degree, const Output& out) {
  stratalab::Scenario sc = stratalab::load_scenario(path);
  int d_max = max_degree >= 0 ? max_degree : sc.d_max;
  stratalab::RegSeqReport rs = stratalab::check_regular_sequence(sc.arrangement, d_max);

  Json rep = stratalab::report_header("regseq", sc.raw);
  rep["max_degree"] = d_max;
  rep["verdict"] = rs.regular ? "regular" : "not_regular";
  Json ws = Json::array();
  for (const auto& w : rs.witnesses) {
    Json j;
    j["degree"] = w.degree;
    j["position"] = w.q;
    j["dim"] = w.dim;
    ws.push_back(std::move(j));
  }
  rep["witnesses"] = std::move(ws);
  return emit(rep, out, rs.regular ? 0 : 1);
}

Json pages_json(const stratalab::SpectralSequence& ss) {
  Json pages = Json::array();
  for (const auto& page : ss.pages) {
    Json pj;
    pj["r"] = page.r;
    Json entries = Json::array();
    for (const auto& [pq, dim] : page.dims()) {
      Json e;
      e["p"] = pq.first;
      e["q"] = pq.second;
      e["dim"] = dim;
      entries.push_back(std::move(e));
    }
    pj["entries"] = std::move(entries);
    Json diffs = Json::array();
    for (const auto& [pq, m] : page.differentials) {
      std::int64_t rk = stratalab::rank(m);
      if (rk == 0) continue;
      Json e;
      e["p"] = pq.first;
      e["q"] = pq.second;
      e["rank"] = rk;
      diffs.push_back(std::move(e));
    }
    pj["differentials"] = std::move(diffs);
    pages.push_back(std::move(pj));
  }
  return pages;
}

int run_specseq(const std::string& path, int max_degree, bool dump_pages, const Output& out) {
  stratalab::Scenario sc = stratalab::load_scenario(path);
  int d_max = max_degree >= 0 ? max_degree : sc.d_max;

  std::vector<stratalab::DescentReport> reports(static_cast<std::size_t>(d_max) + 1);
  stratalab::parallel_for(d_max + 1, [&](std::int64_t di) {
    reports[static_cast<std::size_t>(di)] =
        stratalab::descent_ss(sc.arrangement, static_cast<int>(di));
  });

  bool pass = true;
  Json degrees = Json::array();
  for (const auto& dr : reports) {
    Json j;
    j["degree"] = dr.degree;
    j["e1_row"] = dr.e1_row;
    j["single_row"] = dr.single_row;
    j["degenerate_at_e1"] = dr.degenerate_at_e1;
    j["expected_h0"] = dr.expected_h0;
    j["abutment"] = int_map_json(dr.abutment);
    j["abutment_ok"] = dr.abutment_ok;
    j["stabilized_at"] = dr.ss.stabilized_at;
    if (dump_pages) j["pages"] = pages_json(dr.ss);
    if (!dr.abutment_ok) pass = false;
    degrees.push_back(std::move(j));
  }

  Json rep = stratalab::report_header("specseq", sc.raw);
  rep["max_degree"] = d_max;
  rep["verdict"] = pass ? "pass" : "fail";
  rep["degrees"] = std::move(degrees);
  return emit(rep, out, pass ? 0 : 1);
}

std::pair<int, int> parse_bidegree(const std::string& s, const char* what) {
  auto comma = s.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument(std::string(what) + " must be \"a,b\"");
  try {
    return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string(what) + " must be \"a,b\" with integers");
  }
}

int run_example(const std::string& name, int max_degree, const std::string& polarization,
                const std::string& boundary, const Output& out) {
  if (name == "blp-2lines") {
    int d_max = max_degree >= 0 ? max_degree : 10;
    stratalab::CohomologyTable t = stratalab::blp2lines_table(d_max);
    Json rep = stratalab::report_header(
        "examples run", "example=blp-2lines max_degree=" + std::to_string(d_max));
    rep["example"] = name;
    rep["max_degree"] = d_max;
    rep["table"] = table_json(t, "d");
    rep["total_h0"] = t.column_total(0);
    rep["total_h1"] = t.column_total(1);
    bool pass = t.column_total(1) == 1;
    rep["verdict"] = pass ? "pass" : "fail";
    return emit(rep, out, pass ? 0 : 1);
  }
  if (name == "pn-blowup") {
    int n_max = max_degree >= 0 ? max_degree : 5;
    if (n_max < 2) throw std::invalid_argument("pn-blowup needs max degree >= 2");
    stratalab::CohomologyTable t = stratalab::pn_blowup_table(n_max);
    Json rep = stratalab::report_header("examples run",
                                        "example=pn-blowup n_max=" + std::to_string(n_max));
    rep["example"] = name;
    rep["n_max"] = n_max;
    rep["table"] = table_json(t, "n");
    bool pass = true;
    for (const auto& r : t.rows)
      if (r.values[0] != 1) pass = false;
    rep["verdict"] = pass ? "pass" : "fail";
    return emit(rep, out, pass ? 0 : 1);
  }
  if (name == "atiyah") {
    int d_max = max_degree >= 0 ? max_degree : 10;
    stratalab::CohomologyTable t = stratalab::atiyah_table(d_max);
    Json rep = stratalab::report_header("examples run",
                                        "example=atiyah max_degree=" + std::to_string(d_max));
    rep["example"] = name;
    rep["max_degree"] = d_max;
    rep["table"] = table_json(t, "d");
    rep["total_h1"] = t.column_total(1);
    bool pass = t.column_total(1) == 0;
    rep["verdict"] = pass ? "pass" : "fail";
    return emit(rep, out, pass ? 0 : 1);
  }
  if (name == "cone-rationality") {
    int d_max = max_degree >= 0 ? max_degree : 8;
    std::pair<int, int> L = parse_bidegree(polarization, "--polarization");
    std::pair<int, int> B = parse_bidegree(boundary, "--boundary");
    stratalab::ConeRationalityReport r = stratalab::cone_rationality_check(L, B, d_max);
    Json rep = stratalab::report_header(
        "examples run", "example=cone-rationality polarization=" + polarization +
                            " boundary=" + boundary + " max_degree=" + std::to_string(d_max));
    rep["example"] = name;
    rep["polarization"] = Json::array({L.first, L.second});
    rep["boundary"] = Json::array({B.first, B.second});
    rep["max_degree"] = d_max;
    rep["table"] = table_json(r.table, "d");
    Json fails = Json::array();
    for (const auto& f : r.failures) {
      Json j;
      j["d"] = f.d;
      j["i"] = f.i;
      j["dim"] = f.dim;
      fails.push_back(std::move(j));
    }
    rep["failures"] = std::move(fails);
    rep["verdict"] = r.pass ? "pass" : "fail";
    return emit(rep, out, r.pass ? 0 : 1);
  }
  throw std::invalid_argument("unknown example: " + name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic toolkit for divisor arrangements: dual complexes and"
               " thriftiness verdicts, graded resolution checks, Koszul double complexes,"
               " spectral sequences, and worked cohomology examples."};
  app.set_version_flag("--version", std::string(stratalab::kToolName) + " " +
                                        stratalab::kToolVersion);
  app.require_subcommand(1);

  Output out;
  app.add_option("--format", out.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_option("-o,--output", out.path, "Write the report to a file instead of stdout");

  std::string dual_path;
  auto* c_dual = app.add_subcommand("dualcx", "Dual complex of the arrangement");
  c_dual->add_option("scenario", dual_path, "Scenario file")->required();
  c_dual->fallthrough();

  std::string th_src, th_tgt, th_map;
  auto* c_thrifty = app.add_subcommand("thrifty", "Thriftiness comparison of two arrangements");
  c_thrifty->add_option("source", th_src, "Source scenario file")->required();
  c_thrifty->add_option("target", th_tgt, "Target scenario file")->required();
  c_thrifty->add_option("--map", th_map,
                        "Correspondence file (defaults to the identity label map)");
  c_thrifty->fallthrough();

  int max_degree = -1;
  std::string cech_path;
  auto* c_cech = app.add_subcommand("cech-verify", "Exactness of the resolution slices");
  c_cech->add_option("scenario", cech_path, "Scenario file")->required();
  c_cech->add_option("--max-degree", max_degree, "Largest slice degree (default: scenario d_max)");
  c_cech->fallthrough();

  std::string koszul_path;
  auto* c_koszul = app.add_subcommand("koszul-verify", "Koszul double complex desk check");
  c_koszul->add_option("scenario", koszul_path, "Scenario file")->required();
  c_koszul->add_option("--max-degree", max_degree,
                       "Largest slice degree (default: scenario d_max)");
  c_koszul->fallthrough();

  std::string regseq_path;
  auto* c_regseq = app.add_subcommand("regseq", "Regular sequence certificate");
  c_regseq->add_option("scenario", regseq_path, "Scenario file")->required();
  c_regseq->add_option("--max-degree", max_degree,
                       "Largest slice degree (default: scenario d_max)");
  c_regseq->fallthrough();

  std::string specseq_path;
  bool dump_pages = false;
  auto* c_specseq = app.add_subcommand("specseq", "Descent spectral sequence of the cover");
  c_specseq->add_option("scenario", specseq_path, "Scenario file")->required();
  c_specseq->add_option("--max-degree", max_degree,
                        "Largest slice degree (default: scenario d_max)");
  c_specseq->add_flag("--pages", dump_pages, "Dump every page of every degree");
  c_specseq->fallthrough();

  auto* c_examples = app.add_subcommand("examples", "Worked cohomology examples");
  c_examples->require_subcommand(1);
  c_examples->fallthrough();
  std::string example_name;
  std::string polarization = "1,1";
  std::string boundary = "2,1";
  auto* c_run = c_examples->add_subcommand("run", "Run a named example");
  c_run->add_option("name", example_name, "Example name")
      ->required()
      ->check(CLI::IsMember({"blp-2lines", "pn-blowup", "atiyah", "cone-rationality"}));
  c_run->add_option("--max-degree", max_degree,
                    "Degree bound (blp-2lines, atiyah, cone-rationality) or largest n"
                    " (pn-blowup)");
  c_run->add_option("--polarization", polarization, "Cone polarization bidegree a,b")
      ->capture_default_str();
  c_run->add_option("--boundary", boundary, "Cone boundary bidegree a,b")
      ->capture_default_str();
  c_run->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_dual->parsed()) return run_dualcx(dual_path, out);
    if (c_thrifty->parsed()) return run_thrifty(th_src, th_tgt, th_map, out);
    if (c_cech->parsed()) return run_cech_verify(cech_path, max_degree, out);
    if (c_koszul->parsed()) return run_koszul_verify(koszul_path, max_degree, out);
    if (c_regseq->parsed()) return run_regseq(regseq_path, max_degree, out);
    if (c_specseq->parsed()) return run_specseq(specseq_path, max_degree, dump_pages, out);
    if (c_examples->parsed())
      return run_example(example_name, max_degree, polarization, boundary, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no command\n";
  return 2;
}
