#include "stratalab/scenario.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace stratalab {

namespace {

using Json = nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument("scenario: " + what); }

const Json& field(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing key \"") + key + "\"");
  return *it;
}

std::string string_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_string()) fail(std::string("key \"") + key + "\" must be a string");
  return v.get<std::string>();
}

std::vector<std::string> string_list(const Json& v, const std::string& where) {
  if (!v.is_array()) fail(where + " must be an array of strings");
  std::vector<std::string> out;
  for (const Json& e : v) {
    if (!e.is_string()) fail(where + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Json j = parse_json(text, "scenario");
  if (!j.is_object()) fail("top level must be an object");

  Scenario sc;
  sc.raw = text;
  sc.arrangement.variables = string_list(field(j, "variables"), "\"variables\"");

  const Json& divs = field(j, "divisors");
  if (!divs.is_array()) fail("\"divisors\" must be an array");
  for (const Json& d : divs) {
    if (!d.is_object()) fail("each divisor must be an object with \"label\" and \"poly\"");
    Divisor div;
    div.label = string_field(d, "label");
    try {
      div.poly = parse_polynomial(string_field(d, "poly"), sc.arrangement.variables);
    } catch (const std::invalid_argument& e) {
      fail("divisor \"" + div.label + "\": " + e.what());
    }
    sc.arrangement.divisors.push_back(std::move(div));
  }

  std::string mode = string_field(j, "strata_mode");
  if (mode == "auto") {
    sc.arrangement.strata_mode = StrataMode::kAuto;
    if (j.contains("strata")) fail("\"strata\" is only allowed with strata_mode \"explicit\"");
  } else if (mode == "explicit") {
    sc.arrangement.strata_mode = StrataMode::kExplicit;
    const Json& strata = field(j, "strata");
    if (!strata.is_array()) fail("\"strata\" must be an array");
    for (const Json& s : strata) {
      if (!s.is_object()) fail("each stratum must be an object");
      StratumSpec spec;
      spec.id = string_field(s, "id");
      spec.divisors = string_list(field(s, "divisors"), "stratum \"" + spec.id + "\" divisors");
      if (s.contains("contained_in"))
        spec.contained_in =
            string_list(s.at("contained_in"), "stratum \"" + spec.id + "\" contained_in");
      sc.arrangement.strata.push_back(std::move(spec));
    }
  } else {
    fail("\"strata_mode\" must be \"auto\" or \"explicit\"");
  }

  const Json& dm = field(j, "d_max");
  if (!dm.is_number_integer() || dm.get<int>() < 0) fail("\"d_max\" must be a non-negative integer");
  sc.d_max = dm.get<int>();

  require_valid(sc.arrangement);
  return sc;
}

Scenario load_scenario(const std::string& path) { return parse_scenario(read_file(path)); }

CorrespondenceInput parse_correspondence(const std::string& text) {
  Json j = parse_json(text, "correspondence");
  if (!j.is_object()) throw std::invalid_argument("correspondence: top level must be an object");

  CorrespondenceInput in;
  in.raw = text;
  auto lit = j.find("labels");
  if (lit == j.end()) throw std::invalid_argument("correspondence: missing key \"labels\"");
  const Json& labels = *lit;
  if (!labels.is_object())
    throw std::invalid_argument("correspondence: \"labels\" must be an object");
  for (auto it = labels.begin(); it != labels.end(); ++it) {
    if (!it.value().is_string())
      throw std::invalid_argument("correspondence: label values must be strings");
    in.corr.label_map[it.key()] = it.value().get<std::string>();
  }
  if (j.contains("cells")) {
    const Json& cells = j.at("cells");
    if (!cells.is_object())
      throw std::invalid_argument("correspondence: \"cells\" must be an object");
    std::map<std::string, std::string> cm;
    for (auto it = cells.begin(); it != cells.end(); ++it) {
      if (!it.value().is_string())
        throw std::invalid_argument("correspondence: cell values must be strings");
      cm[it.key()] = it.value().get<std::string>();
    }
    in.corr.cell_map = std::move(cm);
  }
  return in;
}

CorrespondenceInput load_correspondence(const std::string& path) {
  return parse_correspondence(read_file(path));
}

}  // namespace stratalab
