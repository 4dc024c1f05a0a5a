#include "stratalab/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stratalab {

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string input_digest(std::string_view bytes) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                static_cast<unsigned long long>(fnv1a64(bytes)));
  return buf;
}

Json report_header(const std::string& command, std::string_view digest_source) {
  Json j;
  j["tool"] = kToolName;
  j["version"] = kToolVersion;
  j["command"] = command;
  j["input_digest"] = input_digest(digest_source);
  return j;
}

namespace {

bool is_scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_str(const Json& j) {
  return j.is_string() ? j.get<std::string>() : j.dump();
}

bool all_scalars(const Json& arr) {
  for (const Json& v : arr)
    if (!is_scalar(v)) return false;
  return true;
}

/// {"columns": [names], "rows": [[cells]]} and nothing else.
bool is_table(const Json& j) {
  if (!j.is_object() || j.size() != 2 || !j.contains("columns") || !j.contains("rows"))
    return false;
  const Json& cols = j.at("columns");
  const Json& rows = j.at("rows");
  if (!cols.is_array() || !rows.is_array() || cols.empty()) return false;
  for (const Json& c : cols)
    if (!c.is_string()) return false;
  for (const Json& r : rows) {
    if (!r.is_array() || r.size() != cols.size() || !all_scalars(r)) return false;
  }
  return true;
}

void pad_to(std::ostringstream& out, const std::string& s, std::size_t width) {
  for (std::size_t i = s.size(); i < width; ++i) out << ' ';
  out << s;
}

void render_table(const Json& t, int indent, std::ostringstream& out) {
  const Json& cols = t.at("columns");
  const Json& rows = t.at("rows");
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width;
  cells.emplace_back();
  for (const Json& c : cols) cells.back().push_back(c.get<std::string>());
  for (const Json& r : rows) {
    cells.emplace_back();
    for (const Json& v : r) cells.back().push_back(scalar_str(v));
  }
  width.assign(cells[0].size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::string ind(static_cast<std::size_t>(indent), ' ');
  for (std::size_t ri = 0; ri < cells.size(); ++ri) {
    out << ind;
    for (std::size_t i = 0; i < cells[ri].size(); ++i) {
      if (i) out << "  ";
      pad_to(out, cells[ri][i], width[i]);
    }
    out << '\n';
    if (ri == 0) {
      out << ind;
      for (std::size_t i = 0; i < width.size(); ++i) {
        if (i) out << "  ";
        out << std::string(width[i], '-');
      }
      out << '\n';
    }
  }
}

void render(const Json& j, int indent, std::ostringstream& out);

void render_keyed(const std::string& key, const Json& val, int indent, std::ostringstream& out) {
  std::string ind(static_cast<std::size_t>(indent), ' ');
  if (is_scalar(val)) {
    out << ind << key << ": " << scalar_str(val) << '\n';
  } else if (val.is_array() && all_scalars(val)) {
    out << ind << key << ": [";
    for (std::size_t i = 0; i < val.size(); ++i) {
      if (i) out << ", ";
      out << scalar_str(val[i]);
    }
    out << "]\n";
  } else if (val.empty()) {
    out << ind << key << ": " << (val.is_object() ? "{}" : "[]") << '\n';
  } else if (is_table(val)) {
    out << ind << key << ":\n";
    render_table(val, indent + 2, out);
  } else {
    out << ind << key << ":\n";
    render(val, indent + 2, out);
  }
}

void render(const Json& j, int indent, std::ostringstream& out) {
  std::string ind(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) render_keyed(it.key(), it.value(), indent, out);
  } else if (j.is_array()) {
    for (const Json& v : j) {
      if (is_scalar(v)) {
        out << ind << "- " << scalar_str(v) << '\n';
      } else {
        out << ind << "-\n";
        render(v, indent + 2, out);
      }
    }
  } else {
    out << ind << scalar_str(j) << '\n';
  }
}

}  // namespace

std::string render_report(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format != "text") throw std::invalid_argument("unknown format: " + format);
  std::ostringstream out;
  render(report, 0, out);
  return out.str();
}

}  // namespace stratalab
