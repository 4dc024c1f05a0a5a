#include "stratalab/arrangement.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace stratalab {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

}  // namespace

int Arrangement::divisor_index(const std::string& label) const {
  for (std::size_t i = 0; i < divisors.size(); ++i)
    if (divisors[i].label == label) return static_cast<int>(i);
  return -1;
}

std::vector<std::string> validate_arrangement(const Arrangement& a) {
  std::vector<std::string> errs;
  if (a.variables.empty() || a.variables.size() > 6)
    errs.push_back("variable count must be between 1 and 6");
  std::set<std::string> vnames;
  for (const auto& v : a.variables) {
    if (!valid_identifier(v)) errs.push_back("variable name '" + v + "' is not an identifier");
    if (!vnames.insert(v).second) errs.push_back("duplicate variable name '" + v + "'");
  }
  if (a.divisors.empty()) errs.push_back("arrangement has no divisors");

  std::set<std::string> labels;
  for (const auto& d : a.divisors) {
    if (d.label.empty() || d.label.find(',') != std::string::npos ||
        d.label.find(':') != std::string::npos)
      errs.push_back("divisor label '" + d.label + "' is empty or contains ',' or ':'");
    if (!labels.insert(d.label).second) errs.push_back("duplicate divisor label '" + d.label + "'");
    if (d.poly.nvars() != a.nvars()) {
      errs.push_back("divisor '" + d.label + "' uses a different variable count");
      continue;
    }
    if (d.poly.is_zero()) {
      errs.push_back("divisor '" + d.label + "' is the zero polynomial");
      continue;
    }
    if (!d.poly.is_homogeneous())
      errs.push_back("divisor '" + d.label + "' is not homogeneous");
    else if (d.poly.total_degree() < 1)
      errs.push_back("divisor '" + d.label + "' is constant");
    else if (!is_squarefree(d.poly))
      errs.push_back("divisor '" + d.label + "' is not squarefree");
  }
  for (std::size_t i = 0; i < a.divisors.size(); ++i)
    for (std::size_t j = i + 1; j < a.divisors.size(); ++j) {
      const auto& f = a.divisors[i].poly;
      const auto& g = a.divisors[j].poly;
      if (f.nvars() == g.nvars() && !f.is_zero() && proportional(f, g))
        errs.push_back("divisors '" + a.divisors[i].label + "' and '" + a.divisors[j].label +
                       "' are proportional");
    }

  if (a.strata_mode == StrataMode::kAuto) {
    if (!a.strata.empty()) errs.push_back("auto strata mode does not take explicit strata");
  } else {
    // Explicit mode: each stratum names a subset of divisors and its parents.
    std::map<std::string, const StratumSpec*> by_id;
    for (const auto& s : a.strata) {
      if (s.id.empty()) errs.push_back("stratum with empty id");
      if (!by_id.emplace(s.id, &s).second) errs.push_back("duplicate stratum id '" + s.id + "'");
      if (s.divisors.empty()) errs.push_back("stratum '" + s.id + "' names no divisors");
      std::set<std::string> uniq(s.divisors.begin(), s.divisors.end());
      if (uniq.size() != s.divisors.size())
        errs.push_back("stratum '" + s.id + "' repeats a divisor");
      for (const auto& l : s.divisors)
        if (a.divisor_index(l) < 0)
          errs.push_back("stratum '" + s.id + "' names unknown divisor '" + l + "'");
    }
    if (!errs.empty()) return errs;
    for (const auto& s : a.strata) {
      std::set<std::string> mine(s.divisors.begin(), s.divisors.end());
      // Every listed parent must drop exactly one divisor, and each dropped
      // divisor must be covered exactly once.
      std::map<std::string, int> drop_cover;
      for (const auto& l : s.divisors) drop_cover[l] = 0;
      for (const auto& pid : s.contained_in) {
        auto it = by_id.find(pid);
        if (it == by_id.end()) {
          errs.push_back("stratum '" + s.id + "' contained in unknown stratum '" + pid + "'");
          continue;
        }
        std::set<std::string> theirs(it->second->divisors.begin(), it->second->divisors.end());
        if (theirs.size() + 1 != mine.size() ||
            !std::includes(mine.begin(), mine.end(), theirs.begin(), theirs.end())) {
          errs.push_back("stratum '" + s.id + "' lists '" + pid +
                         "' which is not a one-divisor-smaller face");
          continue;
        }
        for (const auto& l : mine)
          if (!theirs.count(l)) ++drop_cover[l];
      }
      if (mine.size() >= 2) {
        for (const auto& [l, cnt] : drop_cover) {
          if (cnt == 0)
            errs.push_back("stratum '" + s.id + "' has no containing stratum dropping '" + l + "'");
          else if (cnt > 1)
            errs.push_back("stratum '" + s.id + "' has ambiguous containment dropping '" + l + "'");
        }
      } else if (!s.contained_in.empty()) {
        errs.push_back("stratum '" + s.id + "' of a single divisor cannot list containments");
      }
    }
  }
  return errs;
}

void require_valid(const Arrangement& a) {
  auto errs = validate_arrangement(a);
  if (!errs.empty()) throw std::invalid_argument("invalid arrangement: " + errs.front());
}

}  // namespace stratalab
