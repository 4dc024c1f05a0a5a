#pragma once

// Scenario files: the JSON input format of the command line tool.
//
// A scenario declares the polynomial ring, the labeled divisors, the strata
// mode (with explicit strata when needed) and the degree bound d_max.  A
// correspondence file carries the divisor label bijection, and optionally a
// cell-level map, for the thriftiness comparison.

#include "stratalab/arrangement.hpp"
#include "stratalab/dualcx.hpp"

#include <string>

namespace stratalab {

struct Scenario {
  Arrangement arrangement;
  int d_max = 0;
  /// Exact file bytes, kept for the report digest.
  std::string raw;
};

/// Parses and validates scenario text.  Throws std::invalid_argument with a
/// message locating the problem (JSON position or offending key).
Scenario parse_scenario(const std::string& text);

/// Reads the file, then parses.  Throws std::invalid_argument when the file
/// cannot be read.
Scenario load_scenario(const std::string& path);

struct CorrespondenceInput {
  StratumCorrespondence corr;
  std::string raw;
};

/// Parses correspondence text: {"labels": {...}} plus optional
/// {"cells": {...}}.
CorrespondenceInput parse_correspondence(const std::string& text);

CorrespondenceInput load_correspondence(const std::string& path);

}  // namespace stratalab
