#pragma once

// Random semi-simplicial sets, built dimension by dimension by attaching
// cells along randomly chosen equalizer tuples.  Everything produced here is
// valid by construction.

#include "stratalab/ssimplicial.hpp"

#include "generators.hpp"

#include <string>
#include <vector>

namespace stratalab::testing {

/// counts[k] requests roughly that many k-cells (fewer if the equalizer at
/// some level is empty).
inline SemiSimplicialSet random_ss(Rng& rng, const std::vector<int>& counts) {
  SemiSimplicialSet s;  // starts empty at dim_bound -1
  for (std::size_t k = 0; k < counts.size(); ++k) {
    auto eq = equalizer(s, static_cast<int>(k));
    if (eq.empty()) break;
    std::vector<std::string> ids;
    std::vector<std::vector<std::string>> attach;
    for (int n = 0; n < counts[k]; ++n) {
      ids.push_back("c" + std::to_string(k) + "_" + std::to_string(n));
      attach.push_back(eq[static_cast<std::size_t>(rng.i64(0, static_cast<std::int64_t>(eq.size()) - 1))]);
    }
    s = glue(s, ids, attach);
  }
  return s;
}

/// The boundary of a triangle on vertices u < v < w.
inline SemiSimplicialSet triangle_boundary() {
  SemiSimplicialSet pts = glue({}, {"u", "v", "w"}, {{}, {}, {}});
  // Edge [a, b]: face 0 is b (vertex 0 omitted), face 1 is a.
  return glue(pts, {"uv", "uw", "vw"}, {{"v", "u"}, {"w", "u"}, {"w", "v"}});
}

/// The full triangle: boundary plus the 2-cell [u, v, w].
inline SemiSimplicialSet triangle_solid() {
  return glue(triangle_boundary(), {"uvw"}, {{"vw", "uw", "uv"}});
}

}  // namespace stratalab::testing
