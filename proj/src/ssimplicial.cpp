#include "stratalab/ssimplicial.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace stratalab {

namespace {

std::string cell_ref(int dim, const std::string& id) {
  return std::to_string(dim) + "-cell '" + id + "'";
}

}  // namespace

std::optional<std::pair<int, int>> SemiSimplicialSet::find(const std::string& id) const {
  for (int k = 0; k < static_cast<int>(cells.size()); ++k) {
    const auto& list = cells[static_cast<std::size_t>(k)];
    auto it = std::lower_bound(list.begin(), list.end(), id);
    if (it != list.end() && *it == id) return std::pair(k, static_cast<int>(it - list.begin()));
  }
  return std::nullopt;
}

const std::string& SemiSimplicialSet::face_id(int dim, int idx, int j) const {
  int fi = faces[static_cast<std::size_t>(dim)][static_cast<std::size_t>(idx)]
                [static_cast<std::size_t>(j)];
  return cells[static_cast<std::size_t>(dim - 1)][static_cast<std::size_t>(fi)];
}

std::int64_t SemiSimplicialSet::cell_count() const {
  std::int64_t n = 0;
  for (const auto& l : cells) n += static_cast<std::int64_t>(l.size());
  return n;
}

std::vector<std::string> validate(const SemiSimplicialSet& s) {
  std::vector<std::string> errs;
  if (s.dim_bound < -1) errs.push_back("dim_bound below -1");
  if (static_cast<int>(s.cells.size()) != s.dim_bound + 1)
    errs.push_back("cell list count does not match dim_bound");
  if (s.faces.size() != s.cells.size()) errs.push_back("face table count does not match cells");
  if (!errs.empty()) return errs;

  std::map<std::string, int> seen;
  for (int k = 0; k <= s.dim_bound; ++k) {
    const auto& list = s.cells[static_cast<std::size_t>(k)];
    if (!std::is_sorted(list.begin(), list.end()))
      errs.push_back("cells of dimension " + std::to_string(k) + " not in lexicographic order");
    for (const auto& id : list) {
      if (id.empty()) errs.push_back("empty cell id in dimension " + std::to_string(k));
      if (!seen.emplace(id, k).second) errs.push_back("duplicate cell id '" + id + "'");
    }
    if (s.faces[static_cast<std::size_t>(k)].size() != list.size()) {
      errs.push_back("face table size mismatch in dimension " + std::to_string(k));
      return errs;
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& f = s.faces[static_cast<std::size_t>(k)][i];
      std::size_t want = k == 0 ? 0 : static_cast<std::size_t>(k + 1);
      if (f.size() != want) {
        errs.push_back("face tuple of " + cell_ref(k, list[i]) + " has arity " +
                       std::to_string(f.size()) + ", expected " + std::to_string(want));
        continue;
      }
      for (int fi : f)
        if (fi < 0 || fi >= static_cast<int>(s.cells[static_cast<std::size_t>(k - 1)].size()))
          errs.push_back("face index out of range on " + cell_ref(k, list[i]));
    }
  }
  if (!errs.empty()) return errs;

  // face(face(x, l), k) = face(face(x, k), l-1) for k < l.
  for (int k = 2; k <= s.dim_bound; ++k) {
    for (std::size_t i = 0; i < s.cells[static_cast<std::size_t>(k)].size(); ++i) {
      for (int a = 0; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) {
          int xb = s.faces[static_cast<std::size_t>(k)][i][static_cast<std::size_t>(b)];
          int xa = s.faces[static_cast<std::size_t>(k)][i][static_cast<std::size_t>(a)];
          int lhs = s.faces[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(xb)]
                           [static_cast<std::size_t>(a)];
          int rhs = s.faces[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(xa)]
                           [static_cast<std::size_t>(b - 1)];
          if (lhs != rhs)
            errs.push_back("face identity fails on " +
                           cell_ref(k, s.cells[static_cast<std::size_t>(k)][i]) + " at (k, l) = (" +
                           std::to_string(a) + ", " + std::to_string(b) + ")");
        }
    }
  }

  if (s.augmentation) {
    if (s.dim_bound < 0) {
      if (!s.augmentation->empty()) errs.push_back("augmentation tokens without 0-cells");
    } else if (s.augmentation->size() != s.cells[0].size()) {
      errs.push_back("augmentation token count does not match 0-cells");
    } else if (s.dim_bound >= 1) {
      for (std::size_t i = 0; i < s.cells[1].size(); ++i) {
        int v0 = s.faces[1][i][0], v1 = s.faces[1][i][1];
        if ((*s.augmentation)[static_cast<std::size_t>(v0)] !=
            (*s.augmentation)[static_cast<std::size_t>(v1)])
          errs.push_back("augmentation differs across " + cell_ref(1, s.cells[1][i]));
      }
    }
  }
  return errs;
}

SemiSimplicialSet normalized(SemiSimplicialSet s) {
  // Sort each dimension and remap the face indices of the dimension above.
  std::vector<std::vector<int>> perm(s.cells.size());  // old index -> new index
  for (std::size_t k = 0; k < s.cells.size(); ++k) {
    std::vector<int> order(s.cells[k].size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return s.cells[k][static_cast<std::size_t>(a)] < s.cells[k][static_cast<std::size_t>(b)];
    });
    perm[k].assign(order.size(), 0);
    std::vector<std::string> cs(order.size());
    std::vector<std::vector<int>> fs(order.size());
    for (std::size_t n = 0; n < order.size(); ++n) {
      perm[k][static_cast<std::size_t>(order[n])] = static_cast<int>(n);
      cs[n] = std::move(s.cells[k][static_cast<std::size_t>(order[n])]);
      fs[n] = std::move(s.faces[k][static_cast<std::size_t>(order[n])]);
    }
    s.cells[k] = std::move(cs);
    s.faces[k] = std::move(fs);
    if (k == 0 && s.augmentation) {
      std::vector<std::string> aug(order.size());
      for (std::size_t n = 0; n < order.size(); ++n)
        aug[n] = std::move((*s.augmentation)[static_cast<std::size_t>(order[n])]);
      s.augmentation = std::move(aug);
    }
  }
  for (std::size_t k = 1; k < s.faces.size(); ++k)
    for (auto& f : s.faces[k])
      for (auto& fi : f) fi = perm[k - 1][static_cast<std::size_t>(fi)];
  return s;
}

SemiSimplicialSet skeleton(const SemiSimplicialSet& s, int i) {
  if (i < -1 || i > s.dim_bound)
    throw std::invalid_argument("skeleton level must lie in [-1, dim_bound]");
  SemiSimplicialSet out;
  out.dim_bound = i;
  out.cells.assign(s.cells.begin(), s.cells.begin() + (i + 1));
  out.faces.assign(s.faces.begin(), s.faces.begin() + (i + 1));
  if (i >= 0) out.augmentation = s.augmentation;
  return out;
}

std::vector<std::vector<std::string>> equalizer(const SemiSimplicialSet& t, int i) {
  if (i < 0) throw std::invalid_argument("equalizer level must be nonnegative");
  if (t.dim_bound != i - 1)
    throw std::invalid_argument("equalizer requires a set truncated at level " +
                                std::to_string(i - 1));
  std::vector<std::vector<std::string>> out;
  if (i == 0) {
    out.push_back({});
    return out;
  }
  const auto& top = t.cells[static_cast<std::size_t>(i - 1)];
  int n = static_cast<int>(top.size());
  std::vector<int> tup(static_cast<std::size_t>(i + 1), 0);
  // Backtracking over cell indices; cells are sorted, so tuples come out in
  // lexicographic order.
  auto compatible = [&](int k) {
    for (int j = 0; j < k; ++j) {
      if (i == 1) {
        if (t.augmentation &&
            (*t.augmentation)[static_cast<std::size_t>(tup[static_cast<std::size_t>(k)])] !=
                (*t.augmentation)[static_cast<std::size_t>(tup[static_cast<std::size_t>(j)])])
          return false;
        continue;  // unaugmented pairs carry no condition
      }
      const auto& fk = t.faces[static_cast<std::size_t>(i - 1)]
                              [static_cast<std::size_t>(tup[static_cast<std::size_t>(k)])];
      const auto& fj = t.faces[static_cast<std::size_t>(i - 1)]
                              [static_cast<std::size_t>(tup[static_cast<std::size_t>(j)])];
      if (fk[static_cast<std::size_t>(j)] != fj[static_cast<std::size_t>(k - 1)]) return false;
    }
    return true;
  };
  auto rec = [&](auto&& self, int k) -> void {
    if (k == i + 1) {
      std::vector<std::string> ids;
      ids.reserve(tup.size());
      for (int v : tup) ids.push_back(top[static_cast<std::size_t>(v)]);
      out.push_back(std::move(ids));
      return;
    }
    for (int v = 0; v < n; ++v) {
      tup[static_cast<std::size_t>(k)] = v;
      if (compatible(k)) self(self, k + 1);
    }
  };
  rec(rec, 0);
  return out;
}

SemiSimplicialSet glue(const SemiSimplicialSet& t, const std::vector<std::string>& top_ids,
                       const std::vector<std::vector<std::string>>& attach) {
  int i = t.dim_bound + 1;
  if (top_ids.size() != attach.size())
    throw std::invalid_argument("top cell and attach list sizes differ");
  SemiSimplicialSet out = t;
  out.dim_bound = i;
  out.cells.emplace_back();
  out.faces.emplace_back();

  std::vector<std::string> sorted_ids = top_ids;
  std::sort(sorted_ids.begin(), sorted_ids.end());
  if (std::adjacent_find(sorted_ids.begin(), sorted_ids.end()) != sorted_ids.end())
    throw std::invalid_argument("duplicate top cell id");

  if (i == 0 && t.augmentation)
    throw std::invalid_argument("cannot glue 0-cells onto an augmented empty set");
  static const std::vector<std::string> kEmpty;
  const auto& lower = i > 0 ? t.cells[static_cast<std::size_t>(i - 1)] : kEmpty;
  for (std::size_t nidx = 0; nidx < top_ids.size(); ++nidx) {
    const auto& id = top_ids[nidx];
    if (id.empty()) throw std::invalid_argument("empty top cell id");
    if (t.find(id)) throw std::invalid_argument("top cell id '" + id + "' already in use");
    const auto& tup = attach[nidx];
    if (static_cast<int>(tup.size()) != i + 1 && !(i == 0 && tup.empty()))
      throw std::invalid_argument("attach tuple for '" + id + "' must have arity " +
                                  std::to_string(i + 1));
    std::vector<int> f;
    f.reserve(tup.size());
    for (const auto& fid : tup) {
      auto it = std::lower_bound(lower.begin(), lower.end(), fid);
      if (it == lower.end() || *it != fid)
        throw std::invalid_argument("attach face '" + fid + "' is not a " +
                                    std::to_string(i - 1) + "-cell");
      f.push_back(static_cast<int>(it - lower.begin()));
    }
    // Equalizer membership, checked tuple by tuple.
    for (int k = 0; k < i + 1 && i >= 1; ++k)
      for (int j = 0; j < k; ++j) {
        bool ok = true;
        if (i == 1) {
          if (t.augmentation)
            ok = (*t.augmentation)[static_cast<std::size_t>(f[static_cast<std::size_t>(k)])] ==
                 (*t.augmentation)[static_cast<std::size_t>(f[static_cast<std::size_t>(j)])];
        } else {
          const auto& fk = t.faces[static_cast<std::size_t>(i - 1)]
                                  [static_cast<std::size_t>(f[static_cast<std::size_t>(k)])];
          const auto& fj = t.faces[static_cast<std::size_t>(i - 1)]
                                  [static_cast<std::size_t>(f[static_cast<std::size_t>(j)])];
          ok = fk[static_cast<std::size_t>(j)] == fj[static_cast<std::size_t>(k - 1)];
        }
        if (!ok)
          throw std::invalid_argument("attach image of '" + id +
                                      "' lies outside the equalizer at positions (" +
                                      std::to_string(j) + ", " + std::to_string(k) + ")");
      }
    out.cells.back().push_back(id);
    out.faces.back().push_back(std::move(f));
  }
  return normalized(std::move(out));
}

std::vector<std::string> validate_map(const SemiSimplicialSet& src, const SemiSimplicialSet& tgt,
                                      const SSMap& m) {
  std::vector<std::string> errs;
  if (static_cast<int>(m.maps.size()) != src.dim_bound + 1) {
    errs.push_back("map has wrong number of levels");
    return errs;
  }
  if (src.dim_bound > tgt.dim_bound) errs.push_back("source dimension exceeds target");
  for (int k = 0; k <= src.dim_bound && errs.empty(); ++k) {
    const auto& mk = m.maps[static_cast<std::size_t>(k)];
    if (mk.size() != src.cells[static_cast<std::size_t>(k)].size()) {
      errs.push_back("level " + std::to_string(k) + " size mismatch");
      return errs;
    }
    for (int v : mk)
      if (v < 0 || (k > tgt.dim_bound) ||
          v >= static_cast<int>(tgt.cells[static_cast<std::size_t>(k)].size())) {
        errs.push_back("level " + std::to_string(k) + " image out of range");
        return errs;
      }
  }
  if (!errs.empty()) return errs;
  for (int k = 1; k <= src.dim_bound; ++k)
    for (std::size_t i = 0; i < src.cells[static_cast<std::size_t>(k)].size(); ++i)
      for (int j = 0; j <= k; ++j) {
        int lhs = m.maps[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(
            src.faces[static_cast<std::size_t>(k)][i][static_cast<std::size_t>(j)])];
        int rhs = tgt.faces[static_cast<std::size_t>(k)][static_cast<std::size_t>(
            m.maps[static_cast<std::size_t>(k)][i])][static_cast<std::size_t>(j)];
        if (lhs != rhs)
          errs.push_back("map fails to commute with face " + std::to_string(j) + " on " +
                         cell_ref(k, src.cells[static_cast<std::size_t>(k)][i]));
      }
  if (src.augmentation && tgt.augmentation && src.dim_bound >= 0) {
    for (std::size_t i = 0; i < src.cells[0].size(); ++i)
      if ((*src.augmentation)[i] !=
          (*tgt.augmentation)[static_cast<std::size_t>(m.maps[0][i])])
        errs.push_back("augmentation token changes on 0-cell '" + src.cells[0][i] + "'");
  }
  return errs;
}

}  // namespace stratalab
