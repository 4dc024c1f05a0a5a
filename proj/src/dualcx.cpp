#include "stratalab/dualcx.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stratalab {

namespace {

struct CellName {
  std::vector<std::string> labels;  // sorted lexicographically
  std::string suffix;
};

CellName parse_cell_id(const std::string& id) {
  auto colon = id.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == id.size())
    throw std::invalid_argument("cell id '" + id + "' is not in '<labels>:<index>' form");
  CellName out;
  out.suffix = id.substr(colon + 1);
  std::string body = id.substr(0, colon);
  std::size_t start = 0;
  while (true) {
    auto comma = body.find(',', start);
    std::string l = body.substr(start, comma == std::string::npos ? comma : comma - start);
    if (l.empty()) throw std::invalid_argument("cell id '" + id + "' has an empty label");
    out.labels.push_back(std::move(l));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (!std::is_sorted(out.labels.begin(), out.labels.end()))
    throw std::invalid_argument("cell id '" + id + "' labels are not sorted");
  return out;
}

std::string make_cell_id(const std::vector<std::string>& labels, const std::string& suffix) {
  std::string id;
  for (const auto& l : labels) {
    if (!id.empty()) id += ',';
    id += l;
  }
  return id + ":" + suffix;
}

// True when the polynomial is c * x_v for some variable v.
bool coordinate_hyperplane(const Polynomial& p) {
  if (p.terms().size() != 1) return false;
  return monomial_degree(p.terms().begin()->first) == 1;
}

}  // namespace

DualComplex dual_complex(const Arrangement& a) {
  require_valid(a);
  DualComplex out;
  int n = static_cast<int>(a.divisors.size());

  // Gather strata as (sorted label set, declared id) pairs.
  std::vector<std::pair<std::vector<std::string>, std::string>> strata;
  if (a.strata_mode == StrataMode::kAuto) {
    for (const auto& d : a.divisors)
      if (!coordinate_hyperplane(d.poly))
        throw std::invalid_argument("auto strata mode requires coordinate hyperplanes; divisor '" +
                                    d.label + "' is not one");
    // Every subset meets in the coordinate subspace through the origin.
    for (int mask = 1; mask < (1 << n); ++mask) {
      std::vector<std::string> labels;
      for (int i = 0; i < n; ++i)
        if (mask & (1 << i)) labels.push_back(a.divisors[static_cast<std::size_t>(i)].label);
      std::sort(labels.begin(), labels.end());
      strata.emplace_back(std::move(labels), "");
    }
  } else {
    for (const auto& s : a.strata) {
      std::vector<std::string> labels = s.divisors;
      std::sort(labels.begin(), labels.end());
      strata.emplace_back(std::move(labels), s.id);
    }
  }

  // Suffix k numbers the strata sharing one label set, ordered by declared id.
  std::sort(strata.begin(), strata.end());
  int dim_bound = -1;
  std::map<std::vector<std::string>, int> counter;
  std::vector<std::pair<std::string, std::string>> made;  // cell id, declared id
  for (const auto& [labels, declared] : strata) {
    int k = counter[labels]++;
    made.emplace_back(make_cell_id(labels, std::to_string(k)), declared);
    dim_bound = std::max(dim_bound, static_cast<int>(labels.size()) - 1);
  }

  SemiSimplicialSet ss;
  ss.dim_bound = dim_bound;
  ss.cells.assign(static_cast<std::size_t>(dim_bound + 1), {});
  ss.faces.assign(static_cast<std::size_t>(dim_bound + 1), {});
  for (const auto& [cid, declared] : made) {
    auto cn = parse_cell_id(cid);
    int dim = static_cast<int>(cn.labels.size()) - 1;
    ss.cells[static_cast<std::size_t>(dim)].push_back(cid);
    if (!declared.empty()) {
      out.cell_of_stratum[declared] = cid;
      out.stratum_of_cell[cid] = declared;
    } else {
      out.cell_of_stratum[cid] = cid;
      out.stratum_of_cell[cid] = cid;
    }
  }
  for (auto& list : ss.cells) std::sort(list.begin(), list.end());

  // Face maps: dropping the j-th label.
  std::map<std::string, const StratumSpec*> spec_of;
  for (const auto& s : a.strata) spec_of[s.id] = &s;
  for (int dim = 0; dim <= dim_bound; ++dim) {
    auto& lists = ss.faces[static_cast<std::size_t>(dim)];
    lists.resize(ss.cells[static_cast<std::size_t>(dim)].size());
    if (dim == 0) continue;
    const auto& below = ss.cells[static_cast<std::size_t>(dim - 1)];
    for (std::size_t i = 0; i < ss.cells[static_cast<std::size_t>(dim)].size(); ++i) {
      const auto& cid = ss.cells[static_cast<std::size_t>(dim)][i];
      auto cn = parse_cell_id(cid);
      std::vector<int> face_idx;
      for (std::size_t j = 0; j < cn.labels.size(); ++j) {
        std::vector<std::string> sub;
        for (std::size_t l = 0; l < cn.labels.size(); ++l)
          if (l != j) sub.push_back(cn.labels[l]);
        std::string fid;
        if (a.strata_mode == StrataMode::kAuto) {
          fid = make_cell_id(sub, "0");
        } else {
          // The declared containment names the parent stratum dropping label j.
          const StratumSpec* spec = spec_of.at(out.stratum_of_cell.at(cid));
          std::string parent;
          for (const auto& pid : spec->contained_in) {
            std::vector<std::string> plabels = spec_of.at(pid)->divisors;
            std::sort(plabels.begin(), plabels.end());
            if (plabels == sub) {
              parent = pid;
              break;
            }
          }
          if (parent.empty())
            throw std::invalid_argument("stratum '" + out.stratum_of_cell.at(cid) +
                                        "' lacks a containment dropping '" + cn.labels[j] + "'");
          fid = out.cell_of_stratum.at(parent);
        }
        auto it = std::lower_bound(below.begin(), below.end(), fid);
        if (it == below.end() || *it != fid)
          throw std::invalid_argument("face cell '" + fid + "' missing from the dual complex");
        face_idx.push_back(static_cast<int>(it - below.begin()));
      }
      lists[i] = std::move(face_idx);
    }
  }
  out.ss = std::move(ss);
  auto errs = validate(out.ss);
  if (!errs.empty())
    throw std::invalid_argument("dual complex construction failed: " + errs.front());
  return out;
}

SemiSimplicialSet relabel_cells(const SemiSimplicialSet& s,
                                const std::map<std::string, std::string>& label_map) {
  SemiSimplicialSet out;
  out.dim_bound = s.dim_bound;
  out.cells.assign(s.cells.size(), {});
  out.faces.assign(s.faces.size(), {});
  out.augmentation = s.augmentation;
  for (int k = 0; k <= s.dim_bound; ++k) {
    for (std::size_t i = 0; i < s.cells[static_cast<std::size_t>(k)].size(); ++i) {
      auto cn = parse_cell_id(s.cells[static_cast<std::size_t>(k)][i]);
      // Map labels, then sort; perm[j] = position of old label j in the new order.
      std::vector<std::pair<std::string, int>> mapped;
      for (std::size_t j = 0; j < cn.labels.size(); ++j) {
        auto it = label_map.find(cn.labels[j]);
        if (it == label_map.end())
          throw std::invalid_argument("label '" + cn.labels[j] + "' missing from the renaming");
        mapped.emplace_back(it->second, static_cast<int>(j));
      }
      std::sort(mapped.begin(), mapped.end());
      std::vector<std::string> labels;
      std::vector<int> faces;
      for (std::size_t j = 0; j < mapped.size(); ++j) {
        labels.push_back(mapped[j].first);
        if (k >= 1)
          faces.push_back(s.faces[static_cast<std::size_t>(k)][i]
                                 [static_cast<std::size_t>(mapped[j].second)]);
      }
      if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw std::invalid_argument("renaming collapses two labels of one cell");
      out.cells[static_cast<std::size_t>(k)].push_back(make_cell_id(labels, cn.suffix));
      out.faces[static_cast<std::size_t>(k)].push_back(std::move(faces));
    }
  }
  return normalized(std::move(out));
}

namespace {

std::string labels_key(const std::string& cell_id) {
  return cell_id.substr(0, cell_id.rfind(':'));
}

// Search state for the face-compatible bijection.
struct IsoSearch {
  const SemiSimplicialSet& src;
  const SemiSimplicialSet& tgt;
  std::vector<std::vector<int>> assign;  // per dim: src index -> tgt index
  long nodes = 0;
  // Deepest obstruction seen, for the witness on failure.
  int bad_dim = -1;
  std::string bad_side;
  std::string bad_cell;
  std::string bad_reason;

  bool run() { return match_dim(0); }

  void note_obstruction(int dim, const std::string& side, const std::string& cell,
                        const std::string& reason) {
    if (dim >= bad_dim) {
      bad_dim = dim;
      bad_side = side;
      bad_cell = cell;
      bad_reason = reason;
    }
  }

  bool match_dim(int k) {
    if (k > src.dim_bound) return true;
    if (++nodes > 200000)
      throw std::runtime_error("thriftiness search exceeded the node budget");
    const auto& scells = src.cells[static_cast<std::size_t>(k)];
    const auto& tcells = tgt.cells[static_cast<std::size_t>(k)];
    // Group source and target cells by (labels, mapped faces) signature.
    auto sig = [&](const SemiSimplicialSet& s, std::size_t i, bool mapped) {
      std::string key = labels_key(s.cells[static_cast<std::size_t>(k)][i]);
      key += '|';
      if (k >= 1)
        for (int f : s.faces[static_cast<std::size_t>(k)][i]) {
          int idx = mapped ? assign[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(f)]
                           : f;
          key += std::to_string(idx) + ",";
        }
      return key;
    };
    std::map<std::string, std::vector<int>> sgroups, tgroups;
    for (std::size_t i = 0; i < scells.size(); ++i)
      sgroups[sig(src, i, true)].push_back(static_cast<int>(i));
    for (std::size_t i = 0; i < tcells.size(); ++i)
      tgroups[sig(tgt, i, false)].push_back(static_cast<int>(i));
    for (const auto& [key, members] : sgroups) {
      auto it = tgroups.find(key);
      if (it == tgroups.end() || it->second.size() != members.size()) {
        note_obstruction(k, "source", scells[static_cast<std::size_t>(members[0])],
                         "no matching attachment pattern in the target");
        return false;
      }
    }
    for (const auto& [key, members] : tgroups) {
      if (sgroups.find(key) == sgroups.end()) {
        note_obstruction(k, "target", tcells[static_cast<std::size_t>(members[0])],
                         "no matching attachment pattern in the source");
        return false;
      }
    }
    // Enumerate group-wise bijections with backtracking into higher dims.
    std::vector<std::pair<std::vector<int>, std::vector<int>>> groups;
    for (const auto& [key, members] : sgroups) groups.emplace_back(members, tgroups[key]);
    assign[static_cast<std::size_t>(k)].assign(scells.size(), -1);
    return place_group(k, groups, 0);
  }

  bool place_group(int k, std::vector<std::pair<std::vector<int>, std::vector<int>>>& groups,
                   std::size_t g) {
    if (g == groups.size()) return match_dim(k + 1);
    auto& [smem, tmem] = groups[g];
    std::vector<int> perm = tmem;  // already ascending; iterate permutations in lex order
    do {
      if (++nodes > 200000)
        throw std::runtime_error("thriftiness search exceeded the node budget");
      for (std::size_t i = 0; i < smem.size(); ++i)
        assign[static_cast<std::size_t>(k)][static_cast<std::size_t>(smem[i])] = perm[i];
      if (place_group(k, groups, g + 1)) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (std::size_t i = 0; i < smem.size(); ++i)
      assign[static_cast<std::size_t>(k)][static_cast<std::size_t>(smem[i])] = -1;
    return false;
  }
};

}  // namespace

ThriftyReport check_thrifty(const SemiSimplicialSet& source, const SemiSimplicialSet& target,
                            const StratumCorrespondence& corr) {
  // The label renaming must be injective and cover every source label.
  std::set<std::string> source_labels, image;
  for (const auto& list : source.cells)
    for (const auto& id : list) {
      auto cn = parse_cell_id(id);
      source_labels.insert(cn.labels.begin(), cn.labels.end());
    }
  for (const auto& [from, to] : corr.label_map)
    if (!image.insert(to).second)
      throw std::invalid_argument("divisor renaming is not injective at '" + to + "'");
  for (const auto& l : source_labels)
    if (!corr.label_map.count(l))
      throw std::invalid_argument("divisor renaming misses source label '" + l + "'");

  ThriftyReport rep;
  rep.relabeled_source = relabel_cells(source, corr.label_map);
  const auto& src = rep.relabeled_source;

  if (corr.cell_map) {
    // Verify the explicit bijection directly.
    std::map<std::string, std::string> renamed;  // relabeled source id -> target id
    for (int k = 0; k <= source.dim_bound; ++k)
      for (std::size_t i = 0; i < source.cells[static_cast<std::size_t>(k)].size(); ++i) {
        const auto& old_id = source.cells[static_cast<std::size_t>(k)][i];
        auto it = corr.cell_map->find(old_id);
        if (it == corr.cell_map->end()) {
          rep.witness = ThriftyWitness{k, "source", old_id, "cell missing from the bijection"};
          return rep;
        }
        auto cn = parse_cell_id(old_id);
        std::vector<std::string> mapped;
        for (const auto& l : cn.labels) mapped.push_back(corr.label_map.at(l));
        std::sort(mapped.begin(), mapped.end());
        renamed[make_cell_id(mapped, cn.suffix)] = it->second;
      }
    SSMap m;
    m.maps.assign(src.cells.size(), {});
    std::set<std::string> used;
    for (int k = 0; k <= src.dim_bound; ++k) {
      for (const auto& id : src.cells[static_cast<std::size_t>(k)]) {
        const auto& tid = renamed.at(id);
        auto pos = target.find(tid);
        if (!pos || pos->first != k) {
          rep.witness = ThriftyWitness{k, "target", tid, "mapped cell absent in this dimension"};
          return rep;
        }
        if (labels_key(tid) != labels_key(id)) {
          rep.witness = ThriftyWitness{k, "target", tid, "mapped cell has different divisors"};
          return rep;
        }
        if (!used.insert(tid).second) {
          rep.witness = ThriftyWitness{k, "target", tid, "two cells share one image"};
          return rep;
        }
        m.maps[static_cast<std::size_t>(k)].push_back(pos->second);
      }
      if (k <= target.dim_bound &&
          src.cells[static_cast<std::size_t>(k)].size() !=
              target.cells[static_cast<std::size_t>(k)].size()) {
        const auto& extra = target.cells[static_cast<std::size_t>(k)];
        for (const auto& tid : extra)
          if (!used.count(tid)) {
            rep.witness = ThriftyWitness{k, "target", tid, "cell not hit by the bijection"};
            return rep;
          }
      }
    }
    if (target.dim_bound > src.dim_bound) {
      for (int k = src.dim_bound + 1; k <= target.dim_bound; ++k)
        if (!target.cells[static_cast<std::size_t>(k)].empty()) {
          rep.witness = ThriftyWitness{k, "target", target.cells[static_cast<std::size_t>(k)][0],
                                       "cell not hit by the bijection"};
          return rep;
        }
    }
    auto errs = validate_map(src, target, m);
    if (!errs.empty()) {
      rep.witness = ThriftyWitness{0, "source", "", errs.front()};
      return rep;
    }
    rep.thrifty = true;
    rep.iso = std::move(m);
    return rep;
  }

  // Count comparison per (dimension, label set); the first mismatch is the witness.
  int max_dim = std::max(src.dim_bound, target.dim_bound);
  for (int k = 0; k <= max_dim; ++k) {
    std::map<std::string, std::vector<std::string>> sclass, tclass;
    if (k <= src.dim_bound)
      for (const auto& id : src.cells[static_cast<std::size_t>(k)])
        sclass[labels_key(id)].push_back(id);
    if (k <= target.dim_bound)
      for (const auto& id : target.cells[static_cast<std::size_t>(k)])
        tclass[labels_key(id)].push_back(id);
    std::set<std::string> keys;
    for (const auto& [key, v] : sclass) keys.insert(key);
    for (const auto& [key, v] : tclass) keys.insert(key);
    for (const auto& key : keys) {
      std::size_t ns = sclass.count(key) ? sclass[key].size() : 0;
      std::size_t nt = tclass.count(key) ? tclass[key].size() : 0;
      if (ns == nt) continue;
      bool src_bigger = ns > nt;
      const auto& list = src_bigger ? sclass[key] : tclass[key];
      rep.witness = ThriftyWitness{k, src_bigger ? "source" : "target",
                                   list[std::min(ns, nt)],
                                   "stratum count differs over this intersection"};
      return rep;
    }
  }

  // Counts agree; look for a face-compatible bijection.
  IsoSearch search{src, target, {}, 0, -1, "", "", ""};
  search.assign.assign(src.cells.size(), {});
  if (search.run()) {
    rep.thrifty = true;
    SSMap m;
    m.maps = std::move(search.assign);
    rep.iso = std::move(m);
    return rep;
  }
  rep.witness = ThriftyWitness{std::max(search.bad_dim, 0),
                               search.bad_side.empty() ? "source" : search.bad_side,
                               search.bad_cell,
                               search.bad_reason.empty() ? "no face-compatible bijection"
                                                         : search.bad_reason};
  return rep;
}

}  // namespace stratalab
