#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "xindlab/group.hpp"

namespace xindlab {

struct Diagnostic {
  std::string axiom;
  std::string witness;
};

// G-orbits of a free action: each orbit sorted by id, representative is the
// lexicographically least id, g_of[x] is the unique g with x = g·rep.
struct OrbitPartition {
  std::vector<std::vector<int>> orbits;
  std::vector<int> representative;
  std::vector<int> orbit_of;
  std::vector<int> g_of;
};

// Finite strict partial order with a (supposedly) free, order-preserving
// left G-action. Covers are normalized to the transitive reduction on
// construction; reachability is indexed eagerly, so all reads are safe from
// concurrent threads. Inputs that break an axiom are still representable:
// validate() reports every violated axiom with a witness.
class GPoset {
 public:
  GPoset(FiniteGroup group, std::vector<std::string> ids,
         const std::vector<std::pair<std::string, std::string>>& covers,
         std::vector<std::vector<int>> action, bool covers_reduced = false)
      : group_(std::move(group)), ids_(std::move(ids)), action_(std::move(action)) {
    const int n = size();
    for (int i = 0; i < n; ++i) {
      if (!index_.emplace(ids_[i], i).second)
        raise(Err::BadParameters, "duplicate element id '" + ids_[i] + "'");
    }
    if (static_cast<int>(action_.size()) != group_.order())
      raise(Err::SizeMismatch, "action table must have one row per group element");
    for (const auto& row : action_) {
      if (static_cast<int>(row.size()) != n)
        raise(Err::SizeMismatch, "action row does not cover all elements");
      for (int x : row)
        if (x < 0 || x >= n) raise(Err::IndexOutOfRange, "action image out of range");
    }
    up_.assign(n, {});
    down_.assign(n, {});
    std::vector<std::pair<int, int>> raw;
    raw.reserve(covers.size());
    for (const auto& [lo, hi] : covers) raw.emplace_back(index(lo), index(hi));
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    build_order(raw, covers_reduced);
    build_orbits();
    run_validation();
  }

  int size() const { return static_cast<int>(ids_.size()); }
  bool empty() const { return ids_.empty(); }
  const FiniteGroup& group() const { return group_; }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int i) const { return ids_[i]; }

  int index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) raise(Err::UnknownId, "no element '" + id + "'");
    return it->second;
  }
  bool has_id(const std::string& id) const { return index_.count(id) > 0; }

  int act(int g, int x) const { return action_[g][x]; }
  const std::vector<std::vector<int>>& action() const { return action_; }

  // Covers of the strict order, as (lower, upper) index pairs, sorted.
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<int>& upper_covers(int x) const { return up_[x]; }
  const std::vector<int>& lower_covers(int x) const { return down_[x]; }

  // x strictly below y.
  bool less(int x, int y) const { return reach_bit(x, y); }
  bool less(const std::string& x, const std::string& y) const {
    return less(index(x), index(y));
  }
  bool leq(int x, int y) const { return x == y || reach_bit(x, y); }
  bool leq(const std::string& x, const std::string& y) const {
    return leq(index(x), index(y));
  }
  bool comparable(int x, int y) const { return less(x, y) || less(y, x); }

  // Longest chain length (in covers); -1 for the empty poset.
  int height() const { return height_; }
  // Length of the longest chain ending at x.
  int level(int x) const { return level_[x]; }
  std::map<std::string, int> level_function() const {
    std::map<std::string, int> out;
    for (int i = 0; i < size(); ++i) out[ids_[i]] = level_[i];
    return out;
  }

  bool order_valid() const { return order_valid_; }
  bool is_valid() const { return diagnostics_.empty(); }
  const std::vector<Diagnostic>& validate() const { return diagnostics_; }

  const OrbitPartition& orbits() const {
    if (!orbits_ok_)
      raise(Err::FreenessViolated, orbit_error_);
    return orbits_;
  }

  std::vector<int> minimal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (down_[i].empty()) out.push_back(i);
    return out;
  }
  std::vector<int> maximal_elements() const {
    std::vector<int> out;
    for (int i = 0; i < size(); ++i)
      if (up_[i].empty()) out.push_back(i);
    return out;
  }

  bool operator==(const GPoset& o) const {
    return group_ == o.group_ && ids_ == o.ids_ && covers_ == o.covers_ &&
           action_ == o.action_;
  }
  bool operator!=(const GPoset& o) const { return !(*this == o); }

 private:
  friend GPoset restrict_to(const GPoset&, const std::vector<std::string>&);

  void build_order(const std::vector<std::pair<int, int>>& raw, bool reduced) {
    const int n = size();
    words_ = (n + 63) / 64;
    reach_.assign(static_cast<std::size_t>(n) * words_, 0);
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    order_valid_ = true;
    for (auto [a, b] : raw) {
      if (a == b) {
        order_valid_ = false;
        cycle_witness_ = ids_[a];
        continue;
      }
      succ[a].push_back(b);
      ++indeg[b];
    }
    // Kahn topological order; leftovers witness a cycle.
    std::vector<int> topo;
    topo.reserve(n);
    std::vector<int> deg = indeg;
    std::vector<int> queue;
    for (int i = 0; i < n; ++i)
      if (deg[i] == 0) queue.push_back(i);
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      topo.push_back(x);
      for (int y : succ[x])
        if (--deg[y] == 0) queue.push_back(y);
    }
    if (static_cast<int>(topo.size()) != n) {
      order_valid_ = false;
      if (cycle_witness_.empty()) {
        for (int i = 0; i < n; ++i)
          if (deg[i] > 0) {
            cycle_witness_ = ids_[i];
            break;
          }
      }
    }
    if (!order_valid_) {
      // Keep the raw covers so validate() can describe the input; all
      // order-dependent structure stays empty.
      covers_.assign(raw.begin(), raw.end());
      level_.assign(n, 0);
      height_ = 0;
      return;
    }
    // Closure by reverse topological sweep.
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
      int x = *it;
      auto* row = reach_row(x);
      for (int y : succ[x]) {
        row[y >> 6] |= std::uint64_t(1) << (y & 63);
        const auto* ry = reach_row(y);
        for (int w = 0; w < words_; ++w) row[w] |= ry[w];
      }
    }
    if (reduced) {
      covers_.assign(raw.begin(), raw.end());
    } else {
      covers_.clear();
      for (auto [a, b] : raw) {
        bool redundant = false;
        const auto* ra = reach_row(a);
        for (int w = 0; w < words_ && !redundant; ++w) {
          std::uint64_t mid = ra[w];
          if (!mid) continue;
          for (int bit = 0; bit < 64; ++bit) {
            if (!(mid & (std::uint64_t(1) << bit))) continue;
            int z = w * 64 + bit;
            if (z != b && reach_bit(z, b)) {
              redundant = true;
              break;
            }
          }
        }
        if (!redundant) covers_.push_back({a, b});
      }
    }
    std::sort(covers_.begin(), covers_.end());
    for (auto [a, b] : covers_) {
      up_[a].push_back(b);
      down_[b].push_back(a);
    }
    level_.assign(n, 0);
    height_ = n == 0 ? -1 : 0;
    for (int x : topo) {
      for (int y : succ[x]) level_[y] = std::max(level_[y], level_[x] + 1);
    }
    for (int i = 0; i < n; ++i) height_ = std::max(height_, level_[i]);
  }

  void build_orbits() {
    const int n = size();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<int>* pp = &parent;
    auto find = [pp](int x) {
      while ((*pp)[x] != x) x = (*pp)[x] = (*pp)[(*pp)[x]];
      return x;
    };
    for (int g = 0; g < group_.order(); ++g)
      for (int x = 0; x < n; ++x) {
        int a = find(x), b = find(action_[g][x]);
        if (a != b) parent[a] = b;
      }
    std::map<int, std::vector<int>> buckets;
    for (int x = 0; x < n; ++x) buckets[find(x)].push_back(x);
    orbits_.orbits.clear();
    orbits_.representative.clear();
    orbits_.orbit_of.assign(n, -1);
    orbits_.g_of.assign(n, -1);
    // Orbits listed by their least id for determinism.
    std::vector<std::vector<int>> collected;
    for (auto& [root, members] : buckets) {
      std::sort(members.begin(), members.end(),
                [&](int a, int b) { return ids_[a] < ids_[b]; });
      collected.push_back(members);
    }
    std::sort(collected.begin(), collected.end(), [&](const auto& a, const auto& b) {
      return ids_[a.front()] < ids_[b.front()];
    });
    orbits_ok_ = true;
    for (auto& members : collected) {
      int o = static_cast<int>(orbits_.orbits.size());
      int rep = members.front();
      orbits_.representative.push_back(rep);
      for (int x : members) orbits_.orbit_of[x] = o;
      if (static_cast<int>(members.size()) != group_.order() && orbits_ok_) {
        orbits_ok_ = false;
        orbit_error_ = "orbit of '" + ids_[rep] + "' has " +
                       std::to_string(members.size()) + " elements, expected " +
                       std::to_string(group_.order());
      }
      for (int g = 0; g < group_.order(); ++g) {
        int x = action_[g][rep];
        if (orbits_.g_of[x] == -1) orbits_.g_of[x] = g;
      }
      orbits_.orbits.push_back(std::move(members));
    }
  }

  void run_validation() {
    diagnostics_.clear();
    const int n = size();
    const int go = group_.order();
    const int e = group_.identity();
    if (!order_valid_)
      diagnostics_.push_back({"acyclicity",
                              "covers generate a cycle through '" + cycle_witness_ + "'"});
    for (int x = 0; x < n; ++x)
      if (action_[e][x] != x) {
        diagnostics_.push_back({"identity-action",
                                "identity moves '" + ids_[x] + "' to '" +
                                    ids_[action_[e][x]] + "'"});
        break;
      }
    bool homomorphic = true;
    for (int h = 0; h < go && homomorphic; ++h)
      for (int g = 0; g < go && homomorphic; ++g)
        for (int x = 0; x < n; ++x)
          if (action_[h][action_[g][x]] != action_[group_.mul(h, g)][x]) {
            diagnostics_.push_back(
                {"left-action",
                 "acting by " + group_.label(g) + " then " + group_.label(h) +
                     " differs from acting by " + group_.label(group_.mul(h, g)) +
                     " at '" + ids_[x] + "'"});
            homomorphic = false;
            break;
          }
    for (int g = 0; g < go; ++g) {
      std::vector<bool> seen(n, false);
      for (int x = 0; x < n; ++x) {
        if (seen[action_[g][x]]) {
          diagnostics_.push_back({"action-permutation",
                                  "action of " + group_.label(g) + " is not injective"});
          g = go;
          break;
        }
        seen[action_[g][x]] = true;
      }
    }
    for (int g = 0; g < go; ++g) {
      bool done = false;
      for (int x = 0; x < n && !done; ++x)
        if (g != e && action_[g][x] == x) {
          diagnostics_.push_back({"freeness", group_.label(g) + " fixes '" + ids_[x] + "'"});
          done = true;
        }
      if (done) break;
    }
    if (orbits_ok_) {
      // Orbit sizes already equal |G| here, nothing extra to record.
    } else if (std::none_of(diagnostics_.begin(), diagnostics_.end(),
                            [](const Diagnostic& d) { return d.axiom == "freeness"; })) {
      diagnostics_.push_back({"freeness", orbit_error_});
    }
    if (order_valid_) {
      for (auto [a, b] : covers_) {
        for (int g = 0; g < go; ++g)
          if (!less(action_[g][a], action_[g][b])) {
            diagnostics_.push_back(
                {"order-preserving",
                 group_.label(g) + " maps cover ('" + ids_[a] + "','" + ids_[b] +
                     "') to a non-related pair"});
            g = go;
          }
        if (!diagnostics_.empty() && diagnostics_.back().axiom == "order-preserving") break;
      }
      if (orbits_ok_) {
        for (int x = 0; x < n; ++x) {
          const auto* row = reach_row(x);
          bool hit = false;
          for (int w = 0; w < words_ && !hit; ++w) {
            std::uint64_t m = row[w];
            while (m) {
              int y = w * 64 + __builtin_ctzll(m);
              m &= m - 1;
              if (orbits_.orbit_of[y] == orbits_.orbit_of[x]) {
                diagnostics_.push_back({"same-orbit-comparability",
                                        "'" + ids_[x] + "' lies below '" + ids_[y] +
                                            "' in its own orbit"});
                hit = true;
                break;
              }
            }
          }
          if (hit) break;
        }
      }
    }
  }

  const std::uint64_t* reach_row(int x) const {
    return reach_.data() + static_cast<std::size_t>(x) * words_;
  }
  std::uint64_t* reach_row(int x) {
    return reach_.data() + static_cast<std::size_t>(x) * words_;
  }
  bool reach_bit(int x, int y) const {
    return (reach_row(x)[y >> 6] >> (y & 63)) & 1;
  }

  FiniteGroup group_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> action_;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<std::uint64_t> reach_;
  int words_ = 0;
  std::vector<int> level_;
  int height_ = -1;
  bool order_valid_ = true;
  std::string cycle_witness_;
  OrbitPartition orbits_;
  bool orbits_ok_ = true;
  std::string orbit_error_;
  std::vector<Diagnostic> diagnostics_;
};

inline std::vector<int> subset_indices(const GPoset& p, const std::vector<std::string>& ids) {
  std::vector<int> out;
  out.reserve(ids.size());
  for (const auto& id : ids) out.push_back(p.index(id));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Is g·S = S for every g? Returns a witness (g, x) with g·x outside S.
inline bool is_invariant(const GPoset& p, const std::vector<std::string>& ids,
                         std::pair<int, int>* witness = nullptr) {
  auto s = subset_indices(p, ids);
  std::vector<bool> in(p.size(), false);
  for (int x : s) in[x] = true;
  for (int g = 0; g < p.group().order(); ++g)
    for (int x : s)
      if (!in[p.act(g, x)]) {
        if (witness) *witness = {g, x};
        return false;
      }
  return true;
}

inline bool is_downward_closed(const GPoset& p, const std::vector<std::string>& ids) {
  auto s = subset_indices(p, ids);
  std::vector<bool> in(p.size(), false);
  for (int x : s) in[x] = true;
  for (int y : s)
    for (int x = 0; x < p.size(); ++x)
      if (!in[x] && p.less(x, y)) return false;
  return true;
}

// Connected components of the comparability graph induced on S (edges between
// pairs comparable in the ambient poset). S need not be invariant.
inline std::vector<std::vector<std::string>> comparability_components(
    const GPoset& p, const std::vector<std::string>& ids) {
  auto s = subset_indices(p, ids);
  const int k = static_cast<int>(s.size());
  std::vector<int> parent(k);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int>* pp = &parent;
  auto find = [pp](int x) {
    while ((*pp)[x] != x) x = (*pp)[x] = (*pp)[(*pp)[x]];
    return x;
  };
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (p.comparable(s[i], s[j])) {
        int a = find(i), b = find(j);
        if (a != b) parent[a] = b;
      }
  std::map<int, std::vector<std::string>> buckets;
  for (int i = 0; i < k; ++i) buckets[find(i)].push_back(p.id(s[i]));
  std::vector<std::vector<std::string>> out;
  for (auto& [root, members] : buckets) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Induced subposet on a G-invariant subset: the order is inherited from the
// ambient poset (paths may pass outside S), covers re-reduced.
inline GPoset restrict_to(const GPoset& p, const std::vector<std::string>& ids) {
  std::pair<int, int> w;
  if (!is_invariant(p, ids, &w))
    raise(Err::NotInvariant, "subset is not G-invariant: " + p.group().label(w.first) +
                                 " moves '" + p.id(w.second) + "' outside");
  auto s = subset_indices(p, ids);
  const int k = static_cast<int>(s.size());
  std::vector<int> local(p.size(), -1);
  std::vector<std::string> sub_ids(k);
  for (int i = 0; i < k; ++i) {
    local[s[i]] = i;
    sub_ids[i] = p.id(s[i]);
  }
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j || !p.less(s[i], s[j])) continue;
      bool direct = true;
      for (int m = 0; m < k && direct; ++m)
        if (m != i && m != j && p.less(s[i], s[m]) && p.less(s[m], s[j])) direct = false;
      if (direct) covers.push_back({sub_ids[i], sub_ids[j]});
    }
  std::vector<std::vector<int>> action(p.group().order(), std::vector<int>(k));
  for (int g = 0; g < p.group().order(); ++g)
    for (int i = 0; i < k; ++i) action[g][i] = local[p.act(g, s[i])];
  return GPoset(p.group(), std::move(sub_ids), covers, std::move(action), true);
}

// Renames applied by join/disjoint_union when the id sets collide.
struct JoinNames {
  std::vector<std::string> left, right;
};

inline JoinNames join_names(const GPoset& p, const GPoset& q) {
  JoinNames names{p.ids(), q.ids()};
  bool collision = false;
  for (const auto& id : q.ids())
    if (p.has_id(id)) {
      collision = true;
      break;
    }
  if (collision) {
    for (auto& id : names.left) id = "p:" + id;
    for (auto& id : names.right) id = "q:" + id;
  }
  return names;
}

namespace detail {

inline GPoset glue(const GPoset& p, const GPoset& q, bool below) {
  if (p.group() != q.group())
    raise(Err::GroupMismatch, "operands carry different groups");
  auto names = join_names(p, q);
  std::vector<std::string> ids = names.left;
  ids.insert(ids.end(), names.right.begin(), names.right.end());
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [a, b] : p.covers()) covers.push_back({names.left[a], names.left[b]});
  for (auto [a, b] : q.covers()) covers.push_back({names.right[a], names.right[b]});
  if (below) {
    for (int m : p.maximal_elements())
      for (int x : q.minimal_elements()) covers.push_back({names.left[m], names.right[x]});
  }
  const int np = p.size();
  std::vector<std::vector<int>> action(p.group().order(),
                                       std::vector<int>(np + q.size()));
  for (int g = 0; g < p.group().order(); ++g) {
    for (int i = 0; i < np; ++i) action[g][i] = p.act(g, i);
    for (int i = 0; i < q.size(); ++i) action[g][np + i] = np + q.act(g, i);
  }
  return GPoset(p.group(), std::move(ids), covers, std::move(action), true);
}

}  // namespace detail

// Ordinal join: everything in p below everything in q.
inline GPoset join(const GPoset& p, const GPoset& q) { return detail::glue(p, q, true); }

// Side-by-side union with no cross relations.
inline GPoset disjoint_union(const GPoset& p, const GPoset& q) {
  return detail::glue(p, q, false);
}

}  // namespace xindlab
