#pragma once

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "xindlab/certificates.hpp"

namespace xindlab {

// Equivariant sign map on a subset, the witness that the subset has
// cross-index zero.
using SignMap = std::map<std::string, int>;

// G-invariant partition into index-zero levels with no backward
// comparability; the combinatorial form of a certificate.
struct LevelDecomposition {
  std::vector<std::vector<std::string>> levels;
  std::vector<SignMap> signs;
};

namespace detail {

// A sign map certifies index zero on S iff it is total on S, equivariant,
// and constant on comparable pairs inside S.
inline void check_union_covers(const GPoset& p, const std::vector<std::string>& a_ids,
                               const std::vector<std::string>& b_ids) {
  std::vector<bool> covered(p.size(), false);
  for (const auto& id : a_ids) covered[p.index(id)] = true;
  for (const auto& id : b_ids) covered[p.index(id)] = true;
  for (int x = 0; x < p.size(); ++x)
    if (!covered[x]) raise(Err::NotCovering, "'" + p.id(x) + "' lies in neither part");
}

inline void check_sign_map(const GPoset& p, const std::vector<int>& subset,
                           const SignMap& signs, const char* who) {
  std::vector<int> sign_of(p.size(), -1);
  for (const auto& [id, s] : signs) {
    int x = p.index(id);
    if (s < 0 || s >= p.group().order())
      raise(Err::IndexOutOfRange, std::string(who) + ": sign out of range at '" + id + "'");
    sign_of[x] = s;
  }
  for (int x : subset)
    if (sign_of[x] < 0)
      raise(Err::InvalidCertificate,
            std::string(who) + ": no sign for '" + p.id(x) + "'");
  for (int g = 0; g < p.group().order(); ++g)
    for (int x : subset)
      if (sign_of[p.act(g, x)] != p.group().mul(g, sign_of[x]))
        raise(Err::InvalidCertificate,
              std::string(who) + ": sign map is not equivariant at '" + p.id(x) + "'");
  for (int x : subset)
    for (int y : subset)
      if (x != y && p.less(x, y) && sign_of[x] != sign_of[y]) {
        // Not a zero-index witness. Distinguish "subset is not index zero"
        // from "this particular map is broken".
        auto zr = xind_zero(restrict_to(p, [&] {
          std::vector<std::string> ids;
          for (int z : subset) ids.push_back(p.id(z));
          return ids;
        }()));
        if (!zr.zero) {
          std::string path;
          for (const auto& step : zr.path) path += (path.empty() ? "" : " ~ ") + step;
          raise(Err::IndexNotZero,
                std::string(who) + ": subset has positive index, witness path " + path);
        }
        raise(Err::InvalidCertificate,
              std::string(who) + ": signs differ on the comparable pair '" + p.id(x) +
                  "' < '" + p.id(y) + "'");
      }
}

inline std::vector<int> ids_to_indices(const GPoset& p, const std::vector<std::string>& ids) {
  return subset_indices(p, ids);
}

}  // namespace detail

// Value fibers of a valid certificate, empty fibers dropped.
inline LevelDecomposition levels_from_certificate(const GPoset& p, const GMapCertificate& c) {
  auto check = check_gmap(p, c);
  if (!check) raise(Err::InvalidCertificate, check.witness);
  std::map<int, std::vector<std::string>> fibers;
  for (const auto& [id, sv] : c.assignment) fibers[sv.value].push_back(id);
  LevelDecomposition out;
  for (auto& [value, ids] : fibers) {
    std::sort(ids.begin(), ids.end());
    SignMap signs;
    for (const auto& id : ids) signs[id] = c.assignment.at(id).sign;
    out.levels.push_back(std::move(ids));
    out.signs.push_back(std::move(signs));
  }
  return out;
}

// Inverse construction: level i with sign map σ_i becomes x -> (σ_i(x), i).
inline GMapCertificate certificate_from_levels(const GPoset& p, const LevelDecomposition& d) {
  if (d.levels.size() != d.signs.size())
    raise(Err::InvalidDecomposition, "levels and sign maps differ in count");
  std::vector<int> level_of(p.size(), -1);
  for (std::size_t i = 0; i < d.levels.size(); ++i)
    for (const auto& id : d.levels[i]) {
      int x = p.index(id);
      if (level_of[x] != -1)
        raise(Err::InvalidDecomposition, "levels overlap at '" + id + "'");
      level_of[x] = static_cast<int>(i);
    }
  for (int x = 0; x < p.size(); ++x)
    if (level_of[x] == -1)
      raise(Err::InvalidDecomposition, "levels do not cover '" + p.id(x) + "'");
  for (std::size_t i = 0; i < d.levels.size(); ++i) {
    std::pair<int, int> w;
    if (!is_invariant(p, d.levels[i], &w))
      raise(Err::InvalidDecomposition,
            "level " + std::to_string(i) + " is not G-invariant: " +
                p.group().label(w.first) + " moves '" + p.id(w.second) + "' outside");
  }
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (x != y && p.less(y, x) && level_of[x] < level_of[y])
        raise(Err::InvalidDecomposition,
              "backward comparability: '" + p.id(y) + "' in level " +
                  std::to_string(level_of[y]) + " lies below '" + p.id(x) +
                  "' in level " + std::to_string(level_of[x]));
  for (std::size_t i = 0; i < d.levels.size(); ++i)
    detail::check_sign_map(p, detail::ids_to_indices(p, d.levels[i]), d.signs[i],
                           "certificate_from_levels");
  GMapCertificate out;
  out.target_n = static_cast<int>(d.levels.size()) - 1;
  for (std::size_t i = 0; i < d.levels.size(); ++i)
    for (const auto& id : d.levels[i])
      out.assignment[id] = {d.signs[i].at(id), static_cast<int>(i)};
  return out;
}

// The height construction: value = length of the longest chain ending at the
// element, sign read off the orbit decomposition.
inline GMapCertificate height_map(const GPoset& p) {
  if (p.empty()) raise(Err::EmptyPoset, "height_map needs a nonempty poset");
  detail::require_valid(p, "height_map");
  const auto& orb = p.orbits();
  GMapCertificate out;
  out.target_n = p.height();
  for (int x = 0; x < p.size(); ++x)
    out.assignment[p.id(x)] = {orb.g_of[x], p.level(x)};
  return out;
}

// Join of certificates: the q-part is shifted above the p-part.
inline GMapCertificate join_map(const GPoset& p, const GPoset& q,
                                const GMapCertificate& cp, const GMapCertificate& cq) {
  if (p.group() != q.group()) raise(Err::GroupMismatch, "join_map operands carry different groups");
  auto ck = check_gmap(p, cp);
  if (!ck) raise(Err::InvalidCertificate, "left certificate: " + ck.witness);
  ck = check_gmap(q, cq);
  if (!ck) raise(Err::InvalidCertificate, "right certificate: " + ck.witness);
  auto names = join_names(p, q);
  GMapCertificate out;
  out.target_n = cp.target_n + cq.target_n + 1;
  const int shift = cp.target_n + 1;
  for (int i = 0; i < p.size(); ++i) out.assignment[names.left[i]] = cp.assignment.at(p.id(i));
  for (int i = 0; i < q.size(); ++i) {
    SignValue sv = cq.assignment.at(q.id(i));
    out.assignment[names.right[i]] = {sv.sign, sv.value + shift};
  }
  return out;
}

// Union along a downward-closed part: A keeps its values, B \ A is shifted
// wholesale above them. No B-element can lie below an A-element, so the glued
// map is monotone.
inline GMapCertificate downward_union_map(const GPoset& p,
                                          const std::vector<std::string>& a_ids,
                                          const std::vector<std::string>& b_ids,
                                          const GMapCertificate& ca,
                                          const GMapCertificate& cb) {
  detail::require_valid(p, "downward_union_map");
  auto a = subset_indices(p, a_ids);
  auto b = subset_indices(p, b_ids);
  std::vector<bool> in_a(p.size(), false), covered(p.size(), false);
  for (int x : a) in_a[x] = covered[x] = true;
  for (int x : b) covered[x] = true;
  for (int x = 0; x < p.size(); ++x)
    if (!covered[x]) raise(Err::NotCovering, "'" + p.id(x) + "' lies in neither part");
  if (!is_downward_closed(p, a_ids))
    raise(Err::NotDownwardClosed, "the first part is not downward-closed");
  auto ck = check_gmap(restrict_to(p, a_ids), ca);
  if (!ck) raise(Err::InvalidCertificate, "certificate on A: " + ck.witness);
  ck = check_gmap(restrict_to(p, b_ids), cb);
  if (!ck) raise(Err::InvalidCertificate, "certificate on B: " + ck.witness);
  GMapCertificate out;
  out.target_n = ca.target_n + cb.target_n + 1;
  const int shift = ca.target_n + 1;
  for (int x : a) out.assignment[p.id(x)] = ca.assignment.at(p.id(x));
  for (int x : b) {
    if (in_a[x]) continue;
    SignValue sv = cb.assignment.at(p.id(x));
    out.assignment[p.id(x)] = {sv.sign, sv.value + shift};
  }
  return out;
}

namespace detail {

// One level of the union construction, shared by every group case. Values
// are emitted as (set, sign map) blocks from bottom to top; empty blocks are
// skipped by the final compaction.
struct Emission {
  std::vector<int> members;
  std::vector<int> sign_of;  // indexed by poset element
};

struct UnionContext {
  const GPoset& p;
  std::vector<Emission> emitted;

  void emit(const std::vector<int>& members, const std::vector<int>& sign_of) {
    if (members.empty()) return;
    emitted.push_back({members, sign_of});
  }
};

// Sandwich transfer: move the b-elements strictly between two a0-elements
// into a0, inheriting the sign of any lower witness (all witnesses agree for
// a genuine zero-index sign map).
inline void transfer_sandwiched(const GPoset& p, std::vector<int>& a0,
                                std::vector<int>& sign_of, std::vector<int>& b) {
  std::vector<bool> in_a0(p.size(), false);
  for (int x : a0) in_a0[x] = true;
  std::vector<int> rest;
  std::vector<int> moved;
  for (int x : b) {
    int lower = -1, upper = -1;
    for (int y : a0) {
      if (p.less(y, x) && (lower == -1 || p.id(y) < p.id(lower))) lower = y;
      if (p.less(x, y)) upper = y;
    }
    if (lower != -1 && upper != -1) {
      moved.push_back(x);
      sign_of[x] = sign_of[lower];
    } else {
      rest.push_back(x);
    }
  }
  for (int x : moved) {
    // Any two witnesses under one sandwiched element are comparable through
    // it, so a genuine zero-index sign map cannot disagree here.
    for (int y : a0)
      if (p.less(y, x)) assert(sign_of[y] == sign_of[x]);
    a0.push_back(x);
    in_a0[x] = true;
  }
  std::sort(a0.begin(), a0.end());
  b = std::move(rest);
}

// D/U split of b relative to a reference set: U holds the elements above
// some reference element, D the rest.
inline void split_du(const GPoset& p, const std::vector<int>& ref,
                     const std::vector<int>& b, std::vector<int>& d, std::vector<int>& u) {
  d.clear();
  u.clear();
  for (int x : b) {
    bool above = false;
    for (int y : ref)
      if (p.less(y, x)) {
        above = true;
        break;
      }
    (above ? u : d).push_back(x);
  }
}

// The twelve-set refinement for the order-2 group: returns X (one new bottom
// value) and Y (passed upward as the next zero-index part). D and U carry
// the B-part signs, the A-part its own.
inline void twelve_set_split(const GPoset& p, const std::vector<int>& a0,
                             const std::vector<int>& sign_of,
                             const std::vector<int>& d, const std::vector<int>& u,
                             const std::vector<int>& sign_b,
                             std::vector<int>& x_out, std::vector<int>& x_signs,
                             std::vector<int>& y_out, std::vector<int>& y_signs) {
  const int e = p.group().identity();
  int gbar = e == 0 ? 1 : 0;
  std::vector<bool> in_dplus(p.size(), false), in_dminus(p.size(), false);
  for (int z : d) (sign_b[z] == e ? in_dplus : in_dminus)[z] = true;
  x_out.clear();
  y_out.clear();
  x_signs.assign(p.size(), -1);
  y_signs.assign(p.size(), -1);
  for (int z : d) {
    x_out.push_back(z);
    x_signs[z] = sign_b[z];
  }
  for (int z : u) {
    y_out.push_back(z);
    y_signs[z] = sign_b[z];
  }
  for (int a : a0) {
    bool over_plus = false, over_minus = false;
    for (int z : d) {
      if (!p.less(z, a)) continue;
      if (in_dplus[z]) over_plus = true;
      if (in_dminus[z]) over_minus = true;
    }
    const bool plus_signed = sign_of[a] == e;
    if (!over_plus && !over_minus) {
      // A_empty goes to X with its own sign.
      x_out.push_back(a);
      x_signs[a] = sign_of[a];
    } else if (over_plus && over_minus) {
      // A_plusminus goes to Y with the opposite sign.
      y_out.push_back(a);
      y_signs[a] = plus_signed ? gbar : e;
    } else if (over_plus) {
      if (plus_signed) {
        x_out.push_back(a);
        x_signs[a] = e;
      } else {
        y_out.push_back(a);
        y_signs[a] = e;
      }
    } else {
      if (!plus_signed) {
        x_out.push_back(a);
        x_signs[a] = gbar;
      } else {
        y_out.push_back(a);
        y_signs[a] = gbar;
      }
    }
  }
  std::sort(x_out.begin(), x_out.end());
  std::sort(y_out.begin(), y_out.end());
}

// Recursive core: `levels` is the moved-down decomposition of the remaining
// A-part, `b` a zero-index part with signs. Emits value blocks bottom-up.
inline void union_rec(UnionContext& ctx,
                      std::vector<std::vector<int>> levels,
                      std::vector<std::vector<int>> level_signs,
                      std::vector<int> b, std::vector<int> sign_b, bool z2) {
  const GPoset& p = ctx.p;
  if (levels.empty()) {
    ctx.emit(b, sign_b);
    return;
  }
  std::vector<int> a0 = levels.front();
  std::vector<int> sign0 = level_signs.front();
  // Disjointify: drop b-elements already absorbed into the a-part.
  {
    std::vector<bool> in_a(p.size(), false);
    for (const auto& lv : levels)
      for (int x : lv) in_a[x] = true;
    std::vector<int> filtered;
    for (int x : b)
      if (!in_a[x]) filtered.push_back(x);
    b = std::move(filtered);
  }
  transfer_sandwiched(p, a0, sign0, b);
  std::vector<int> d, u;
  split_du(p, a0, b, d, u);
  std::vector<std::vector<int>> rest_levels(levels.begin() + 1, levels.end());
  std::vector<std::vector<int>> rest_signs(level_signs.begin() + 1, level_signs.end());
  if (z2) {
    std::vector<int> x_set, x_signs, y_set, y_signs;
    twelve_set_split(p, a0, sign0, d, u, sign_b, x_set, x_signs, y_set, y_signs);
    ctx.emit(x_set, x_signs);
    union_rec(ctx, std::move(rest_levels), std::move(rest_signs), std::move(y_set),
              std::move(y_signs), z2);
  } else {
    ctx.emit(d, sign_b);
    ctx.emit(a0, sign0);
    union_rec(ctx, std::move(rest_levels), std::move(rest_signs), std::move(u),
              std::move(sign_b), z2);
  }
}

inline GMapCertificate compact_emissions(const GPoset& p, const UnionContext& ctx) {
  GMapCertificate out;
  int value = 0;
  for (const auto& block : ctx.emitted) {
    if (block.members.empty()) continue;
    for (int x : block.members) out.assignment[p.id(x)] = {block.sign_of[x], value};
    ++value;
  }
  out.target_n = value - 1;
  return out;
}

}  // namespace detail

GMapCertificate move_down(const GPoset& p, const GMapCertificate& c);

namespace detail {

// Levels of a certificate as element indices plus per-element sign arrays,
// moved down so that every level-i element (i >= 1) has a predecessor one
// level below.
inline void moved_down_levels(const GPoset& whole, const std::vector<std::string>& part_ids,
                              const GMapCertificate& cert,
                              std::vector<std::vector<int>>& levels,
                              std::vector<std::vector<int>>& level_signs) {
  GPoset sub = restrict_to(whole, part_ids);
  GMapCertificate moved = move_down(sub, cert);
  auto decomp = levels_from_certificate(sub, moved);
  levels.clear();
  level_signs.clear();
  for (std::size_t i = 0; i < decomp.levels.size(); ++i) {
    std::vector<int> members;
    std::vector<int> signs(whole.size(), -1);
    for (const auto& id : decomp.levels[i]) {
      int x = whole.index(id);
      members.push_back(x);
      signs[x] = decomp.signs[i].at(id);
    }
    std::sort(members.begin(), members.end());
    levels.push_back(std::move(members));
    level_signs.push_back(std::move(signs));
  }
}

inline GMapCertificate union_map_driver(const GPoset& p,
                                        const std::vector<std::string>& a_ids,
                                        const std::vector<std::string>& b_ids,
                                        const GMapCertificate& ca, const GMapCertificate& cb,
                                        bool z2) {
  require_valid(p, "union map");
  auto a = subset_indices(p, a_ids);
  auto b = subset_indices(p, b_ids);
  {
    std::vector<bool> covered(p.size(), false);
    for (int x : a) covered[x] = true;
    for (int x : b) covered[x] = true;
    for (int x = 0; x < p.size(); ++x)
      if (!covered[x]) raise(Err::NotCovering, "'" + p.id(x) + "' lies in neither part");
  }
  std::pair<int, int> w;
  if (!is_invariant(p, a_ids, &w))
    raise(Err::NotInvariant, "first part is not G-invariant");
  if (!is_invariant(p, b_ids, &w))
    raise(Err::NotInvariant, "second part is not G-invariant");
  auto ck = check_gmap(restrict_to(p, a_ids), ca);
  if (!ck) raise(Err::InvalidCertificate, "certificate on A: " + ck.witness);
  ck = check_gmap(restrict_to(p, b_ids), cb);
  if (!ck) raise(Err::InvalidCertificate, "certificate on B: " + ck.witness);

  std::vector<std::vector<int>> a_levels, a_level_signs;
  moved_down_levels(p, a_ids, ca, a_levels, a_level_signs);
  std::vector<std::vector<int>> b_levels, b_level_signs;
  moved_down_levels(p, b_ids, cb, b_levels, b_level_signs);

  // Outer induction over B's levels; each step folds one zero-index level
  // into the running union.
  std::vector<std::string> cur_ids = a_ids;
  GMapCertificate cur = ca;
  for (std::size_t k = 0; k < b_levels.size(); ++k) {
    std::vector<std::string> next_ids = cur_ids;
    for (int x : b_levels[k]) next_ids.push_back(p.id(x));
    std::sort(next_ids.begin(), next_ids.end());
    next_ids.erase(std::unique(next_ids.begin(), next_ids.end()), next_ids.end());
    GPoset ctx_poset = restrict_to(p, next_ids);
    std::vector<std::vector<int>> levels, level_signs;
    moved_down_levels(ctx_poset, cur_ids, cur, levels, level_signs);
    std::vector<int> b_elems;
    std::vector<int> b_signs(ctx_poset.size(), -1);
    for (int x : b_levels[k]) {
      int lx = ctx_poset.index(p.id(x));
      b_elems.push_back(lx);
      b_signs[lx] = b_level_signs[k][x];
    }
    std::sort(b_elems.begin(), b_elems.end());
    UnionContext ctx{ctx_poset, {}};
    union_rec(ctx, levels, level_signs, b_elems, b_signs, z2);
    // Re-anchoring the freshly glued certificate collapses the spare slots
    // the per-level emitter leaves behind (a D-block that nothing in the
    // level below supports sinks into it), keeping the value count within
    // the advertised bound.
    cur = move_down(ctx_poset, compact_emissions(ctx_poset, ctx));
    cur_ids = next_ids;
  }
  return cur;
}

}  // namespace detail

// Union of two zero-index parts for any group: at most three values.
inline GMapCertificate union_map_index0(const GPoset& p,
                                        const std::vector<std::string>& a_ids,
                                        const std::vector<std::string>& b_ids,
                                        const SignMap& sign_a, const SignMap& sign_b) {
  detail::require_valid(p, "union_map_index0");
  detail::check_union_covers(p, a_ids, b_ids);
  std::pair<int, int> w;
  if (!is_invariant(p, a_ids, &w) || !is_invariant(p, b_ids, &w))
    raise(Err::NotInvariant, "union parts must be G-invariant");
  detail::check_sign_map(p, subset_indices(p, a_ids), sign_a, "union_map_index0 (A)");
  detail::check_sign_map(p, subset_indices(p, b_ids), sign_b, "union_map_index0 (B)");
  GMapCertificate ca, cb;
  ca.target_n = a_ids.empty() ? -1 : 0;
  for (const auto& id : a_ids) ca.assignment[id] = {sign_a.at(id), 0};
  cb.target_n = b_ids.empty() ? -1 : 0;
  for (const auto& id : b_ids) cb.assignment[id] = {sign_b.at(id), 0};
  if (b_ids.empty()) {
    GMapCertificate out = ca;
    return out;
  }
  if (a_ids.empty()) return cb;
  return detail::union_map_driver(p, a_ids, b_ids, ca, cb, false);
}

// Union of two zero-index parts over the order-2 group: at most two values.
inline GMapCertificate union_map_index0_z2(const GPoset& p,
                                           const std::vector<std::string>& a_ids,
                                           const std::vector<std::string>& b_ids,
                                           const SignMap& sign_a, const SignMap& sign_b) {
  if (p.group().order() != 2)
    raise(Err::WrongGroup, "union_map_index0_z2 needs a group of order 2");
  detail::require_valid(p, "union_map_index0_z2");
  detail::check_union_covers(p, a_ids, b_ids);
  std::pair<int, int> w;
  if (!is_invariant(p, a_ids, &w) || !is_invariant(p, b_ids, &w))
    raise(Err::NotInvariant, "union parts must be G-invariant");
  detail::check_sign_map(p, subset_indices(p, a_ids), sign_a, "union_map_index0_z2 (A)");
  detail::check_sign_map(p, subset_indices(p, b_ids), sign_b, "union_map_index0_z2 (B)");
  GMapCertificate ca, cb;
  ca.target_n = a_ids.empty() ? -1 : 0;
  for (const auto& id : a_ids) ca.assignment[id] = {sign_a.at(id), 0};
  cb.target_n = b_ids.empty() ? -1 : 0;
  for (const auto& id : b_ids) cb.assignment[id] = {sign_b.at(id), 0};
  if (b_ids.empty()) return ca;
  if (a_ids.empty()) return cb;
  return detail::union_map_driver(p, a_ids, b_ids, ca, cb, true);
}

// General union bound: a + 2(b + 1) values past the first, improving to
// a + b + 1 for the order-2 group. Consumes certificates only; never calls
// the exact solver.
inline GMapCertificate union_map_general(const GPoset& p,
                                         const std::vector<std::string>& a_ids,
                                         const std::vector<std::string>& b_ids,
                                         const GMapCertificate& ca, const GMapCertificate& cb) {
  detail::check_union_covers(p, a_ids, b_ids);
  if (a_ids.empty()) {
    auto ck = check_gmap(restrict_to(p, b_ids), cb);
    if (!ck) raise(Err::InvalidCertificate, ck.witness);
    return cb;
  }
  if (b_ids.empty()) {
    auto ck = check_gmap(restrict_to(p, a_ids), ca);
    if (!ck) raise(Err::InvalidCertificate, ck.witness);
    return ca;
  }
  return detail::union_map_driver(p, a_ids, b_ids, ca, cb, p.group().order() == 2);
}

// Relocates, one level at a time, the level-i elements with no strict
// predecessor one level below (together with their down-sets inside the
// level) until every level is anchored from below. Signs are preserved,
// values only decrease.
inline GMapCertificate move_down(const GPoset& p, const GMapCertificate& c) {
  auto decomp = levels_from_certificate(p, c);  // InvalidCertificate on failure
  std::vector<std::vector<int>> levels;
  for (const auto& lv : decomp.levels) levels.push_back(detail::ids_to_indices(p, lv));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i < levels.size(); ++i) {
      auto& upper = levels[i];
      auto& lower = levels[i - 1];
      std::vector<bool> offending(p.size(), false);
      bool any = false;
      for (int y : upper) {
        bool anchored = false;
        for (int x : lower)
          if (p.less(x, y)) {
            anchored = true;
            break;
          }
        if (!anchored) {
          offending[y] = true;
          any = true;
        }
      }
      if (!any) continue;
      // Down-sets of offending elements within the level come along.
      std::vector<int> stay, move;
      for (int y : upper) {
        bool moves = offending[y];
        if (!moves)
          for (int z : upper)
            if (offending[z] && p.less(y, z)) {
              moves = true;
              break;
            }
        (moves ? move : stay).push_back(y);
      }
      upper = std::move(stay);
      lower.insert(lower.end(), move.begin(), move.end());
      std::sort(lower.begin(), lower.end());
      changed = true;
    }
    levels.erase(std::remove_if(levels.begin(), levels.end(),
                                [](const auto& lv) { return lv.empty(); }),
                 levels.end());
  }
  GMapCertificate out;
  out.target_n = static_cast<int>(levels.size()) - 1;
  for (std::size_t i = 0; i < levels.size(); ++i)
    for (int x : levels[i])
      out.assignment[p.id(x)] = {c.assignment.at(p.id(x)).sign, static_cast<int>(i)};
  return out;
}

}  // namespace xindlab
