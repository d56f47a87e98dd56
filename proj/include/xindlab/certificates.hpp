#pragma once

#include <map>
#include <queue>
#include <string>
#include <vector>

#include "xindlab/complex.hpp"
#include "xindlab/poset.hpp"

namespace xindlab {

struct SignValue {
  int sign = 0;
  int value = 0;
  bool operator==(const SignValue&) const = default;
};

// Witness of a G-map P -> Q_nG: per element a sign (group element index) and
// a value in 0..target_n. target_n = -1 encodes the empty map.
struct GMapCertificate {
  int target_n = -1;
  std::map<std::string, SignValue> assignment;
};

// Witness of a G-simplicial map K -> E_nG on vertices.
struct SindCertificate {
  int target_n = -1;
  std::map<std::string, SignValue> assignment;
};

struct CheckResult {
  bool ok = true;
  std::string witness;
  explicit operator bool() const { return ok; }
};

namespace detail {

inline void require_valid(const GPoset& p, const char* who) {
  if (!p.is_valid())
    raise(Err::BadParameters, std::string(who) + " requires a valid poset; first diagnostic: " +
                                  p.validate().front().axiom);
}

inline void require_valid(const GSimplicialComplex& k, const char* who) {
  if (!k.is_valid())
    raise(Err::BadParameters, std::string(who) + " requires a valid complex; first diagnostic: " +
                                  k.validate().front().axiom);
}

template <typename Obj, typename Cert>
void check_structure(const Obj& obj, const Cert& c) {
  for (const auto& [id, sv] : c.assignment) {
    if (!obj.has_id(id)) raise(Err::UnknownId, "certificate mentions unknown id '" + id + "'");
    if (sv.sign < 0 || sv.sign >= obj.group().order())
      raise(Err::IndexOutOfRange, "sign index out of range at '" + id + "'");
    if (sv.value < 0 || sv.value > c.target_n)
      raise(Err::ValueOutOfRange, "value " + std::to_string(sv.value) + " at '" + id +
                                      "' outside 0.." + std::to_string(c.target_n));
  }
}

}  // namespace detail

// Full audit of a G-map certificate: totality, equivariance over every
// (g, element), and monotonicity over every comparable pair from the full
// reachability relation — deliberately more than the covers the solver
// branches on.
inline CheckResult check_gmap(const GPoset& p, const GMapCertificate& c) {
  detail::check_structure(p, c);
  for (const auto& id : p.ids())
    if (!c.assignment.count(id)) return {false, "element '" + id + "' has no assignment"};
  const auto& g = p.group();
  std::vector<SignValue> a(p.size());
  for (int i = 0; i < p.size(); ++i) a[i] = c.assignment.at(p.id(i));
  for (int h = 0; h < g.order(); ++h)
    for (int x = 0; x < p.size(); ++x) {
      SignValue img = a[p.act(h, x)];
      SignValue want{g.mul(h, a[x].sign), a[x].value};
      if (!(img == want))
        return {false, "equivariance fails: " + g.label(h) + "·'" + p.id(x) +
                           "' is assigned (" + g.label(img.sign) + "," +
                           std::to_string(img.value) + "), expected (" +
                           g.label(want.sign) + "," + std::to_string(want.value) + ")"};
    }
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y) {
      if (x == y || !p.less(x, y)) continue;
      bool ok = a[x].value < a[y].value || a[x] == a[y];
      if (!ok)
        return {false, "monotonicity fails on '" + p.id(x) + "' < '" + p.id(y) +
                           "': images (" + g.label(a[x].sign) + "," +
                           std::to_string(a[x].value) + ") vs (" + g.label(a[y].sign) +
                           "," + std::to_string(a[y].value) + ")"};
    }
  return {};
}

// Audit of a simplicial certificate: totality, equivariance, and the simplex
// condition on every facet (two vertices with different images must get
// different values).
inline CheckResult check_sind(const GSimplicialComplex& k, const SindCertificate& c) {
  detail::check_structure(k, c);
  for (const auto& id : k.vertex_ids())
    if (!c.assignment.count(id)) return {false, "vertex '" + id + "' has no assignment"};
  const auto& g = k.group();
  std::vector<SignValue> a(k.size());
  for (int i = 0; i < k.size(); ++i) a[i] = c.assignment.at(k.id(i));
  for (int h = 0; h < g.order(); ++h)
    for (int x = 0; x < k.size(); ++x) {
      SignValue img = a[k.act(h, x)];
      SignValue want{g.mul(h, a[x].sign), a[x].value};
      if (!(img == want))
        return {false, "equivariance fails at " + g.label(h) + "·'" + k.id(x) + "'"};
    }
  for (const auto& f : k.facets())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) {
        const SignValue &u = a[f[i]], &v = a[f[j]];
        if (u.value == v.value && u.sign != v.sign)
          return {false, "vertices '" + k.id(f[i]) + "' and '" + k.id(f[j]) +
                             "' share a facet but collide at value " +
                             std::to_string(u.value)};
      }
  return {};
}

struct ZeroIndexResult {
  bool zero = false;
  GMapCertificate certificate;       // valid when zero
  std::vector<std::string> path;     // comparability path joining a same-orbit pair otherwise
};

struct SindZeroResult {
  bool zero = false;
  SindCertificate certificate;
  std::vector<std::string> path;     // 1-skeleton path otherwise
};

namespace detail {

// Shared component analysis: elements 0..n-1, an adjacency oracle, a free
// orbit structure. Index zero holds exactly when no component holds two
// elements of one orbit; the sign map then propagates a representative sign
// over each component orbit.
struct ComponentZero {
  std::vector<int> comp_of;
  int comp_count = 0;
  bool zero = true;
  int clash_a = -1, clash_b = -1;  // same orbit, same component

  template <typename Adj>
  ComponentZero(int n, const OrbitPartition& orb, Adj&& adjacent) {
    comp_of.assign(n, -1);
    for (int s = 0; s < n; ++s) {
      if (comp_of[s] != -1) continue;
      int c = comp_count++;
      std::vector<int> stack{s};
      comp_of[s] = c;
      while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (int y = 0; y < n; ++y)
          if (comp_of[y] == -1 && adjacent(x, y)) {
            comp_of[y] = c;
            stack.push_back(y);
          }
      }
    }
    std::vector<std::map<int, int>> seen(comp_count);
    for (int x = 0; x < n && zero; ++x) {
      auto [it, fresh] = seen[comp_of[x]].emplace(orb.orbit_of[x], x);
      if (!fresh) {
        zero = false;
        clash_a = it->second;
        clash_b = x;
      }
    }
  }
};

// Sign map with value 0 from a free component structure: components form
// free G-orbits; the least-id component of each class gets sign e.
template <typename Act>
std::vector<int> component_signs(int n, int comp_count, const std::vector<int>& comp_of,
                                 const FiniteGroup& g, Act&& act,
                                 const std::vector<std::string>& ids) {
  std::vector<int> comp_min(comp_count, -1);
  for (int x = 0; x < n; ++x) {
    int c = comp_of[x];
    if (comp_min[c] == -1 || ids[x] < ids[comp_min[c]]) comp_min[c] = x;
  }
  std::vector<int> sign_of_comp(comp_count, -1);
  std::vector<int> order(comp_count);
  for (int c = 0; c < comp_count; ++c) order[c] = c;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return ids[comp_min[a]] < ids[comp_min[b]]; });
  for (int c : order) {
    if (sign_of_comp[c] != -1) continue;
    sign_of_comp[c] = g.identity();
    int x0 = comp_min[c];
    for (int h = 0; h < g.order(); ++h) {
      int cc = comp_of[act(h, x0)];
      if (sign_of_comp[cc] == -1) sign_of_comp[cc] = h;
    }
  }
  std::vector<int> out(n);
  for (int x = 0; x < n; ++x) out[x] = sign_of_comp[comp_of[x]];
  return out;
}

template <typename Adj>
std::vector<std::string> bfs_path(int n, int from, int to, Adj&& adjacent,
                                  const std::vector<std::string>& ids) {
  std::vector<int> prev(n, -2);
  std::queue<int> q;
  q.push(from);
  prev[from] = -1;
  while (!q.empty()) {
    int x = q.front();
    q.pop();
    if (x == to) break;
    for (int y = 0; y < n; ++y)
      if (prev[y] == -2 && adjacent(x, y)) {
        prev[y] = x;
        q.push(y);
      }
  }
  std::vector<std::string> path;
  for (int x = to; x != -1; x = prev[x]) path.push_back(ids[x]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace detail

// Cross-index-zero test: true exactly when no comparability component holds
// two elements of one orbit. Emits either a target-0 certificate or the
// violating comparability path.
inline ZeroIndexResult xind_zero(const GPoset& p) {
  const auto& orb = p.orbits();
  auto adj = [&](int x, int y) { return p.comparable(x, y); };
  detail::ComponentZero cz(p.size(), orb, adj);
  ZeroIndexResult out;
  out.zero = cz.zero;
  if (!cz.zero) {
    out.path = detail::bfs_path(p.size(), cz.clash_a, cz.clash_b, adj, p.ids());
    return out;
  }
  auto signs = detail::component_signs(
      p.size(), cz.comp_count, cz.comp_of, p.group(),
      [&](int h, int x) { return p.act(h, x); }, p.ids());
  out.certificate.target_n = p.empty() ? -1 : 0;
  for (int x = 0; x < p.size(); ++x) out.certificate.assignment[p.id(x)] = {signs[x], 0};
  return out;
}

// Simplicial-index-zero test on the 1-skeleton.
inline SindZeroResult sind_zero(const GSimplicialComplex& k) {
  std::vector<std::vector<bool>> adj_m(k.size(), std::vector<bool>(k.size(), false));
  for (const auto& f : k.facets())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j)
        adj_m[f[i]][f[j]] = adj_m[f[j]][f[i]] = true;
  // Orbit structure of the vertex action.
  std::vector<std::vector<int>> act = k.action();
  GPoset discrete(k.group(), k.vertex_ids(), {}, act, true);
  const auto& orb = discrete.orbits();
  auto adj = [&](int x, int y) { return adj_m[x][y]; };
  detail::ComponentZero cz(k.size(), orb, adj);
  SindZeroResult out;
  out.zero = cz.zero;
  if (!cz.zero) {
    out.path = detail::bfs_path(k.size(), cz.clash_a, cz.clash_b, adj, k.vertex_ids());
    return out;
  }
  auto signs = detail::component_signs(
      k.size(), cz.comp_count, cz.comp_of, k.group(),
      [&](int h, int x) { return k.act(h, x); }, k.vertex_ids());
  out.certificate.target_n = k.size() == 0 ? -1 : 0;
  for (int x = 0; x < k.size(); ++x) out.certificate.assignment[k.id(x)] = {signs[x], 0};
  return out;
}

}  // namespace xindlab
