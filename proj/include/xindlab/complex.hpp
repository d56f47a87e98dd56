#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "xindlab/poset.hpp"

namespace xindlab {

// Finite simplicial complex with a group action on vertices. Facets are
// stored as sorted vertex-index lists with dominated faces dropped. The full
// simplex list is enumerated eagerly and capped: subdivision grows fast and
// must fail loudly rather than hang.
class GSimplicialComplex {
 public:
  static constexpr int max_simplices = 1 << 15;

  GSimplicialComplex(FiniteGroup group, std::vector<std::string> vertex_ids,
                     const std::vector<std::vector<std::string>>& facets,
                     std::vector<std::vector<int>> action)
      : group_(std::move(group)), ids_(std::move(vertex_ids)), action_(std::move(action)) {
    const int n = size();
    for (int i = 0; i < n; ++i)
      if (!index_.emplace(ids_[i], i).second)
        raise(Err::BadParameters, "duplicate vertex id '" + ids_[i] + "'");
    if (static_cast<int>(action_.size()) != group_.order())
      raise(Err::SizeMismatch, "action table must have one row per group element");
    for (const auto& row : action_) {
      if (static_cast<int>(row.size()) != n)
        raise(Err::SizeMismatch, "action row does not cover all vertices");
      for (int x : row)
        if (x < 0 || x >= n) raise(Err::IndexOutOfRange, "action image out of range");
    }
    for (const auto& f : facets) {
      if (f.empty()) {
        construction_notes_.push_back({"facet-nonempty", "input contains an empty facet"});
        continue;
      }
      std::vector<int> fx;
      fx.reserve(f.size());
      for (const auto& v : f) fx.push_back(index(v));
      std::sort(fx.begin(), fx.end());
      fx.erase(std::unique(fx.begin(), fx.end()), fx.end());
      facets_.push_back(std::move(fx));
    }
    // Keep only maximal faces.
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    std::vector<std::vector<int>> maximal;
    for (const auto& f : facets_) {
      bool dominated = false;
      for (const auto& g : facets_)
        if (&f != &g && f.size() < g.size() &&
            std::includes(g.begin(), g.end(), f.begin(), f.end())) {
          dominated = true;
          break;
        }
      if (!dominated) maximal.push_back(f);
    }
    facets_ = std::move(maximal);
    enumerate_simplices();
    run_validation();
  }

  int size() const { return static_cast<int>(ids_.size()); }
  const FiniteGroup& group() const { return group_; }
  const std::vector<std::string>& vertex_ids() const { return ids_; }
  const std::string& id(int i) const { return ids_[i]; }
  int index(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) raise(Err::UnknownId, "no vertex '" + id + "'");
    return it->second;
  }
  bool has_id(const std::string& id) const { return index_.count(id) > 0; }

  int act(int g, int v) const { return action_[g][v]; }
  const std::vector<std::vector<int>>& action() const { return action_; }

  const std::vector<std::vector<int>>& facets() const { return facets_; }
  const std::vector<std::vector<int>>& simplices() const { return simplices_; }

  int dimension() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
  }

  std::vector<int> simplex_image(int g, const std::vector<int>& s) const {
    std::vector<int> out;
    out.reserve(s.size());
    for (int v : s) out.push_back(action_[g][v]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool is_simplex(const std::vector<int>& s) const {
    return std::binary_search(simplices_.begin(), simplices_.end(), s);
  }

  bool is_valid() const { return diagnostics_.empty(); }
  const std::vector<Diagnostic>& validate() const { return diagnostics_; }

  bool operator==(const GSimplicialComplex& o) const {
    return group_ == o.group_ && ids_ == o.ids_ && facets_ == o.facets_ &&
           action_ == o.action_;
  }
  bool operator!=(const GSimplicialComplex& o) const { return !(*this == o); }

 private:
  void enumerate_simplices() {
    std::set<std::vector<int>> seen;
    for (const auto& f : facets_) {
      const int k = static_cast<int>(f.size());
      if (k > 20 || (std::uint64_t(1) << k) > 2u * max_simplices)
        raise(Err::BudgetExceeded,
              "facet of size " + std::to_string(k) + " exceeds the simplex budget");
      for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        std::vector<int> s;
        for (int b = 0; b < k; ++b)
          if (mask & (1u << b)) s.push_back(f[b]);
        seen.insert(std::move(s));
        if (static_cast<int>(seen.size()) > max_simplices)
          raise(Err::BudgetExceeded, "complex has more than " +
                                         std::to_string(max_simplices) + " simplices");
      }
    }
    simplices_.assign(seen.begin(), seen.end());
  }

  void run_validation() {
    diagnostics_ = construction_notes_;
    const int n = size();
    const int go = group_.order();
    const int e = group_.identity();
    for (int x = 0; x < n; ++x)
      if (action_[e][x] != x) {
        diagnostics_.push_back({"identity-action", "identity moves '" + ids_[x] + "'"});
        break;
      }
    bool homomorphic = true;
    for (int h = 0; h < go && homomorphic; ++h)
      for (int g = 0; g < go && homomorphic; ++g)
        for (int x = 0; x < n; ++x)
          if (action_[h][action_[g][x]] != action_[group_.mul(h, g)][x]) {
            diagnostics_.push_back(
                {"left-action", "composition of " + group_.label(g) + " and " +
                                    group_.label(h) + " misbehaves at '" + ids_[x] + "'"});
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
    for (const auto& f : facets_) {
      bool bad = false;
      for (int g = 0; g < go && !bad; ++g)
        if (!is_simplex(simplex_image(g, f))) {
          diagnostics_.push_back({"simpliciality",
                                  "image of a facet under " + group_.label(g) +
                                      " is not a simplex"});
          bad = true;
        }
      if (bad) break;
    }
    // Freeness is required at the simplex level: no g != e may fix a simplex
    // setwise. A vertex-level free action can still fix an edge {v, g·v}.
    bool vertex_free = true;
    for (int g = 0; g < go && vertex_free; ++g)
      for (int x = 0; x < n; ++x)
        if (g != e && action_[g][x] == x) {
          vertex_free = false;
          break;
        }
    for (const auto& s : simplices_) {
      bool fixed = false;
      for (int g = 0; g < go && !fixed; ++g) {
        if (g == e) continue;
        if (simplex_image(g, s) == s) {
          std::string names;
          for (int v : s) names += (names.empty() ? "" : ",") + ids_[v];
          diagnostics_.push_back(
              {"freeness", group_.label(g) + " fixes the simplex {" + names + "}" +
                               (vertex_free ? " (the vertex action itself is free)" : "")});
          fixed = true;
        }
      }
      if (fixed) break;
    }
  }

  FiniteGroup group_;
  std::vector<std::string> ids_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<int>> action_;
  std::vector<std::vector<int>> facets_;
  std::vector<std::vector<int>> simplices_;
  std::vector<Diagnostic> construction_notes_;
  std::vector<Diagnostic> diagnostics_;
};

// Order complex: vertices are the poset's elements, facets its maximal
// chains, with the inherited action.
inline GSimplicialComplex order_complex(const GPoset& p) {
  std::vector<std::vector<std::string>> facets;
  // DFS over covers from each minimal element; every maximal chain is a
  // cover path from a minimal to a maximal element.
  std::vector<int> minimals = p.minimal_elements();
  std::vector<int> path;
  auto emit = [&](const std::vector<int>& chain_idx) {
    std::vector<std::string> f;
    f.reserve(chain_idx.size());
    for (int x : chain_idx) f.push_back(p.id(x));
    facets.push_back(std::move(f));
    if (static_cast<int>(facets.size()) > GSimplicialComplex::max_simplices)
      raise(Err::BudgetExceeded, "order complex exceeds the chain budget");
  };
  struct Frame {
    int node;
    std::size_t next = 0;
  };
  for (int m : minimals) {
    std::vector<Frame> st{{m}};
    path = {m};
    while (!st.empty()) {
      Frame& f = st.back();
      const auto& ups = p.upper_covers(f.node);
      if (ups.empty() && f.next == 0) {
        emit(path);
        ++f.next;
        continue;
      }
      if (f.next >= ups.size()) {
        st.pop_back();
        path.pop_back();
        continue;
      }
      int child = ups[f.next++];
      st.push_back({child});
      path.push_back(child);
    }
  }
  return GSimplicialComplex(p.group(), p.ids(), facets, p.action());
}

namespace detail {

inline std::string simplex_id(const GSimplicialComplex& k, const std::vector<int>& s) {
  std::vector<std::string> names;
  names.reserve(s.size());
  for (int v : s) names.push_back(k.id(v));
  std::sort(names.begin(), names.end());
  std::string out = "{";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ",";
    out += names[i];
  }
  return out + "}";
}

}  // namespace detail

// Face poset: all nonempty simplices ordered by inclusion, covers are the
// codimension-1 inclusions.
inline GPoset face_poset(const GSimplicialComplex& k) {
  const auto& simplices = k.simplices();
  const int m = static_cast<int>(simplices.size());
  std::map<std::vector<int>, int> pos;
  for (int i = 0; i < m; ++i) pos.emplace(simplices[i], i);
  std::vector<std::string> ids(m);
  for (int i = 0; i < m; ++i) ids[i] = detail::simplex_id(k, simplices[i]);
  std::vector<std::pair<std::string, std::string>> covers;
  for (int i = 0; i < m; ++i) {
    const auto& s = simplices[i];
    if (s.size() == 1) continue;
    std::vector<int> face(s.size() - 1);
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      face.clear();
      for (std::size_t j = 0; j < s.size(); ++j)
        if (j != drop) face.push_back(s[j]);
      covers.push_back({ids[pos.at(face)], ids[i]});
    }
  }
  std::vector<std::vector<int>> action(k.group().order(), std::vector<int>(m));
  for (int g = 0; g < k.group().order(); ++g)
    for (int i = 0; i < m; ++i) {
      auto img = k.simplex_image(g, simplices[i]);
      auto it = pos.find(img);
      if (it == pos.end())
        raise(Err::FreenessViolated,
              "action of " + k.group().label(g) + " does not permute the simplices");
      if (it->second == i && g != k.group().identity())
        raise(Err::FreenessViolated, k.group().label(g) + " fixes the simplex " + ids[i]);
      action[g][i] = it->second;
    }
  return GPoset(k.group(), std::move(ids), covers, std::move(action), true);
}

inline GSimplicialComplex barycentric_subdivision(const GSimplicialComplex& k) {
  return order_complex(face_poset(k));
}

inline GSimplicialComplex barycentric_subdivision(const GSimplicialComplex& k, int r) {
  if (r < 0) raise(Err::BadParameters, "subdivision depth must be >= 0");
  GSimplicialComplex out = k;
  for (int i = 0; i < r; ++i) out = barycentric_subdivision(out);
  return out;
}

// E_nG: vertex set G x {0..n}; a set of vertices spans a simplex exactly when
// the values are pairwise distinct. Facets pick one group element per value.
inline GSimplicialComplex e_n_g(const FiniteGroup& g, int n) {
  if (n < 0) raise(Err::BadParameters, "e_n_g needs n >= 0");
  const int go = g.order();
  std::vector<std::string> ids;
  for (int v = 0; v <= n; ++v)
    for (int s = 0; s < go; ++s) ids.push_back(g.label(s) + "·v" + std::to_string(v));
  auto vid = [&](int s, int v) { return v * go + s; };
  std::vector<std::vector<std::string>> facets;
  std::vector<int> choice(n + 1, 0);
  while (true) {
    std::vector<std::string> f;
    for (int v = 0; v <= n; ++v) f.push_back(ids[vid(choice[v], v)]);
    facets.push_back(std::move(f));
    int i = 0;
    while (i <= n && ++choice[i] == go) choice[i++] = 0;
    if (i > n) break;
  }
  std::vector<std::vector<int>> action(go, std::vector<int>(ids.size()));
  for (int h = 0; h < go; ++h)
    for (int v = 0; v <= n; ++v)
      for (int s = 0; s < go; ++s) action[h][vid(s, v)] = vid(g.mul(h, s), v);
  return GSimplicialComplex(g, std::move(ids), facets, std::move(action));
}

// The graph K x G on V(K) x G: an edge joins (k,h) and (k',h') precisely when
// k != k' and kk' is an edge of K, independently of h and h'. G acts on the
// second coordinate.
inline GSimplicialComplex k_times_g(const std::vector<std::string>& vertices,
                                    const std::vector<std::pair<std::string, std::string>>& edges,
                                    const FiniteGroup& g) {
  const int nv = static_cast<int>(vertices.size());
  std::map<std::string, int> vix;
  for (int i = 0; i < nv; ++i)
    if (!vix.emplace(vertices[i], i).second)
      raise(Err::BadParameters, "duplicate graph vertex '" + vertices[i] + "'");
  std::set<std::pair<int, int>> es;
  for (const auto& [a, b] : edges) {
    auto ia = vix.find(a), ib = vix.find(b);
    if (ia == vix.end() || ib == vix.end())
      raise(Err::UnknownId, "edge endpoint not among the vertices");
    if (ia->second == ib->second)
      raise(Err::LoopEdge, "loop at vertex '" + a + "'");
    es.insert({std::min(ia->second, ib->second), std::max(ia->second, ib->second)});
  }
  const int go = g.order();
  std::vector<std::string> ids;
  for (int k = 0; k < nv; ++k)
    for (int h = 0; h < go; ++h) ids.push_back(g.label(h) + "·" + vertices[k]);
  auto vid = [&](int k, int h) { return k * go + h; };
  std::vector<std::vector<std::string>> facets;
  for (auto [a, b] : es)
    for (int h = 0; h < go; ++h)
      for (int h2 = 0; h2 < go; ++h2)
        facets.push_back({ids[vid(a, h)], ids[vid(b, h2)]});
  std::vector<bool> touched(nv, false);
  for (auto [a, b] : es) touched[a] = touched[b] = true;
  for (int k = 0; k < nv; ++k)
    if (!touched[k])
      for (int h = 0; h < go; ++h) facets.push_back({ids[vid(k, h)]});
  std::vector<std::vector<int>> action(go, std::vector<int>(ids.size()));
  for (int h0 = 0; h0 < go; ++h0)
    for (int k = 0; k < nv; ++k)
      for (int h = 0; h < go; ++h) action[h0][vid(k, h)] = vid(k, g.mul(h0, h));
  return GSimplicialComplex(g, std::move(ids), facets, std::move(action));
}

// All 2-subsets of simplices, i.e. the edges of the 1-skeleton.
inline std::vector<std::pair<std::string, std::string>> one_skeleton(
    const GSimplicialComplex& k) {
  std::set<std::pair<int, int>> es;
  for (const auto& f : k.facets())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j) es.insert({f[i], f[j]});
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(es.size());
  for (auto [a, b] : es) out.push_back({k.id(a), k.id(b)});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace xindlab
