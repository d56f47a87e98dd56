#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "xindlab/complex.hpp"
#include "xindlab/poset.hpp"

namespace xindlab {

struct ExpectedValue {
  int value = 0;
  std::string basis;  // "definition", "construction" or "verified"
};

// A generated poset together with its named invariant subsets and the values
// the construction promises; the solver confirms them in the test corpus.
struct ExampleBundle {
  GPoset poset;
  std::map<std::string, std::vector<std::string>> subsets;
  std::map<std::string, ExpectedValue> expected;
  std::map<std::string, std::string> notes;
};

namespace gen_detail {

constexpr const char* sep = "·";

inline std::string tagged(const FiniteGroup& g, int s, const std::string& tag) {
  return g.label(s) + sep + tag;
}

// Elements (g, tag) for tag in a fixed list, with left translation on the
// first coordinate. Relations come in as (tag_a, g_label_rel, tag_b) meaning
// h·tag_a < (h·g_rel)·tag_b for every h.
struct OrbitBuilder {
  const FiniteGroup& g;
  std::vector<std::string> tags;
  std::vector<std::pair<std::string, std::string>> covers;

  explicit OrbitBuilder(const FiniteGroup& group) : g(group) {}

  void add_orbit(const std::string& tag) { tags.push_back(tag); }

  void relate(const std::string& tag_a, int rel, const std::string& tag_b) {
    for (int h = 0; h < g.order(); ++h)
      covers.push_back({tagged(g, h, tag_a), tagged(g, g.mul(h, rel), tag_b)});
  }

  GPoset build() const {
    std::vector<std::string> ids;
    for (const auto& tag : tags)
      for (int s = 0; s < g.order(); ++s) ids.push_back(tagged(g, s, tag));
    auto vid = [&](int orbit, int s) { return orbit * g.order() + s; };
    std::vector<std::vector<int>> action(g.order(), std::vector<int>(ids.size()));
    for (int h = 0; h < g.order(); ++h)
      for (std::size_t o = 0; o < tags.size(); ++o)
        for (int s = 0; s < g.order(); ++s)
          action[h][vid(static_cast<int>(o), s)] =
              vid(static_cast<int>(o), g.mul(h, s));
    return GPoset(g, std::move(ids), covers, std::move(action));
  }

  std::vector<std::string> orbit_ids(const std::vector<std::string>& which) const {
    std::vector<std::string> out;
    for (const auto& tag : which)
      for (int s = 0; s < g.order(); ++s) out.push_back(tagged(g, s, tag));
    return out;
  }
};

inline GPoset prefixed(const GPoset& p, const std::string& prefix) {
  std::vector<std::string> ids;
  ids.reserve(p.size());
  for (const auto& id : p.ids()) ids.push_back(prefix + id);
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [a, b] : p.covers()) covers.push_back({ids[a], ids[b]});
  return GPoset(p.group(), std::move(ids), covers, p.action(), true);
}

}  // namespace gen_detail

// Q_nG: G x {0..n}, (g,i) < (h,j) iff i < j; n = -1 is the empty poset.
inline GPoset gen_qn(const FiniteGroup& g, int n) {
  if (n < -1) raise(Err::BadParameters, "gen_qn needs n >= -1");
  gen_detail::OrbitBuilder b(g);
  for (int v = 0; v <= n; ++v) b.add_orbit("v" + std::to_string(v));
  for (int v = 0; v + 1 <= n; ++v)
    for (int rel = 0; rel < g.order(); ++rel)
      b.relate("v" + std::to_string(v), rel, "v" + std::to_string(v + 1));
  return b.build();
}

// The height-2 poset on six orbits a1..a6 whose cross-index equals its
// height. g_star is the twist applied between the a1 and a4 orbits.
inline ExampleBundle gen_pg(const FiniteGroup& g, int g_star) {
  if (g_star == g.identity()) raise(Err::IdentityStar, "g_star must not be the identity");
  if (g_star < 0 || g_star >= g.order()) raise(Err::IndexOutOfRange, "g_star out of range");
  gen_detail::OrbitBuilder b(g);
  for (int i = 1; i <= 6; ++i) b.add_orbit("a" + std::to_string(i));
  const int e = g.identity();
  b.relate("a1", e, "a3");
  b.relate("a2", e, "a4");
  b.relate("a1", g_star, "a4");
  b.relate("a2", e, "a3");
  for (int rel = 0; rel < g.order(); ++rel) {
    b.relate("a3", rel, "a5");
    b.relate("a4", rel, "a6");
  }
  ExampleBundle out{b.build(), {}, {}, {}};
  out.subsets["P1"] = b.orbit_ids({"a1", "a2", "a3", "a4"});
  out.expected["xind"] = {2, "verified"};
  out.expected["height"] = {2, "construction"};
  out.expected["elements"] = {6 * g.order(), "construction"};
  return out;
}

// Seven-orbit union example: P1 = A ∪ E and P2 = B ∪ C1 ∪ C2 ∪ C3 ∪ D both
// have index zero while the whole poset does not embed in two levels. Arrow
// labels: A --g_i--> C_i, B --e--> C_i, C_i --e--> D, C_i --g_i^{-1}--> E.
inline ExampleBundle gen_mu_example(const FiniteGroup& g, int g1, int g2, int g3) {
  if (g.order() < 3) raise(Err::GroupTooSmall, "need |G| >= 3");
  if (g1 == g2 || g1 == g3 || g2 == g3) raise(Err::NotDistinct, "g1, g2, g3 must be distinct");
  for (int gi : {g1, g2, g3})
    if (gi < 0 || gi >= g.order()) raise(Err::IndexOutOfRange, "label index out of range");
  gen_detail::OrbitBuilder b(g);
  for (const char* tag : {"A", "B", "C1", "C2", "C3", "D", "E"}) b.add_orbit(tag);
  const int e = g.identity();
  const int gs[3] = {g1, g2, g3};
  for (int i = 0; i < 3; ++i) {
    std::string ci = "C" + std::to_string(i + 1);
    b.relate("A", gs[i], ci);
    b.relate("B", e, ci);
    b.relate(ci, e, "D");
    b.relate(ci, g.inv(gs[i]), "E");
  }
  ExampleBundle out{b.build(), {}, {}, {}};
  out.subsets["P1"] = b.orbit_ids({"A", "E"});
  out.subsets["P2"] = b.orbit_ids({"B", "C1", "C2", "C3", "D"});
  out.expected["xind"] = {2, "verified"};
  out.expected["xind:P1"] = {0, "construction"};
  out.expected["xind:P2"] = {0, "construction"};
  out.expected["height"] = {2, "construction"};
  out.expected["sind-order-complex"] = {1, "verified"};
  // The zigzag A -> C3 -> B -> C2 -> A returns to the orbit of A at the
  // element below; with left actions the endpoint is (g3·g2^{-1})_A.
  out.notes["zigzag-endpoint"] =
      gen_detail::tagged(g, g.mul(g3, g.inv(g2)), "A");
  return out;
}

// Join of n+1 copies of the seven-orbit example with Q_{m-n-1}G: the two
// named parts have indices m and n while the whole needs m + 2(n+1).
inline ExampleBundle gen_sharp_family(const FiniteGroup& g, int m, int n) {
  if (g.order() < 3) raise(Err::GroupTooSmall, "need |G| >= 3");
  if (n < 0 || m < n) raise(Err::BadParameters, "need m >= n >= 0");
  const int elements = (n + 1) * 7 * g.order() + (m - n - 1 + 1) * g.order();
  if (elements > 60)
    raise(Err::BadParameters, "instance would have " + std::to_string(elements) +
                                  " elements; the cap is 60");
  ExampleBundle mu = gen_mu_example(g, 0, 1, 2);
  std::vector<std::string> q1, q2;
  GPoset acc = gen_detail::prefixed(mu.poset, "c0:");
  auto add_prefixed = [](std::vector<std::string>& out, const std::vector<std::string>& ids,
                         const std::string& prefix) {
    for (const auto& id : ids) out.push_back(prefix + id);
  };
  add_prefixed(q1, mu.subsets["P1"], "c0:");
  add_prefixed(q2, mu.subsets["P2"], "c0:");
  for (int i = 1; i <= n; ++i) {
    std::string prefix = "c" + std::to_string(i) + ":";
    acc = join(acc, gen_detail::prefixed(mu.poset, prefix));
    add_prefixed(q1, mu.subsets["P1"], prefix);
    add_prefixed(q2, mu.subsets["P2"], prefix);
  }
  if (m - n - 1 >= 0) {
    GPoset tail = gen_detail::prefixed(gen_qn(g, m - n - 1), "t:");
    add_prefixed(q1, tail.ids(), "");
    acc = join(acc, tail);
  }
  ExampleBundle out{std::move(acc), {}, {}, {}};
  out.subsets["Q1"] = std::move(q1);
  out.subsets["Q2"] = std::move(q2);
  out.expected["xind"] = {m + 2 * (n + 1), "verified"};
  out.expected["xind:Q1"] = {m, "construction"};
  out.expected["xind:Q2"] = {n, "construction"};
  return out;
}

// Q_nZ2 split at value m: the union bound for the order-2 group is attained.
inline ExampleBundle gen_z2_sharp(int n, int m) {
  if (n < 0 || m < 0 || m > n) raise(Err::BadParameters, "need 0 <= m <= n");
  FiniteGroup z2 = FiniteGroup::cyclic(2);
  GPoset q = gen_qn(z2, n);
  std::vector<std::string> a, b;
  for (int v = 0; v <= n; ++v)
    for (int s = 0; s < 2; ++s) {
      std::string id = z2.label(s) + std::string(gen_detail::sep) + "v" + std::to_string(v);
      (v <= m ? a : b).push_back(id);
    }
  ExampleBundle out{std::move(q), {}, {}, {}};
  out.subsets["A"] = std::move(a);
  out.subsets["B"] = std::move(b);
  out.expected["xind"] = {n, "verified"};
  out.expected["xind:A"] = {m, "construction"};
  out.expected["xind:B"] = {n - m - 1, "construction"};
  return out;
}

// Iterated join of k copies of a poset.
inline GPoset gen_join_power(const GPoset& p, int k) {
  if (k < 1) raise(Err::BadParameters, "join power needs k >= 1");
  if (k == 1) return p;
  GPoset acc = gen_detail::prefixed(p, "c0:");
  for (int i = 1; i < k; ++i)
    acc = join(acc, gen_detail::prefixed(p, "c" + std::to_string(i) + ":"));
  return acc;
}

enum class RandomMode { layered, general };

// Seed-deterministic free G-poset on labelled orbits o1..ok. Layered mode
// only relates lower-numbered orbits to higher ones, so every draw is valid;
// general mode samples labelled covers in both directions and resamples on
// cycles.
inline GPoset random_free_gposet(const FiniteGroup& g, int orbit_count, double density,
                                 std::uint64_t seed, RandomMode mode = RandomMode::layered) {
  if (orbit_count < 1) raise(Err::BadParameters, "need at least one orbit");
  if (density < 0.0 || density > 1.0) raise(Err::BadParameters, "density must be in [0,1]");
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 0x243f6a8885a308d3ull);
  auto coin = [&](double prob) {
    return (rng() >> 11) * 0x1.0p-53 < prob;
  };
  auto tag = [](int i) { return "o" + std::to_string(i + 1); };
  const int attempts = mode == RandomMode::layered ? 1 : 1000;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    gen_detail::OrbitBuilder b(g);
    for (int i = 0; i < orbit_count; ++i) b.add_orbit(tag(i));
    for (int i = 0; i < orbit_count; ++i)
      for (int j = 0; j < orbit_count; ++j) {
        if (i == j || (mode == RandomMode::layered && i > j)) continue;
        for (int rel = 0; rel < g.order(); ++rel)
          if (coin(density)) b.relate(tag(i), rel, tag(j));
      }
    GPoset p = b.build();
    if (p.order_valid()) return p;
  }
  raise(Err::BadParameters, "rejection sampling failed after 1000 attempts");
}

// Each orbit tossed to one side; both sides are invariant and cover P.
inline std::pair<std::vector<std::string>, std::vector<std::string>>
random_invariant_bipartition(const GPoset& p, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0xd1342543de82ef95ull + 0x632be59bd9b4e019ull);
  const auto& orb = p.orbits();
  std::pair<std::vector<std::string>, std::vector<std::string>> out;
  for (const auto& members : orb.orbits) {
    auto& side = (rng() & 1) ? out.first : out.second;
    for (int x : members) side.push_back(p.id(x));
  }
  std::sort(out.first.begin(), out.first.end());
  std::sort(out.second.begin(), out.second.end());
  return out;
}

}  // namespace xindlab
