#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "xindlab/construct.hpp"
#include "xindlab/generators.hpp"
#include "xindlab/solver.hpp"

namespace xindlab::verify {

struct CheckRow {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  bool pass = false;
  double seconds = 0.0;
  std::vector<CheckRow> rows;
};

namespace detail {

template <typename F>
void add_row(std::vector<CheckRow>& rows, const std::string& name, F&& f) {
  try {
    auto [ok, msg] = f();
    rows.push_back({name, ok, msg});
  } catch (const std::exception& e) {
    rows.push_back({name, false, std::string("error: ") + e.what()});
  }
}

inline std::string plural(int n, const char* what) {
  return std::to_string(n) + " " + what + (n == 1 ? "" : "s");
}

// Deterministic stream of small layered posets over Z2/Z3.
inline std::vector<GPoset> layered_stream(int count, std::uint64_t seed0, int max_orbits) {
  std::vector<GPoset> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    auto g = FiniteGroup::cyclic(i % 2 ? 3 : 2);
    int orbits = 1 + static_cast<int>((seed0 + i) % max_orbits);
    double density = 0.2 + 0.2 * (i % 4);
    out.push_back(random_free_gposet(g, orbits, density, seed0 + i));
  }
  return out;
}

inline std::vector<GPoset> layered_stream_for(const FiniteGroup& g, int count,
                                              std::uint64_t seed0, int max_orbits) {
  std::vector<GPoset> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    int orbits = 1 + static_cast<int>((seed0 + i) % max_orbits);
    double density = 0.2 + 0.2 * (i % 4);
    out.push_back(random_free_gposet(g, orbits, density, seed0 + i));
  }
  return out;
}

// Equivariant certificate with seeded signs and values: values start from a
// random bump over the level function and are repaired along the orbit-level
// cover constraints in topological order. Used to exercise move_down.
inline GMapCertificate random_certificate(const GPoset& p, std::uint64_t seed) {
  const auto& orb = p.orbits();
  const auto& g = p.group();
  const int k = static_cast<int>(orb.orbits.size());
  std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dull + 1);
  std::vector<int> sign(k), value(k);
  for (int o = 0; o < k; ++o) {
    sign[o] = static_cast<int>(rng() % g.order());
    value[o] = p.level(orb.representative[o]) + static_cast<int>(rng() % 3);
  }
  // Orbit arcs from covers: label t means equality needs s_b = t·s_a.
  std::map<std::pair<int, int>, std::set<int>> labels;
  for (auto [x, y] : p.covers()) {
    int t = g.mul(g.inv(orb.g_of[y]), orb.g_of[x]);
    labels[{orb.orbit_of[x], orb.orbit_of[y]}].insert(t);
  }
  // Kahn order over the orbit digraph (acyclic for valid posets).
  std::vector<std::vector<int>> succ(k);
  std::vector<int> indeg(k, 0);
  for (const auto& [pair, ts] : labels) {
    succ[pair.first].push_back(pair.second);
    ++indeg[pair.second];
  }
  std::vector<int> order, queue;
  for (int o = 0; o < k; ++o)
    if (indeg[o] == 0) queue.push_back(o);
  while (!queue.empty()) {
    int o = queue.back();
    queue.pop_back();
    order.push_back(o);
    for (int s : succ[o])
      if (--indeg[s] == 0) queue.push_back(s);
  }
  for (int o : order)
    for (const auto& [pair, ts] : labels) {
      if (pair.second != o) continue;
      int a = pair.first;
      bool equality_ok = ts.size() == 1 && sign[o] == g.mul(*ts.begin(), sign[a]);
      int lo = value[a] + (equality_ok ? 0 : 1);
      value[o] = std::max(value[o], lo);
    }
  GMapCertificate c;
  for (int o = 0; o < k; ++o)
    for (int x : orb.orbits[o]) {
      c.assignment[p.id(x)] = {g.mul(orb.g_of[x], sign[o]), value[o]};
      c.target_n = std::max(c.target_n, value[o]);
    }
  return c;
}

struct ZeroUnion {
  GPoset poset;
  std::vector<std::string> a_ids, b_ids;
  SignMap sign_a, sign_b;
};

// Union instance whose two invariant parts are kept at index zero while
// random labelled relations are added greedily (within parts and across).
inline ZeroUnion random_zero_index_union(const FiniteGroup& g, int ka, int kb,
                                         double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ull + 17);
  auto coin = [&](double prob) { return (rng() >> 11) * 0x1.0p-53 < prob; };
  std::vector<std::string> tags;
  for (int i = 0; i < ka; ++i) tags.push_back("a" + std::to_string(i + 1));
  for (int i = 0; i < kb; ++i) tags.push_back("b" + std::to_string(i + 1));
  const int k = ka + kb;
  std::vector<std::tuple<int, int, int>> accepted;  // (from tag, label, to tag)
  auto build = [&](const std::vector<std::tuple<int, int, int>>& rels) {
    gen_detail::OrbitBuilder b(g);
    for (const auto& t : tags) b.add_orbit(t);
    for (auto [i, rel, j] : rels) b.relate(tags[i], rel, tags[j]);
    return b.build();
  };
  auto part_ids = [&](bool first) {
    gen_detail::OrbitBuilder b(g);
    for (const auto& t : tags) b.add_orbit(t);
    std::vector<std::string> which(tags.begin() + (first ? 0 : ka),
                                   first ? tags.begin() + ka : tags.end());
    return b.orbit_ids(which);
  };
  const auto a_ids = part_ids(true);
  const auto b_ids = part_ids(false);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if (i == j) continue;
      for (int rel = 0; rel < g.order(); ++rel) {
        if (!coin(density)) continue;
        auto candidate = accepted;
        candidate.push_back({i, rel, j});
        GPoset p = build(candidate);
        if (!p.is_valid()) continue;
        if (!xind_zero(restrict_to(p, a_ids)).zero) continue;
        if (!xind_zero(restrict_to(p, b_ids)).zero) continue;
        accepted = std::move(candidate);
      }
    }
  GPoset p = build(accepted);
  ZeroUnion out{p, a_ids, b_ids, {}, {}};
  auto za = xind_zero(restrict_to(p, a_ids));
  auto zb = xind_zero(restrict_to(p, b_ids));
  for (const auto& [id, sv] : za.certificate.assignment) out.sign_a[id] = sv.sign;
  for (const auto& [id, sv] : zb.certificate.assignment) out.sign_b[id] = sv.sign;
  return out;
}

// Facet-orbit split of an order complex into two invariant subcomplex face
// families covering the face poset; first part downward-closed by
// construction.
struct FacetSplit {
  GPoset face;                      // face poset of the whole complex
  std::vector<std::string> k_ids;   // faces of the K facets
  std::vector<std::string> l_ids;   // faces of the L facets
};

inline std::optional<FacetSplit> facet_split(const GPoset& p, std::uint64_t seed) {
  auto x = order_complex(p);
  if (x.facets().size() < 2) return std::nullopt;
  auto fx = face_poset(x);
  std::mt19937_64 rng(seed * 0xda942042e4dd58b5ull + 3);
  // Canonical representative per facet orbit decides the side.
  std::map<std::vector<int>, bool> side_of_rep;
  auto rep_of = [&](const std::vector<int>& f) {
    std::vector<int> best = f;
    for (int g = 0; g < x.group().order(); ++g) {
      auto img = x.simplex_image(g, f);
      if (img < best) best = img;
    }
    return best;
  };
  std::vector<bool> sides;
  for (const auto& f : x.facets()) {
    auto rep = rep_of(f);
    auto it = side_of_rep.find(rep);
    if (it == side_of_rep.end()) it = side_of_rep.emplace(rep, (rng() & 1) != 0).first;
    sides.push_back(it->second);
  }
  bool has_k = false, has_l = false;
  for (bool s : sides) (s ? has_k : has_l) = true;
  if (!has_k || !has_l) return std::nullopt;
  FacetSplit out{fx, {}, {}};
  std::set<std::string> kk, ll;
  for (std::size_t fi = 0; fi < x.facets().size(); ++fi) {
    const auto& f = x.facets()[fi];
    const int m = static_cast<int>(f.size());
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<std::string> names;
      for (int b = 0; b < m; ++b)
        if (mask & (1u << b)) names.push_back(x.id(f[b]));
      std::sort(names.begin(), names.end());
      std::string id = "{";
      for (std::size_t i = 0; i < names.size(); ++i) id += (i ? "," : "") + names[i];
      id += "}";
      (sides[fi] ? kk : ll).insert(id);
    }
  }
  out.k_ids.assign(kk.begin(), kk.end());
  out.l_ids.assign(ll.begin(), ll.end());
  return out;
}

}  // namespace detail

// --- criterion 1 -----------------------------------------------------------

inline std::vector<CheckRow> suite_borsuk_ulam(const Budget& budget) {
  std::vector<CheckRow> rows;
  struct Case {
    FiniteGroup g;
    int max_n;
  };
  std::vector<Case> cases{{FiniteGroup::cyclic(2), 4},
                          {FiniteGroup::cyclic(3), 3},
                          {FiniteGroup::symmetric(3), 3}};
  for (const auto& cs : cases) {
    for (int n = 0; n <= cs.max_n; ++n) {
      detail::add_row(rows, "Q_" + std::to_string(n) + " over order-" +
                                std::to_string(cs.g.order()) + " group",
                      [&]() -> std::pair<bool, std::string> {
                        auto q = gen_qn(cs.g, n);
                        auto report = xind_exact(q, budget);
                        bool ok = report.n == n;
                        if (n >= 0)
                          ok = ok && feasible(q, n - 1, budget).status ==
                                         SolveStatus::infeasible;
                        ok = ok && check_gmap(q, report.certificate).ok;
                        return {ok, "index " + std::to_string(report.n) + ", " +
                                        detail::plural(static_cast<int>(report.nodes),
                                                       "node")};
                      });
    }
  }
  return rows;
}

// --- criterion 2 -----------------------------------------------------------

inline std::vector<CheckRow> suite_pg_example(const Budget& budget) {
  std::vector<CheckRow> rows;
  for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                        FiniteGroup::cyclic(4), FiniteGroup::symmetric(3)}) {
    for (int star = 0; star < g.order(); ++star) {
      if (star == g.identity()) continue;
      detail::add_row(rows, "order-" + std::to_string(g.order()) + " group, twist " +
                                g.label(star),
                      [&]() -> std::pair<bool, std::string> {
                        auto bundle = gen_pg(g, star);
                        auto report = xind_exact(bundle.poset, budget);
                        bool ok = report.n == bundle.expected.at("xind").value &&
                                  check_gmap(bundle.poset, report.certificate).ok;
                        return {ok, "index " + std::to_string(report.n)};
                      });
    }
  }
  return rows;
}

// --- criterion 3 -----------------------------------------------------------

inline std::vector<CheckRow> suite_join_additivity(const Budget& budget) {
  std::vector<CheckRow> rows;
  detail::add_row(rows, "50 seeded pairs", [&]() -> std::pair<bool, std::string> {
    int done = 0;
    for (int i = 0; i < 50; ++i) {
      auto g = FiniteGroup::cyclic(i % 2 ? 3 : 2);
      auto p = random_free_gposet(g, 1 + (i % 4), 0.2 + 0.2 * (i % 3), 21000 + 2 * i);
      auto q = random_free_gposet(g, 1 + ((i + 1) % 4), 0.2 + 0.2 * ((i + 1) % 3),
                                  21001 + 2 * i);
      auto cp = xind_exact(p, budget);
      auto cq = xind_exact(q, budget);
      auto j = join(p, q);
      auto report = xind_exact(j, budget);
      if (report.n != cp.n + cq.n + 1)
        return {false, "additivity fails at pair " + std::to_string(i)};
      auto built = join_map(p, q, cp.certificate, cq.certificate);
      if (built.target_n != report.n || !check_gmap(j, built).ok)
        return {false, "join_map disagrees at pair " + std::to_string(i)};
      ++done;
    }
    return {true, detail::plural(done, "pair") + " with exact additivity"};
  });
  return rows;
}

// --- criterion 4 -----------------------------------------------------------

inline std::vector<CheckRow> suite_height_bound(const Budget& budget) {
  std::vector<CheckRow> rows;
  detail::add_row(rows, "200 seeded posets", [&]() -> std::pair<bool, std::string> {
    auto corpus = detail::layered_stream(200, 40000, 5);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const auto& p = corpus[i];
      auto report = xind_exact(p, budget);
      if (report.n > p.height()) return {false, "bound fails at instance " + std::to_string(i)};
      if (!p.empty()) {
        auto hm = height_map(p);
        if (!check_gmap(p, hm).ok)
          return {false, "height certificate fails at instance " + std::to_string(i)};
      }
    }
    return {true, "index <= height and height certificates verified"};
  });
  return rows;
}

// --- criterion 5 -----------------------------------------------------------

inline std::vector<CheckRow> suite_mu_dichotomy(const Budget& budget) {
  std::vector<CheckRow> rows;
  detail::add_row(rows, "general groups: union of two zero-index parts",
                  [&]() -> std::pair<bool, std::string> {
                    auto bundle = gen_mu_example(FiniteGroup::cyclic(3), 0, 1, 2);
                    const auto& p = bundle.poset;
                    auto za = xind_zero(restrict_to(p, bundle.subsets.at("P1")));
                    auto zb = xind_zero(restrict_to(p, bundle.subsets.at("P2")));
                    if (!za.zero || !zb.zero) return {false, "parts are not index zero"};
                    SignMap sa, sb;
                    for (const auto& [id, sv] : za.certificate.assignment) sa[id] = sv.sign;
                    for (const auto& [id, sv] : zb.certificate.assignment) sb[id] = sv.sign;
                    auto c = union_map_index0(p, bundle.subsets.at("P1"),
                                              bundle.subsets.at("P2"), sa, sb);
                    bool ok = c.target_n <= 2 && check_gmap(p, c).ok;
                    auto report = xind_exact(p, budget);
                    ok = ok && report.n == 2;
                    return {ok, "built level " + std::to_string(c.target_n) +
                                    ", exact index " + std::to_string(report.n)};
                  });
  detail::add_row(rows, "order-2 group: 100 seeded zero-index unions",
                  [&]() -> std::pair<bool, std::string> {
                    auto z2 = FiniteGroup::cyclic(2);
                    for (int i = 0; i < 100; ++i) {
                      auto inst = detail::random_zero_index_union(
                          z2, 1 + i % 3, 1 + (i / 3) % 3, 0.35, 50000 + i);
                      auto c = union_map_index0_z2(inst.poset, inst.a_ids, inst.b_ids,
                                                   inst.sign_a, inst.sign_b);
                      if (c.target_n > 1)
                        return {false, "needed level " + std::to_string(c.target_n) +
                                           " at instance " + std::to_string(i)};
                      if (!check_gmap(inst.poset, c).ok)
                        return {false, "certificate fails at instance " + std::to_string(i)};
                      auto exact = xind_exact(inst.poset, budget);
                      if (exact.n > 1)
                        return {false, "solver exceeds one at instance " + std::to_string(i)};
                    }
                    return {true, "all instances met the level-1 bound"};
                  });
  return rows;
}

// --- criterion 6 -----------------------------------------------------------

inline std::vector<CheckRow> suite_union_bounds(const Budget& budget) {
  std::vector<CheckRow> rows;
  for (int go : {2, 3}) {
    detail::add_row(
        rows, "order-" + std::to_string(go) + " group, 100 seeded unions",
        [&, go]() -> std::pair<bool, std::string> {
          auto g = FiniteGroup::cyclic(go);
          int collected = 0;
          for (int i = 0; collected < 100 && i < 400; ++i) {
            auto p = detail::layered_stream_for(g, 1, 60000 + 400 * go + i, 4).front();
            auto [a, b] = random_invariant_bipartition(p, 60500 + i);
            if (a.empty() || b.empty()) continue;
            ++collected;
            auto ca = xind_exact(restrict_to(p, a), budget);
            auto cb = xind_exact(restrict_to(p, b), budget);
            auto whole = xind_exact(p, budget);
            const int bound = go == 2 ? ca.n + cb.n + 1 : ca.n + 2 * (cb.n + 1);
            if (whole.n > bound)
              return {false, "index bound fails at instance " + std::to_string(i)};
            auto built = union_map_general(p, a, b, ca.certificate, cb.certificate);
            if (!check_gmap(p, built).ok)
              return {false, "built map fails at instance " + std::to_string(i)};
            if (built.target_n > bound)
              return {false, "built level exceeds the bound at instance " +
                                 std::to_string(i)};
          }
          if (collected < 100) return {false, "could not collect 100 instances"};
          return {true, "bounds and built certificates verified on 100 instances"};
        });
  }
  return rows;
}

// --- criterion 7 -----------------------------------------------------------

inline std::vector<CheckRow> suite_sharpness(const Budget& budget, bool extended) {
  std::vector<CheckRow> rows;
  for (int n = 0; n <= 3; ++n)
    for (int m = 0; m <= n; ++m) {
      detail::add_row(rows, "order-2 split of Q_" + std::to_string(n) + " at " +
                                std::to_string(m),
                      [&]() -> std::pair<bool, std::string> {
                        auto bundle = gen_z2_sharp(n, m);
                        const auto& p = bundle.poset;
                        auto xa = xind_exact(restrict_to(p, bundle.subsets.at("A")), budget);
                        int xb = bundle.subsets.at("B").empty()
                                     ? -1
                                     : xind_exact(restrict_to(p, bundle.subsets.at("B")),
                                                  budget).n;
                        auto xp = xind_exact(p, budget);
                        bool ok = xa.n == m && xb == n - m - 1 && xp.n == n &&
                                  xp.n == xa.n + xb + 1;
                        return {ok, "indices " + std::to_string(xa.n) + " + " +
                                        std::to_string(xb) + " + 1 = " +
                                        std::to_string(xp.n)};
                      });
    }
  for (auto [m, n] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}}) {
    detail::add_row(rows, "general sharp family (" + std::to_string(m) + "," +
                              std::to_string(n) + ")",
                    [&, m, n]() -> std::pair<bool, std::string> {
                      auto bundle = gen_sharp_family(FiniteGroup::cyclic(3), m, n);
                      auto xq = xind_exact(bundle.poset, budget);
                      auto x1 =
                          xind_exact(restrict_to(bundle.poset, bundle.subsets.at("Q1")),
                                     budget);
                      auto x2 =
                          xind_exact(restrict_to(bundle.poset, bundle.subsets.at("Q2")),
                                     budget);
                      bool ok = xq.n == m + 2 * (n + 1) && x1.n == m && x2.n == n;
                      return {ok, "whole " + std::to_string(xq.n) + ", parts " +
                                      std::to_string(x1.n) + " and " + std::to_string(x2.n)};
                    });
  }
  if (extended) {
    detail::add_row(rows, "general sharp family (1,1) [extended]",
                    [&]() -> std::pair<bool, std::string> {
                      auto bundle = gen_sharp_family(FiniteGroup::cyclic(3), 1, 1);
                      auto xq = xind_exact(bundle.poset, budget);
                      bool ok = xq.n == 5;
                      return {ok, "index " + std::to_string(xq.n) + ", " +
                                      detail::plural(static_cast<int>(xq.nodes), "node")};
                    });
  }
  return rows;
}

// --- criterion 8 -----------------------------------------------------------

inline std::vector<CheckRow> suite_sind_sandwich(const Budget& budget) {
  std::vector<CheckRow> rows;
  detail::add_row(rows, "order-2 group: 50 seeded equalities",
                  [&]() -> std::pair<bool, std::string> {
                    auto z2 = FiniteGroup::cyclic(2);
                    auto corpus = detail::layered_stream_for(z2, 50, 70000, 4);
                    for (std::size_t i = 0; i < corpus.size(); ++i) {
                      const auto& p = corpus[i];
                      if (p.empty()) continue;
                      int xp = xind_exact(p, budget).n;
                      int sp = sind_exact(order_complex(p), budget).n;
                      if (xp != sp)
                        return {false, "equality fails at instance " + std::to_string(i)};
                    }
                    return {true, "simplicial and cross indices agree"};
                  });
  detail::add_row(rows, "order-3 group: 50 seeded two-sided bounds",
                  [&]() -> std::pair<bool, std::string> {
                    auto z3 = FiniteGroup::cyclic(3);
                    auto corpus = detail::layered_stream_for(z3, 50, 71000, 4);
                    for (std::size_t i = 0; i < corpus.size(); ++i) {
                      const auto& p = corpus[i];
                      if (p.empty()) continue;
                      int xp = xind_exact(p, budget).n;
                      int sp = sind_exact(order_complex(p), budget).n;
                      if (!(sp <= xp && 2 * sp >= xp))
                        return {false, "bounds fail at instance " + std::to_string(i)};
                    }
                    return {true, "ceil(xind/2) <= sind <= xind throughout"};
                  });
  detail::add_row(rows, "seven-orbit example attains the gap",
                  [&]() -> std::pair<bool, std::string> {
                    auto bundle = gen_mu_example(FiniteGroup::cyclic(3), 0, 1, 2);
                    int xp = xind_exact(bundle.poset, budget).n;
                    int sp = sind_exact(order_complex(bundle.poset), budget).n;
                    return {xp == 2 && sp == 1, "cross " + std::to_string(xp) +
                                                    ", simplicial " + std::to_string(sp)};
                  });
  return rows;
}

// --- criterion 9 -----------------------------------------------------------

inline std::vector<CheckRow> suite_chromatic(const Budget& budget) {
  std::vector<CheckRow> rows;
  auto complete_graph = [](int n) {
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> es;
    for (int i = 1; i <= n; ++i) vs.push_back(std::to_string(i));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) es.push_back({vs[i], vs[j]});
    return std::pair(vs, es);
  };
  for (int go : {2, 3})
    for (int n = 1; n <= 3; ++n) {
      detail::add_row(
          rows, "complete graph K" + std::to_string(n + 1) + " x order-" +
                    std::to_string(go) + " group",
          [&, go, n]() -> std::pair<bool, std::string> {
            auto [vs, es] = complete_graph(n + 1);
            auto k = k_times_g(vs, es, FiniteGroup::cyclic(go));
            auto report = sind_exact(k, budget);
            bool ok = report.n == n && check_sind(k, report.certificate).ok;
            return {ok, "simplicial index " + std::to_string(report.n)};
          });
    }
  detail::add_row(rows, "face poset of K4 x Z2 stays within height one",
                  [&]() -> std::pair<bool, std::string> {
                    auto [vs, es] = complete_graph(4);
                    auto k = k_times_g(vs, es, FiniteGroup::cyclic(2));
                    auto fp = face_poset(k);
                    auto report = xind_exact(fp, budget);
                    return {report.n <= 1, "cross index " + std::to_string(report.n)};
                  });
  return rows;
}

// --- criterion 10 ----------------------------------------------------------

inline std::vector<CheckRow> suite_large_gap(const Budget& budget) {
  std::vector<CheckRow> rows;
  detail::add_row(rows, "square of the height-2 example [extended]",
                  [&]() -> std::pair<bool, std::string> {
                    auto bundle = gen_pg(FiniteGroup::cyclic(2), 1);
                    auto q = gen_join_power(bundle.poset, 2);
                    auto report = xind_exact(q, budget);
                    return {report.n == 5, "index " + std::to_string(report.n) + ", " +
                                               detail::plural(
                                                   static_cast<int>(report.nodes), "node")};
                  });
  return rows;
}

// --- criterion 11 ----------------------------------------------------------

inline std::vector<CheckRow> suite_downward_union(const Budget& budget) {
  std::vector<CheckRow> rows;
  detail::add_row(rows, "50 seeded face-poset splits",
                  [&]() -> std::pair<bool, std::string> {
                    int collected = 0;
                    std::uint64_t seed = 80000;
                    int guard = 0;
                    while (collected < 50 && guard < 500) {
                      ++guard;
                      auto g = FiniteGroup::cyclic(guard % 2 ? 3 : 2);
                      auto p = random_free_gposet(g, 1 + guard % 3, 0.25 + 0.15 * (guard % 3),
                                                  seed + guard);
                      if (p.empty() || p.size() > 16) continue;
                      auto split = detail::facet_split(p, seed + guard);
                      if (!split) continue;
                      const auto& fx = split->face;
                      if (!is_downward_closed(fx, split->k_ids))
                        return {false, "first part is not downward-closed"};
                      auto ca = xind_exact(restrict_to(fx, split->k_ids), budget);
                      auto cb = xind_exact(restrict_to(fx, split->l_ids), budget);
                      auto c = downward_union_map(fx, split->k_ids, split->l_ids,
                                                  ca.certificate, cb.certificate);
                      if (!check_gmap(fx, c).ok)
                        return {false, "glued certificate fails at split " +
                                           std::to_string(collected)};
                      if (c.target_n != ca.n + cb.n + 1)
                        return {false, "level mismatch at split " + std::to_string(collected)};
                      ++collected;
                    }
                    if (collected < 50) return {false, "could not collect 50 splits"};
                    return {true, "all glued certificates verified"};
                  });
  return rows;
}

// --- criterion 12 ----------------------------------------------------------

inline std::vector<CheckRow> suite_subdivision(const Budget& budget) {
  std::vector<CheckRow> rows;
  auto z2 = FiniteGroup::cyclic(2);
  auto z3 = FiniteGroup::cyclic(3);
  std::vector<std::pair<std::string, GSimplicialComplex>> complexes;
  complexes.emplace_back("4-cycle", e_n_g(z2, 1));
  complexes.emplace_back("K2 x Z2", k_times_g({"1", "2"}, {{"1", "2"}}, z2));
  complexes.emplace_back("two swapped edges",
                         GSimplicialComplex(z2, {"p0", "p1", "q0", "q1"},
                                            {{"p0", "q0"}, {"p1", "q1"}},
                                            {{0, 1, 2, 3}, {1, 0, 3, 2}}));
  complexes.emplace_back("three free points", e_n_g(z3, 0));
  complexes.emplace_back("order complex of a ladder",
                         order_complex(GPoset(z2, {"a", "a'", "b", "b'"},
                                              {{"a", "b"}, {"a'", "b'"}},
                                              {{0, 1, 2, 3}, {1, 0, 3, 2}})));
  for (const auto& [name, k] : complexes) {
    detail::add_row(rows, name, [&]() -> std::pair<bool, std::string> {
      if (k.simplices().size() > 12)
        return {false, "instance exceeds the 12-simplex cap"};
      int s0 = sind_exact(k, budget).n;
      int x0 = xind_exact(face_poset(k), budget).n;
      auto sd = barycentric_subdivision(k);
      int s1 = sind_exact(sd, budget).n;
      int x1 = xind_exact(face_poset(sd), budget).n;
      bool ok = s0 >= x0 && x0 >= s1 && s1 >= x1;
      std::ostringstream os;
      os << s0 << " >= " << x0 << " >= " << s1 << " >= " << x1;
      return {ok, os.str()};
    });
  }
  return rows;
}

// --- criterion 13 ----------------------------------------------------------

inline std::vector<CheckRow> suite_oracle(const Budget& budget) {
  std::vector<CheckRow> rows;
  detail::add_row(rows, "200 seeded posets vs. exhaustive enumeration",
                  [&]() -> std::pair<bool, std::string> {
                    auto corpus = detail::layered_stream(200, 90000, 4);
                    for (std::size_t i = 0; i < corpus.size(); ++i) {
                      const auto& p = corpus[i];
                      if (p.empty() || p.height() > 3 || p.orbits().orbits.size() > 6)
                        continue;
                      int oracle = brute_force_xind(p);
                      auto report = xind_exact(p, budget);
                      if (report.n != oracle)
                        return {false, "disagreement at instance " + std::to_string(i)};
                      if (xind_zero(p).zero != (oracle == 0))
                        return {false, "zero test disagrees at instance " +
                                           std::to_string(i)};
                    }
                    return {true, "solver matches the enumeration oracle"};
                  });
  return rows;
}

// --- criterion 14 ----------------------------------------------------------

inline std::vector<CheckRow> suite_move_down(const Budget& budget) {
  std::vector<CheckRow> rows;
  (void)budget;
  detail::add_row(rows, "100 seeded certificates", [&]() -> std::pair<bool, std::string> {
    int used = 0;
    for (int i = 0; i < 100; ++i) {
      auto g = FiniteGroup::cyclic(i % 2 ? 3 : 2);
      auto p = random_free_gposet(g, 1 + i % 4, 0.2 + 0.2 * (i % 4), 95000 + i);
      if (p.empty()) continue;
      auto c = detail::random_certificate(p, 95500 + i);
      if (!check_gmap(p, c).ok)
        return {false, "seed certificate invalid at instance " + std::to_string(i)};
      auto out = move_down(p, c);
      if (!check_gmap(p, out).ok)
        return {false, "moved certificate invalid at instance " + std::to_string(i)};
      auto levels = levels_from_certificate(p, out);
      for (std::size_t li = 0; li < levels.levels.size(); ++li) {
        if (!xind_zero(restrict_to(p, levels.levels[li])).zero)
          return {false, "level with positive index at instance " + std::to_string(i)};
        if (li == 0) continue;
        for (const auto& id : levels.levels[li]) {
          bool anchored = false;
          for (const auto& lower : levels.levels[li - 1])
            if (p.less(p.index(lower), p.index(id))) anchored = true;
          if (!anchored)
            return {false, "unanchored element at instance " + std::to_string(i)};
        }
      }
      // No backward comparability across levels.
      for (const auto& [ida, sva] : out.assignment)
        for (const auto& [idb, svb] : out.assignment)
          if (sva.value < svb.value && p.less(p.index(idb), p.index(ida)))
            return {false, "backward comparability at instance " + std::to_string(i)};
      ++used;
    }
    return {true, detail::plural(used, "certificate") + " anchored and verified"};
  });
  return rows;
}

// --- registry ----------------------------------------------------------------

struct Suite {
  std::string name;
  std::string summary;
  std::function<std::vector<CheckRow>(const Budget&)> run;
  bool extended = false;  // contains rows beyond the 60-second class
};

inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"borsuk-ulam", "Q_nG needs exactly n+1 levels; every lower level is refuted",
       suite_borsuk_ulam, false},
      {"pg-example", "the six-orbit height-2 example has cross-index 2 for every twist",
       suite_pg_example, false},
      {"join-additivity", "cross-index is exactly additive-plus-one under joins",
       suite_join_additivity, false},
      {"height-bound", "cross-index never exceeds the height; height maps verify",
       suite_height_bound, false},
      {"mu-dichotomy", "zero-index unions need at most 3 values, 2 for the order-2 group",
       suite_mu_dichotomy, false},
      {"union-bounds", "general union bounds hold and the built maps verify",
       suite_union_bounds, false},
      {"sharpness", "both union bounds are attained by the named families",
       [](const Budget& b) { return suite_sharpness(b, true); }, true},
      {"sind-sandwich", "simplicial index pinches the cross-index as the group dictates",
       suite_sind_sandwich, false},
      {"chromatic", "graph products need chromatic-number-many values; face posets do not",
       suite_chromatic, false},
      {"large-gap", "the join square of the height-2 example needs six values",
       suite_large_gap, true},
      {"downward-union", "downward-closed unions glue certificates at the additive level",
       suite_downward_union, false},
      {"subdivision", "the index sequence along subdivision is nonincreasing",
       suite_subdivision, false},
      {"oracle", "the optimized solver matches exhaustive enumeration",
       suite_oracle, false},
      {"move-down", "anchored level decompositions from arbitrary certificates",
       suite_move_down, false},
  };
  return all;
}

inline SuiteResult run_suite(const Suite& suite, const Budget& budget) {
  SuiteResult out;
  out.suite = suite.name;
  auto t0 = std::chrono::steady_clock::now();
  out.rows = suite.run(budget);
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  out.pass = true;
  for (const auto& row : out.rows) out.pass = out.pass && row.pass;
  return out;
}

}  // namespace xindlab::verify
