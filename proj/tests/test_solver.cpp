#include <doctest.h>

#include "test_helpers.hpp"
#include "xindlab/generators.hpp"
#include "xindlab/solver.hpp"

using namespace xindlab;

namespace {

GMapCertificate identity_style(const GPoset& q, int n) {
  // On Q_nG with ids "<label>·v<i>": (g,i) -> (g,i).
  GMapCertificate c;
  c.target_n = n;
  const auto& orb = q.orbits();
  for (int x = 0; x < q.size(); ++x) {
    int value = std::stoi(q.id(x).substr(q.id(x).rfind('v') + 1));
    c.assignment[q.id(x)] = {orb.g_of[x], value};
  }
  return c;
}

}  // namespace

TEST_CASE("check_gmap accepts the identity-style map on Q_nG") {
  for (int n = 0; n <= 2; ++n) {
    auto q = gen_qn(FiniteGroup::cyclic(3), n);
    auto c = identity_style(q, n);
    CHECK(check_gmap(q, c).ok);
  }
}

TEST_CASE("check_gmap catches a collapse that breaks monotonicity") {
  auto z2 = FiniteGroup::cyclic(2);
  auto q1 = gen_qn(z2, 1);
  GMapCertificate c;
  c.target_n = 1;
  // Collapse (e,0) and (e,1) to (e,0) while their partners keep distinct
  // images: (g,1) goes to (g,1), so (e,0) < (g,1) is fine but (g,0) < (e,1)
  // maps to (g,0) vs (e,0), incomparable.
  c.assignment["0·v0"] = {0, 0};
  c.assignment["1·v0"] = {1, 0};
  c.assignment["0·v1"] = {0, 0};
  c.assignment["1·v1"] = {1, 0};
  auto r = check_gmap(q1, c);
  CHECK_FALSE(r.ok);
  CHECK(r.witness.find("monotonicity") != std::string::npos);
}

TEST_CASE("check_gmap catches equivariance breaks and bad inputs") {
  auto z2 = FiniteGroup::cyclic(2);
  auto q0 = gen_qn(z2, 0);
  GMapCertificate c;
  c.target_n = 0;
  c.assignment["0·v0"] = {0, 0};
  c.assignment["1·v0"] = {0, 0};  // should be sign 1
  auto r = check_gmap(q0, c);
  CHECK_FALSE(r.ok);
  CHECK(r.witness.find("equivariance") != std::string::npos);

  GMapCertificate missing;
  missing.target_n = 0;
  missing.assignment["0·v0"] = {0, 0};
  CHECK_FALSE(check_gmap(q0, missing).ok);

  GMapCertificate unknown;
  unknown.target_n = 0;
  unknown.assignment["zzz"] = {0, 0};
  CHECK_THROWS_WITH_AS(check_gmap(q0, unknown), doctest::Contains("UnknownId"), Error);

  GMapCertificate range;
  range.target_n = 0;
  range.assignment["0·v0"] = {0, 3};
  CHECK_THROWS_WITH_AS(check_gmap(q0, range), doctest::Contains("ValueOutOfRange"), Error);
}

TEST_CASE("xind_zero") {
  SUBCASE("antichain orbits have index zero with a checkable witness") {
    auto q0 = gen_qn(FiniteGroup::cyclic(3), 0);
    auto r = xind_zero(q0);
    REQUIRE(r.zero);
    CHECK(check_gmap(q0, r.certificate).ok);
  }
  SUBCASE("P1 inside P_Z2 is not index zero; the zigzag path is returned") {
    auto bundle = gen_pg(FiniteGroup::cyclic(2), 1);
    auto p1 = restrict_to(bundle.poset, bundle.subsets.at("P1"));
    auto r = xind_zero(p1);
    REQUIRE_FALSE(r.zero);
    REQUIRE(r.path.size() >= 2);
    // Endpoints of the witness live in one orbit.
    const auto& orb = p1.orbits();
    CHECK(orb.orbit_of[p1.index(r.path.front())] == orb.orbit_of[p1.index(r.path.back())]);
    // Consecutive path entries are comparable.
    for (std::size_t i = 0; i + 1 < r.path.size(); ++i)
      CHECK(p1.comparable(p1.index(r.path[i]), p1.index(r.path[i + 1])));
  }
  SUBCASE("the two named parts of the seven-orbit example have index zero") {
    auto bundle = gen_mu_example(FiniteGroup::cyclic(3), 0, 1, 2);
    for (const char* name : {"P1", "P2"}) {
      auto sub = restrict_to(bundle.poset, bundle.subsets.at(name));
      auto r = xind_zero(sub);
      REQUIRE(r.zero);
      CHECK(check_gmap(sub, r.certificate).ok);
    }
  }
}

TEST_CASE("sind_zero") {
  auto z2 = FiniteGroup::cyclic(2);
  auto e0 = e_n_g(z2, 0);
  auto rz = sind_zero(e0);
  REQUIRE(rz.zero);
  CHECK(check_sind(e0, rz.certificate).ok);
  CHECK(sind_zero(e_n_g(FiniteGroup::cyclic(3), 0)).zero);
  auto r = sind_zero(e_n_g(z2, 1));
  REQUIRE_FALSE(r.zero);
  CHECK(r.path.size() >= 2);
  auto oc = order_complex(gen_qn(z2, 0));
  auto rq = sind_zero(oc);
  REQUIRE(rq.zero);
  CHECK(check_sind(oc, rq.certificate).ok);
  // Certificates from zero tests verify on every zero instance of the corpus.
  for (const auto& p : test_helpers::random_corpus(12, 34000)) {
    auto k = order_complex(p);
    auto zr = sind_zero(k);
    if (zr.zero) CHECK(check_sind(k, zr.certificate).ok);
    auto xr = xind_zero(p);
    if (xr.zero) CHECK(check_gmap(p, xr.certificate).ok);
  }
}

TEST_CASE("feasible levels of Q_nG") {
  auto z3 = FiniteGroup::cyclic(3);
  auto q2 = gen_qn(z3, 2);
  auto lo = feasible(q2, 1);
  CHECK(lo.status == SolveStatus::infeasible);
  auto hi = feasible(q2, 2);
  REQUIRE(hi.status == SolveStatus::feasible);
  REQUIRE(hi.certificate.has_value());
  CHECK(check_gmap(q2, *hi.certificate).ok);
  CHECK(feasible(q2, -1).status == SolveStatus::infeasible);
  auto empty = gen_qn(z3, -1);
  CHECK(feasible(empty, -1).status == SolveStatus::feasible);
}

TEST_CASE("feasible respects the node budget and reports node counts") {
  auto q = gen_qn(FiniteGroup::cyclic(3), 2);
  Budget tiny;
  tiny.max_nodes = 1;
  auto r = feasible(q, 2, tiny);
  CHECK(r.status == SolveStatus::budget_exceeded);
  CHECK(r.nodes >= 1);
  Budget fine;
  auto a = feasible(q, 2, fine);
  auto b = feasible(q, 2, fine);
  REQUIRE(a.status == SolveStatus::feasible);
  CHECK(a.nodes == b.nodes);  // deterministic node counts
  CHECK_THROWS_WITH_AS(xind_exact(q, tiny), doctest::Contains("BudgetExceeded"), Error);
}

TEST_CASE("cross-index of Q_nG is n") {
  for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                        FiniteGroup::symmetric(3)}) {
    for (int n = 0; n <= 2; ++n) {
      auto q = gen_qn(g, n);
      auto report = xind_exact(q);
      REQUIRE(report.n == n);
      CHECK(check_gmap(q, report.certificate).ok);
      if (n > 0) CHECK(report.infeasible_below == n - 1);
    }
  }
}

TEST_CASE("cross-index of the height-2 example is 2 for several groups") {
  for (const auto& g : {FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)}) {
    auto bundle = gen_pg(g, 1);
    auto report = xind_exact(bundle.poset);
    REQUIRE(report.n == 2);
    CHECK(check_gmap(bundle.poset, report.certificate).ok);
  }
}

TEST_CASE("cross-index of the seven-orbit union example is 2") {
  auto bundle = gen_mu_example(FiniteGroup::cyclic(3), 0, 1, 2);
  auto report = xind_exact(bundle.poset);
  REQUIRE(report.n == 2);
  CHECK(check_gmap(bundle.poset, report.certificate).ok);
  CHECK(report.infeasible_below == 1);
}

TEST_CASE("empty poset solves to -1") {
  auto report = xind_exact(gen_qn(FiniteGroup::cyclic(2), -1));
  CHECK(report.n == -1);
  CHECK(report.certificate.target_n == -1);
  CHECK_FALSE(report.infeasible_below.has_value());
}

TEST_CASE("simplicial index computations") {
  auto z2 = FiniteGroup::cyclic(2);
  SUBCASE("K3 x Z2 needs three values") {
    auto k = k_times_g({"1", "2", "3"}, {{"1", "2"}, {"1", "3"}, {"2", "3"}}, z2);
    auto report = sind_exact(k);
    REQUIRE(report.n == 2);
    CHECK(check_sind(k, report.certificate).ok);
  }
  SUBCASE("order complex of P_Z2 matches the poset index") {
    auto bundle = gen_pg(z2, 1);
    auto report = sind_exact(order_complex(bundle.poset));
    CHECK(report.n == 2);
  }
  SUBCASE("order complex of the seven-orbit example drops to 1") {
    auto bundle = gen_mu_example(FiniteGroup::cyclic(3), 0, 1, 2);
    auto report = sind_exact(order_complex(bundle.poset));
    CHECK(report.n == 1);
    CHECK(xind_exact(bundle.poset).n == 2);
  }
  SUBCASE("same-orbit adjacency admits no equivariant simplicial map") {
    auto z3 = FiniteGroup::cyclic(3);
    GSimplicialComplex c3(z3, {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}},
                          {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
    REQUIRE(c3.is_valid());
    CHECK_THROWS_WITH_AS(sind_exact(c3), doctest::Contains("NoFiniteIndex"), Error);
    CHECK_FALSE(sind_zero(c3).zero);
  }
}

TEST_CASE("check_sind") {
  auto z2 = FiniteGroup::cyclic(2);
  auto k = e_n_g(z2, 1);
  auto report = sind_exact(k);
  REQUIRE(report.n == 1);
  REQUIRE(check_sind(k, report.certificate).ok);
  SUBCASE("value collision inside a facet") {
    auto bad = report.certificate;
    // Force two adjacent vertices to one value with different signs.
    bad.assignment["0·v0"] = {0, 0};
    bad.assignment["1·v0"] = {1, 0};
    bad.assignment["0·v1"] = {0, 0};
    bad.assignment["1·v1"] = {1, 0};
    auto r = check_sind(k, bad);
    CHECK_FALSE(r.ok);
    CHECK(r.witness.find("collide") != std::string::npos);
  }
  SUBCASE("sign equivariance break") {
    auto bad = report.certificate;
    auto sv = bad.assignment["1·v0"];
    sv.sign = bad.assignment["0·v0"].sign;
    bad.assignment["1·v0"] = sv;
    CHECK_FALSE(check_sind(k, bad).ok);
  }
}

TEST_CASE("brute-force oracle") {
  CHECK(brute_force_xind(gen_qn(FiniteGroup::cyclic(2), 1)) == 1);
  auto z2 = FiniteGroup::cyclic(2);
  GPoset antichain(z2, {"a", "a'"}, {}, {{0, 1}, {1, 0}});
  CHECK(brute_force_xind(antichain) == 0);
  auto big = gen_pg(FiniteGroup::cyclic(2), 1);
  auto wide = disjoint_union(big.poset, big.poset);
  CHECK_THROWS_WITH_AS(brute_force_xind(wide), doctest::Contains("TooLarge"), Error);
}

namespace {

// Strictest oracle: enumerate every function from elements to Q_nG points
// and filter by equivariance and monotonicity directly. No orbit reduction
// at all, so it cross-checks that layer too. Tiny instances only.
int full_space_xind(const GPoset& p) {
  const auto& g = p.group();
  const int n_elems = p.size();
  REQUIRE(n_elems <= 6);
  for (int n = 0; n <= p.height(); ++n) {
    const int points = g.order() * (n + 1);
    std::vector<int> f(n_elems, 0);
    auto sign_of = [&](int v) { return v % g.order(); };
    auto value_of = [&](int v) { return v / g.order(); };
    while (true) {
      bool ok = true;
      for (int h = 0; h < g.order() && ok; ++h)
        for (int x = 0; x < n_elems; ++x) {
          int img = f[p.act(h, x)];
          if (sign_of(img) != g.mul(h, sign_of(f[x])) || value_of(img) != value_of(f[x])) {
            ok = false;
            break;
          }
        }
      for (int x = 0; x < n_elems && ok; ++x)
        for (int y = 0; y < n_elems; ++y)
          if (x != y && p.less(x, y) &&
              !(value_of(f[x]) < value_of(f[y]) || f[x] == f[y])) {
            ok = false;
            break;
          }
      if (ok) return n;
      int i = 0;
      while (i < n_elems && ++f[i] == points) f[i++] = 0;
      if (i >= n_elems) break;
    }
  }
  return p.height();
}

}  // namespace

TEST_CASE("solver agrees with the unreduced full-map oracle on tiny posets") {
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    auto g = FiniteGroup::cyclic(i % 3 == 2 ? 3 : 2);
    int orbits = 1 + i % 2;
    if (g.order() == 3 && orbits > 2) continue;
    auto p = random_free_gposet(g, orbits + (g.order() == 2 ? 1 : 0), 0.4, 77000 + i);
    if (p.size() > 6) continue;
    REQUIRE(xind_exact(p).n == full_space_xind(p));
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("solver agrees with the oracle on the random corpus") {
  auto corpus = test_helpers::random_corpus(60, 12000);
  for (const auto& p : corpus) {
    if (p.orbits().orbits.size() > 6 || p.height() > 3) continue;
    int oracle = brute_force_xind(p);
    auto report = xind_exact(p);
    REQUIRE(report.n == oracle);
    REQUIRE(check_gmap(p, report.certificate).ok);
    REQUIRE(xind_zero(p).zero == (oracle == 0));
  }
}

TEST_CASE("minimality: the level below the answer is infeasible") {
  auto corpus = test_helpers::random_corpus(20, 15000);
  for (const auto& p : corpus) {
    auto report = xind_exact(p);
    if (report.n >= 1) {
      REQUIRE(feasible(p, report.n - 1).status == SolveStatus::infeasible);
      REQUIRE(report.infeasible_below == report.n - 1);
    }
  }
}

TEST_CASE("monotonicity under invariant restriction") {
  auto corpus = test_helpers::random_corpus(20, 18000);
  for (const auto& p : corpus) {
    auto [a, b] = random_invariant_bipartition(p, 5);
    for (const auto& ids : {a, b}) {
      if (ids.empty()) continue;
      auto sub = restrict_to(p, ids);
      REQUIRE(xind_exact(sub).n <= xind_exact(p).n);
    }
  }
}

TEST_CASE("sandwich between the two indices") {
  auto corpus = test_helpers::random_corpus(16, 21000);
  for (const auto& p : corpus) {
    if (p.empty()) continue;
    int xp = xind_exact(p).n;
    int sp = sind_exact(order_complex(p)).n;
    REQUIRE(sp <= xp);
    if (p.group().order() == 2) {
      REQUIRE(sp == xp);
    } else {
      REQUIRE(2 * sp >= xp);
    }
    auto fp = face_poset(order_complex(p));
    REQUIRE(xind_exact(fp).n <= sp);
  }
}

namespace {

// Exhaustive simplicial-index oracle: every equivariant vertex assignment,
// facet condition checked pairwise. Independent of the search machinery.
int brute_sind(const GSimplicialComplex& k, int max_n) {
  GPoset discrete(k.group(), k.vertex_ids(), {}, k.action(), true);
  const auto& orb = discrete.orbits();
  const int orbits = static_cast<int>(orb.orbits.size());
  const auto& g = k.group();
  for (int n = 0; n <= max_n; ++n) {
    const int base = g.order() * (n + 1);
    std::vector<int> digits(orbits, 0);
    while (true) {
      bool ok = true;
      for (const auto& f : k.facets()) {
        for (std::size_t i = 0; i < f.size() && ok; ++i)
          for (std::size_t j = i + 1; j < f.size(); ++j) {
            int cu = digits[orb.orbit_of[f[i]]], cv = digits[orb.orbit_of[f[j]]];
            int vu = cu / g.order(), vv = cv / g.order();
            int su = g.mul(orb.g_of[f[i]], cu % g.order());
            int sv = g.mul(orb.g_of[f[j]], cv % g.order());
            if (vu == vv && su != sv) {
              ok = false;
              break;
            }
          }
        if (!ok) break;
      }
      if (ok) return n;
      int i = 0;
      while (i < orbits && ++digits[i] == base) digits[i++] = 0;
      if (i >= orbits) break;
    }
  }
  return -1;
}

}  // namespace

TEST_CASE("simplicial solver agrees with exhaustive enumeration") {
  auto corpus = test_helpers::random_corpus(24, 30000);
  int checked = 0;
  for (const auto& p : corpus) {
    if (p.orbits().orbits.size() > 4) continue;
    auto k = order_complex(p);
    int oracle = brute_sind(k, static_cast<int>(p.orbits().orbits.size()));
    REQUIRE(oracle >= 0);
    auto report = sind_exact(k);
    REQUIRE(report.n == oracle);
    REQUIRE(check_sind(k, report.certificate).ok);
    ++checked;
  }
  CHECK(checked >= 10);
  // and one complex that is not an order complex
  auto z2 = FiniteGroup::cyclic(2);
  auto kx = k_times_g({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}}, z2);
  CHECK(sind_exact(kx).n == brute_sind(kx, 3));
}

TEST_CASE("parallel branch exploration gives identical answers") {
  auto bundle = gen_mu_example(FiniteGroup::cyclic(3), 0, 1, 2);
  Budget par;
  par.jobs = 2;
  auto report = xind_exact(bundle.poset, par);
  CHECK(report.n == 2);
  CHECK(report.nodes_approximate);
  CHECK(check_gmap(bundle.poset, report.certificate).ok);
}
