#pragma once

#include <array>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <thread>
#include <unordered_set>
#include <vector>

#include "xindlab/certificates.hpp"

namespace xindlab {

struct Budget {
  std::uint64_t max_nodes = 100'000'000;
  double max_seconds = 120.0;
  int jobs = 1;
};

enum class SolveStatus { feasible, infeasible, budget_exceeded };

struct FeasibleResult {
  SolveStatus status = SolveStatus::infeasible;
  std::optional<GMapCertificate> certificate;
  std::uint64_t nodes = 0;
};

struct SindFeasibleResult {
  SolveStatus status = SolveStatus::infeasible;
  std::optional<SindCertificate> certificate;
  std::uint64_t nodes = 0;
};

struct SolveReport {
  int n = -1;
  GMapCertificate certificate;
  std::uint64_t nodes = 0;
  std::optional<int> infeasible_below;  // highest level proven infeasible
  bool nodes_approximate = false;       // true when branches ran concurrently
};

struct SindReport {
  int n = -1;
  SindCertificate certificate;
  std::uint64_t nodes = 0;
  std::optional<int> infeasible_below;
  bool nodes_approximate = false;
};

// ---------------------------------------------------------------------------
// Search internals.
//
// Variables are orbits; a variable's domain is a bitset over G x {0..n}
// (sign, value) pairs for the orbit representative. Every comparable pair of
// elements contributes a constraint between two orbits:
//
//   x = a·r, y = b·r', x < y   =>   v < v'  or  (v = v' and s' = (b^-1 a)·s).
//
// Distinct labels b^-1 a between one orbit pair make the equality case
// impossible, leaving a strict value constraint. Simplicial edges contribute
// the disequality analogue (v != v' or images equal). The engine runs DFS in
// a fixed orbit order (decreasing cover-degree) with AC-3 propagation over
// the bitset domains, pins the first orbit of every constraint component to
// sign e (post-composition with right translations of the target), and
// records exhausted suffix states so repeated subproblems are refuted once.
// ---------------------------------------------------------------------------
namespace search {

constexpr int dom_words = 4;
constexpr int dom_capacity = 64 * dom_words;

struct Dom {
  std::array<std::uint64_t, dom_words> w{};

  bool any() const { return w[0] | w[1] | w[2] | w[3]; }
  bool none() const { return !any(); }
  void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
  bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
  void clear() { w = {}; }
  Dom& operator&=(const Dom& o) {
    for (int i = 0; i < dom_words; ++i) w[i] &= o.w[i];
    return *this;
  }
  Dom& operator|=(const Dom& o) {
    for (int i = 0; i < dom_words; ++i) w[i] |= o.w[i];
    return *this;
  }
  bool operator==(const Dom& o) const { return w == o.w; }
  bool operator!=(const Dom& o) const { return !(*this == o); }

  template <typename F>
  void for_each(F&& f) const {
    for (int i = 0; i < dom_words; ++i) {
      std::uint64_t m = w[i];
      while (m) {
        f(i * 64 + __builtin_ctzll(m));
        m &= m - 1;
      }
    }
  }
  int first() const {
    for (int i = 0; i < dom_words; ++i)
      if (w[i]) return i * 64 + __builtin_ctzll(w[i]);
    return -1;
  }
  int count() const {
    int c = 0;
    for (auto x : w) c += __builtin_popcountll(x);
    return c;
  }
};

struct Arc {
  int a, b;
  int label;    // equality case: s_b = label·s_a
  bool strict;  // no equality case
  bool order;   // order constraint (a below b) vs. disequality constraint
};

struct Csp {
  const FiniteGroup* group = nullptr;
  int nvars = 0;
  int gsize = 0;
  int nvals = 0;
  int bits = 0;
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> incident;  // var -> arc indices
  std::vector<int> order_of;               // static branch sequence
  std::vector<Dom> init;
  std::vector<Dom> value_ge;  // all pairs with value >= v
  std::vector<Dom> value_le;
  std::vector<Dom> value_eq;
  bool impossible = false;    // a constraint with empty relation (same-orbit edge)
  std::string impossible_witness;

  int bit_of(int sign, int value) const { return value * gsize + sign; }

  void build_masks() {
    value_ge.assign(nvals + 1, Dom{});
    value_le.assign(nvals + 1, Dom{});
    value_eq.assign(nvals, Dom{});
    for (int v = 0; v < nvals; ++v)
      for (int s = 0; s < gsize; ++s) {
        value_eq[v].set(bit_of(s, v));
        for (int u = 0; u <= v; ++u) value_ge[u].set(bit_of(s, v));
        for (int u = v; u < nvals; ++u) value_le[u].set(bit_of(s, v));
      }
  }

  Dom full() const {
    Dom d;
    for (int i = 0; i < nvals * gsize; ++i) d.set(i);
    return d;
  }

  // Image of a domain under (s,v) -> (t·s, v).
  Dom translate(int t, const Dom& d) const {
    Dom out;
    d.for_each([&](int bit) {
      int v = bit / gsize, s = bit % gsize;
      out.set(bit_of(group->mul(t, s), v));
    });
    return out;
  }

  int min_value(const Dom& d) const {
    int f = d.first();
    return f < 0 ? nvals : f / gsize;
  }
  int max_value(const Dom& d) const {
    for (int i = dom_words - 1; i >= 0; --i)
      if (d.w[i]) return (i * 64 + 63 - __builtin_clzll(d.w[i])) / gsize;
    return -1;
  }
  // Distinct values present; stops at 2.
  int value_spread(const Dom& d) const {
    int mn = min_value(d);
    if (mn >= nvals) return 0;
    return max_value(d) > mn ? 2 : 1;
  }
};

struct SuffixKey {
  std::vector<std::uint64_t> words;
  bool operator==(const SuffixKey& o) const { return words == o.words; }
};

struct SuffixKeyHash {
  std::size_t operator()(const SuffixKey& k) const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (auto w : k.words) {
      h ^= w;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }
};

struct BudgetHit {};

class Engine {
 public:
  static constexpr std::size_t nogood_cap = 1u << 18;

  Engine(const Csp& csp, const Budget& budget, std::atomic<bool>* stop,
         std::atomic<std::uint64_t>* shared_nodes)
      : csp_(csp),
        budget_(budget),
        stop_(stop),
        shared_nodes_(shared_nodes),
        t0_(std::chrono::steady_clock::now()) {}

  // Returns feasibility; solution() holds the singleton domains on success.
  bool run(std::vector<Dom> dom) {
    dom_ = std::move(dom);
    for (std::size_t i = 0; i < dom_.size(); ++i)
      if (!propagate(static_cast<int>(i))) return false;
    return solve(0);
  }

  const std::vector<Dom>& solution() const { return dom_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  bool solve(int depth) {
    if (depth == csp_.nvars) return true;
    SuffixKey key = make_key(depth);
    if (nogood_.count(key)) return false;
    const int var = csp_.order_of[depth];
    std::vector<Dom> snapshot = dom_;
    Dom options = dom_[var];
    bool found = false;
    options.for_each([&](int bit) {
      if (found) return;
      bump_node();
      dom_[var].clear();
      dom_[var].set(bit);
      if (propagate(var) && solve(depth + 1)) {
        found = true;
        return;
      }
      dom_ = snapshot;
    });
    if (found) return true;
    if (nogood_.size() < nogood_cap) nogood_.insert(std::move(key));
    return false;
  }

  void bump_node() {
    ++nodes_;
    std::uint64_t total = nodes_;
    if (shared_nodes_) total = shared_nodes_->fetch_add(1, std::memory_order_relaxed) + 1;
    if (total > budget_.max_nodes) throw BudgetHit{};
    if ((nodes_ & 1023) == 0) {
      if (stop_ && stop_->load(std::memory_order_relaxed)) throw BudgetHit{};
      double elapsed = std::chrono::duration<double>(
                           std::chrono::steady_clock::now() - t0_).count();
      if (elapsed > budget_.max_seconds) throw BudgetHit{};
    }
  }

  SuffixKey make_key(int depth) const {
    const int words = (csp_.bits + 63) / 64;
    SuffixKey key;
    key.words.reserve(1 + static_cast<std::size_t>(csp_.nvars - depth) * words);
    key.words.push_back(static_cast<std::uint64_t>(depth));
    for (int d = depth; d < csp_.nvars; ++d) {
      const Dom& dm = dom_[csp_.order_of[d]];
      for (int w = 0; w < words; ++w) key.words.push_back(dm.w[w]);
    }
    return key;
  }

  // AC-3 from a changed variable.
  bool propagate(int origin) {
    std::vector<int> queue{origin};
    std::vector<bool> queued(csp_.nvars, false);
    queued[origin] = true;
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      queued[x] = false;
      for (int ai : csp_.incident[x]) {
        const Arc& arc = csp_.arcs[ai];
        int other = arc.a == x ? arc.b : arc.a;
        Dom allowed = arc.a == x ? support_forward(arc) : support_backward(arc);
        Dom next = dom_[other];
        next &= allowed;
        if (next.none()) return false;
        if (next != dom_[other]) {
          dom_[other] = next;
          if (!queued[other]) {
            queued[other] = true;
            queue.push_back(other);
          }
        }
      }
    }
    return true;
  }

  // Values allowed for arc.b given dom(arc.a).
  Dom support_forward(const Arc& arc) const {
    const Dom& da = dom_[arc.a];
    if (arc.order) {
      Dom out = csp_.value_ge[std::min(csp_.min_value(da) + 1, csp_.nvals)];
      if (!arc.strict) out |= csp_.translate(arc.label, da);
      return out;
    }
    if (csp_.value_spread(da) != 1) return csp_.full();
    int v = csp_.min_value(da);
    Dom out = csp_.full();
    Dom banned = csp_.value_eq[v];
    for (int i = 0; i < dom_words; ++i) out.w[i] &= ~banned.w[i];
    if (!arc.strict) out |= csp_.translate(arc.label, da);
    return out;
  }

  // Values allowed for arc.a given dom(arc.b).
  Dom support_backward(const Arc& arc) const {
    const Dom& db = dom_[arc.b];
    int tinv = csp_.group->inv(arc.label);
    if (arc.order) {
      int mx = csp_.max_value(db);
      Dom out = mx <= 0 ? Dom{} : csp_.value_le[mx - 1];
      if (mx < 0) out = Dom{};
      if (!arc.strict) out |= csp_.translate(tinv, db);
      return out;
    }
    if (csp_.value_spread(db) != 1) return csp_.full();
    int v = csp_.min_value(db);
    Dom out = csp_.full();
    Dom banned = csp_.value_eq[v];
    for (int i = 0; i < dom_words; ++i) out.w[i] &= ~banned.w[i];
    if (!arc.strict) out |= csp_.translate(tinv, db);
    return out;
  }

  const Csp& csp_;
  Budget budget_;
  std::atomic<bool>* stop_;
  std::atomic<std::uint64_t>* shared_nodes_;
  std::chrono::steady_clock::time_point t0_;
  std::vector<Dom> dom_;
  std::uint64_t nodes_ = 0;
  std::unordered_set<SuffixKey, SuffixKeyHash> nogood_;
};

// Builds the orbit-level CSP. `edges` lists element pairs: ordered (x below
// y) when `ordered`, unordered skeleton edges otherwise.
inline Csp build_csp(const FiniteGroup& group, int nvals,
                     const OrbitPartition& orb,
                     const std::vector<std::pair<int, int>>& edges,
                     const std::vector<std::pair<int, int>>& degree_edges,
                     const std::vector<std::string>& ids, bool ordered) {
  Csp csp;
  csp.group = &group;
  csp.gsize = group.order();
  csp.nvals = nvals;
  csp.nvars = static_cast<int>(orb.orbits.size());
  csp.bits = csp.gsize * nvals;
  if (csp.bits > dom_capacity)
    raise(Err::TooLarge, "search needs " + std::to_string(csp.bits) +
                             " domain bits, capacity is " + std::to_string(dom_capacity));
  csp.build_masks();
  // Group parallel element constraints per orbit pair; distinct equality
  // labels conjoin to a strict constraint.
  std::map<std::pair<int, int>, std::map<int, bool>> classes;
  for (auto [x, y] : edges) {
    int oa = orb.orbit_of[x], ob = orb.orbit_of[y];
    int a = orb.g_of[x], b = orb.g_of[y];
    int label = group.mul(group.inv(b), a);
    if (oa == ob) {
      if (ordered) raise(Err::FreenessViolated,
                         "comparable pair inside one orbit: '" + ids[x] + "', '" + ids[y] + "'");
      csp.impossible = true;
      csp.impossible_witness =
          "vertices '" + ids[x] + "' and '" + ids[y] + "' of one orbit share a simplex";
      continue;
    }
    if (!ordered && oa > ob) {
      std::swap(oa, ob);
      label = group.inv(label);
    }
    classes[{oa, ob}][label] = true;
  }
  for (auto& [pair, labels] : classes) {
    Arc arc;
    arc.a = pair.first;
    arc.b = pair.second;
    arc.order = ordered;
    arc.strict = labels.size() > 1;
    arc.label = labels.begin()->first;
    csp.arcs.push_back(arc);
  }
  csp.incident.assign(csp.nvars, {});
  for (int i = 0; i < static_cast<int>(csp.arcs.size()); ++i) {
    csp.incident[csp.arcs[i].a].push_back(i);
    if (csp.arcs[i].b != csp.arcs[i].a) csp.incident[csp.arcs[i].b].push_back(i);
  }
  // Branch order: decreasing cover-degree, ties by representative id.
  std::vector<int> degree(csp.nvars, 0);
  for (auto [x, y] : degree_edges) {
    ++degree[orb.orbit_of[x]];
    ++degree[orb.orbit_of[y]];
  }
  csp.order_of.resize(csp.nvars);
  for (int i = 0; i < csp.nvars; ++i) csp.order_of[i] = i;
  std::sort(csp.order_of.begin(), csp.order_of.end(), [&](int a, int b) {
    if (degree[a] != degree[b]) return degree[a] > degree[b];
    return ids[orb.representative[a]] < ids[orb.representative[b]];
  });
  // Initial domains; pin the first-branched orbit of each constraint
  // component to sign e.
  csp.init.assign(csp.nvars, csp.full());
  std::vector<int> comp(csp.nvars, -1);
  std::vector<std::vector<int>> adj(csp.nvars);
  for (const auto& arc : csp.arcs) {
    adj[arc.a].push_back(arc.b);
    adj[arc.b].push_back(arc.a);
  }
  for (int v : csp.order_of) {
    if (comp[v] != -1) continue;
    std::vector<int> stack{v};
    comp[v] = v;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (comp[y] == -1) {
          comp[y] = v;
          stack.push_back(y);
        }
    }
    Dom pinned;
    for (int val = 0; val < nvals; ++val) pinned.set(csp.bit_of(group.identity(), val));
    csp.init[v] &= pinned;
  }
  return csp;
}

struct RunOutcome {
  SolveStatus status;
  std::vector<Dom> solution;
  std::uint64_t nodes = 0;
  bool approximate = false;
};

inline RunOutcome run_engine(const Csp& csp, const Budget& budget) {
  RunOutcome out{SolveStatus::infeasible, {}, 0, false};
  if (csp.impossible) return out;
  if (budget.jobs <= 1 || csp.nvars == 0) {
    Engine engine(csp, budget, nullptr, nullptr);
    try {
      bool ok = engine.run(csp.init);
      out.nodes = engine.nodes();
      out.status = ok ? SolveStatus::feasible : SolveStatus::infeasible;
      if (ok) out.solution = engine.solution();
    } catch (const BudgetHit&) {
      out.nodes = engine.nodes();
      out.status = SolveStatus::budget_exceeded;
    }
    return out;
  }
  // Parallel mode: split the root orbit's options round-robin across
  // workers. Feasibility and infeasibility results do not depend on the
  // schedule; node totals do, and are flagged approximate.
  const int root = csp.order_of[0];
  std::vector<int> options;
  csp.init[root].for_each([&](int bit) { options.push_back(bit); });
  const int jobs = std::min<int>(budget.jobs, std::max<std::size_t>(options.size(), 1));
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> nodes{0};
  std::vector<std::thread> threads;
  std::vector<RunOutcome> results(jobs);
  for (int j = 0; j < jobs; ++j) {
    threads.emplace_back([&, j] {
      std::vector<Dom> init = csp.init;
      Dom mine;
      for (std::size_t i = j; i < options.size(); i += jobs) mine.set(options[i]);
      init[root] = mine;
      if (mine.none()) {
        results[j].status = SolveStatus::infeasible;
        return;
      }
      Engine engine(csp, budget, &stop, &nodes);
      try {
        bool ok = engine.run(std::move(init));
        results[j].status = ok ? SolveStatus::feasible : SolveStatus::infeasible;
        if (ok) {
          results[j].solution = engine.solution();
          stop.store(true, std::memory_order_relaxed);
        }
      } catch (const BudgetHit&) {
        results[j].status = SolveStatus::budget_exceeded;
      }
    });
  }
  for (auto& t : threads) t.join();
  out.nodes = nodes.load();
  out.approximate = true;
  for (const auto& r : results)
    if (r.status == SolveStatus::feasible) {
      out.status = SolveStatus::feasible;
      out.solution = r.solution;
      return out;
    }
  bool budget_hit = false;
  for (const auto& r : results)
    if (r.status == SolveStatus::budget_exceeded) budget_hit = true;
  out.status = budget_hit ? SolveStatus::budget_exceeded : SolveStatus::infeasible;
  return out;
}

}  // namespace search

namespace detail {

inline std::vector<std::pair<int, int>> comparable_pairs(const GPoset& p) {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < p.size(); ++x)
    for (int y = 0; y < p.size(); ++y)
      if (x != y && p.less(x, y)) out.push_back({x, y});
  return out;
}

}  // namespace detail

// Decision procedure: is there a G-map P -> Q_nG? Exhaustive on the
// infeasible answer; budget aborts are reported, never silently wrong.
inline FeasibleResult feasible(const GPoset& p, int n, const Budget& budget = {}) {
  detail::require_valid(p, "feasible");
  if (n < -1) raise(Err::BadParameters, "target level must be >= -1");
  FeasibleResult out;
  if (p.empty()) {
    out.status = SolveStatus::feasible;
    out.certificate = GMapCertificate{n, {}};
    return out;
  }
  if (n == -1) return out;
  const auto& orb = p.orbits();
  auto csp = search::build_csp(p.group(), n + 1, orb, detail::comparable_pairs(p),
                               p.covers(), p.ids(), true);
  auto run = search::run_engine(csp, budget);
  out.nodes = run.nodes;
  if (run.status == SolveStatus::budget_exceeded) {
    out.status = SolveStatus::budget_exceeded;
    return out;
  }
  if (run.status == SolveStatus::infeasible) return out;
  out.status = SolveStatus::feasible;
  GMapCertificate cert;
  cert.target_n = n;
  for (int x = 0; x < p.size(); ++x) {
    int o = orb.orbit_of[x];
    int bit = run.solution[o].first();
    int value = bit / csp.gsize, sign = bit % csp.gsize;
    cert.assignment[p.id(x)] = {p.group().mul(orb.g_of[x], sign), value};
  }
  out.certificate = std::move(cert);
  return out;
}

// Exact cross-index with certificate. Levels are tried bottom-up so every
// level below the answer carries an exhaustive infeasibility proof; the
// height level always succeeds, which guarantees termination.
inline SolveReport xind_exact(const GPoset& p, const Budget& budget = {}) {
  detail::require_valid(p, "xind_exact");
  SolveReport report;
  if (p.empty()) {
    report.n = -1;
    report.certificate.target_n = -1;
    return report;
  }
  for (int n = 0; n <= p.height(); ++n) {
    auto r = feasible(p, n, budget);
    report.nodes += r.nodes;
    report.nodes_approximate = report.nodes_approximate || budget.jobs > 1;
    if (r.status == SolveStatus::budget_exceeded)
      throw Error(Err::BudgetExceeded, "search budget exhausted at level " + std::to_string(n),
                  report.nodes);
    if (r.status == SolveStatus::feasible) {
      report.n = n;
      report.certificate = std::move(*r.certificate);
      if (n > 0) report.infeasible_below = n - 1;
      return report;
    }
  }
  assert(false && "height level must be feasible");
  raise(Err::BadParameters, "internal: height level infeasible");
}

// Decision procedure for a G-simplicial map K -> E_nG, searched over vertex
// orbits with the skeleton disequality constraints.
inline SindFeasibleResult sind_feasible(const GSimplicialComplex& k, int n,
                                        const Budget& budget = {}) {
  detail::require_valid(k, "sind_feasible");
  if (n < -1) raise(Err::BadParameters, "target level must be >= -1");
  SindFeasibleResult out;
  if (k.size() == 0) {
    out.status = SolveStatus::feasible;
    out.certificate = SindCertificate{n, {}};
    return out;
  }
  if (n == -1) return out;
  GPoset discrete(k.group(), k.vertex_ids(), {}, k.action(), true);
  const auto& orb = discrete.orbits();
  std::set<std::pair<int, int>> edge_set;
  for (const auto& f : k.facets())
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = i + 1; j < f.size(); ++j)
        edge_set.insert({f[i], f[j]});
  std::vector<std::pair<int, int>> edges(edge_set.begin(), edge_set.end());
  auto csp = search::build_csp(k.group(), n + 1, orb, edges, edges, k.vertex_ids(), false);
  if (csp.impossible)
    raise(Err::NoFiniteIndex, csp.impossible_witness + "; no equivariant simplicial map exists");
  auto run = search::run_engine(csp, budget);
  out.nodes = run.nodes;
  if (run.status == SolveStatus::budget_exceeded) {
    out.status = SolveStatus::budget_exceeded;
    return out;
  }
  if (run.status == SolveStatus::infeasible) return out;
  out.status = SolveStatus::feasible;
  SindCertificate cert;
  cert.target_n = n;
  for (int x = 0; x < k.size(); ++x) {
    int o = orb.orbit_of[x];
    int bit = run.solution[o].first();
    int value = bit / csp.gsize, sign = bit % csp.gsize;
    cert.assignment[k.id(x)] = {k.group().mul(orb.g_of[x], sign), value};
  }
  out.certificate = std::move(cert);
  return out;
}

// Exact simplicial index. One value per vertex orbit is always feasible, so
// the loop is bounded by the orbit count.
inline SindReport sind_exact(const GSimplicialComplex& k, const Budget& budget = {}) {
  detail::require_valid(k, "sind_exact");
  SindReport report;
  if (k.size() == 0) {
    report.n = -1;
    report.certificate.target_n = -1;
    return report;
  }
  GPoset discrete(k.group(), k.vertex_ids(), {}, k.action(), true);
  const int orbit_count = static_cast<int>(discrete.orbits().orbits.size());
  for (int n = 0; n < orbit_count; ++n) {
    auto r = sind_feasible(k, n, budget);
    report.nodes += r.nodes;
    report.nodes_approximate = report.nodes_approximate || budget.jobs > 1;
    if (r.status == SolveStatus::budget_exceeded)
      throw Error(Err::BudgetExceeded, "search budget exhausted at level " + std::to_string(n),
                  report.nodes);
    if (r.status == SolveStatus::feasible) {
      report.n = n;
      report.certificate = std::move(*r.certificate);
      if (n > 0) report.infeasible_below = n - 1;
      return report;
    }
  }
  assert(false && "one value per orbit must be feasible");
  raise(Err::BadParameters, "internal: orbit-count level infeasible");
}

// Independent oracle: enumerate every equivariant assignment without
// pruning, symmetry breaking, or the orbit constraint graph. Test-scale
// only.
inline int brute_force_xind(const GPoset& p) {
  detail::require_valid(p, "brute_force_xind");
  if (p.empty()) return -1;
  const auto& orb = p.orbits();
  const int k = static_cast<int>(orb.orbits.size());
  if (k > 6 || p.height() > 3)
    raise(Err::TooLarge, "oracle limits: at most 6 orbits and height 3");
  const auto& g = p.group();
  std::vector<std::pair<int, int>> pairs = detail::comparable_pairs(p);
  for (int n = 0; n <= p.height(); ++n) {
    const int base = g.order() * (n + 1);
    std::vector<int> digits(k, 0);
    while (true) {
      bool ok = true;
      for (auto [x, y] : pairs) {
        int cx = digits[orb.orbit_of[x]], cy = digits[orb.orbit_of[y]];
        int vx = cx / g.order(), vy = cy / g.order();
        int sx = g.mul(orb.g_of[x], cx % g.order());
        int sy = g.mul(orb.g_of[y], cy % g.order());
        if (!(vx < vy || (vx == vy && sx == sy))) {
          ok = false;
          break;
        }
      }
      if (ok) return n;
      int i = 0;
      while (i < k && ++digits[i] == base) digits[i++] = 0;
      if (i >= k) break;
    }
  }
  // The height level always admits the longest-chain assignment.
  assert(false && "enumeration missed the height-level map");
  raise(Err::BadParameters, "internal: oracle enumeration incomplete");
}

}  // namespace xindlab
