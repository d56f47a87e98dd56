#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "xindlab/certificates.hpp"
#include "xindlab/construct.hpp"
#include "xindlab/generators.hpp"
#include "xindlab/solver.hpp"

namespace xindlab::io {

using Json = nlohmann::ordered_json;

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Recover line/column from the byte offset for a usable message.
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    raise(Err::ParseError, "line " + std::to_string(line) + ", column " +
                               std::to_string(col) + ": " + e.what());
  }
}

inline Json load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Err::ParseError, "cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_text(ss.str());
}

inline void save_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) raise(Err::ParseError, "cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

namespace field {

inline const Json& get(const Json& j, const char* key, const char* what) {
  auto it = j.find(key);
  if (it == j.end())
    raise(Err::ParseError, std::string(what) + " is missing the '" + key + "' field");
  return *it;
}

}  // namespace field

// ---- groups ---------------------------------------------------------------

inline FiniteGroup parse_group(const Json& j) {
  if (j.is_string()) {
    auto g = FiniteGroup::by_name(j.get<std::string>());
    if (!g) raise(Err::ParseError, "unknown group name '" + j.get<std::string>() + "'");
    return *g;
  }
  if (!j.is_object()) raise(Err::ParseError, "group must be a name or an object");
  auto labels = field::get(j, "labels", "group").get<std::vector<std::string>>();
  auto table = field::get(j, "table", "group").get<std::vector<std::vector<int>>>();
  return FiniteGroup::from_table(std::move(labels), std::move(table));
}

inline Json write_group(const FiniteGroup& g) {
  return Json{{"labels", g.labels()}, {"table", g.table()}};
}

namespace detail {

inline int group_index(const FiniteGroup& g, const std::string& label, const char* what) {
  auto ix = g.index_of(label);
  if (!ix) raise(Err::ParseError, std::string(what) + ": unknown group label '" + label + "'");
  return *ix;
}

// Action object {"<glabel>": {"<id>": "<id>"}}; the identity row may be
// omitted. Ids are resolved through `index`.
template <typename IndexFn>
std::vector<std::vector<int>> parse_action(const Json& j, const FiniteGroup& g, int n,
                                           IndexFn&& index, const char* what) {
  std::vector<std::vector<int>> action(g.order());
  for (int h = 0; h < g.order(); ++h) {
    action[h].resize(n);
    for (int i = 0; i < n; ++i) action[h][i] = i;
  }
  std::vector<bool> given(g.order(), false);
  given[g.identity()] = true;
  if (!j.is_object()) raise(Err::ParseError, std::string(what) + ": action must be an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    int h = group_index(g, it.key(), what);
    given[h] = true;
    if (!it.value().is_object())
      raise(Err::ParseError, std::string(what) + ": action row must be an object");
    for (auto e = it.value().begin(); e != it.value().end(); ++e)
      action[h][index(e.key())] = index(e.value().template get<std::string>());
  }
  for (int h = 0; h < g.order(); ++h)
    if (!given[h])
      raise(Err::ParseError, std::string(what) + ": action row for '" + g.label(h) +
                                 "' is missing");
  return action;
}

template <typename IdFn>
Json write_action(const std::vector<std::vector<int>>& action, const FiniteGroup& g,
                  IdFn&& id) {
  Json out = Json::object();
  for (int h = 0; h < g.order(); ++h) {
    Json row = Json::object();
    for (std::size_t i = 0; i < action[h].size(); ++i)
      row[id(static_cast<int>(i))] = id(action[h][i]);
    out[g.label(h)] = row;
  }
  return out;
}

}  // namespace detail

// ---- posets ---------------------------------------------------------------

inline GPoset parse_poset(const Json& j) {
  if (!j.is_object()) raise(Err::ParseError, "poset file must be a JSON object");
  FiniteGroup g = parse_group(field::get(j, "group", "poset"));
  auto ids = field::get(j, "elements", "poset").get<std::vector<std::string>>();
  std::map<std::string, int> ix;
  for (std::size_t i = 0; i < ids.size(); ++i) ix[ids[i]] = static_cast<int>(i);
  auto index = [&](const std::string& id) {
    auto it = ix.find(id);
    if (it == ix.end()) raise(Err::ParseError, "poset: unknown element id '" + id + "'");
    return it->second;
  };
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& pair : field::get(j, "covers", "poset")) {
    if (!pair.is_array() || pair.size() != 2)
      raise(Err::ParseError, "poset: covers must be [lo, hi] pairs");
    covers.push_back({pair[0].get<std::string>(), pair[1].get<std::string>()});
    index(covers.back().first);
    index(covers.back().second);
  }
  auto action = detail::parse_action(field::get(j, "action", "poset"), g,
                                     static_cast<int>(ids.size()), index, "poset");
  return GPoset(std::move(g), std::move(ids), covers, std::move(action));
}

inline Json write_poset(const GPoset& p) {
  Json covers = Json::array();
  for (auto [a, b] : p.covers()) covers.push_back(Json::array({p.id(a), p.id(b)}));
  return Json{{"group", write_group(p.group())},
              {"elements", p.ids()},
              {"covers", covers},
              {"action", detail::write_action(p.action(), p.group(),
                                              [&](int i) { return p.id(i); })}};
}

// ---- complexes ------------------------------------------------------------

inline GSimplicialComplex parse_complex(const Json& j) {
  if (!j.is_object()) raise(Err::ParseError, "complex file must be a JSON object");
  FiniteGroup g = parse_group(field::get(j, "group", "complex"));
  auto ids = field::get(j, "vertices", "complex").get<std::vector<std::string>>();
  std::map<std::string, int> ix;
  for (std::size_t i = 0; i < ids.size(); ++i) ix[ids[i]] = static_cast<int>(i);
  auto index = [&](const std::string& id) {
    auto it = ix.find(id);
    if (it == ix.end()) raise(Err::ParseError, "complex: unknown vertex id '" + id + "'");
    return it->second;
  };
  auto facets = field::get(j, "facets", "complex").get<std::vector<std::vector<std::string>>>();
  for (const auto& f : facets)
    for (const auto& v : f) index(v);
  auto action = detail::parse_action(field::get(j, "action", "complex"), g,
                                     static_cast<int>(ids.size()), index, "complex");
  return GSimplicialComplex(std::move(g), std::move(ids), facets, std::move(action));
}

inline Json write_complex(const GSimplicialComplex& k) {
  Json facets = Json::array();
  for (const auto& f : k.facets()) {
    Json facet = Json::array();
    for (int v : f) facet.push_back(k.id(v));
    facets.push_back(facet);
  }
  return Json{{"group", write_group(k.group())},
              {"vertices", k.vertex_ids()},
              {"facets", facets},
              {"action", detail::write_action(k.action(), k.group(),
                                              [&](int i) { return k.id(i); })}};
}

// ---- graphs (for the K x G construction) ----------------------------------

struct GraphInput {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::string, std::string>> edges;
};

inline GraphInput parse_graph(const Json& j) {
  if (!j.is_object()) raise(Err::ParseError, "graph file must be a JSON object");
  GraphInput g;
  g.vertices = field::get(j, "vertices", "graph").get<std::vector<std::string>>();
  for (const auto& pair : field::get(j, "edges", "graph")) {
    if (!pair.is_array() || pair.size() != 2)
      raise(Err::ParseError, "graph: edges must be [u, v] pairs");
    g.edges.push_back({pair[0].get<std::string>(), pair[1].get<std::string>()});
  }
  return g;
}

// ---- certificates and reports ----------------------------------------------

namespace detail {

template <typename Cert>
Cert parse_certificate_impl(const Json& j, const FiniteGroup& g) {
  const Json* body = &j;
  if (j.is_object() && j.contains("certificate")) body = &j["certificate"];
  Cert c;
  c.target_n = field::get(*body, "target_n", "certificate").get<int>();
  const Json& assign = field::get(*body, "assignment", "certificate");
  if (!assign.is_object()) raise(Err::ParseError, "certificate: assignment must be an object");
  for (auto it = assign.begin(); it != assign.end(); ++it) {
    const Json& pair = it.value();
    if (!pair.is_array() || pair.size() != 2)
      raise(Err::ParseError, "certificate: assignment entries are [sign, value] pairs");
    c.assignment[it.key()] = SignValue{
        group_index(g, pair[0].get<std::string>(), "certificate"), pair[1].get<int>()};
  }
  return c;
}

}  // namespace detail

inline GMapCertificate parse_gmap_certificate(const Json& j, const FiniteGroup& g) {
  return detail::parse_certificate_impl<GMapCertificate>(j, g);
}

inline SindCertificate parse_sind_certificate(const Json& j, const FiniteGroup& g) {
  return detail::parse_certificate_impl<SindCertificate>(j, g);
}

template <typename Cert>
Json write_certificate(const Cert& c, const FiniteGroup& g) {
  Json assign = Json::object();
  for (const auto& [id, sv] : c.assignment)
    assign[id] = Json::array({g.label(sv.sign), sv.value});
  return Json{{"target_n", c.target_n}, {"assignment", assign}};
}

template <typename Report>
Json write_report(const Report& r, const FiniteGroup& g) {
  Json out{{"n", r.n}, {"nodes", r.nodes}};
  if (r.infeasible_below)
    out["infeasible_below"] = *r.infeasible_below;
  else
    out["infeasible_below"] = nullptr;
  if (r.nodes_approximate) out["nodes_approximate"] = true;
  out["certificate"] = write_certificate(r.certificate, g);
  return out;
}

// ---- subsets, sign maps, bundles, diagnostics -------------------------------

inline std::vector<std::string> parse_subset(const Json& j) {
  if (!j.is_array()) raise(Err::ParseError, "subset file must be a JSON array of ids");
  return j.get<std::vector<std::string>>();
}

inline SignMap parse_sign_map(const Json& j, const FiniteGroup& g) {
  if (!j.is_object()) raise(Err::ParseError, "sign map must be an object id -> group label");
  SignMap out;
  for (auto it = j.begin(); it != j.end(); ++it)
    out[it.key()] = detail::group_index(g, it.value().get<std::string>(), "sign map");
  return out;
}

inline Json write_sign_map(const SignMap& m, const FiniteGroup& g) {
  Json out = Json::object();
  for (const auto& [id, s] : m) out[id] = g.label(s);
  return out;
}

inline Json write_bundle(const ExampleBundle& b) {
  Json out = write_poset(b.poset);
  if (!b.subsets.empty()) {
    Json subsets = Json::object();
    for (const auto& [name, ids] : b.subsets) subsets[name] = ids;
    out["subsets"] = subsets;
  }
  if (!b.expected.empty()) {
    Json expected = Json::object();
    for (const auto& [name, ev] : b.expected)
      expected[name] = Json{{"value", ev.value}, {"basis", ev.basis}};
    out["expected"] = expected;
  }
  if (!b.notes.empty()) {
    Json notes = Json::object();
    for (const auto& [k, v] : b.notes) notes[k] = v;
    out["notes"] = notes;
  }
  return out;
}

inline Json write_diagnostics(const std::vector<Diagnostic>& diags) {
  Json rows = Json::array();
  for (const auto& d : diags) rows.push_back(Json{{"axiom", d.axiom}, {"witness", d.witness}});
  return Json{{"valid", diags.empty()}, {"diagnostics", rows}};
}

}  // namespace xindlab::io
