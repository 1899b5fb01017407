#pragma once

#include <string>

#include "gcn/exact.hpp"
#include "gcn/reach.hpp"
#include "gcn/scatter.hpp"
#include "gcn/splitter.hpp"
#include "gcn/successor.hpp"
#include "gcn/uniform.hpp"
#include "json.hpp"

namespace gcn {

using nlohmann::json;

// {r, per_vertex: [...], wcol, col, adm_lower, adm_upper}
inline json profile_to_json(const MetricProfile& p) {
  json per = json::array();
  for (size_t v = 0; v < p.wreach_size.size(); ++v)
    per.push_back({{"v", v},
                   {"wreach", p.wreach_size[v]},
                   {"sreach", p.sreach_size[v]},
                   {"adm_lower", p.adm[v].lower},
                   {"adm_upper", p.adm[v].upper},
                   {"adm_exact", p.adm[v].exact}});
  return json{{"r", p.r},
              {"per_vertex", per},
              {"wcol", p.wcol},
              {"col", p.col},
              {"adm_lower", p.adm_lower},
              {"adm_upper", p.adm_upper},
              {"adm_exact", p.adm_exact}};
}

inline json exact_to_json(const ExactResult& res, Metric metric, int r) {
  return json{{"metric", metric_name(metric)},
              {"r", r},
              {"value", res.value},
              {"witness", res.witness.sequence()}};
}

// {c, m, S: [...], B: [...], iterations: [{pivot, case, sizes}]}
inline json scatter_to_json(const ScatterResult& res, const ScatterAudit& audit) {
  json iters = json::array();
  for (const ScatterIteration& it : res.iterations)
    iters.push_back({{"pivot", it.pivot},
                     {"case", it.halved ? 1 : 2},
                     {"sizes", json{{"reached", it.reached.size()},
                                    {"independent_after", it.i_size_after},
                                    {"deleted_added", it.s_added}}}});
  return json{{"r", res.r},
              {"m", res.m},
              {"c", res.c},
              {"a_size", res.a.size()},
              {"initial_independent", res.initial_independent},
              {"S", res.s},
              {"B", res.b},
              {"iterations", iters},
              {"case2_count", res.case2_count},
              {"h_max_back_degree", res.h_max_back_degree},
              {"h_degeneracy", res.h_degeneracy},
              {"audit", json{{"ok", audit.ok},
                             {"violation", audit.violation},
                             {"pairwise_gt_2r", audit.pairwise_gt_2r},
                             {"min_pairwise_distance", audit.min_pairwise_distance}}}};
}

// {r, order_file, rounds: [{v, w, arena_size}], winner, rounds_used}
inline json transcript_to_json(const GameTranscript& t, const std::string& order_file) {
  json rounds = json::array();
  for (const GameRound& round : t.rounds)
    rounds.push_back({{"v", round.connector_move},
                      {"w", round.splitter_move},
                      {"arena_size", round.arena_size_after}});
  return json{{"r", t.r},
              {"order_file", order_file},
              {"round_cap", t.round_cap},
              {"rounds", rounds},
              {"winner", t.splitter_won ? "splitter" : "connector"},
              {"rounds_used", t.rounds_used}};
}

inline const char* variant_name(OrderVariant v) {
  return v == OrderVariant::plain ? "plain" : "successor";
}

inline OrderVariant variant_from_name(const std::string& name) {
  if (name == "plain") return OrderVariant::plain;
  if (name == "successor") return OrderVariant::successor;
  throw std::invalid_argument("unknown order variant: " + name);
}

inline json trace_to_json(const ConstructionTrace& trace) {
  json fragments = json::array();
  for (const Fragment& f : trace.fragments) {
    json edges = json::array();
    for (auto [p, c] : f.tree_edges) edges.push_back({p, c});
    fragments.push_back({{"index", f.index},
                         {"vertices", f.vertices},
                         {"tree_edges", edges},
                         {"root", f.root},
                         {"entry", f.entry},
                         {"anchor", f.anchor}});
  }
  json steps = json::array();
  for (const BuildStep& s : trace.steps)
    steps.push_back({{"component", s.component},
                     {"connected", s.connected},
                     {"root", s.root},
                     {"m", s.root_m}});
  return json{{"variant", variant_name(trace.variant)},
              {"fragments", fragments},
              {"steps", steps}};
}

inline ConstructionTrace trace_from_json(const json& j) {
  ConstructionTrace trace;
  trace.variant = variant_from_name(j.at("variant").get<std::string>());
  for (const json& jf : j.at("fragments")) {
    Fragment f;
    f.index = jf.at("index").get<int>();
    f.vertices = jf.at("vertices").get<std::vector<int>>();
    for (const json& e : jf.at("tree_edges"))
      f.tree_edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    f.root = jf.at("root").get<int>();
    f.entry = jf.at("entry").get<int>();
    f.anchor = jf.at("anchor").get<int>();
    trace.fragments.push_back(std::move(f));
  }
  for (const json& js : j.at("steps")) {
    BuildStep s;
    s.component = js.at("component").get<std::vector<int>>();
    s.connected = js.at("connected").get<std::vector<int>>();
    s.root = js.at("root").get<int>();
    s.root_m = js.at("m").get<int>();
    trace.steps.push_back(std::move(s));
  }
  return trace;
}

// parent-array form; parent[root] = -1
inline json spanning_to_json(const SpanningTree& tree) {
  return json{{"root", tree.root}, {"parent", tree.parent}};
}

inline json charges_to_json(const AugmentedGraph& aug) {
  json entries = json::array();
  for (int w = 0; w < static_cast<int>(aug.charge_map.size()); ++w)
    if (!aug.charge_map[w].empty())
      entries.push_back({{"w", w}, {"charged", aug.charge_map[w]}});
  return json{{"n", aug.charge_map.size()}, {"entries", entries}};
}

inline json claims_to_json(const ClaimsReport& rep) {
  return json{{"r", rep.r},
              {"ok", rep.ok},
              {"violation", rep.violation},
              {"tree_ok", rep.tree_ok},
              {"charge_ok", rep.charge_ok},
              {"degree_ok", rep.degree_ok},
              {"adm_ok", rep.adm_ok},
              {"max_spanning_degree", rep.max_spanning_degree},
              {"max_fragment_degree", rep.max_fragment_degree},
              {"adm_h_upper", rep.adm_h_upper},
              {"adm_h_exact", rep.adm_h_exact},
              {"col_2r_g", rep.col_2r_g},
              {"adm_budget", rep.adm_budget}};
}

}  // namespace gcn
