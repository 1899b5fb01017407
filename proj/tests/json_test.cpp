#include "gcn/json_io.hpp"

#include <gtest/gtest.h>

#include <fstream>

#include "gcn/generators.hpp"
#include "gcn/json_schema.hpp"
#include "gcn/scatter.hpp"
#include "gcn/schemas.hpp"
#include "gcn/splitter.hpp"
#include "gcn/successor.hpp"
#include "gcn/uniform.hpp"

namespace gcn {
namespace {

using nlohmann::json;

TEST(Schema, ValidatorCoversCoreKeywords) {
  json schema = json::parse(R"({
    "type": "object",
    "required": ["a", "b"],
    "properties": {
      "a": {"type": "integer", "minimum": 0},
      "b": {"type": "array", "items": {"type": "string"}},
      "c": {"enum": ["x", "y"]}
    }
  })");
  std::string error;
  EXPECT_TRUE(validate_schema(schema, json{{"a", 1}, {"b", {"s"}}}, &error)) << error;
  EXPECT_FALSE(validate_schema(schema, json{{"a", -1}, {"b", json::array()}}, &error));
  EXPECT_FALSE(validate_schema(schema, json{{"a", 1}}, &error));  // missing b
  EXPECT_FALSE(validate_schema(schema, json{{"a", 1}, {"b", {"s"}}, {"c", "z"}}, &error));
  EXPECT_FALSE(validate_schema(schema, json{{"a", "no"}, {"b", json::array()}}, &error));
  EXPECT_FALSE(
      validate_schema(schema, json{{"a", 1}, {"b", {1, 2}}}, &error));  // items
}

TEST(Schema, FilesMatchEmbeddedRegistry) {
  for (const auto& [name, text] : schema_registry()) {
    std::ifstream in(std::string(GCN_SOURCE_DIR) + "/schemas/" + name + ".schema.json");
    ASSERT_TRUE(in.good()) << "missing schemas/" << name << ".schema.json";
    json on_disk = json::parse(in);
    EXPECT_EQ(on_disk, json::parse(text)) << name << " schema drifted";
  }
}

TEST(Schema, RegistryLookup) {
  EXPECT_NO_THROW(schema_by_name("profile"));
  EXPECT_THROW(schema_by_name("nope"), std::out_of_range);
}

TEST(JsonIo, ProfileValidates) {
  Graph g = grid_graph(3, 3);
  MetricProfile p = metric_profile(g, greedy_order(g, 2), 2);
  json j = profile_to_json(p);
  std::string error;
  EXPECT_TRUE(validate_schema(schema_by_name("profile"), j, &error)) << error;
  EXPECT_EQ(j.at("r"), 2);
  EXPECT_EQ(j.at("per_vertex").size(), 9u);
  EXPECT_EQ(j.at("wcol"), p.wcol);
}

TEST(JsonIo, OracleValidates) {
  Graph g = cycle_graph(5);
  ExactResult res = exact_optimum(g, 1, Metric::wcol);
  json j = exact_to_json(res, Metric::wcol, 1);
  std::string error;
  EXPECT_TRUE(validate_schema(schema_by_name("oracle"), j, &error)) << error;
  EXPECT_EQ(j.at("value"), 3);
  EXPECT_EQ(j.at("metric"), "wcol");
}

TEST(JsonIo, ScatterValidates) {
  Graph g = star_graph(16);
  LinearOrder L = LinearOrder::identity(17);
  VertexSet leaves;
  for (int v = 1; v <= 16; ++v) leaves.push_back(v);
  ScatterResult res = scatter_extract(g, L, 2, leaves, 2);
  json j = scatter_to_json(res, audit_scatter(g, L, res));
  std::string error;
  EXPECT_TRUE(validate_schema(schema_by_name("scatter"), j, &error)) << error;
  EXPECT_EQ(j.at("S"), json::array({0}));
  EXPECT_EQ(j.at("B"), json::array({4, 3}));
  EXPECT_EQ(j.at("iterations").size(), 2u);
  EXPECT_EQ(j.at("iterations")[0].at("case"), 2);
  EXPECT_EQ(j.at("iterations")[1].at("case"), 1);
}

TEST(JsonIo, TranscriptValidates) {
  Graph g = cycle_graph(6);
  GameTranscript t = play_game(g, 1, wcol_splitter(greedy_order(g, 2)),
                               max_ball_connector(1));
  json j = transcript_to_json(t, "greedy-order@2r");
  std::string error;
  EXPECT_TRUE(validate_schema(schema_by_name("transcript"), j, &error)) << error;
  EXPECT_EQ(j.at("winner"), "splitter");
  EXPECT_EQ(j.at("rounds").size(), static_cast<size_t>(t.rounds_used));
}

TEST(JsonIo, TraceRoundTripsBothVariants) {
  Graph g = grid_graph(3, 4);
  for (OrderVariant variant : {OrderVariant::plain, OrderVariant::successor}) {
    UniformOrderResult res = build_uniform_order(g, variant);
    json j = trace_to_json(res.trace);
    std::string error;
    json wrapped{{"order", res.order.sequence()}, {"trace", j}};
    EXPECT_TRUE(validate_schema(schema_by_name("trace"), wrapped, &error)) << error;

    ConstructionTrace back = trace_from_json(j);
    EXPECT_EQ(back.variant, res.trace.variant);
    ASSERT_EQ(back.fragments.size(), res.trace.fragments.size());
    for (size_t i = 0; i < back.fragments.size(); ++i) {
      EXPECT_EQ(back.fragments[i].vertices, res.trace.fragments[i].vertices);
      EXPECT_EQ(back.fragments[i].tree_edges, res.trace.fragments[i].tree_edges);
      EXPECT_EQ(back.fragments[i].root, res.trace.fragments[i].root);
      EXPECT_EQ(back.fragments[i].entry, res.trace.fragments[i].entry);
      EXPECT_EQ(back.fragments[i].anchor, res.trace.fragments[i].anchor);
    }
    ASSERT_EQ(back.steps.size(), res.trace.steps.size());
    for (size_t i = 0; i < back.steps.size(); ++i) {
      EXPECT_EQ(back.steps[i].component, res.trace.steps[i].component);
      EXPECT_EQ(back.steps[i].connected, res.trace.steps[i].connected);
      EXPECT_EQ(back.steps[i].root, res.trace.steps[i].root);
      EXPECT_EQ(back.steps[i].root_m, res.trace.steps[i].root_m);
    }
    // The round-tripped trace still verifies.
    EXPECT_TRUE(verify_invariant(g, back).ok);
  }
}

TEST(JsonIo, VariantNamesRoundTrip) {
  EXPECT_EQ(variant_from_name(variant_name(OrderVariant::plain)), OrderVariant::plain);
  EXPECT_EQ(variant_from_name(variant_name(OrderVariant::successor)),
            OrderVariant::successor);
  EXPECT_THROW(variant_from_name("bogus"), std::invalid_argument);
}

TEST(JsonIo, SpanningChargesClaimsValidate) {
  Graph g = disjoint_union(star_graph(4), path_graph(3));
  AugmentedGraph aug = build_augmented(g);
  std::string error;

  json spanning = spanning_to_json(extract_spanning_tree(aug));
  EXPECT_TRUE(validate_schema(schema_by_name("spanning"), spanning, &error)) << error;
  EXPECT_EQ(spanning.at("parent").size(), 8u);

  json charges = charges_to_json(aug);
  EXPECT_TRUE(validate_schema(schema_by_name("charges"), charges, &error)) << error;

  json claims = claims_to_json(verify_claims(aug, 2));
  EXPECT_TRUE(validate_schema(schema_by_name("claims"), claims, &error)) << error;
}

TEST(JsonIo, DumpIsDeterministic) {
  Graph g = grid_graph(3, 3);
  MetricProfile p = metric_profile(g, greedy_order(g, 1), 1);
  EXPECT_EQ(profile_to_json(p).dump(2), profile_to_json(p).dump(2));
}

}  // namespace
}  // namespace gcn
