#include <gtest/gtest.h>

#include <sstream>
#include <string>

#include "explab/io.hpp"

using namespace explab;

namespace {

ErrorCode error_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::CheckFailed;
}

}  // namespace

TEST(Io, GraphRoundTrip) {
  for (const auto& g : {gen_complete(4), gen_petersen(), gen_random_regular(10, 3, 7)}) {
    auto j = to_json(g);
    EXPECT_EQ(graph_from_json(j), g);
    EXPECT_EQ(graph_from_json(json::parse(j.dump())), g);
  }
  EXPECT_EQ(to_json(gen_complete(3)).dump(), R"({"n":3,"edges":[[0,1],[0,2],[1,2]]})");
}

TEST(Io, BipartiteRoundTrip) {
  auto b = edge_vertex_graph(gen_complete(4));
  auto j = to_json(b);
  EXPECT_EQ(j["n_in"], 6);
  EXPECT_EQ(j["n_out"], 4);
  EXPECT_EQ(bipartite_from_json(j), b);
}

TEST(Io, MalformedInputIsBadParameters) {
  EXPECT_EQ(error_of([] { graph_from_json(json::parse(R"({"n":3})")); }), ErrorCode::BadParameters);
  EXPECT_EQ(error_of([] { graph_from_json(json::parse(R"({"n":3,"edges":[[0,1,2]]})")); }), ErrorCode::BadParameters);
  EXPECT_EQ(error_of([] { graph_from_json(json::parse(R"({"n":3,"edges":[[0,0]]})")); }), ErrorCode::SelfLoop);
  EXPECT_EQ(error_of([] { bipartite_from_json(json::parse(R"({"n_in":2,"n_out":2,"nbrs":[[0,1]]})")); }),
            ErrorCode::LengthMismatch);
}

TEST(Io, Fnv1aReferenceVectors) {
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ull);
  EXPECT_EQ(fnv1a64("a"), 0xaf63dc4c8601ec8cull);
  EXPECT_EQ(fnv1a64("foobar"), 0x85944171f73967e8ull);
  EXPECT_EQ(hex64(0xabcull), "0000000000000abc");
}

TEST(Io, MetaBlockIsDeterministic) {
  auto a = meta_block(7, 1e-10, "complete:4");
  auto b = meta_block(7, 1e-10, "complete:4");
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(a["seed"], 7);
  EXPECT_EQ(a["tool_version"], std::string(kToolVersion));
  EXPECT_NE(a["input_digest"], meta_block(7, 1e-10, "complete:5")["input_digest"]);
}

TEST(Io, BoundReportCarriesEveryField) {
  ExpansionParams p;
  p.d = 3;
  p.mu = 1;
  p.alpha = Rational(1, 3);
  auto j = to_json(evaluate_bounds(p));
  for (const char* key : {"tanner", "edge_vertex_tanner", "improved", "alpha0", "ss_distance", "improvement_factor",
                          "exp_code_distance", "alon_chung_lower", "degenerate", "hypothesis_ok", "notes"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["params"]["alpha"], "1/3");
  EXPECT_TRUE(j["alpha0"].is_null());
  EXPECT_DOUBLE_EQ(j["improved"].get<double>(), 1.0);
}

TEST(Io, CodeAndReportsSerialize) {
  auto c = code_hamming74();
  auto j = to_json(c);
  EXPECT_EQ(j["n"], 7);
  EXPECT_EQ(j["k"], 4);
  EXPECT_EQ(j["generator"].size(), 4u);
  EXPECT_EQ(j["parity_check"].size(), 3u);
  EXPECT_EQ(j["distance"]["value"], 3);
  EXPECT_EQ(j["field"]["q"], 2);

  auto g = gen_complete(4);
  auto rep = expander_map_distance(g, code_parity(4, Field::make(2)));
  auto rj = to_json(rep);
  EXPECT_EQ(rj["distance"], 4);
  EXPECT_EQ(rj["bound_exact"], "18/5");
  EXPECT_EQ(rj["tight"], false);

  auto v = to_json(verify_alon_chung(g, graph_spectrum(g), "K4"));
  EXPECT_EQ(v["instance"], "K4");
  EXPECT_EQ(v["checked"], 60);
  EXPECT_TRUE(v["violations"].empty());
  EXPECT_FALSE(v["tight_witnesses"].empty());
}

TEST(Io, FamilySweepCsv) {
  auto csv = family_sweep_csv(1, 10);
  std::istringstream in(csv);
  std::string line;
  int rows = 0;
  std::getline(in, line);
  EXPECT_EQ(line.rfind("m,d,mu,epsilon", 0), 0u);
  while (std::getline(in, line)) ++rows;
  EXPECT_EQ(rows, 10);
  EXPECT_NE(csv.find("1,5,4,2/3"), std::string::npos);
  EXPECT_NE(csv.find("DEGENERATE"), std::string::npos);
  EXPECT_EQ(error_of([] { family_sweep_csv(3, 2); }), ErrorCode::EmptyRange);
}
