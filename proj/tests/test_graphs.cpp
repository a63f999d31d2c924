#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "explab/graphs.hpp"

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

int common_neighbors(const Graph& g, int u, int v) {
  int c = 0;
  for (int w = 0; w < g.n(); ++w) c += g.has_edge(u, w) && g.has_edge(v, w);
  return c;
}

// Strongly regular check: adjacent pairs share lambda, non-adjacent share mu.
void expect_srg(const Graph& g, int k, int lambda, int mu) {
  EXPECT_EQ(g.degree(), k);
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) EXPECT_EQ(common_neighbors(g, u, v), g.has_edge(u, v) ? lambda : mu);
}

}  // namespace

TEST(Graphs, ValidatesEdgeLists) {
  std::vector<Edge> loop{{0, 0}}, dup{{0, 1}, {1, 0}}, out{{0, 5}};
  EXPECT_EQ(error_of([&] { Graph(3, loop); }), ErrorCode::SelfLoop);
  EXPECT_EQ(error_of([&] { Graph(3, dup); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(error_of([&] { Graph(3, out); }), ErrorCode::OutOfRange);
  std::vector<Edge> path{{0, 1}, {1, 2}};
  EXPECT_EQ(error_of([&] { Graph(3, path).degree(); }), ErrorCode::NotRegular);
}

TEST(Graphs, EdgesAreSortedWithSmallerEndpointFirst) {
  std::vector<Edge> e{{2, 1}, {0, 2}, {1, 0}};
  Graph g(3, e);
  std::vector<Edge> expect{{0, 1}, {0, 2}, {1, 2}};
  EXPECT_EQ(g.edges(), expect);
  EXPECT_EQ(g, gen_complete(3));
}

TEST(Graphs, CompleteAndCycleStructure) {
  for (int n = 3; n <= 9; ++n) {
    auto k = gen_complete(n);
    EXPECT_EQ(k.degree(), n - 1);
    EXPECT_EQ(k.edge_count(), static_cast<std::size_t>(n * (n - 1) / 2));
    auto c = gen_cycle(n);
    EXPECT_EQ(c.degree(), 2);
    EXPECT_TRUE(c.is_connected());
    for (int v = 0; v < n; ++v) EXPECT_TRUE(c.has_edge(v, (v + 1) % n));
  }
  EXPECT_EQ(error_of([] { gen_cycle(2); }), ErrorCode::BadParameters);
}

TEST(Graphs, CirculantMatchesDefinition) {
  std::vector<int> offs{1, 3};
  auto g = gen_circulant(8, offs);
  for (int u = 0; u < 8; ++u)
    for (int v = 0; v < 8; ++v) {
      const int diff = ((u - v) % 8 + 8) % 8;
      const bool adj = diff == 1 || diff == 7 || diff == 3 || diff == 5;
      EXPECT_EQ(u != v && g.has_edge(u, v), adj);
    }
  std::vector<int> half{4};
  EXPECT_EQ(gen_circulant(8, half).degree(), 1);
  std::vector<int> four{2};
  EXPECT_FALSE(gen_circulant(8, four).is_connected());
}

TEST(Graphs, PaleyAndPetersenAreStronglyRegular) {
  expect_srg(gen_paley(13), 6, 2, 3);
  expect_srg(gen_paley(5), 2, 0, 1);
  expect_srg(gen_petersen(), 3, 0, 1);
  EXPECT_EQ(error_of([] { gen_paley(7); }), ErrorCode::BadParameters);
  EXPECT_EQ(error_of([] { gen_paley(9); }), ErrorCode::BadParameters);
}

TEST(Graphs, RandomRegularIsDeterministicAndRegular) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto a = gen_random_regular(10, 3, seed);
    EXPECT_EQ(a, gen_random_regular(10, 3, seed));
    EXPECT_EQ(a.degree(), 3);
  }
  EXPECT_NE(gen_random_regular(12, 4, 1), gen_random_regular(12, 4, 2));
  EXPECT_EQ(error_of([] { gen_random_regular(5, 3, 1); }), ErrorCode::BadParameters);
}

TEST(Graphs, BoundaryOperatorsAgree) {
  auto g = gen_petersen();
  for (std::uint64_t m = 0; m < (1u << 10); ++m) {
    auto s = from_mask(m);
    auto b = boundary(g, s);
    EXPECT_EQ(b, boundary_by_incidence(g, s));
    std::set<int> naive;
    for (auto [u, v] : g.edges()) {
      if (m >> u & 1) naive.insert(v);
      if (m >> v & 1) naive.insert(u);
    }
    EXPECT_EQ(b, VertexSet(naive.begin(), naive.end()));
    auto star = star_boundary(g, s);
    for (int v : star) EXPECT_FALSE(m >> v & 1);
    std::size_t inside = 0;
    for (auto [u, v] : g.edges()) inside += (m >> u & 1) && (m >> v & 1);
    EXPECT_EQ(induced_edge_count(g, s), inside);
  }
}

TEST(Graphs, MaskRoundTrip) {
  std::vector<int> s{0, 3, 63};
  EXPECT_EQ(from_mask(to_mask(s)), VertexSet(s.begin(), s.end()));
  std::vector<int> bad{64};
  EXPECT_EQ(error_of([&] { to_mask(bad); }), ErrorCode::OutOfRange);
}

TEST(Graphs, EdgeVertexGraphShape) {
  for (const auto& g : {gen_complete(4), gen_cycle(5), gen_petersen(), gen_random_regular(12, 4, 3)}) {
    auto h = edge_vertex_graph(g);
    const int d = g.degree();
    EXPECT_EQ(h.n_in(), g.n() * d / 2);
    EXPECT_EQ(h.n_out(), g.n());
    EXPECT_EQ(h.input_degree(), 2);
    EXPECT_EQ(h.output_degree(), d);
    auto edges = g.edges();
    for (int i = 0; i < h.n_in(); ++i) {
      auto nb = h.in_neighbors(i);
      EXPECT_EQ(nb[0], edges[i].first);
      EXPECT_EQ(nb[1], edges[i].second);
    }
    for (int o = 0; o < h.n_out(); ++o) EXPECT_TRUE(std::is_sorted(h.out_neighbors(o).begin(), h.out_neighbors(o).end()));
    EXPECT_EQ(collapse_edge_vertex(h), g);
  }
}

TEST(Graphs, BipartiteValidation) {
  EXPECT_EQ(error_of([] { BipartiteGraph(3, {{0, 1}, {1}}); }), ErrorCode::NotRegular);
  EXPECT_EQ(error_of([] { BipartiteGraph(3, {{0, 0}}); }), ErrorCode::DuplicateEdge);
  EXPECT_EQ(error_of([] { BipartiteGraph(2, {{0, 2}}); }), ErrorCode::OutOfRange);
  // inputs regular but outputs not
  EXPECT_EQ(error_of([] { BipartiteGraph(3, {{0, 1}, {0, 2}}); }), ErrorCode::NotRegular);
}

TEST(Graphs, ShuffledOrdersArePermutations) {
  auto g = gen_complete(6);
  auto h = edge_vertex_graph(g);
  auto s = h.with_shuffled_output_order(9);
  for (int o = 0; o < h.n_out(); ++o) {
    std::vector<int> a(s.out_neighbors(o).begin(), s.out_neighbors(o).end());
    std::sort(a.begin(), a.end());
    EXPECT_EQ(a, std::vector<int>(h.out_neighbors(o).begin(), h.out_neighbors(o).end()));
  }
  auto order = shuffled_neighbor_order(g, 4);
  EXPECT_EQ(order, shuffled_neighbor_order(g, 4));
  for (int v = 0; v < g.n(); ++v) {
    std::sort(order[v].begin(), order[v].end());
    EXPECT_EQ(order[v], canonical_neighbor_order(g)[v]);
  }
}

TEST(Graphs, SplitMixKnownSequence) {
  // Reference outputs of SplitMix64 seeded with 0.
  SplitMix64 r(0);
  EXPECT_EQ(r.next(), 0xe220a8397b1dcdafull);
  EXPECT_EQ(r.next(), 0x6e789e6aa1b965f4ull);
  SplitMix64 s(7);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(s.below(13), 13u);
}
