#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <queue>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "explab/error.hpp"

namespace explab {

using Edge = std::pair<int, int>;
using VertexSet = std::vector<int>;  // sorted, unique

/// SplitMix64 (Steele, Lea, Flood 2014). Every seeded routine in the
/// library draws from this so outputs are identical across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = next();
    } while (x >= limit);
    return x % bound;
  }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::uint64_t state_;
};

/// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::span<const Edge> edges) : adj_(static_cast<std::size_t>(n)) {
    detail::require(n >= 0, ErrorCode::BadParameters, "negative vertex count");
    for (auto [u, v] : edges) {
      detail::require(u >= 0 && u < n && v >= 0 && v < n, ErrorCode::OutOfRange,
                      "edge (" + std::to_string(u) + "," + std::to_string(v) + ") outside [0," + std::to_string(n) + ")");
      detail::require(u != v, ErrorCode::SelfLoop, "self-loop at " + std::to_string(u));
      adj_[u].push_back(v);
      adj_[v].push_back(u);
    }
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      auto& a = adj_[v];
      std::sort(a.begin(), a.end());
      auto dup = std::adjacent_find(a.begin(), a.end());
      detail::require(dup == a.end(), ErrorCode::DuplicateEdge,
                      "duplicate edge (" + std::to_string(v) + "," + (dup == a.end() ? "" : std::to_string(*dup)) + ")");
    }
    edge_count_ = edges.size();
  }

  int n() const noexcept { return static_cast<int>(adj_.size()); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  std::span<const int> neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Edges with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n(); ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  bool is_regular() const noexcept {
    if (adj_.empty()) return true;
    return std::all_of(adj_.begin(), adj_.end(), [&](const auto& a) { return a.size() == adj_[0].size(); });
  }

  void assert_regular() const {
    detail::require(n() > 0, ErrorCode::NotRegular, "empty graph");
    for (int v = 0; v < n(); ++v)
      detail::require(adj_[v].size() == adj_[0].size(), ErrorCode::NotRegular,
                      "vertex " + std::to_string(v) + " has degree " + std::to_string(adj_[v].size()) +
                          ", vertex 0 has degree " + std::to_string(adj_[0].size()));
  }

  /// Common degree d; throws NotRegular otherwise.
  int degree() const {
    assert_regular();
    return static_cast<int>(adj_[0].size());
  }

  bool is_connected() const {
    if (n() == 0) return true;
    std::vector<char> seen(adj_.size(), 0);
    std::queue<int> todo;
    todo.push(0);
    seen[0] = 1;
    int count = 1;
    while (!todo.empty()) {
      int u = todo.front();
      todo.pop();
      for (int v : adj_[u])
        if (!seen[v]) {
          seen[v] = 1;
          ++count;
          todo.push(v);
        }
    }
    return count == n();
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  void check_vertex(int v) const {
    detail::require(v >= 0 && v < n(), ErrorCode::OutOfRange, "vertex " + std::to_string(v));
  }

  std::vector<std::vector<int>> adj_;
  std::size_t edge_count_ = 0;
};

inline Graph graph_from_edges(int n, std::span<const Edge> edges) { return Graph(n, edges); }

// ---------------------------------------------------------------------------
// Generators

inline Graph gen_complete(int n) {
  detail::require(n >= 1, ErrorCode::BadParameters, "complete graph needs n >= 1");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph gen_cycle(int n) {
  detail::require(n >= 3, ErrorCode::BadParameters, "cycle needs n >= 3");
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u) e.emplace_back(std::min(u, (u + 1) % n), std::max(u, (u + 1) % n));
  return Graph(n, e);
}

/// u ~ v iff (u - v) mod n is in offsets or -offsets.
inline Graph gen_circulant(int n, std::span<const int> offsets) {
  detail::require(n >= 2, ErrorCode::BadParameters, "circulant needs n >= 2");
  std::set<int> steps;
  for (int o : offsets) {
    detail::require(o > 0 && o < n, ErrorCode::BadParameters, "offset " + std::to_string(o) + " not in [1,n)");
    steps.insert(o);
    steps.insert(n - o);
  }
  std::set<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int s : steps) {
      int v = (u + s) % n;
      e.emplace(std::min(u, v), std::max(u, v));
    }
  std::vector<Edge> edges(e.begin(), e.end());
  return Graph(n, edges);
}

/// Paley graph: u ~ v iff u - v is a nonzero square mod q; q prime, q = 1 mod 4.
inline Graph gen_paley(int q) {
  auto prime = [](int x) {
    if (x < 2) return false;
    for (int i = 2; i * i <= x; ++i)
      if (x % i == 0) return false;
    return true;
  };
  detail::require(prime(q) && q % 4 == 1, ErrorCode::BadParameters,
                  "Paley graph needs a prime q = 1 mod 4, got " + std::to_string(q));
  std::vector<char> square(q, 0);
  for (int x = 1; x < q; ++x) square[(x * x) % q] = 1;
  std::vector<Edge> e;
  for (int u = 0; u < q; ++u)
    for (int v = u + 1; v < q; ++v)
      if (square[(v - u) % q]) e.emplace_back(u, v);
  return Graph(q, e);
}

/// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram on 5..9.
inline Graph gen_petersen() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(std::min(i, (i + 1) % 5), std::max(i, (i + 1) % 5));
    e.emplace_back(i, i + 5);
    int a = 5 + i, b = 5 + (i + 2) % 5;
    e.emplace_back(std::min(a, b), std::max(a, b));
  }
  return Graph(10, e);
}

inline constexpr int kRandomRegularRetries = 10000;

/// Pairing model with full rejection of loops and multi-edges.
inline Graph gen_random_regular(int n, int d, std::uint64_t seed) {
  detail::require(n > 0 && d >= 0 && d < n, ErrorCode::BadParameters, "need 0 <= d < n");
  detail::require((static_cast<long long>(n) * d) % 2 == 0, ErrorCode::BadParameters, "n*d must be even");
  SplitMix64 rng(seed);
  std::vector<int> points(static_cast<std::size_t>(n) * d);
  for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<int>(i) / d;
  for (int attempt = 0; attempt < kRandomRegularRetries; ++attempt) {
    rng.shuffle(points);
    std::vector<Edge> e;
    e.reserve(points.size() / 2);
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      int u = points[i], v = points[i + 1];
      if (u == v) ok = false;
      e.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (!ok) continue;
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end()) continue;
    return Graph(n, e);
  }
  detail::fail(ErrorCode::GivesUp, "no simple pairing after " + std::to_string(kRandomRegularRetries) + " tries");
}

// ---------------------------------------------------------------------------
// Neighborhood operators

namespace detail {

inline VertexSet normalize(std::span<const int> s, int n) {
  VertexSet out(s.begin(), s.end());
  for (int v : out) require(v >= 0 && v < n, ErrorCode::OutOfRange, "vertex " + std::to_string(v));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace detail

/// Union of the neighborhoods of S.
inline VertexSet boundary(const Graph& g, std::span<const int> s) {
  VertexSet set = detail::normalize(s, g.n());
  std::vector<char> hit(g.n(), 0);
  for (int v : set)
    for (int u : g.neighbors(v)) hit[u] = 1;
  VertexSet out;
  for (int u = 0; u < g.n(); ++u)
    if (hit[u]) out.push_back(u);
  return out;
}

/// boundary(S) minus S.
inline VertexSet star_boundary(const Graph& g, std::span<const int> s) {
  VertexSet set = detail::normalize(s, g.n());
  VertexSet b = boundary(g, set);
  VertexSet out;
  std::set_difference(b.begin(), b.end(), set.begin(), set.end(), std::back_inserter(out));
  return out;
}

/// {u : S meets the neighborhood of u}; equal to boundary() on simple graphs.
inline VertexSet boundary_by_incidence(const Graph& g, std::span<const int> s) {
  VertexSet set = detail::normalize(s, g.n());
  VertexSet out;
  for (int u = 0; u < g.n(); ++u) {
    auto nb = g.neighbors(u);
    bool meets = std::any_of(nb.begin(), nb.end(), [&](int w) { return std::binary_search(set.begin(), set.end(), w); });
    if (meets) out.push_back(u);
  }
  return out;
}

/// Number of edges with both endpoints in S.
inline std::size_t induced_edge_count(const Graph& g, std::span<const int> s) {
  VertexSet set = detail::normalize(s, g.n());
  std::vector<char> in(g.n(), 0);
  for (int v : set) in[v] = 1;
  std::size_t count = 0;
  for (int v : set)
    for (int u : g.neighbors(v))
      if (in[u] && v < u) ++count;
  return count;
}

// Bitmask helpers for n <= 64.

inline std::uint64_t to_mask(std::span<const int> s) {
  std::uint64_t m = 0;
  for (int v : s) {
    detail::require(v >= 0 && v < 64, ErrorCode::OutOfRange, "vertex does not fit in a 64-bit mask");
    m |= std::uint64_t{1} << v;
  }
  return m;
}

inline VertexSet from_mask(std::uint64_t m) {
  VertexSet out;
  for (int v = 0; m != 0; ++v, m >>= 1)
    if (m & 1) out.push_back(v);
  return out;
}

inline std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
  detail::require(g.n() <= 64, ErrorCode::TooLarge, "bitmask representation needs n <= 64");
  std::vector<std::uint64_t> out(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) out[v] = to_mask(g.neighbors(v));
  return out;
}

/// Per-vertex ordered neighbor lists: the l_1(i), ..., l_d(i) indexing.
using NeighborOrder = std::vector<std::vector<int>>;

inline NeighborOrder canonical_neighbor_order(const Graph& g) {
  NeighborOrder out(g.n());
  for (int v = 0; v < g.n(); ++v) out[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
  return out;
}

inline NeighborOrder shuffled_neighbor_order(const Graph& g, std::uint64_t seed) {
  SplitMix64 rng(seed);
  NeighborOrder out = canonical_neighbor_order(g);
  for (auto& row : out) rng.shuffle(row);
  return out;
}

// ---------------------------------------------------------------------------
// Bipartite graphs

/// (c, d)-regular bipartite graph. Inputs are variables, outputs constraints.
/// out_neighbors(o)[j] is b(o, j): the ordered variable list of constraint o.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  BipartiteGraph(int n_out, std::vector<std::vector<int>> in_nbrs) : n_out_(n_out), in_(std::move(in_nbrs)) {
    detail::require(!in_.empty() && n_out > 0, ErrorCode::BadParameters, "bipartite graph needs both sides nonempty");
    c_ = static_cast<int>(in_[0].size());
    out_.assign(n_out, {});
    for (std::size_t i = 0; i < in_.size(); ++i) {
      auto sorted = in_[i];
      std::sort(sorted.begin(), sorted.end());
      detail::require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(), ErrorCode::DuplicateEdge,
                      "input " + std::to_string(i) + " repeats an output");
      detail::require(static_cast<int>(in_[i].size()) == c_, ErrorCode::NotRegular,
                      "input " + std::to_string(i) + " has degree " + std::to_string(in_[i].size()));
      for (int o : in_[i]) {
        detail::require(o >= 0 && o < n_out, ErrorCode::OutOfRange, "output " + std::to_string(o));
        out_[o].push_back(static_cast<int>(i));
      }
    }
    d_ = static_cast<int>(out_[0].size());
    for (int o = 0; o < n_out; ++o)
      detail::require(static_cast<int>(out_[o].size()) == d_, ErrorCode::NotRegular,
                      "output " + std::to_string(o) + " has degree " + std::to_string(out_[o].size()));
  }

  int n_in() const noexcept { return static_cast<int>(in_.size()); }
  int n_out() const noexcept { return n_out_; }
  int input_degree() const noexcept { return c_; }
  int output_degree() const noexcept { return d_; }

  std::span<const int> in_neighbors(int i) const {
    detail::require(i >= 0 && i < n_in(), ErrorCode::OutOfRange, "input " + std::to_string(i));
    return in_[i];
  }
  std::span<const int> out_neighbors(int o) const {
    detail::require(o >= 0 && o < n_out_, ErrorCode::OutOfRange, "output " + std::to_string(o));
    return out_[o];
  }
  const std::vector<std::vector<int>>& nbrs() const noexcept { return in_; }

  /// Same graph with each constraint's variable order permuted by a seeded shuffle.
  BipartiteGraph with_shuffled_output_order(std::uint64_t seed) const {
    BipartiteGraph copy = *this;
    SplitMix64 rng(seed);
    for (auto& row : copy.out_) rng.shuffle(row);
    return copy;
  }

  friend bool operator==(const BipartiteGraph& a, const BipartiteGraph& b) {
    return a.n_out_ == b.n_out_ && a.in_ == b.in_ && a.out_ == b.out_;
  }

 private:
  int n_out_ = 0;
  int c_ = 0;
  int d_ = 0;
  std::vector<std::vector<int>> in_;
  std::vector<std::vector<int>> out_;
};

/// Union of output neighborhoods of an input set T.
inline VertexSet bip_boundary(const BipartiteGraph& b, std::span<const int> t) {
  VertexSet set = detail::normalize(t, b.n_in());
  std::vector<char> hit(b.n_out(), 0);
  for (int i : set)
    for (int o : b.in_neighbors(i)) hit[o] = 1;
  VertexSet out;
  for (int o = 0; o < b.n_out(); ++o)
    if (hit[o]) out.push_back(o);
  return out;
}

/// Edge-vertex graph: one input per edge of G (lexicographic), adjacent to its two endpoints.
inline BipartiteGraph edge_vertex_graph(const Graph& g) {
  g.assert_regular();
  auto e = g.edges();
  detail::require(!e.empty(), ErrorCode::BadParameters, "graph has no edges");
  std::vector<std::vector<int>> in;
  in.reserve(e.size());
  for (auto [u, v] : e) in.push_back({u, v});
  return BipartiteGraph(g.n(), std::move(in));
}

/// Inverse of edge_vertex_graph: read each degree-2 input back as an edge.
inline Graph collapse_edge_vertex(const BipartiteGraph& b) {
  detail::require(b.input_degree() == 2, ErrorCode::BadParameters, "inputs must have degree 2");
  std::vector<Edge> e;
  for (const auto& row : b.nbrs()) e.emplace_back(std::min(row[0], row[1]), std::max(row[0], row[1]));
  return Graph(b.n_out(), e);
}

}  // namespace explab
