#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "explab/codes.hpp"
#include "explab/fields.hpp"
#include "explab/graphs.hpp"
#include "explab/linear_code.hpp"

namespace explab {

struct NamedGraph {
  std::string name;
  Graph graph;
};

struct NamedCode {
  std::string name;
  LinearCode code;
};

inline constexpr int kCorpusMaxSmallN = 8;
inline constexpr int kCorpusRandomN = 10;
inline constexpr int kCorpusRandomDegree = 3;
inline constexpr std::uint64_t kCorpusRandomSeeds = 20;

/// Standing test corpus: complete graphs, cycles and every circulant on
/// n <= 8 vertices (deduplicated by edge set), plus seeded random 3-regular
/// graphs on 10 vertices. Disconnected members are dropped unless asked for.
inline std::vector<NamedGraph> corpus_small(bool connected_only = true) {
  std::vector<NamedGraph> out;
  std::set<std::vector<Edge>> seen;
  auto add = [&](std::string name, Graph g) {
    if (g.edge_count() == 0) return;
    if (connected_only && !g.is_connected()) return;
    if (!g.is_regular()) return;
    if (!seen.insert(g.edges()).second) return;
    out.push_back({std::move(name), std::move(g)});
  };
  for (int n = 3; n <= kCorpusMaxSmallN; ++n) add("K" + std::to_string(n), gen_complete(n));
  for (int n = 4; n <= kCorpusMaxSmallN; ++n) add("C" + std::to_string(n), gen_cycle(n));
  for (int n = 4; n <= kCorpusMaxSmallN; ++n) {
    const int half = n / 2;
    for (std::uint32_t mask = 1; mask < (1u << half); ++mask) {
      std::vector<int> offs;
      std::string name = "circ" + std::to_string(n) + "_";
      for (int j = 0; j < half; ++j)
        if (mask >> j & 1u) {
          if (!offs.empty()) name += ".";
          offs.push_back(j + 1);
          name += std::to_string(j + 1);
        }
      add(std::move(name), gen_circulant(n, offs));
    }
  }
  for (std::uint64_t seed = 1; seed <= kCorpusRandomSeeds; ++seed)
    add("rand" + std::to_string(kCorpusRandomN) + "_" + std::to_string(kCorpusRandomDegree) + "_s" +
            std::to_string(seed),
        gen_random_regular(kCorpusRandomN, kCorpusRandomDegree, seed));
  return out;
}

/// Base codes of length n used with the expander map on n-vertex graphs,
/// restricted to at most max_size codewords.
inline std::vector<NamedCode> corpus_codes(int n, std::uint64_t max_size = std::uint64_t{1} << 16) {
  std::vector<NamedCode> out;
  auto add = [&](std::string name, LinearCode c) {
    if (c.k() == 0 || c.size() > max_size) return;
    out.push_back({std::move(name), std::move(c)});
  };
  const Field f2 = Field::make(2, 1), f3 = Field::make(3, 1), f4 = Field::make(2, 2), f8 = Field::make(2, 3),
              f11 = Field::make(11, 1);
  const std::string len = std::to_string(n);
  add("rep" + len + "_gf2", code_repetition(n, f2));
  add("rep" + len + "_gf3", code_repetition(n, f3));
  add("parity" + len + "_gf2", code_parity(n, f2));
  if (n <= 11) add("parity" + len + "_gf3", code_parity(n, f3));
  if (n == 7) add("hamming74", code_hamming74());
  if (n <= 5) add("rs" + len + "_2_gf4", code_rs(n, 2, f4));
  if (n <= 9) add("rs" + len + "_2_gf8", code_rs(n, 2, f8));
  if (n <= 11) add("rs" + len + "_3_gf11", code_rs(n, 3, f11));
  if (n <= 9) {
    auto sub = subfield_subcode(code_rs(n, n - 2, f8), f2);
    add("rs" + len + "_" + std::to_string(n - 2) + "_gf8|gf2", std::move(sub));
  }
  return out;
}

}  // namespace explab
