#include <gtest/gtest.h>

#include <set>
#include <string>

#include "explab/corpus.hpp"

using namespace explab;

TEST(Corpus, SmallCorpusComposition) {
  auto corpus = corpus_small();
  std::set<std::string> names;
  std::set<std::vector<Edge>> edge_sets;
  int random = 0;
  for (const auto& ng : corpus) {
    EXPECT_TRUE(names.insert(ng.name).second) << ng.name;
    EXPECT_TRUE(edge_sets.insert(ng.graph.edges()).second) << ng.name;
    EXPECT_TRUE(ng.graph.is_regular());
    EXPECT_TRUE(ng.graph.is_connected()) << ng.name;
    EXPECT_GT(ng.graph.degree(), 0);
    if (ng.name.rfind("rand", 0) == 0) {
      ++random;
      EXPECT_EQ(ng.graph.n(), 10);
    } else {
      EXPECT_LE(ng.graph.n(), 8);
    }
  }
  for (int n = 3; n <= 8; ++n) EXPECT_TRUE(names.count("K" + std::to_string(n))) << n;
  EXPECT_TRUE(names.count("C5"));
  EXPECT_LE(random, 20);
  EXPECT_GE(random, 15);  // a few random draws may be disconnected or repeat
}

TEST(Corpus, DisconnectedMembersOnRequest) {
  auto all = corpus_small(false);
  auto connected = corpus_small(true);
  EXPECT_GT(all.size(), connected.size());
  bool found = false;
  for (const auto& ng : all) found = found || !ng.graph.is_connected();
  EXPECT_TRUE(found);
}

TEST(Corpus, CodesHaveRequestedLengthAndSize) {
  for (int n = 3; n <= 10; ++n)
    for (const auto& nc : corpus_codes(n)) {
      EXPECT_EQ(nc.code.n(), static_cast<std::size_t>(n)) << nc.name;
      EXPECT_GT(nc.code.k(), 0u) << nc.name;
      EXPECT_LE(nc.code.size(), std::uint64_t{1} << 16) << nc.name;
      EXPECT_TRUE(nc.code.invariants_hold()) << nc.name;
    }
  EXPECT_FALSE(corpus_codes(7).empty());
}
