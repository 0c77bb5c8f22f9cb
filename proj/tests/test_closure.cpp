#include <gtest/gtest.h>

#include <random>

#include "episodes/closure.hpp"
#include "episodes/errors.hpp"
#include "episodes/oracle.hpp"
#include "episodes/scanner.hpp"
#include "support.hpp"

using namespace episodes;
using namespace episodes::testing;

TEST(ClosureEngine, RejectsBadWindow) {
  const auto s = seq(kS1);
  EXPECT_THROW(ClosureEngine(s, 0), ConfigError);
}

TEST(NodeClosure, Examples) {
  const auto s2 = seq(kS2);
  EXPECT_EQ(node_closure(ep(s2, "nodes=[a,b] edges=[(0,1)]"), {s2, 3}), ep(s2, "nodes=[a,b,x] edges=[(0,1)]"));
  const auto s1 = seq(kS1);
  EXPECT_EQ(node_closure(ep(s1, kDiamond), {s1, 5}), ep(s1, kDiamond));
  const Episode never = ep(s1, "nodes=[a,d] edges=[(0,1)]");
  EXPECT_EQ(node_closure(never, {s1, 2}), never);
}

TEST(EdgeClosure, Examples) {
  const auto s1 = seq(kS1);
  // G4 of Example 5, read as a->d over {a,b,c,d}
  EXPECT_EQ(edge_closure(ep(s1, "nodes=[a,b,c,d] edges=[(0,3)]"), {s1, 5}), ep(s1, kDiamond));
  // the parallel episode also has the windows [3,6], [4,7], [5,8], so nothing is forced
  const Episode parallel = ep(s1, "nodes=[a,b,c,d] edges=[]");
  EXPECT_EQ(edge_closure(parallel, {s1, 5}), parallel);

  const auto s3 = seq(kS3);
  EXPECT_EQ(edge_closure(ep(s3, "nodes=[a,b,c] edges=[(0,1)]"), {s3, 3}),
            ep(s3, "nodes=[a,b,c] edges=[(0,1),(0,2)]"));
  const Episode serial = ep(s3, "nodes=[a,b,c] edges=[(0,1),(0,2),(1,2)]");
  EXPECT_EQ(edge_closure(serial, {s3, 3}), serial);
}

TEST(IClosure, Examples) {
  const auto s2 = seq(kS2);
  EXPECT_EQ(i_closure(ep(s2, "nodes=[a,b] edges=[(0,1)]"), {s2, 3}),
            ep(s2, "nodes=[a,b,x] edges=[(0,1),(0,2),(2,1)]"));
  const auto unique = seq("c a b");
  EXPECT_EQ(i_closure(ep(unique, "nodes=[a,b,c] edges=[]"), {unique, 3}),
            ep(unique, "nodes=[a,b,c] edges=[(0,1),(2,0),(2,1)]"));
  const auto s1 = seq(kS1);
  EXPECT_EQ(i_closure(ep(s1, kDiamond), {s1, 5}), ep(s1, kDiamond));
}

TEST(IsClosed, Examples) {
  const auto s1 = seq(kS1);
  EXPECT_TRUE(is_closed(ep(s1, kDiamond), {s1, 5}, ClosureMode::instance));
  EXPECT_FALSE(is_closed(ep(s1, "nodes=[a,b,c,d] edges=[(0,3)]"), {s1, 5}, ClosureMode::edge));
  const auto s3 = seq(kS3);
  EXPECT_FALSE(is_closed(ep(s3, "nodes=[a,b,c] edges=[(0,1)]"), {s3, 3}, ClosureMode::edge));
}

TEST(ClosureEmbedding, MapsByLabelRank) {
  const auto s2 = seq(kS2);
  const Episode g = ep(s2, "nodes=[a,b] edges=[(0,1)]");
  const Episode c = ep(s2, "nodes=[a,b,x] edges=[(0,1),(0,2),(2,1)]");
  const auto emb = closure_embedding(g, c);
  EXPECT_EQ(emb, (std::vector<NodeId>{0, 1}));
  EXPECT_TRUE(closure_has_edge(emb, c, {0, 1}));
  EXPECT_FALSE(closure_has_edge(emb, c, {1, 0}));
}

// Closure axioms over every episode of at most 3 nodes on random sequences.

TEST(ClosureProperties, Axioms) {
  std::mt19937_64 rng(21);
  for (int round = 0; round < 100; ++round) {
    std::uniform_int_distribution<int> len(4, 16), rho_d(2, 5);
    const auto s = seq(random_text(rng, len(rng), 3));
    const Position rho = rho_d(rng);
    ClosureEngine engine(s, rho);
    const auto u = oracle::enumerate_episodes(s.alphabet().labels(), 3);
    std::vector<Episode> frequent;
    for (const Episode& g : u.episodes) {
      if (!engine.scanner().minimal_windows(g, rho).empty()) frequent.push_back(g);
    }
    for (const Episode& g : frequent) {
      const auto windows = engine.scanner().minimal_windows(g, rho);
      const Episode n = engine.node_closure(g);
      const Episode e = engine.edge_closure(g);
      const Episode i = engine.i_closure(g);
      ASSERT_TRUE(is_subepisode(g, n));
      ASSERT_TRUE(is_subepisode(g, e));
      ASSERT_TRUE(is_subepisode(g, i));
      ASSERT_EQ(engine.node_closure(n), n);
      ASSERT_EQ(engine.edge_closure(e), e);
      ASSERT_EQ(engine.i_closure(i), i);
      ASSERT_EQ(engine.edge_closure(g, false), e);
      ASSERT_EQ(engine.scanner().minimal_windows(i, rho), windows);
      ASSERT_EQ(frequencies(engine.scanner().minimal_windows(i, rho), rho, s.length()),
                frequencies(windows, rho, s.length()));
    }
    for (const Episode& g : frequent) {
      for (const Episode& h : frequent) {
        if (!is_subepisode(g, h)) continue;
        ASSERT_TRUE(is_subepisode(engine.node_closure(g), engine.node_closure(h)));
        ASSERT_TRUE(is_subepisode(engine.edge_closure(g), engine.edge_closure(h)));
        ASSERT_TRUE(is_subepisode(engine.i_closure(g), engine.i_closure(h)));
      }
    }
  }
}

TEST(ClosureProperties, FClosedEpisodesAreIClosed) {
  std::mt19937_64 rng(22);
  for (int round = 0; round < 40; ++round) {
    const auto s = seq(random_text(rng, 14, 3));
    ClosureEngine engine(s, 4);
    const auto u = oracle::enumerate_episodes(s.alphabet().labels(), 4);
    for (const Measure m : {Measure::fixed, Measure::disjoint}) {
      for (const auto& x : oracle::naive_fclosed(s, 4, 1, m, u)) {
        const Episode c = engine.i_closure(x.episode);
        ASSERT_TRUE(c == x.episode || c.size() > 4) << to_string(x.episode, s.alphabet());
      }
    }
  }
}
