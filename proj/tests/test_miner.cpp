#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "episodes/closure.hpp"
#include "episodes/errors.hpp"
#include "episodes/miner.hpp"
#include "episodes/oracle.hpp"
#include "support.hpp"

using namespace episodes;
using namespace episodes::testing;

namespace {

MiningConfig config(Position rho, std::uint64_t sigma, Measure m = Measure::fixed, std::optional<std::size_t> cap = {}) {
  MiningConfig c;
  c.window = rho;
  c.min_freq = sigma;
  c.measure = m;
  c.max_nodes = cap;
  return c;
}

const EpisodeRecord* find(const std::vector<EpisodeRecord>& records, const Episode& g) {
  auto it = std::ranges::find_if(records, [&](const EpisodeRecord& r) { return r.episode == g; });
  return it == records.end() ? nullptr : &*it;
}

std::map<Episode, std::uint64_t> as_map(const std::vector<EpisodeRecord>& records, Measure m) {
  std::map<Episode, std::uint64_t> out;
  for (const auto& r : records) out.emplace(r.episode, r.freq.get(m));
  return out;
}

std::map<Episode, std::uint64_t> as_map(const std::vector<oracle::Scored>& scored, Measure m) {
  std::map<Episode, std::uint64_t> out;
  for (const auto& r : scored) out.emplace(r.episode, r.freq.get(m));
  return out;
}

EpisodeStore store_of(const EventSequence& s, Position rho, std::initializer_list<std::string> literals) {
  EpisodeStore store;
  ClosureEngine engine(s, rho);
  for (const auto& lit : literals) {
    const Episode g = ep(s, lit);
    const auto windows = engine.scanner().minimal_windows(g, rho);
    store.insert({g, engine.i_closure(g, windows), frequencies(windows, rho, s.length())});
  }
  return store;
}

}  // namespace

TEST(MiningConfig, RejectsBadThresholds) {
  EXPECT_THROW(config(0, 1).validate(), ConfigError);
  EXPECT_THROW(config(3, 0).validate(), ConfigError);
  EXPECT_THROW(config(3, 1, Measure::fixed, 0).validate(), ConfigError);
  EXPECT_NO_THROW(config(3, 1).validate());
  EXPECT_THROW(mine(seq(kS1), config(3, 0)), ConfigError);
}

TEST(Mine, Example8FindsSerialAbc) {
  const auto s = seq(kS3);
  const auto result = mine(s, config(3, 1));
  const auto* r = find(result.f_closed, ep(s, "nodes=[a,b,c] edges=[(0,1),(0,2),(1,2)]"));
  ASSERT_NE(r, nullptr);
  EXPECT_EQ(r->freq.fixed, 1U);
}

TEST(Mine, Example8NeedsAddIntermediate) {
  const auto s = seq(kS3);
  auto c = config(3, 1);
  c.add_intermediate = false;
  const auto result = mine(s, c);
  EXPECT_EQ(find(result.closed, ep(s, "nodes=[a,b,c] edges=[(0,1),(0,2),(1,2)]")), nullptr);
}

TEST(Mine, DiamondOnS1) {
  // Both serial orders abcd and acbd also occur in [1,5] and [6,10], so they
  // share the diamond's frequency and absorb it under f-closedness.
  const auto s = seq(kS1);
  const auto result = mine(s, config(5, 2, Measure::fixed, 4));
  const auto* d = find(result.closed, ep(s, kDiamond));
  ASSERT_NE(d, nullptr);
  EXPECT_EQ(d->freq.fixed, 2U);
  EXPECT_EQ(find(result.f_closed, ep(s, kDiamond)), nullptr);
  const auto* abcd = find(result.f_closed, ep(s, "nodes=[a,b,c,d] edges=[(0,1),(0,2),(0,3),(1,2),(1,3),(2,3)]"));
  const auto* acbd = find(result.f_closed, ep(s, "nodes=[a,b,c,d] edges=[(0,1),(0,2),(0,3),(2,1),(1,3),(2,3)]"));
  ASSERT_NE(abcd, nullptr);
  ASSERT_NE(acbd, nullptr);
  EXPECT_EQ(abcd->freq.fixed, 2U);
  EXPECT_EQ(acbd->freq.fixed, 2U);
}

TEST(Mine, EmptySequenceYieldsNothing) {
  const auto result = mine(EventSequence{}, config(3, 1));
  EXPECT_TRUE(result.closed.empty());
  EXPECT_TRUE(result.f_closed.empty());
}

TEST(Mine, DeterministicAcrossThreadCounts) {
  std::mt19937_64 rng(7);
  const auto s = seq(random_text(rng, 400, 6));
  auto c = config(6, 3);
  const auto one = mine(s, c);
  c.threads = 4;
  const auto four = mine(s, c);
  ASSERT_EQ(one.f_closed.size(), four.f_closed.size());
  for (std::size_t i = 0; i < one.f_closed.size(); ++i) {
    EXPECT_EQ(one.f_closed[i].episode, four.f_closed[i].episode);
    EXPECT_EQ(one.f_closed[i].freq, four.f_closed[i].freq);
  }
}

TEST(TestCandidate, AcceptsWhenParentsAreStoredAndNotAbsorbing) {
  // c precedes a once and b precedes a once, so neither closure adds an edge
  const auto s = seq("c a b x b a c x a b c x a c b");
  const auto store = store_of(s, 3, {"nodes=[a,b,c] edges=[(0,1)]", "nodes=[a,b,c] edges=[(0,2)]"});
  EXPECT_TRUE(test_candidate(ep(s, "nodes=[a,b,c] edges=[(0,1),(0,2)]"), store));
}

TEST(TestCandidate, RejectsClosureAbsorbedEdge) {
  const auto s = seq(kS3);
  const auto store = store_of(s, 3, {"nodes=[a,b,c] edges=[(0,1)]", "nodes=[a,b,c] edges=[(0,2)]"});
  EXPECT_FALSE(test_candidate(ep(s, "nodes=[a,b,c] edges=[(0,1),(0,2)]"), store));
}

TEST(TestCandidate, RejectsMissingParent) {
  const auto s = seq("a b c x a c b x");
  const auto store = store_of(s, 3, {"nodes=[a,b,c] edges=[(0,1)]"});
  EXPECT_FALSE(test_candidate(ep(s, "nodes=[a,b,c] edges=[(0,1),(0,2)]"), store));
}

TEST(AddIntermediate, Example8EmitsHiddenEdgeEpisode) {
  const auto s = seq(kS3);
  const Episode g = ep(s, "nodes=[a,b,c] edges=[(0,1)]");
  const Episode closure = i_closure(g, {s, 3});
  const auto out = add_intermediate(g, closure);
  EXPECT_NE(std::ranges::find(out, ep(s, "nodes=[a,b,c] edges=[(0,1),(0,2)]")), out.end());
}

TEST(AddIntermediate, EmitsSolitaryClosureNode) {
  const auto s = seq(kS2);
  const Episode g = ep(s, "nodes=[a,b] edges=[(0,1)]");
  const Episode closure = i_closure(g, {s, 3});
  const auto out = add_intermediate(g, closure);
  EXPECT_NE(std::ranges::find(out, ep(s, "nodes=[a,b,x] edges=[(0,1)]")), out.end());
}

TEST(AddIntermediate, ClosedEpisodeEmitsNothing) {
  const auto s = seq(kS1);
  const Episode d = ep(s, kDiamond);
  EXPECT_TRUE(add_intermediate(d, d).empty());
}

TEST(FClosureFilter, DifferentFrequenciesBothKept) {
  const auto s = seq(kS1);
  std::vector<EpisodeRecord> in{
      {ep(s, kDiamond), ep(s, kDiamond), {2, 2}},
      {ep(s, "nodes=[a,b,c,d] edges=[(0,1),(0,2),(0,3),(1,2),(1,3),(2,3)]"),
       ep(s, "nodes=[a,b,c,d] edges=[(0,1),(0,2),(0,3),(1,2),(1,3),(2,3)]"), {1, 1}}};
  EXPECT_EQ(f_closure_filter(in, Measure::fixed).size(), 2U);
}

TEST(FClosureFilter, EqualFrequencySubepisodeRemoved) {
  const auto s = seq("a b c x x a b c");
  const Episode g = ep(s, "nodes=[a,b,c] edges=[(0,1),(0,2)]");
  const Episode h = ep(s, "nodes=[a,b,c] edges=[(0,1),(0,2),(1,2)]");
  std::vector<EpisodeRecord> in{{g, g, {4, 2}}, {h, h, {4, 2}}};
  const auto out = f_closure_filter(in, Measure::fixed);
  ASSERT_EQ(out.size(), 1U);
  EXPECT_EQ(out[0].episode, h);
}

TEST(FClosureFilter, FewerNodesAbsorbedBySuperepisode) {
  const auto s = seq("a b c x x a b c");
  const Episode g = ep(s, "nodes=[a,b] edges=[(0,1)]");
  const Episode h = ep(s, "nodes=[a,b,c] edges=[(0,1),(0,2),(1,2)]");
  std::vector<EpisodeRecord> in{{g, g, {4, 2}}, {h, h, {4, 2}}};
  EXPECT_EQ(f_closure_filter(in, Measure::fixed).size(), 1U);
  EXPECT_EQ(f_closure_filter(in, Measure::disjoint).size(), 1U);
  in[0].freq = {5, 2};
  EXPECT_EQ(f_closure_filter(in, Measure::fixed).size(), 2U);
  EXPECT_EQ(f_closure_filter(in, Measure::disjoint).size(), 1U);
}

TEST(FClosureFilter, SingletonUnchanged) {
  const auto s = seq(kS1);
  std::vector<EpisodeRecord> in{{ep(s, kDiamond), ep(s, kDiamond), {2, 2}}};
  EXPECT_EQ(f_closure_filter(in, Measure::fixed).size(), 1U);
}

// Properties checked on random instances against the brute-force oracle.

class MineVsOracle : public ::testing::TestWithParam<Measure> {};

TEST_P(MineVsOracle, RandomInstances) {
  const Measure m = GetParam();
  std::mt19937_64 rng(m == Measure::fixed ? 11 : 12);
  for (int round = 0; round < 150; ++round) {
    std::uniform_int_distribution<int> len(5, 25), sig(2, 4), rho_d(3, 6), sigma_d(1, 3);
    const std::string text = random_text(rng, len(rng), sig(rng));
    const auto s = seq(text);
    const Position rho = rho_d(rng);
    const std::uint64_t sigma = sigma_d(rng);
    const auto universe = oracle::enumerate_episodes(s.alphabet().labels(), 4);
    const auto scored = oracle::naive_frequencies(s, rho, universe);
    const auto expected = oracle::naive_fclosed(scored, sigma, m);
    const auto result = mine(s, config(rho, sigma, m, 4));
    ASSERT_EQ(as_map(result.f_closed, m), as_map(expected, m)) << "s=" << text << " rho=" << rho << " sigma=" << sigma;

    // closed = closures within the cap of every frequent episode
    ClosureEngine engine(s, rho);
    std::set<Episode> closures;
    for (const auto& x : scored) {
      if (x.freq.get(m) < sigma) continue;
      const Episode c = engine.i_closure(x.episode);
      if (c.size() <= 4) closures.insert(c);
    }
    std::set<Episode> mined;
    for (const auto& r : result.closed) mined.insert(r.episode);
    ASSERT_EQ(mined, closures);

    // an f-closed episode is i-closed unless its closure outgrows the cap
    for (const auto& r : result.f_closed) {
      EXPECT_GE(r.freq.get(m), sigma);
      const Episode c = engine.i_closure(r.episode);
      EXPECT_TRUE(c == r.episode || c.size() > 4);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(BothMeasures, MineVsOracle, ::testing::Values(Measure::fixed, Measure::disjoint));
