#include <gtest/gtest.h>

#include <random>

#include "episodes/oracle.hpp"
#include "episodes/scanner.hpp"
#include "support.hpp"

using namespace episodes;
using namespace episodes::testing;

namespace {

using Windows = std::vector<Interval>;

}  // namespace

TEST(Sequence, OccurrenceIndex) {
  const auto s = seq(kS1);
  EXPECT_EQ(s.length(), 10);
  const Label a = s.alphabet().at("a");
  EXPECT_EQ(std::vector<Position>(s.occurrences(a).begin(), s.occurrences(a).end()), (std::vector<Position>{1, 6}));
  EXPECT_EQ(s.next_occurrence(a, 1), 6);
  EXPECT_EQ(s.next_occurrence(a, 6), 0);
  EXPECT_TRUE(s.contains(a, {5, 6}));
  EXPECT_FALSE(s.contains(a, {2, 5}));
}

TEST(GreedyMap, DiamondOnS1) {
  const auto s = seq(kS1);
  const Episode d = ep(s, kDiamond);
  EXPECT_EQ(greedy_map(d, s, 1), (MappingVector{1, 2, 3, 5}));
  // nodes in canonical order a, b, c, d
  EXPECT_EQ(greedy_map(d, s, 2), (MappingVector{6, 8, 7, 10}));
  const Episode a = ep(s, "nodes=[a] edges=[]");
  EXPECT_EQ(greedy_map(a, s, 7), std::nullopt);
  EXPECT_EQ(greedy_map(a, s, 6), (MappingVector{6}));
  EXPECT_EQ(greedy_map(a, s, 11), std::nullopt);
}

TEST(MinimalWindows, Examples) {
  const auto s = seq(kS1);
  EXPECT_EQ(find_minimal_windows(ep(s, kDiamond), s, 5), (Windows{{1, 5}, {6, 10}}));
  EXPECT_EQ(find_minimal_windows(ep(s, "nodes=[b,d] edges=[]"), s, 5), (Windows{{4, 5}, {5, 8}, {8, 10}}));
  EXPECT_EQ(find_minimal_windows(ep(s, "nodes=[a] edges=[]"), s, 1), (Windows{{1, 1}, {6, 6}}));
  const auto s2 = seq(kS2);
  EXPECT_EQ(find_minimal_windows(ep(s2, "nodes=[a,b,x] edges=[(0,1),(0,2),(2,1)]"), s2, 3),
            (Windows{{1, 3}, {5, 7}}));
  EXPECT_TRUE(find_minimal_windows(ep(s, kDiamond), s, 4).empty());
}

TEST(Frequency, Examples) {
  const Windows diamond{{1, 5}, {6, 10}};
  EXPECT_EQ(frequencies(diamond, 5, 10), (Frequencies{2, 2}));
  EXPECT_EQ(frequencies({}, 5, 10), (Frequencies{0, 0}));
  const Windows bd{{4, 5}, {5, 8}, {8, 10}};
  EXPECT_EQ(frequency(bd, 5, 10, Measure::disjoint), 2U);
  EXPECT_EQ(frequency(bd, 5, 10, Measure::fixed), 8U);
  // overhang: a single event is covered by rho windows
  EXPECT_EQ(frequency(Windows{{1, 1}}, 3, 1, Measure::fixed), 3U);
}

TEST(Covers, Examples) {
  const auto s = seq(kS1);
  EXPECT_TRUE(covers(ep(s, kDiamond), s));
  EXPECT_TRUE(covers(ep(s, "nodes=[a,d] edges=[(1,0)]"), s));
  const auto s2 = seq(kS2);
  EXPECT_TRUE(covers(ep(s2, "nodes=[a,b,b] edges=[(1,0),(1,2),(0,2)]"), s2));  // b3 a5 b7
  EXPECT_FALSE(covers(ep(s2, "nodes=[a,b,b] edges=[(1,0),(1,2),(2,0)]"), s2));
}

TEST(ScannerProperties, MatchesOracleOnRandomInstances) {
  std::mt19937_64 rng(5);
  std::size_t scans = 0;
  for (int round = 0; round < 240; ++round) {
    std::uniform_int_distribution<int> len(1, 25), sig(1, 4), rho_d(1, 7);
    const auto s = seq(random_text(rng, len(rng), sig(rng)));
    const Position rho = rho_d(rng);
    const auto u = oracle::enumerate_episodes(s.alphabet().labels(), 3);
    Scanner scanner(s);
    for (const Episode& g : u.episodes) {
      const auto expected = oracle::naive_scan(g, s, rho);
      const auto windows = scanner.minimal_windows(g, rho);
      ASSERT_EQ(windows, expected.windows) << to_string(g, s.alphabet());
      ASSERT_EQ(frequencies(windows, rho, s.length()), (Frequencies{expected.fixed, expected.disjoint}));
      ++scans;
    }
  }
  EXPECT_GE(scans, 10000U);
}

TEST(ScannerProperties, WindowsSortedAndNonNested) {
  std::mt19937_64 rng(6);
  for (int round = 0; round < 50; ++round) {
    const auto s = seq(random_text(rng, 200, 4));
    for (const Episode& g : oracle::enumerate_episodes(s.alphabet().labels(), 3).episodes) {
      const auto w = find_minimal_windows(g, s, 8);
      for (std::size_t i = 1; i < w.size(); ++i) {
        ASSERT_LT(w[i - 1].a, w[i].a);
        ASSERT_LT(w[i - 1].b, w[i].b);
      }
      for (const auto& x : w) ASSERT_LE(x.width(), 8);
    }
  }
}

TEST(ScannerProperties, FrequencyAntitone) {
  std::mt19937_64 rng(8);
  for (int round = 0; round < 20; ++round) {
    const auto s = seq(random_text(rng, 20, 3));
    const auto u = oracle::enumerate_episodes(s.alphabet().labels(), 3);
    std::vector<Frequencies> f;
    for (const Episode& g : u.episodes) f.push_back(frequencies(find_minimal_windows(g, s, 5), 5, s.length()));
    for (std::size_t i = 0; i < u.episodes.size(); ++i) {
      for (std::size_t j = 0; j < u.episodes.size(); ++j) {
        if (!is_subepisode(u.episodes[i], u.episodes[j])) continue;
        ASSERT_GE(f[i].fixed, f[j].fixed);
        ASSERT_GE(f[i].disjoint, f[j].disjoint);
      }
    }
  }
}

TEST(ScannerProperties, GreedyMapMatchesCoverage) {
  std::mt19937_64 rng(9);
  for (int round = 0; round < 40; ++round) {
    const auto s = seq(random_text(rng, 12, 3));
    for (const Episode& g : oracle::enumerate_episodes(s.alphabet().labels(), 3).episodes) {
      for (Position start = 1; start <= s.length(); ++start) {
        const auto events = s.events().subspan(static_cast<std::size_t>(start - 1));
        const auto f = greedy_map(g, s, start);
        ASSERT_EQ(f.has_value(), oracle::covers(g, events));
        if (!f) continue;
        for (NodeId v = 0; v < g.size(); ++v) {
          ASSERT_EQ(s.at((*f)[v]), g.label(v));
          for (NodeId w = 0; w < g.size(); ++w) {
            if (g.has_edge(v, w)) ASSERT_LT((*f)[v], (*f)[w]);
          }
        }
      }
    }
  }
}

TEST(ScannerProperties, EventVisitsLinearInLength) {
  std::mt19937_64 rng(10);
  const std::string block = random_text(rng, 1000, 4);
  auto visits = [&](const std::string& lit, int copies) {
    std::string text = block;
    for (int i = 1; i < copies; ++i) text += ' ' + block;
    const auto s = seq(text);
    Scanner scanner(s);
    (void)scanner.minimal_windows(ep(s, lit), 10);
    return static_cast<double>(scanner.stats().event_visits) / static_cast<double>(s.length());
  };
  for (const char* lit : {"nodes=[a,b,c,d] edges=[(0,1),(0,2),(0,3),(1,2),(1,3),(2,3)]", "nodes=[a,b,c,d] edges=[]"}) {
    const double small = visits(lit, 1);
    const double large = visits(lit, 16);
    EXPECT_LT(large, small * 1.2 + 0.5) << lit;
  }
}
