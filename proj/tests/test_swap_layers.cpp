// SPDX-License-Identifier: Apache-2.0

#include "zddmap/map/swap_layers.hpp"

#include "zddmap/io/device.hpp"
#include "zddmap/map/base_sets.hpp"
#include "zddmap/map/mapper.hpp"

#include "naive_family.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

namespace {

using testutil::NFam;
using zddmap::io::Device;
using zddmap::map::BaseSets;
using zddmap::map::EdgeVarTable;
using zddmap::map::LayerScore;
using zddmap::map::ScoreWeights;
using zddmap::map::SwapInsertion;
using zddmap::zdd::Engine;
using zddmap::zdd::NodeRef;

TEST(EdgesFamily, RingOfFourIncidence) {
  const Device d = zddmap::io::make_ring(4); // edges AB, BC, CD, AD
  EdgeVarTable table{static_cast<std::uint32_t>(d.edges.size())};
  Engine eng(table.num_edges);
  // Qubit A (index 0) touches edge 0 (AB) and edge 3 (AD).
  EXPECT_EQ(testutil::to_naive(eng, build_edges_family(eng, d, table, 0)),
            (NFam{{1}, {4}}));
  EXPECT_EQ(testutil::to_naive(eng, build_edges_family(eng, d, table, 1)),
            (NFam{{1}, {2}}));
  EXPECT_EQ(testutil::to_naive(eng, build_edges_family(eng, d, table, 2)),
            (NFam{{2}, {3}}));
  EXPECT_EQ(testutil::to_naive(eng, build_edges_family(eng, d, table, 3)),
            (NFam{{3}, {4}}));
}

TEST(EdgesFamily, PathOfTwo) {
  const Device d = zddmap::io::make_path(2);
  EdgeVarTable table{1};
  Engine eng(1);
  EXPECT_EQ(testutil::to_naive(eng, build_edges_family(eng, d, table, 0)), (NFam{{1}}));
  EXPECT_EQ(testutil::to_naive(eng, build_edges_family(eng, d, table, 1)), (NFam{{1}}));
}

TEST(Layers, RingOfFourMembers) {
  const Device d = zddmap::io::make_ring(4);
  EdgeVarTable table{4};
  Engine eng(4);
  const NodeRef layers = build_layers(eng, d, table);
  // Edge variables: 1=AB, 2=BC, 3=CD, 4=AD.
  const NFam expected = {{}, {1}, {2}, {3}, {4}, {1, 3}, {2, 4}};
  EXPECT_EQ(testutil::to_naive(eng, layers), expected);
  EXPECT_EQ(eng.count_sets(layers), 7);
}

TEST(Layers, CountsMatchMatchingOracle) {
  std::vector<Device> zoo;
  for (std::uint32_t n = 3; n <= 8; ++n) zoo.push_back(zddmap::io::make_ring(n));
  for (std::uint32_t n = 1; n <= 8; ++n) zoo.push_back(zddmap::io::make_path(n));
  for (std::uint32_t n = 2; n <= 6; ++n) zoo.push_back(testutil::star_device(n));
  zoo.push_back(testutil::complete_device(4));
  zoo.push_back(testutil::complete_device(5));

  for (const Device& d : zoo) {
    EdgeVarTable table{static_cast<std::uint32_t>(d.edges.size())};
    Engine eng(table.num_edges);
    const NodeRef layers = build_layers(eng, d, table);
    EXPECT_EQ(eng.count_sets(layers), testutil::count_matchings(d))
        << d.qubits.size() << " qubits, " << d.edges.size() << " edges";

    // Every member is a set of pairwise disjoint edges; {} is present.
    bool saw_empty = false;
    for (const auto& member : eng.sets(layers)) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
      for (auto var : member) edges.push_back(d.edges[table.edge_of(var)]);
      EXPECT_TRUE(testutil::is_matching(edges));
      if (member.empty()) saw_empty = true;
    }
    EXPECT_TRUE(saw_empty);
  }
}

TEST(Layers, RingOfSixHasEighteen) {
  const Device d = zddmap::io::make_ring(6);
  EdgeVarTable table{6};
  Engine eng(6);
  EXPECT_EQ(eng.count_sets(build_layers(eng, d, table)), 18);
  EXPECT_EQ(testutil::count_matchings(d), 18u);
}

// Shared fixture: the three-gate circuit stuck at its third gate on a
// ring of four, the state in which layers get scored.
struct StuckState {
  Device dev = zddmap::io::make_ring(4);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> gates = {{0, 1}, {1, 2}, {1, 3}};
  Engine eng{16};
  BaseSets base;
  NodeRef m = zddmap::zdd::kBot;
  std::vector<std::vector<std::uint32_t>> candidates;

  StuckState() {
    zddmap::io::Circuit c;
    c.qubits = {"a", "b", "c", "d"};
    for (const auto& [v, w] : gates) c.gates.push_back({"cx", {v, w}});
    base = zddmap::map::build_base_sets(c, dev, eng);
    m = gate_map(eng, base, 0, 1);
    m = merge_mappings(eng, base, m, 1, 2);
    EXPECT_EQ(eng.count_sets(m), 8);
    // The third gate is stuck.
    EXPECT_EQ(merge_mappings(eng, base, m, 1, 3), zddmap::zdd::kBot);
    candidates = {{0}, {1}, {2}, {3}, {0, 2}, {1, 3}};
  }
};

TEST(ScoreLayers, MapsMatchScheduleOracle) {
  StuckState st;
  const auto scores = score_layers(st.eng, st.base, st.m, st.gates, 3, st.candidates,
                                   st.dev, ScoreWeights{}, 20);
  ASSERT_EQ(scores.size(), st.candidates.size());
  for (std::size_t i = 0; i < scores.size(); ++i) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (auto e : scores[i].edge_indices) edges.push_back(st.dev.edges[e]);
    const auto oracle =
        testutil::count_block_placements(st.gates, 1, 3, {SwapInsertion{3, edges}}, st.dev);
    EXPECT_EQ(scores[i].maps, oracle) << "candidate " << i;
    EXPECT_EQ(scores[i].swap_count, st.candidates[i].size());
    EXPECT_TRUE(std::is_sorted(scores[i].edge_indices.begin(),
                               scores[i].edge_indices.end()));
    if (oracle > 0) {
      EXPECT_EQ(scores[i].absorbed, 1u); // only the stuck gate remains
      // With alpha=0, beta=gamma=1: score = maps / swap_count.
      EXPECT_EQ(scores[i].score,
                zddmap::BigRational(scores[i].maps) / scores[i].swap_count);
    } else {
      EXPECT_EQ(scores[i].score, 0);
      EXPECT_EQ(scores[i].absorbed, 0u);
    }
  }
}

TEST(ScoreLayers, SelectionFollowsScoreThenSizeThenLex) {
  StuckState st;
  const auto scores = score_layers(st.eng, st.base, st.m, st.gates, 3, st.candidates,
                                   st.dev, ScoreWeights{}, 20);
  const auto best = select_layer(scores);
  ASSERT_TRUE(best.has_value());

  // Reference selection computed the slow way.
  std::size_t want = scores.size();
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i].score == 0) continue;
    if (want == scores.size()) {
      want = i;
      continue;
    }
    const auto& a = scores[i];
    const auto& b = scores[want];
    if (a.score != b.score ? a.score > b.score
        : a.swap_count != b.swap_count ? a.swap_count < b.swap_count
                                       : a.edge_indices < b.edge_indices) {
      want = i;
    }
  }
  EXPECT_EQ(*best, want);

  // All four single-edge layers regain the gate with the same count, so
  // the lexicographically smallest one must win.
  EXPECT_EQ(scores[*best].edge_indices, (std::vector<std::uint32_t>{0}));
}

TEST(ScoreLayers, AlphaPricesAbsorption) {
  StuckState st;
  ScoreWeights w;
  w.alpha = 1;
  w.beta = 0;
  const auto scores = score_layers(st.eng, st.base, st.m, st.gates, 3, st.candidates,
                                   st.dev, w, 20);
  for (const auto& sc : scores) {
    if (sc.maps > 0) {
      EXPECT_EQ(sc.score, zddmap::BigRational(1) / sc.swap_count);
    }
  }
}

TEST(ScoreLayers, GammaScalesWithoutChangingSelection) {
  StuckState st;
  ScoreWeights doubled;
  doubled.gamma = 2;
  const auto base_scores = score_layers(st.eng, st.base, st.m, st.gates, 3,
                                        st.candidates, st.dev, ScoreWeights{}, 20);
  const auto two_scores = score_layers(st.eng, st.base, st.m, st.gates, 3,
                                       st.candidates, st.dev, doubled, 20);
  ASSERT_EQ(base_scores.size(), two_scores.size());
  for (std::size_t i = 0; i < base_scores.size(); ++i) {
    EXPECT_EQ(two_scores[i].score, base_scores[i].score * 2);
  }
  EXPECT_EQ(select_layer(base_scores), select_layer(two_scores));

  ScoreWeights zero_gamma;
  zero_gamma.gamma = 0;
  const auto zeroed = score_layers(st.eng, st.base, st.m, st.gates, 3, st.candidates,
                                   st.dev, zero_gamma, 20);
  EXPECT_FALSE(select_layer(zeroed).has_value());
}

TEST(ScoreLayers, LookaheadCapBoundsAbsorbed) {
  // Five-gate tail: after regaining the stuck gate the greedy scan can
  // absorb more, but never more than the cap.
  const Device dev = zddmap::io::make_ring(4);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> gates = {
      {0, 1}, {1, 2}, {1, 3}, {0, 1}, {1, 2}};
  zddmap::io::Circuit c;
  c.qubits = {"a", "b", "c", "d"};
  for (const auto& [v, w] : gates) c.gates.push_back({"cx", {v, w}});
  Engine eng(16);
  const BaseSets base = zddmap::map::build_base_sets(c, dev, eng);
  NodeRef m = gate_map(eng, base, 0, 1);
  m = merge_mappings(eng, base, m, 1, 2);
  ASSERT_EQ(merge_mappings(eng, base, m, 1, 3), zddmap::zdd::kBot);

  const std::vector<std::vector<std::uint32_t>> candidates = {{0}, {1}, {2}, {3}};
  const auto capped =
      score_layers(eng, base, m, gates, 3, candidates, dev, ScoreWeights{}, 1);
  const auto uncapped =
      score_layers(eng, base, m, gates, 3, candidates, dev, ScoreWeights{}, 0);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    EXPECT_LE(capped[i].absorbed, 1u);
    EXPECT_GE(uncapped[i].absorbed, capped[i].absorbed);
    // maps looks only at the first regained merge, so the cap cannot
    // change it.
    EXPECT_EQ(capped[i].maps, uncapped[i].maps);
  }
}

TEST(SelectLayer, EmptyAndAllZero) {
  EXPECT_FALSE(zddmap::map::select_layer({}).has_value());
  std::vector<LayerScore> zeros(3);
  EXPECT_FALSE(zddmap::map::select_layer(zeros).has_value());
}

} // namespace
