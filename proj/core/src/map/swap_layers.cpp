// SPDX-License-Identifier: Apache-2.0

#include "zddmap/map/swap_layers.hpp"

#include <algorithm>
#include <stdexcept>

namespace zddmap::map {

zdd::NodeRef build_edges_family(zdd::Engine& eng, const io::Device& d,
                                const EdgeVarTable& table, std::uint32_t p) {
  zdd::NodeRef f = zdd::kBot;
  for (std::uint32_t e = 0; e < d.edges.size(); ++e) {
    if (d.edges[e].first == p || d.edges[e].second == p) {
      f = eng.union_(f, eng.elementary(table.var_of(e)));
    }
  }
  return f;
}

zdd::NodeRef build_layers(zdd::Engine& eng, const io::Device& d,
                          const EdgeVarTable& table) {
  zdd::NodeRef conflicts = zdd::kBot;
  for (std::uint32_t p = 0; p < d.qubits.size(); ++p) {
    conflicts = eng.union_(
        conflicts, eng.choose(build_edges_family(eng, d, table, p), 2));
  }
  return eng.nonsupersets(eng.universal(), conflicts);
}

std::vector<LayerScore> score_layers(
    zdd::Engine& map_eng, const BaseSets& base, zdd::NodeRef m,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> gates, std::size_t i,
    const std::vector<std::vector<std::uint32_t>>& candidates, const io::Device& dev,
    const ScoreWeights& w, std::size_t lookahead_cap) {
  if (i < 1 || i > gates.size()) {
    throw std::invalid_argument("gate index outside the two-qubit sequence");
  }
  std::vector<LayerScore> scores;
  scores.reserve(candidates.size());
  for (const auto& layer : candidates) {
    LayerScore s;
    s.edge_indices = layer;
    std::sort(s.edge_indices.begin(), s.edge_indices.end());
    s.swap_count = layer.size();

    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    edges.reserve(layer.size());
    for (auto e : layer) edges.push_back(dev.edges[e]);
    zdd::NodeRef cur = apply_layer(map_eng, base.vars, m, edges);

    // Greedy lookahead: regain the stuck gate, then keep merging until a
    // merge comes up empty, the sequence ends, or the cap is hit.
    for (std::size_t g = i; g <= gates.size(); ++g) {
      zdd::NodeRef next =
          merge_mappings(map_eng, base, cur, gates[g - 1].first, gates[g - 1].second);
      if (next == zdd::kBot) break;
      cur = next;
      if (s.absorbed == 0) s.maps = map_eng.count_sets(cur);
      ++s.absorbed;
      if (lookahead_cap != 0 && s.absorbed >= lookahead_cap) break;
    }

    s.score = (BigRational(s.absorbed) * w.alpha + BigRational(s.maps) * w.beta) *
              w.gamma / BigRational(s.swap_count);
    scores.push_back(std::move(s));
  }
  return scores;
}

std::optional<std::size_t> select_layer(const std::vector<LayerScore>& scores) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i].score == 0) continue;
    if (!best) {
      best = i;
      continue;
    }
    const LayerScore& a = scores[i];
    const LayerScore& b = scores[*best];
    if (a.score != b.score) {
      if (a.score > b.score) best = i;
    } else if (a.swap_count != b.swap_count) {
      if (a.swap_count < b.swap_count) best = i;
    } else if (a.edge_indices < b.edge_indices) {
      best = i;
    }
  }
  return best;
}

} // namespace zddmap::map
