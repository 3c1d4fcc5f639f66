// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "zddmap/io/device.hpp"
#include "zddmap/map/base_sets.hpp"
#include "zddmap/numbers.hpp"
#include "zddmap/zdd/engine.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace zddmap::map {

/// Layer diagrams live in their own engine over one variable per device
/// edge, numbered 1..|E| in edge declaration order.
struct EdgeVarTable {
  std::uint32_t num_edges = 0;

  std::uint32_t var_of(std::uint32_t edge_index) const { return edge_index + 1; }
  std::uint32_t edge_of(std::uint32_t var) const { return var - 1; }
};

/// Singleton families of the edges incident to physical qubit p.
zdd::NodeRef build_edges_family(zdd::Engine& eng, const io::Device& d,
                                const EdgeVarTable& table, std::uint32_t p);

/// Every set of pairwise vertex-disjoint edges (all matchings of the
/// coupling graph), the empty set included: all SWAP circuits of depth 1.
zdd::NodeRef build_layers(zdd::Engine& eng, const io::Device& d,
                          const EdgeVarTable& table);

/// Score weights: alpha prices gates absorbed downstream, beta prices
/// surviving mappings, gamma scales the whole score. Nonnegative, not
/// all zero.
struct ScoreWeights {
  BigRational alpha{0};
  BigRational beta{1};
  BigRational gamma{1};
};

struct LayerScore {
  std::vector<std::uint32_t> edge_indices; // ascending device-edge indices
  std::size_t absorbed = 0;                // gates the stuck partition would regain
  BigCount maps{0};                        // mappings surviving the first regained merge
  std::size_t swap_count = 0;              // SWAP gates in the layer
  BigRational score{0};
};

/// Scores candidate layers for a partition stuck at two-qubit gate i
/// (1-based index into gates). For each layer: apply it to m, greedily
/// re-merge gates i, i+1, ... until a merge comes up empty or
/// lookahead_cap gates were absorbed (0 caps nothing); absorbed and the
/// first merge's mapping count feed score = (A*alpha + B*beta)*gamma/C.
/// A layer that fails to regain gate i scores 0.
std::vector<LayerScore> score_layers(
    zdd::Engine& map_eng, const BaseSets& base, zdd::NodeRef m,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> gates, std::size_t i,
    const std::vector<std::vector<std::uint32_t>>& candidates, const io::Device& dev,
    const ScoreWeights& w, std::size_t lookahead_cap);

/// Index of the best candidate: highest score, then fewest SWAPs, then
/// lexicographically smallest edge set. None when every score is zero
/// or the list is empty.
std::optional<std::size_t> select_layer(const std::vector<LayerScore>& scores);

} // namespace zddmap::map
