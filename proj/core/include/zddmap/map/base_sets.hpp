// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "zddmap/io/circuit.hpp"
#include "zddmap/io/device.hpp"
#include "zddmap/zdd/engine.hpp"

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace zddmap::map {

/// Bijection between ZDD variables 1..n*m and assignment atoms
/// "pseudo v sits on physical p". Variables are pseudo-major: all
/// atoms of pseudo 0 come first, each block ordered by physical index.
struct MapVarTable {
  std::uint32_t n = 0; // pseudo qubits
  std::uint32_t m = 0; // physical qubits

  std::uint32_t num_vars() const { return n * m; }
  std::uint32_t var_of(std::uint32_t v, std::uint32_t p) const { return v * m + p + 1; }
  std::uint32_t pseudo_of(std::uint32_t var) const { return (var - 1) / m; }
  std::uint32_t physical_of(std::uint32_t var) const { return (var - 1) % m; }
};

/// The families every mapping step draws from, built once per run:
/// from_v[v] holds the m single-atom placements of pseudo v, to_p[p]
/// the n single-atom placements onto physical p, valid the two-atom
/// placements landing on a device edge, and bad the two-atom conflicts
/// (one pseudo on two physicals, or two pseudos on one physical).
struct BaseSets {
  MapVarTable vars;
  std::vector<zdd::NodeRef> from_v;
  std::vector<zdd::NodeRef> to_p;
  zdd::NodeRef valid = zdd::kBot;
  zdd::NodeRef bad = zdd::kBot;
};

/// Requires at least one pseudo qubit and at least as many physical
/// qubits as pseudo qubits; otherwise throws InfeasibleError. The
/// engine's universe must be sized n*m.
BaseSets build_base_sets(const io::Circuit& c, const io::Device& d, zdd::Engine& eng);

/// All placements of the gate pair {v, w} onto device edges.
zdd::NodeRef gate_map(zdd::Engine& eng, const BaseSets& base,
                      std::uint32_t v, std::uint32_t w);

/// Extends every mapping in m with a placement of gate {v, w} and drops
/// results containing a conflict. Empty means the gate cannot join m.
zdd::NodeRef merge_mappings(zdd::Engine& eng, const BaseSets& base, zdd::NodeRef m,
                            std::uint32_t v, std::uint32_t w);

/// Rewrites m as if the SWAP layer had run: for every edge {p, q} the
/// placements onto p and q are exchanged, for every pseudo qubit.
/// Edges must be pairwise disjoint (throws std::invalid_argument).
zdd::NodeRef apply_layer(zdd::Engine& eng, const MapVarTable& vars, zdd::NodeRef m,
                         std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

/// Physical qubits used by at least one mapping in m, ascending.
std::vector<std::uint32_t> image_physicals(const zdd::Engine& eng,
                                           const MapVarTable& vars, zdd::NodeRef m);

} // namespace zddmap::map
