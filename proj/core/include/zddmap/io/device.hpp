// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace zddmap::io {

/// Undirected coupling graph over named physical qubits. Edges are
/// stored normalized (smaller index first), deduplicated, in first-
/// declaration order; that order also fixes the edge-variable order of
/// the SWAP-layer diagrams.
struct Device {
  std::vector<std::string> qubits;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  bool has_edge(std::uint32_t p, std::uint32_t q) const;

  bool operator==(const Device&) const = default;
};

/// Device format: `.q <name>...` declares qubits; every other nonempty
/// line is `<name> <name>` declaring an undirected edge. Self-loops and
/// unknown names throw ParseError with the line number.
Device parse_device(std::istream& in);
Device parse_device(const std::string& text);

/// Cycle over n >= 3 qubits. Qubits are named A..Z when n <= 26, else
/// q0..q<n-1>; edges run around the ring starting at the first qubit.
Device make_ring(std::uint32_t n);

/// Chain over n >= 1 qubits, named like make_ring.
Device make_path(std::uint32_t n);

/// Accepts `ring:<n>` and `path:<n>` generator strings, otherwise reads
/// the argument as a file path.
Device load_device(const std::string& path_or_generator);

} // namespace zddmap::io
