// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "zddmap/io/circuit.hpp"
#include "zddmap/io/device.hpp"
#include "zddmap/map/base_sets.hpp"
#include "zddmap/map/swap_layers.hpp"
#include "zddmap/numbers.hpp"
#include "zddmap/zdd/engine.hpp"

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace zddmap::map {

/// A SWAP layer inserted immediately before the two-qubit gate with
/// 1-based index before_gate. Edges are physical-index pairs in edge
/// declaration order.
struct SwapInsertion {
  std::size_t before_gate = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
};

/// One block of the ordered partition over the two-qubit subsequence
/// (1-based, inclusive). phi collects every legal placement of the
/// block's pseudo qubits, expressed in the qubit positions current at
/// the block's end; sigma_end[p] is where data that started the circuit
/// on physical wire p sits at that moment.
struct Partition {
  std::size_t begin = 0;
  std::size_t end = 0;
  zdd::NodeRef phi = zdd::kBot;
  std::vector<SwapInsertion> swaps;
  std::vector<std::uint32_t> sigma_end;
};

/// Partition facts that outlive the engine, for reporting.
struct PartitionSummary {
  std::size_t begin = 0;
  std::size_t end = 0;
  BigCount mapping_count{0};
  std::vector<SwapInsertion> swaps;
};

struct MappingResult {
  bool fully_mapped = false;
  std::size_t maximal_index = 0; // into partitions
  std::vector<std::uint32_t> assignment; // pseudo index -> initial physical wire
  io::Circuit mapped;
  std::vector<PartitionSummary> partitions;
  std::size_t swaps_inserted = 0;
  // Output-gate span (0-based, inclusive) covered by the maximal
  // partition; every two-qubit gate inside is coupling-checked.
  bool has_checked_range = false;
  std::size_t checked_begin = 0;
  std::size_t checked_end = 0;
};

struct MapperOptions {
  ScoreWeights weights;
  std::size_t lookahead = 20; // greedy score lookahead in gates; 0 = unbounded
};

/// Runs the partition search and emits the mapped circuit. Owns the two
/// diagram engines; Partition::phi handles stay valid while the Mapper
/// lives. Construction checks feasibility (enough physical qubits) and
/// builds the base families; both can throw InfeasibleError.
class Mapper {
public:
  Mapper(io::Circuit circuit, io::Device device, MapperOptions opts = {});
  ~Mapper();

  /// Walks the two-qubit subsequence once, greedily extending the
  /// current block and trying a single best-scoring SWAP layer whenever
  /// a gate will not merge. Idempotent. Throws InfeasibleError when a
  /// gate cannot be placed even alone (edgeless device).
  const std::vector<Partition>& find_maximal_partitions();

  /// Picks the deterministic assignment from the maximal partition and
  /// rewrites the circuit onto physical wires with SWAPs inserted.
  MappingResult emit();

  const io::Circuit& circuit() const { return circuit_; }
  const io::Device& device() const { return device_; }
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& two_qubit_pairs() const {
    return gates_;
  }

  zdd::Engine& map_engine() { return *map_eng_; }
  const BaseSets& base() const { return base_; }

  /// Layer-side structures are built on first use.
  zdd::Engine& layer_engine();
  const EdgeVarTable& edge_vars() const { return edge_vars_; }
  zdd::NodeRef layers_family();

private:
  std::vector<std::vector<std::uint32_t>> candidate_layers(zdd::NodeRef m);

  io::Circuit circuit_;
  io::Device device_;
  MapperOptions opts_;

  std::vector<std::pair<std::uint32_t, std::uint32_t>> gates_; // two-qubit operand pairs
  std::vector<std::size_t> gate_positions_; // their positions in circuit_.gates

  std::unique_ptr<zdd::Engine> map_eng_;
  BaseSets base_;

  std::unique_ptr<zdd::Engine> layer_eng_;
  EdgeVarTable edge_vars_;
  zdd::NodeRef layers_ = zdd::kBot;
  bool layers_built_ = false;

  std::vector<Partition> partitions_;
  bool partitioned_ = false;
};

} // namespace zddmap::map
