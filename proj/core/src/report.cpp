// SPDX-License-Identifier: Apache-2.0

#include "zddmap/report.hpp"

#include <nlohmann/json.hpp>

namespace zddmap {

std::string render_report(const io::Circuit& input, const io::Device& device,
                          const map::MappingResult& result, double wall_time_ms) {
  using json = nlohmann::ordered_json;

  const io::CircuitStats in_stats = io::stats(input);
  const io::CircuitStats out_stats = io::stats(result.mapped);

  json partitions = json::array();
  for (const auto& p : result.partitions) {
    json layers = json::array();
    for (const auto& si : p.swaps) {
      json edges = json::array();
      for (const auto& [a, b] : si.edges) {
        edges.push_back({device.qubits[a], device.qubits[b]});
      }
      layers.push_back({{"position", si.before_gate}, {"edges", edges}});
    }
    partitions.push_back({{"begin", p.begin},
                          {"end", p.end},
                          {"mapping_count", p.mapping_count.str()},
                          {"swap_layers", layers}});
  }

  json assignment = json::object();
  for (std::size_t v = 0; v < result.assignment.size(); ++v) {
    assignment[input.qubits[v]] = device.qubits[result.assignment[v]];
  }

  json report = {
      {"schema_version", 1},
      {"fully_mapped", result.fully_mapped},
      {"input", {{"depth", in_stats.depth},
                 {"volume", in_stats.volume},
                 {"two_qubit_gates", in_stats.two_qubit_gates}}},
      {"output", {{"depth", out_stats.depth},
                  {"volume", out_stats.volume},
                  {"two_qubit_gates", out_stats.two_qubit_gates}}},
      {"swaps_inserted", result.swaps_inserted},
      {"maximal_partition",
       result.partitions.empty() ? json(nullptr) : json(result.maximal_index)},
      {"partitions", partitions},
      {"assignment", assignment},
      {"wall_time_ms", wall_time_ms},
  };
  return report.dump(2) + "\n";
}

} // namespace zddmap
