// SPDX-License-Identifier: Apache-2.0

#include "zddmap/map/verify.hpp"

#include <algorithm>
#include <unordered_map>

namespace zddmap::map {

std::optional<CouplingViolation> check_coupling(const io::Circuit& mapped,
                                                const io::Device& device,
                                                std::size_t begin, std::size_t end) {
  std::unordered_map<std::string, std::uint32_t> dev_index;
  for (std::uint32_t i = 0; i < device.qubits.size(); ++i) {
    dev_index.emplace(device.qubits[i], i);
  }
  constexpr std::uint32_t kUnknown = 0xffffffffu;
  std::vector<std::uint32_t> wire(mapped.qubits.size(), kUnknown);
  for (std::size_t i = 0; i < mapped.qubits.size(); ++i) {
    if (auto it = dev_index.find(mapped.qubits[i]); it != dev_index.end()) {
      wire[i] = it->second;
    }
  }

  const std::size_t last = std::min(end, mapped.gates.size() == 0 ? 0 : mapped.gates.size() - 1);
  for (std::size_t pos = begin; pos <= last && pos < mapped.gates.size(); ++pos) {
    const io::Gate& g = mapped.gates[pos];
    if (!g.is_two_qubit()) continue;
    const std::uint32_t u = wire[g.operands[0]];
    const std::uint32_t v = wire[g.operands[1]];
    if (u == kUnknown || v == kUnknown || u == v || !device.has_edge(u, v)) {
      return CouplingViolation{pos};
    }
  }
  return std::nullopt;
}

} // namespace zddmap::map
