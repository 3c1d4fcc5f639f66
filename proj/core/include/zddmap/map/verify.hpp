// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "zddmap/io/circuit.hpp"
#include "zddmap/io/device.hpp"

#include <cstddef>
#include <optional>

namespace zddmap::map {

struct CouplingViolation {
  std::size_t gate_position = 0; // 0-based index into mapped.gates
};

/// Independent coupling check of a mapped circuit: every two-qubit gate
/// whose position lies in [begin, end] (0-based, inclusive) must act on
/// a device edge. The circuit's qubit names are resolved against the
/// device; an unresolvable or repeated operand is a violation at that
/// gate. Returns the first violation, or nothing.
std::optional<CouplingViolation> check_coupling(const io::Circuit& mapped,
                                                const io::Device& device,
                                                std::size_t begin, std::size_t end);

} // namespace zddmap::map
