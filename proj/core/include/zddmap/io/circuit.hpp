// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace zddmap::io {

/// One gate. Kinds cx, cz, and swap are two-qubit; any other kind is a
/// single-qubit gate carried through mapping untouched. The kind string
/// is opaque and may embed parameter text, e.g. "rz(0.25)".
struct Gate {
  std::string kind;
  std::vector<std::uint32_t> operands;

  bool is_two_qubit() const { return operands.size() == 2; }
  bool operator==(const Gate&) const = default;
};

/// Ordered gate list over named qubits. Qubit indices are positions in
/// the declaration order.
struct Circuit {
  std::vector<std::string> qubits;
  std::vector<Gate> gates;

  /// Positions (into gates) of the two-qubit subsequence, in order.
  std::vector<std::size_t> two_qubit_positions() const;

  bool operator==(const Circuit&) const = default;
};

struct CircuitStats {
  std::size_t depth = 0;
  std::size_t volume = 0;
  std::size_t two_qubit_gates = 0;

  bool operator==(const CircuitStats&) const = default;
};

/// True for the gate kinds that take two operands.
bool is_two_qubit_kind(std::string_view kind);

/// Line-oriented circuit format: `#` starts a comment, `.v <name>...`
/// declares qubits, and every other nonempty line is `<kind> <operand>
/// [<operand>]`. Malformed input throws ParseError with the line number.
Circuit parse_circuit(std::istream& in);
Circuit parse_circuit(const std::string& text);

/// Reads and parses a circuit file; unreadable paths throw ParseError.
Circuit load_circuit(const std::string& path);

/// One `.v` header line followed by one line per gate. parse ∘ serialize
/// is the identity on the data model.
std::string serialize_circuit(const Circuit& c);

/// depth is the longest chain of gates sharing an operand; volume counts
/// every gate; SWAPs count like any other gate in both.
CircuitStats stats(const Circuit& c);

} // namespace zddmap::io
