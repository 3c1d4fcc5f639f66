// SPDX-License-Identifier: Apache-2.0

#include "zddmap/io/circuit.hpp"

#include "zddmap/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>

namespace zddmap::io {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : line) {
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

} // namespace

bool is_two_qubit_kind(std::string_view kind) {
  return kind == "cx" || kind == "cz" || kind == "swap";
}

std::vector<std::size_t> Circuit::two_qubit_positions() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].is_two_qubit()) out.push_back(i);
  }
  return out;
}

Circuit parse_circuit(std::istream& in) {
  Circuit c;
  std::unordered_map<std::string, std::uint32_t> index;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (tokens[0] == ".v") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto [it, inserted] =
            index.emplace(tokens[i], static_cast<std::uint32_t>(c.qubits.size()));
        if (!inserted) {
          throw ParseError(lineno, "duplicate qubit '" + tokens[i] + "'");
        }
        c.qubits.push_back(tokens[i]);
      }
      continue;
    }
    if (tokens[0].front() == '.') {
      throw ParseError(lineno, "unknown directive '" + tokens[0] + "'");
    }

    Gate g;
    g.kind = tokens[0];
    const std::size_t want = is_two_qubit_kind(g.kind) ? 2 : 1;
    if (tokens.size() - 1 != want) {
      throw ParseError(lineno, "gate '" + g.kind + "' takes " + std::to_string(want) +
                                   " operand" + (want == 1 ? "" : "s") + ", got " +
                                   std::to_string(tokens.size() - 1));
    }
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      auto it = index.find(tokens[i]);
      if (it == index.end()) {
        throw ParseError(lineno, "unknown qubit '" + tokens[i] + "'");
      }
      g.operands.push_back(it->second);
    }
    if (want == 2 && g.operands[0] == g.operands[1]) {
      throw ParseError(lineno, "two-qubit gate '" + g.kind + "' repeats operand '" +
                                   tokens[1] + "'");
    }
    c.gates.push_back(std::move(g));
  }
  return c;
}

Circuit parse_circuit(const std::string& text) {
  std::istringstream in(text);
  return parse_circuit(in);
}

Circuit load_circuit(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ParseError(0, "cannot open circuit file '" + path + "'");
  }
  return parse_circuit(in);
}

std::string serialize_circuit(const Circuit& c) {
  std::ostringstream out;
  out << ".v";
  for (const auto& q : c.qubits) out << ' ' << q;
  out << '\n';
  for (const auto& g : c.gates) {
    out << g.kind;
    for (auto op : g.operands) out << ' ' << c.qubits[op];
    out << '\n';
  }
  return out.str();
}

CircuitStats stats(const Circuit& c) {
  CircuitStats s;
  s.volume = c.gates.size();
  std::vector<std::size_t> frontier(c.qubits.size(), 0);
  for (const auto& g : c.gates) {
    if (g.is_two_qubit()) ++s.two_qubit_gates;
    std::size_t level = 0;
    for (auto op : g.operands) level = std::max(level, frontier[op]);
    ++level;
    for (auto op : g.operands) frontier[op] = level;
    s.depth = std::max(s.depth, level);
  }
  return s;
}

} // namespace zddmap::io
