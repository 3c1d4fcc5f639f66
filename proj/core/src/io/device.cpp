// SPDX-License-Identifier: Apache-2.0

#include "zddmap/io/device.hpp"

#include "zddmap/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <set>
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

std::string generated_name(std::uint32_t i, std::uint32_t n) {
  if (n <= 26) return std::string(1, static_cast<char>('A' + i));
  return "q" + std::to_string(i);
}

std::uint32_t parse_generator_size(std::string_view arg, std::string_view what) {
  std::uint32_t n = 0;
  auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), n);
  if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
    throw ParseError(0, "bad " + std::string(what) + " size '" + std::string(arg) + "'");
  }
  return n;
}

} // namespace

bool Device::has_edge(std::uint32_t p, std::uint32_t q) const {
  if (p > q) std::swap(p, q);
  return std::find(edges.begin(), edges.end(), std::make_pair(p, q)) != edges.end();
}

Device parse_device(std::istream& in) {
  Device d;
  std::unordered_map<std::string, std::uint32_t> index;
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (tokens[0] == ".q") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        auto [it, inserted] =
            index.emplace(tokens[i], static_cast<std::uint32_t>(d.qubits.size()));
        if (!inserted) {
          throw ParseError(lineno, "duplicate qubit '" + tokens[i] + "'");
        }
        d.qubits.push_back(tokens[i]);
      }
      continue;
    }
    if (tokens[0].front() == '.') {
      throw ParseError(lineno, "unknown directive '" + tokens[0] + "'");
    }

    if (tokens.size() != 2) {
      throw ParseError(lineno, "edge line takes two qubit names, got " +
                                   std::to_string(tokens.size()));
    }
    std::uint32_t ends[2];
    for (int i = 0; i < 2; ++i) {
      auto it = index.find(tokens[i]);
      if (it == index.end()) {
        throw ParseError(lineno, "unknown qubit '" + tokens[i] + "'");
      }
      ends[i] = it->second;
    }
    if (ends[0] == ends[1]) {
      throw ParseError(lineno, "self-loop on qubit '" + tokens[0] + "'");
    }
    auto edge = std::minmax(ends[0], ends[1]);
    if (seen.insert(edge).second) {
      d.edges.emplace_back(edge.first, edge.second);
    }
  }
  return d;
}

Device parse_device(const std::string& text) {
  std::istringstream in(text);
  return parse_device(in);
}

Device make_ring(std::uint32_t n) {
  if (n < 3) throw ParseError(0, "ring size must be at least 3");
  Device d;
  for (std::uint32_t i = 0; i < n; ++i) d.qubits.push_back(generated_name(i, n));
  for (std::uint32_t i = 0; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
  d.edges.emplace_back(0, n - 1);
  return d;
}

Device make_path(std::uint32_t n) {
  if (n < 1) throw ParseError(0, "path size must be at least 1");
  Device d;
  for (std::uint32_t i = 0; i < n; ++i) d.qubits.push_back(generated_name(i, n));
  for (std::uint32_t i = 0; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
  return d;
}

Device load_device(const std::string& path_or_generator) {
  if (path_or_generator.starts_with("ring:")) {
    return make_ring(parse_generator_size(
        std::string_view(path_or_generator).substr(5), "ring"));
  }
  if (path_or_generator.starts_with("path:")) {
    return make_path(parse_generator_size(
        std::string_view(path_or_generator).substr(5), "path"));
  }
  std::ifstream in(path_or_generator);
  if (!in) {
    throw ParseError(0, "cannot open device file '" + path_or_generator + "'");
  }
  return parse_device(in);
}

} // namespace zddmap::io
