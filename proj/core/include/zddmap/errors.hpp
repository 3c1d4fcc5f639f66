// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zddmap {

/// Malformed circuit or device text. Carries the 1-based source line.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// The instance admits no mapping at all (e.g. more pseudo qubits than
/// physical ones, or a two-qubit gate on a device without edges).
class InfeasibleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace zddmap
