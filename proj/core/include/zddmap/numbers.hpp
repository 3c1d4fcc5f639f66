// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace zddmap {

/// Exact set-family cardinality; 2^n outgrows any machine word.
using BigCount = boost::multiprecision::cpp_int;

/// Exact score arithmetic; scores must compare without rounding ties.
using BigRational = boost::multiprecision::cpp_rational;

/// Parses "2", "-3", "0.25", or "1/3" into an exact rational.
/// Throws std::invalid_argument on anything else.
BigRational parse_rational(std::string_view text);

/// Decimal rendering used in reports ("1/3" stays a fraction).
std::string to_string(const BigRational& value);

} // namespace zddmap
