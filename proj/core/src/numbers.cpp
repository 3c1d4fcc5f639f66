// SPDX-License-Identifier: Apache-2.0

#include "zddmap/numbers.hpp"

#include <cctype>
#include <stdexcept>

namespace zddmap {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

} // namespace

BigRational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);

  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  const auto fail = [&] {
    throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
  };

  BigRational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    BigCount d{std::string(den)};
    if (d == 0) fail();
    value = BigRational(BigCount{std::string(num)}, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail();
    if (!whole.empty() && !all_digits(whole)) fail();
    if (!frac.empty() && !all_digits(frac)) fail();
    BigCount scaled{std::string(whole.empty() ? "0" : std::string(whole)) +
                    std::string(frac)};
    BigCount scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = BigRational(scaled, scale);
  } else {
    if (!all_digits(s)) fail();
    value = BigRational(BigCount{std::string(s)});
  }
  return negative ? -value : value;
}

std::string to_string(const BigRational& value) {
  if (boost::multiprecision::denominator(value) == 1) {
    return boost::multiprecision::numerator(value).str();
  }
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

} // namespace zddmap
