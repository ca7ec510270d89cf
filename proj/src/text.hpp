#pragma once

// Shared parsing helpers for the text formats of curves and points.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dq/rat.hpp"

namespace dq::detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

/// Comma-separated rationals; `expected` = 0 accepts any nonzero count.
inline std::vector<Rat> split_rats(std::string_view s, std::size_t expected, const char* what) {
  std::vector<Rat> out;
  for (auto part : split(s, ',')) out.push_back(Rat::parse(part));
  if (expected != 0 && out.size() != expected)
    throw std::invalid_argument(std::string(what) + " needs " + std::to_string(expected) + " comma-separated rationals, got " +
                                std::to_string(out.size()));
  if (out.empty()) throw std::invalid_argument(std::string(what) + " is empty");
  return out;
}

}  // namespace dq::detail
