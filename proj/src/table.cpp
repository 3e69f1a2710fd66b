// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#include "hetsim/table.hpp"

#include <charconv>
#include <cmath>
#include <system_error>

#include <json.hpp>

namespace hetsim {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc{}) return "nan";  // unreachable with a 64-byte buffer
  return std::string(buf, ptr);
}

std::string to_csv(const OutputTable& table) {
  std::string out;
  for (const auto& [key, value] : table.metadata) {
    out += "# ";
    out += key;
    out += '=';
    out += value;
    out += '\n';
  }
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_double(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const OutputTable& table) {
  nlohmann::ordered_json j;
  auto& meta = j["metadata"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : table.metadata) meta[key] = value;
  j["header"] = table.header;
  j["rows"] = table.rows;
  return j.dump();
}

std::uint64_t fnv1a64(std::string_view bytes) noexcept {
  std::uint64_t hash = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ull;
  }
  return hash;
}

}  // namespace hetsim
