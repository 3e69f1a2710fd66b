// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hetsim {

/// Shortest round-trip decimal form of v, locale-independent ("0.3", "1e+06",
/// "nan"). Byte-stable across platforms for equal doubles.
std::string format_double(double v);

/// Numeric result table with ordered key=value metadata.
struct OutputTable {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

/// CSV with '#'-prefixed "key=value" metadata lines, then the header, then
/// one line per row. Deterministic down to the byte for equal input.
std::string to_csv(const OutputTable& table);

/// Compact JSON {"metadata": {...}, "header": [...], "rows": [[...], ...]}
/// with metadata keys kept in insertion order.
std::string to_json(const OutputTable& table);

/// FNV-1a 64-bit hash.
std::uint64_t fnv1a64(std::string_view bytes) noexcept;

}  // namespace hetsim
