// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>

#include <json.hpp>

#include "hetsim/model.hpp"

namespace hetsim {

/// Scenario as a four-section JSON object mirroring ScenarioConfig.
nlohmann::json scenario_to_json(const ScenarioConfig& cfg);

/// Scenario from JSON. Every field is optional and defaults to the baseline
/// scenario; unknown keys and wrong types raise ValidationError naming the
/// offending field. Range checking is validate()'s job, not this parser's.
ScenarioConfig scenario_from_json(const nlohmann::json& j);

/// scenario_from_json over a file. A missing or unreadable file raises
/// ValidationError on the path.
ScenarioConfig load_scenario_file(const std::string& path);

/// 16-hex-digit FNV-1a hash of the canonical (sorted-key, compact) JSON form;
/// equal configs hash equal, any field change reshuffles the digest.
std::string scenario_hash_hex(const ScenarioConfig& cfg);

}  // namespace hetsim
