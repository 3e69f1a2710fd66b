// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#define HETSIM_VERSION_MAJOR 0
#define HETSIM_VERSION_MINOR 1
#define HETSIM_VERSION_PATCH 0

namespace hetsim {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hetsim
