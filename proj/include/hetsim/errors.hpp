// Copyright 2026 The hetsim Authors
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace hetsim {

/// Raised when a configuration value or input file fails validation.
/// Carries the dotted path of the first offending field ("game.beta").
class ValidationError : public std::runtime_error {
 public:
  ValidationError(std::string field, const std::string& reason)
      : std::runtime_error(field + ": " + reason), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

}  // namespace hetsim
