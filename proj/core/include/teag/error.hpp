// Copyright 2026 The teag-lab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace teag {

/// Raised for contract violations on inputs: unknown ids, wrong node roles,
/// missing ports, out-of-range parameters.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace teag
