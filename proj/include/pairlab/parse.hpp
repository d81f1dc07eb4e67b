// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace pairlab
{
/// Comma-separated base-10 integers; surrounding spaces are allowed. Throws
/// ParseError.
std::vector<std::int64_t> parse_int_list(std::string_view text);

}  // namespace pairlab
