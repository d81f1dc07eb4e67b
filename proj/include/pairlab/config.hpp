// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pairlab/ec.hpp"
#include "pairlab/jacobian.hpp"
#include "pairlab/parse.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pairlab
{
/// Parsed key=value curve file. Keys: p, k, modulus, a4, a6, f. Lines
/// starting with '#' and blank lines are skipped.
struct CurveConfig
{
    std::uint64_t p = 0;
    unsigned k = 1;
    std::vector<std::uint64_t> modulus;
    std::optional<std::int64_t> a4;
    std::optional<std::int64_t> a6;
    std::vector<std::int64_t> f;

    Field field() const;
    /// Needs a4 and a6.
    EllipticCurve elliptic() const;
    /// Needs f.
    HyperCurve hyperelliptic() const;
};

/// Throws ParseError on unknown or repeated keys, malformed numbers and a
/// missing p.
CurveConfig parse_config(std::string_view text);
CurveConfig load_config(const std::string& path);

/// k comma-separated base-10 integers, constant coefficient first.
FieldElement parse_element(const Field& F, std::string_view text);

/// "inf" or x,y with each coordinate given as k integers. Throws ParseError
/// or NotOnCurve.
CurvePoint parse_point(const EllipticCurve& E, std::string_view text);

}  // namespace pairlab
