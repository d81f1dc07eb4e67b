// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace pairlab
{
enum class Property
{
    weil_square,         ///< "weil-square": squared_weil = (-1)^m miller_weil^2
    tate_square,         ///< "tate-square": squared_tate = miller_tate^2
    hec_square,          ///< "hec-square": standard_tate_hec^4 = squared_tate_hec^2
    bilinearity,         ///< "bilinearity"
    roots_of_unity,      ///< "roots"
    nondegeneracy,       ///< "nondegeneracy": one witness per curve
    chain_independence,  ///< "chain-independence"
    cantor,              ///< "cantor": b^2 = f mod a on every composition
};

const char* to_string(Property p) noexcept;
Property parse_property(std::string_view name);
const std::vector<Property>& all_properties();

struct PropertyReport
{
    Property property = Property::weil_square;
    std::size_t samples = 0;
    std::size_t failures = 0;
    /// Draws that hit a documented precondition (collision, multiple of P).
    std::size_t skipped = 0;
    std::string first_failure;
    std::map<std::string, std::size_t> per_curve;

    bool passed() const noexcept { return failures == 0 && samples > 0; }
};

struct VerifyOptions
{
    std::uint64_t seed = 1;
    /// Total checks for the property; 0 picks the default.
    std::size_t samples = 0;
};

/// Runs one property suite over the embedded test curves. Deterministic in
/// the seed.
PropertyReport run_property(Property p, const VerifyOptions& opt = {});

nlohmann::json verify_json(const std::vector<PropertyReport>& reports);
std::string verify_text(const std::vector<PropertyReport>& reports);

}  // namespace pairlab
