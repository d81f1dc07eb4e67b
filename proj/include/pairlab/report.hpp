// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pairlab/error.hpp"
#include "pairlab/pairing.hpp"

#include <json.hpp>

#include <string>

namespace pairlab
{
inline constexpr int kJsonSchema = 1;

/// Process exit codes shared by every subcommand.
enum ExitCode : int
{
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitUsage = 2,
    kExitDivisorCollision = 3,
    kExitMultipleOfBasePoint = 4,
    kExitNotTorsion = 5,
    kExitRandomnessExhausted = 6,
    kExitOtherError = 7,
};

int exit_code_for(Errc code) noexcept;

nlohmann::json to_json(const OpCounter& c);

/// {"schema":1, "alg", "value":[...], "m", "degenerate", "ops", "final_ops",
///  "steps", "attempts"} plus "case_counts" and "comp_a_evals" for genus 2.
nlohmann::json pairing_json(const std::string& alg, const PairingResult& r, std::uint64_t m, bool genus2);

/// Aligned two-column text for the same fields.
std::string pairing_text(const std::string& alg, const PairingResult& r, std::uint64_t m, bool genus2);

}  // namespace pairlab
