// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pairlab/jacobian.hpp"
#include "pairlab/pairing.hpp"

#include <optional>
#include <string_view>

namespace pairlab
{
enum class HecAlgorithm
{
    squared_tate,   ///< "tate2"
    standard_tate,  ///< "tate-std"
};

const char* to_string(HecAlgorithm a) noexcept;
HecAlgorithm parse_hec_algorithm(std::string_view name);

struct HecPairingOptions
{
    /// binary or ladder; chains with subtraction steps are rejected.
    ChainPolicy policy = ChainPolicy::binary;
    std::optional<Chain> chain;
    /// Baseline only.
    std::uint64_t seed = 1;
    unsigned retry_cap = 64;
};

/// h_{m,D}(Q1 - Q1' + Q2 - Q2')^((q-1)/m) where E = Q1 + Q2 - 2P_inf.
/// Throws DivisorCollision when some chain entry shares support with E and
/// NotTorsion when mD != id.
PairingResult squared_tate_hec(const HyperCurve& C, const MumfordDivisor& D, const MumfordDivisor& E,
    std::uint64_t m, const HecPairingOptions& opt = {});

/// h_{m,D}(U - T)^((q-1)/m) for a random T and U = E + T.
PairingResult standard_tate_hec(const HyperCurve& C, const MumfordDivisor& D, const MumfordDivisor& E,
    std::uint64_t m, const HecPairingOptions& opt = {});

PairingResult hec_pairing(HecAlgorithm alg, const HyperCurve& C, const MumfordDivisor& D, const MumfordDivisor& E,
    std::uint64_t m, const HecPairingOptions& opt = {});

}  // namespace pairlab
