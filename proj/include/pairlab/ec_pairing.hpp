// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pairlab/ec.hpp"
#include "pairlab/pairing.hpp"

#include <optional>
#include <string_view>

namespace pairlab
{
enum class EcAlgorithm
{
    miller_weil,   ///< "weil"
    squared_weil,  ///< "weil2"
    miller_tate,   ///< "tate"
    squared_tate,  ///< "tate2"
};

const char* to_string(EcAlgorithm a) noexcept;
EcAlgorithm parse_ec_algorithm(std::string_view name);

struct EcPairingOptions
{
    ChainPolicy policy = ChainPolicy::naf;
    /// Overrides `policy` when set; must be a valid chain for m.
    std::optional<Chain> chain;
    /// Squared Weil only: divide out (-1)^m.
    bool normalized = false;
    /// Baselines only: seed for the auxiliary points.
    std::uint64_t seed = 1;
    unsigned retry_cap = 64;
    /// Skip the P != ±Q and non-identity guards (self-pairing tests).
    bool relax_preconditions = false;
};

/// f_{m,P}(Q) f_{m,Q}(-P) / (f_{m,P}(-Q) f_{m,Q}(P)) = (-1)^m e_m(P,Q)^2.
/// A vanishing factor means Q is a multiple of P; the result is then flagged
/// degenerate with value (-1)^m, or 1 when normalized.
PairingResult squared_weil(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q, std::uint64_t m,
    const EcPairingOptions& opt = {});

/// e_m(P,Q) by Miller's algorithm with random auxiliary points R1, R2.
PairingResult miller_weil(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q, std::uint64_t m,
    const EcPairingOptions& opt = {});

/// (f_{m,P}(Q) / f_{m,P}(-Q))^((q-1)/m). Throws MultipleOfBasePoint when a
/// factor vanishes.
PairingResult squared_tate(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q, std::uint64_t m,
    const EcPairingOptions& opt = {});

/// f_{A_P}(A_Q)^((q-1)/m) with random auxiliary points.
PairingResult miller_tate(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q, std::uint64_t m,
    const EcPairingOptions& opt = {});

PairingResult ec_pairing(EcAlgorithm alg, const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q,
    std::uint64_t m, const EcPairingOptions& opt = {});

}  // namespace pairlab
