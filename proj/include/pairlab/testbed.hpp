// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pairlab/ec.hpp"
#include "pairlab/jacobian.hpp"

#include <string>
#include <vector>

namespace pairlab
{
/// Small curve whose m-torsion was found by enumerating every point.
struct EcTestCurve
{
    std::string name;
    EllipticCurve curve;
    std::uint64_t m;
    /// Non-identity points of E(F_q)[m].
    std::vector<CurvePoint> torsion;
    /// Every point of E(F_q), O included.
    std::vector<CurvePoint> points;

    bool full_torsion() const noexcept { return torsion.size() + 1 == m * m; }
};

EcTestCurve make_ec_test_curve(
    std::string name, std::uint64_t p, unsigned k, std::int64_t a4, std::int64_t a6, std::uint64_t m);

/// Curves with full rational m-torsion (Weil pairing inputs). Includes the
/// same curve with an even and an odd m.
std::vector<EcTestCurve> weil_test_curves();

/// Curves with m | q - 1 and rational m-torsion, some with a cyclic
/// m-torsion group.
std::vector<EcTestCurve> tate_test_curves();

/// y^2 = x^3 + x over F_{p^2} with p = 3 mod 4: the group is
/// Z/(p+1) x Z/(p+1), so every m dividing p + 1 has full torsion.
struct SupersingularEc
{
    EllipticCurve curve;
    std::uint64_t m;
    std::uint64_t cofactor;  ///< (p + 1) / m

    static SupersingularEc create(std::uint64_t p, std::uint64_t m);

    /// Random point of order exactly m (m prime).
    CurvePoint torsion_point(Rng& rng) const;
};

/// Genus-2 curve with m | #J(F_q) and m | q - 1, m prime.
struct HecTestCurve
{
    std::string name;
    HyperCurve curve;
    std::uint64_t m;
    BigInt order;  ///< #J(F_q)

    /// Random divisor of order exactly m.
    MumfordDivisor torsion(Rng& rng) const;
};

/// Builds the curve and checks m against the point-count order.
HecTestCurve make_hec_test_curve(std::string name, std::uint64_t p, const std::vector<std::int64_t>& f, std::uint64_t m);

/// The y^2 = x^5 + 13x^4 + 2x^3 + 4x^2 + 11x + 1 curve over F_31 first, then
/// curves found by searching random quintics over small primes.
std::vector<HecTestCurve> hec_test_curves();

/// y^2 = x^5 + 1 over F_{p^2} with p = 4 mod 5: #J = (p+1)^4 and every m
/// dividing p + 1 divides q - 1 too.
struct SupersingularHec
{
    HyperCurve curve;
    std::uint64_t m;
    BigInt cofactor;  ///< (p + 1) / m

    static SupersingularHec create(std::uint64_t p, std::uint64_t m);

    /// Random divisor of order exactly m (m prime).
    MumfordDivisor torsion_divisor(Rng& rng) const;
};

}  // namespace pairlab
