// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/testbed.hpp"

namespace pairlab
{
EcTestCurve make_ec_test_curve(
    std::string name, std::uint64_t p, unsigned k, std::int64_t a4, std::int64_t a6, std::uint64_t m)
{
    UncountedScope quiet;
    const Field F = Field::extension(p, k);
    EllipticCurve E(F.element(a4), F.element(a6));
    EcTestCurve t{std::move(name), E, m, {}, E.points()};
    for (const auto& P : t.points)
        if (!P.is_infinity() && ec_scalar_mul(E, static_cast<std::int64_t>(m), P).is_infinity())
            t.torsion.push_back(P);
    if (t.torsion.empty())
        throw Error(Errc::invalid_order, "curve has no rational m-torsion");
    return t;
}

std::vector<EcTestCurve> weil_test_curves()
{
    std::vector<EcTestCurve> out;
    out.push_back(make_ec_test_curve("F31:y2=x3+11", 31, 1, 0, 11, 5));
    out.push_back(make_ec_test_curve("F37:y2=x3+x,m=6", 37, 1, 1, 0, 6));
    out.push_back(make_ec_test_curve("F37:y2=x3+x,m=3", 37, 1, 1, 0, 3));
    out.push_back(make_ec_test_curve("F43:y2=x3+3", 43, 1, 0, 3, 7));
    out.push_back(make_ec_test_curve("F13:y2=x3+5", 13, 1, 0, 5, 4));
    out.push_back(make_ec_test_curve("F49:y2=x3+x", 7, 2, 1, 0, 8));
    for (const auto& c : out)
        if (!c.full_torsion())
            throw Error(Errc::invalid_curve, c.name + " lacks full m-torsion");
    return out;
}

std::vector<EcTestCurve> tate_test_curves()
{
    std::vector<EcTestCurve> out;
    out.push_back(make_ec_test_curve("F31:y2=x3+11", 31, 1, 0, 11, 5));
    out.push_back(make_ec_test_curve("F101:y2=x3+x+1", 101, 1, 1, 1, 5));
    out.push_back(make_ec_test_curve("F71:y2=x3+x+4", 71, 1, 1, 4, 7));
    out.push_back(make_ec_test_curve("F37:y2=x3+x,m=6", 37, 1, 1, 0, 6));
    out.push_back(make_ec_test_curve("F49:y2=x3+x", 7, 2, 1, 0, 8));
    return out;
}

SupersingularEc SupersingularEc::create(std::uint64_t p, std::uint64_t m)
{
    if (p % 4 != 3)
        throw Error(Errc::invalid_field, "supersingular family needs p = 3 mod 4");
    if (m == 0 || (p + 1) % m != 0)
        throw Error(Errc::invalid_order, "m must divide p + 1");
    const Field F = Field::extension(p, 2);
    return {EllipticCurve(F.one(), F.zero()), m, (p + 1) / m};
}

CurvePoint SupersingularEc::torsion_point(Rng& rng) const
{
    UncountedScope quiet;
    for (;;)
    {
        const auto X = ec_scalar_mul(curve, BigInt(cofactor), curve.random_point(rng));
        if (!X.is_infinity())
            return X;
    }
}

MumfordDivisor HecTestCurve::torsion(Rng& rng) const
{
    UncountedScope quiet;
    const BigInt cof = order / m;
    for (;;)
    {
        auto X = jac_scalar_mul(curve, cof, random_divisor(curve, rng));
        if (!X.is_identity())
            return X;
    }
}

HecTestCurve make_hec_test_curve(std::string name, std::uint64_t p, const std::vector<std::int64_t>& f, std::uint64_t m)
{
    UncountedScope quiet;
    HyperCurve C = HyperCurve::from_ints(Field::prime(p), f);
    const BigInt N = jacobian_order(C);
    if (N % m != 0 || (p - 1) % m != 0)
        throw Error(Errc::invalid_order, name + ": m must divide both #J and q - 1");
    return {std::move(name), std::move(C), m, N};
}

std::vector<HecTestCurve> hec_test_curves()
{
    std::vector<HecTestCurve> out;
    out.push_back(make_hec_test_curve("F31:golden", 31, {1, 11, 4, 2, 13, 1}, 5));
    out.push_back(make_hec_test_curve("F41", 41, {8, 18, 26, 9, 34, 1}, 5));
    out.push_back(make_hec_test_curve("F71", 71, {31, 10, 38, 67, 63, 1}, 7));
    out.push_back(make_hec_test_curve("F101", 101, {22, 19, 29, 84, 29, 1}, 5));
    return out;
}

SupersingularHec SupersingularHec::create(std::uint64_t p, std::uint64_t m)
{
    if (p % 5 != 4)
        throw Error(Errc::invalid_field, "supersingular family needs p = 4 mod 5");
    if (m == 0 || (p + 1) % m != 0)
        throw Error(Errc::invalid_order, "m must divide p + 1");
    const Field F = Field::extension(p, 2);
    return {HyperCurve::from_ints(F, {1, 0, 0, 0, 0, 1}), m, BigInt((p + 1) / m)};
}

MumfordDivisor SupersingularHec::torsion_divisor(Rng& rng) const
{
    UncountedScope quiet;
    for (;;)
    {
        auto X = jac_scalar_mul(curve, cofactor, random_divisor(curve, rng));
        if (!X.is_identity())
            return X;
    }
}

}  // namespace pairlab
