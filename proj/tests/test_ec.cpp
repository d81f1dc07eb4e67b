// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/ec.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace pairlab;

namespace
{
// Integer chord-tangent law mod a small prime, written independently of the
// library. Points are (x, y) with x == -1 for O.
struct IPt
{
    long x, y;
    bool operator==(const IPt&) const = default;
};

long imod(long a, long p) { return ((a % p) + p) % p; }

long iinv(long a, long p)
{
    for (long b = 1; b < p; ++b)
        if (imod(a * b, p) == 1)
            return b;
    return 0;
}

IPt iadd(IPt u, IPt v, long a4, long p)
{
    if (u.x < 0)
        return v;
    if (v.x < 0)
        return u;
    long lam;
    if (u.x == v.x)
    {
        if (imod(u.y + v.y, p) == 0)
            return {-1, -1};
        lam = imod((3 * u.x * u.x + a4) * iinv(imod(2 * u.y, p), p), p);
    }
    else
        lam = imod((v.y - u.y) * iinv(imod(v.x - u.x, p), p), p);
    const long x3 = imod(lam * lam - u.x - v.x, p);
    return {x3, imod(lam * (u.x - x3) - u.y, p)};
}

IPt to_ipt(const CurvePoint& P)
{
    if (P.is_infinity())
        return {-1, -1};
    return {static_cast<long>(P.x().coeffs()[0]), static_cast<long>(P.y().coeffs()[0])};
}

EllipticCurve curve(std::uint64_t p, std::int64_t a4, std::int64_t a6)
{
    const auto F = Field::prime(p);
    return EllipticCurve(F.element(a4), F.element(a6));
}
}  // namespace

TEST(EllipticCurve, RejectsSingular)
{
    const auto F = Field::prime(31);
    try
    {
        EllipticCurve(F.element(0), F.element(0));
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::invalid_curve);
    }
    // 4(-3)^3 + 27(2)^2 = 0
    EXPECT_THROW(EllipticCurve(F.element(-3), F.element(2)), Error);
}

TEST(EllipticCurve, IdentityAndInverse)
{
    const auto E = curve(31, 0, 11);
    Rng rng(3);
    for (int i = 0; i < 50; ++i)
    {
        const auto U = E.random_point(rng);
        EXPECT_EQ(ec_add(E, U, CurvePoint::infinity()), U);
        EXPECT_EQ(ec_add(E, CurvePoint::infinity(), U), U);
        EXPECT_TRUE(ec_add(E, U, ec_neg(U)).is_infinity());
    }
    EXPECT_TRUE(ec_double(E, CurvePoint::infinity()).is_infinity());
}

TEST(EllipticCurve, ExhaustiveTableMatchesOracle)
{
    const auto E = curve(7, 0, 1);
    const auto pts = E.points();
    // Oracle point count by brute force over all (x, y).
    std::vector<IPt> ipts{{-1, -1}};
    for (long x = 0; x < 7; ++x)
        for (long y = 0; y < 7; ++y)
            if (imod(y * y - x * x * x - 1, 7) == 0)
                ipts.push_back({x, y});
    ASSERT_EQ(pts.size(), ipts.size());
    ASSERT_LE(pts.size(), 12u);
    for (const auto& U : pts)
        for (const auto& V : pts)
        {
            const auto S = ec_add(E, U, V);
            ASSERT_TRUE(E.contains(S));
            ASSERT_EQ(to_ipt(S), iadd(to_ipt(U), to_ipt(V), 0, 7));
            for (const auto& W : pts)
                ASSERT_EQ(ec_add(E, ec_add(E, U, V), W), ec_add(E, U, ec_add(E, V, W)));
        }
}

TEST(EllipticCurve, DoublingOfTwoTorsion)
{
    const auto E = curve(7, 0, 1);
    const auto F = E.field();
    // x^3 + 1 = 0 at x = 3, 5, 6 mod 7.
    for (std::int64_t x : {3, 5, 6})
        EXPECT_TRUE(ec_double(E, E.point(F.element(x), F.zero())).is_infinity());
}

TEST(EllipticCurve, DoublingMatchesAdditionAndOracle)
{
    const auto E = curve(31, 0, 11);
    Rng rng(17);
    for (int i = 0; i < 100; ++i)
    {
        const auto U = E.random_point(rng);
        EXPECT_EQ(ec_double(E, U), ec_add(E, U, U));
        EXPECT_EQ(to_ipt(ec_double(E, U)), iadd(to_ipt(U), to_ipt(U), 0, 31));
    }
}

TEST(EllipticCurve, AssociativityOnRandomTriples)
{
    for (auto [p, k, a4, a6] : {std::tuple{31ull, 1u, 0, 11}, {37ull, 1u, 1, 0}, {7ull, 2u, 1, 0}, {101ull, 1u, 3, 7}})
    {
        const auto F = Field::extension(p, k);
        const EllipticCurve E(F.element(a4), F.element(a6));
        Rng rng(p);
        for (int i = 0; i < 500; ++i)
        {
            const auto U = E.random_point(rng), V = E.random_point(rng), W = E.random_point(rng);
            ASSERT_EQ(ec_add(E, ec_add(E, U, V), W), ec_add(E, U, ec_add(E, V, W)));
            ASSERT_EQ(ec_add(E, U, V), ec_add(E, V, U));
        }
    }
}

TEST(EllipticCurve, ScalarMultiplication)
{
    const auto E = curve(31, 0, 11);
    Rng rng(5);
    for (int i = 0; i < 20; ++i)
    {
        const auto U = E.random_point(rng);
        EXPECT_TRUE(ec_scalar_mul(E, 0, U).is_infinity());
        EXPECT_EQ(ec_scalar_mul(E, -1, U), ec_neg(U));
        auto acc = CurvePoint::infinity();
        for (std::int64_t n = 1; n <= 64; ++n)
        {
            acc = ec_add(E, acc, U);
            ASSERT_EQ(ec_scalar_mul(E, n, U), acc);
            ASSERT_EQ(ec_scalar_mul(E, BigInt(n), U), acc);
            ASSERT_EQ(ec_scalar_mul(E, -n, U), ec_neg(acc));
        }
    }
}

TEST(EllipticCurve, TorsionByGroupOrder)
{
    // y^2 = x^3 + 11 over F_31: count points, factor, and check m P = O for
    // the cofactor multiples.
    const auto E = curve(31, 0, 11);
    const auto pts = E.points();
    const std::int64_t N = static_cast<std::int64_t>(pts.size());
    EXPECT_EQ(N, 25);
    for (const auto& P : pts)
    {
        EXPECT_TRUE(ec_scalar_mul(E, N, P).is_infinity());
        EXPECT_TRUE(ec_scalar_mul(E, 5, P).is_infinity());
    }
}

TEST(EllipticCurve, LineZerosAreExactlyTheThreePoints)
{
    for (auto [p, a4, a6] : {std::tuple{31ull, 0, 11}, {37ull, 2, 1}, {13ull, 0, 5}})
    {
        const auto E = curve(p, a4, a6);
        const auto pts = E.points();
        Rng rng(p);
        for (int t = 0; t < 40; ++t)
        {
            const auto U = E.random_point(rng);
            const auto V = t % 5 == 0 ? U : E.random_point(rng);
            const auto L = line_through(E, U, V);
            const auto S = ec_add(E, U, V);
            std::set<std::string> expect;
            for (const auto& Z : {U, V, ec_neg(S)})
                if (!Z.is_infinity())
                    expect.insert(Z.to_string());
            std::set<std::string> zeros;
            for (const auto& W : pts)
                if (!W.is_infinity() && eval_line(L, W).is_zero())
                    zeros.insert(W.to_string());
            ASSERT_EQ(zeros, expect) << U << " " << V;
        }
    }
}

TEST(EllipticCurve, LineShapes)
{
    const auto E = curve(31, 0, 11);
    const auto F = E.field();
    Rng rng(8);
    const auto U = E.random_point(rng);
    const auto T = line_through(E, U, U);
    EXPECT_TRUE(eval_line(T, U).is_zero());
    EXPECT_TRUE(eval_line(T, ec_neg(ec_double(E, U))).is_zero());
    const auto Vt = line_through(E, U, ec_neg(U));
    EXPECT_TRUE(Vt.c2.is_zero());
    EXPECT_TRUE(eval_line(Vt, ec_neg(U)).is_zero());
    const LineCoeffs one{F.one(), F.zero(), F.zero()};
    EXPECT_TRUE(eval_line(one, U).is_one());
    try
    {
        (void)line_through(E, CurvePoint::infinity(), CurvePoint::infinity());
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::degenerate_line);
    }
    try
    {
        (void)eval_line(one, CurvePoint::infinity());
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::infinity_evaluation);
    }
}

TEST(EllipticCurve, ChordEvaluationAgreesWithCoefficients)
{
    const auto F = Field::extension(7, 2);
    const EllipticCurve E(F.element(1), F.element(0));
    Rng rng(21);
    for (int i = 0; i < 200; ++i)
    {
        const auto U = E.random_point(rng), V = E.random_point(rng), W = E.random_point(rng);
        if (W.is_infinity())
            continue;
        const auto ar = ec_add_chord(E, U, V);
        const auto L = ar.chord.coeffs(F);
        ASSERT_EQ(ar.chord.eval(W), eval_line(L, W));
        const auto [plus, minus] = ar.chord.eval_pm(W);
        ASSERT_EQ(plus, eval_line(L, W));
        ASSERT_EQ(minus, eval_line(L, ec_neg(W)));
    }
}

TEST(EllipticCurve, OperationCounts)
{
    const auto E = curve(1000003, 3, 7);
    Rng rng(1);
    for (int i = 0; i < 20; ++i)
    {
        const auto U = E.random_point(rng), V = E.random_point(rng);
        {
            CountingScope s;
            const auto r = ec_add_chord(E, U, V);
            ASSERT_TRUE(r.generic);
            EXPECT_EQ(s.counts().mul, 2u);
            EXPECT_EQ(s.counts().div, 1u);
        }
        {
            CountingScope s;
            const auto r = ec_add_chord(E, U, U);
            ASSERT_TRUE(r.generic);
            EXPECT_EQ(s.counts().mul, 3u);
            EXPECT_EQ(s.counts().div, 1u);
        }
        {
            const auto r = ec_add_chord(E, U, V);
            CountingScope s;
            (void)r.chord.eval_pm(V);
            EXPECT_EQ(s.counts().mul, 1u);
        }
    }
}

TEST(EllipticCurve, PointValidation)
{
    const auto E = curve(31, 0, 11);
    const auto F = E.field();
    try
    {
        (void)E.point(F.element(1), F.element(1));
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::not_on_curve);
    }
    EXPECT_EQ(CurvePoint::infinity().to_string(), "inf");
}
