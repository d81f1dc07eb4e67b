// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/poly.hpp"

#include <gtest/gtest.h>

using namespace pairlab;

namespace
{
Poly random_poly(const Field& F, Rng& rng, int max_deg)
{
    std::uniform_int_distribution<int> deg(0, max_deg);
    std::vector<FieldElement> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i)
        c.push_back(F.random(rng));
    return Poly(F, std::move(c));
}
}  // namespace

TEST(Poly, CanonicalForm)
{
    const auto F = Field::prime(31);
    const auto z = Poly::from_ints(F, {0, 0, 0});
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), kZeroDegree);
    EXPECT_EQ(Poly::from_ints(F, {5}).degree(), 0);
    EXPECT_EQ(Poly::from_ints(F, {1, 2, 31}).degree(), 1);
}

TEST(Poly, Gcd)
{
    const auto F = Field::prime(31);
    const auto u = Poly::from_ints(F, {15, 23, 1});
    EXPECT_TRUE(poly_gcd(u, Poly::from_ints(F, {1})).is_one());
    const auto v = Poly::from_ints(F, {6, 10, 3});
    EXPECT_EQ(poly_gcd(v, v), monic(v));
    const auto a = Poly::from_ints(F, {-1, 1}) * Poly::from_ints(F, {-2, 1});
    const auto b = Poly::from_ints(F, {-1, 1}) * Poly::from_ints(F, {-3, 1});
    EXPECT_EQ(poly_gcd(a, b), Poly::from_ints(F, {30, 1}));
    try
    {
        (void)poly_gcd(Poly(F), Poly(F));
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::undefined_gcd);
    }
}

TEST(Poly, Divmod)
{
    const auto F = Field::prime(31);
    auto [q, r] = poly_divmod(Poly::from_ints(F, {2, 4, 1}), Poly::from_ints(F, {1, 1}));
    EXPECT_EQ(q, Poly::from_ints(F, {3, 1}));
    EXPECT_EQ(r, Poly::from_ints(F, {30}));
    const auto u = Poly::from_ints(F, {7, 0, 3, 9});
    auto [q2, r2] = poly_divmod(u, u);
    EXPECT_TRUE(q2.is_one());
    EXPECT_TRUE(r2.is_zero());
    try
    {
        (void)poly_divmod(u, Poly(F));
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::division_by_zero);
    }
}

TEST(Poly, DivmodRecomposition)
{
    for (auto [p, k] : {std::pair{31ull, 1u}, {7ull, 2u}})
    {
        const auto F = Field::extension(p, k);
        Rng rng(11 * p + k);
        for (int i = 0; i < 1000; ++i)
        {
            const auto u = random_poly(F, rng, 8);
            auto v = random_poly(F, rng, 5);
            if (v.is_zero())
                continue;
            auto [q, r] = poly_divmod(u, v);
            ASSERT_EQ(q * v + r, u);
            ASSERT_LT(r.degree(), v.degree());
        }
    }
}

TEST(Poly, GcdDividesBoth)
{
    const auto F = Field::prime(13);
    Rng rng(5);
    for (int i = 0; i < 1000; ++i)
    {
        // Plant a common factor half the time.
        auto common = random_poly(F, rng, 2);
        auto u = random_poly(F, rng, 4), v = random_poly(F, rng, 4);
        if (i % 2 == 0 && !common.is_zero())
        {
            u *= common;
            v *= common;
        }
        if (u.is_zero() && v.is_zero())
            continue;
        const auto g = poly_gcd(u, v);
        ASSERT_TRUE(g.is_monic());
        ASSERT_TRUE(poly_mod(u, g).is_zero());
        ASSERT_TRUE(poly_mod(v, g).is_zero());
        const auto x = poly_xgcd(u, v);
        ASSERT_EQ(x.g, g);
        ASSERT_EQ(x.s * u + x.t * v, g);
    }
}

TEST(Poly, Eval)
{
    const auto F = Field::prime(31);
    EXPECT_EQ(poly_eval(Poly::from_ints(F, {28, 13}), F.element(26)), F.element(366 % 31));
    EXPECT_TRUE(poly_eval(Poly(F), F.element(9)).is_zero());
    CountingScope s;
    (void)poly_eval(Poly::from_ints(F, {1, 2, 3, 4}), F.element(5));
    EXPECT_EQ(s.counts().mul, 3u);
}

TEST(Poly, RootsOverBaseAndExtension)
{
    const auto F = Field::extension(31, 2);
    const auto u = Poly::from_ints(F, {2, 4, 1});
    // Oracle: exhaustive scan of F_{31^2}.
    std::vector<FieldElement> scan;
    for (std::uint64_t i = 0; i < 961; ++i)
    {
        const auto x = F.from_index(i);
        if ((x * x + F.element(4) * x + F.element(2)).is_zero())
            scan.push_back(x);
    }
    ASSERT_EQ(scan.size(), 2u);
    const auto roots = poly_roots(u);
    ASSERT_EQ(roots.size(), 2u);
    for (const auto& r : roots)
    {
        EXPECT_TRUE(poly_eval(u, r).is_zero());
        EXPECT_TRUE(r == scan[0] || r == scan[1]);
    }
    // The discriminant 8 is a square mod 31, so both roots are already in F_31.
    const auto F31 = Field::prime(31);
    const auto base = poly_roots(Poly::from_ints(F31, {2, 4, 1}));
    ASSERT_EQ(base.size(), 2u);
    EXPECT_EQ(base[0], F31.element(6));
    EXPECT_EQ(base[1], F31.element(21));
    // x^2 + 1 has no roots mod 31.
    EXPECT_TRUE(poly_roots(Poly::from_ints(F31, {1, 0, 1})).empty());
    EXPECT_EQ(poly_roots(Poly::from_ints(F, {1, 0, 1})).size(), 2u);
}

TEST(Poly, RootsWithMultiplicity)
{
    const auto F = Field::prime(31);
    const auto u = Poly::from_ints(F, {-3, 1}) * Poly::from_ints(F, {-3, 1}) * Poly::from_ints(F, {-7, 1}) *
                   Poly::from_ints(F, {1, 0, 1});  // x^2+1 irreducible mod 31
    const auto roots = poly_roots(u);
    ASSERT_EQ(roots.size(), 3u);
    EXPECT_EQ(roots[0], F.element(3));
    EXPECT_EQ(roots[1], F.element(3));
    EXPECT_EQ(roots[2], F.element(7));
}

TEST(Poly, RandomRootsMatchScan)
{
    const auto F = Field::prime(37);
    Rng rng(99);
    for (int i = 0; i < 200; ++i)
    {
        const auto u = random_poly(F, rng, 6);
        if (u.degree() < 1)
            continue;
        std::vector<FieldElement> scan;
        for (std::int64_t x = 0; x < 37; ++x)
        {
            // Count multiplicity by repeated synthetic division.
            Poly rest = u;
            const auto lin = Poly::from_ints(F, {-x, 1});
            for (;;)
            {
                auto [q, r] = poly_divmod(rest, lin);
                if (!r.is_zero())
                    break;
                scan.push_back(F.element(x));
                rest = q;
            }
        }
        ASSERT_EQ(poly_roots(u, i), scan);
    }
}
