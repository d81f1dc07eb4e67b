// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/chain.hpp"
#include "pairlab/error.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace pairlab;

TEST(Chain, TrivialOrder)
{
    for (auto policy : {ChainPolicy::binary, ChainPolicy::naf, ChainPolicy::ladder})
    {
        EXPECT_TRUE(build_chain(1, policy).empty());
        EXPECT_TRUE(verify_chain({}, 1));
    }
}

TEST(Chain, BinaryFive)
{
    const auto c = build_chain(5, ChainPolicy::binary);
    ASSERT_EQ(c.size(), 3u);
    EXPECT_EQ(c[0], (ChainStep{StepKind::double_, 0, 0, 2}));
    EXPECT_EQ(c[1], (ChainStep{StepKind::double_, 1, 1, 4}));
    EXPECT_EQ(c[2], (ChainStep{StepKind::add, 2, 0, 5}));
    EXPECT_TRUE(verify_chain(c, 5));
}

TEST(Chain, Naf255UsesSubtraction)
{
    const auto c = build_chain(255, ChainPolicy::naf);
    EXPECT_LE(c.size(), 10u);
    EXPECT_EQ(c.back().kind, StepKind::subtract);
    EXPECT_EQ(c.back().value, 255u);
    EXPECT_TRUE(verify_chain(c, 255));
}

TEST(Chain, ZeroOrderRejected)
{
    try
    {
        (void)build_chain(0, ChainPolicy::naf);
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::invalid_order);
    }
}

TEST(Chain, VerifyRejectsMalformed)
{
    Chain forward{{StepKind::add, 0, 2, 3}, {StepKind::double_, 0, 0, 2}};
    EXPECT_FALSE(verify_chain(forward, 2));
    Chain wrong_value{{StepKind::double_, 0, 0, 3}};
    EXPECT_FALSE(verify_chain(wrong_value, 3));
    Chain wrong_end{{StepKind::double_, 0, 0, 2}};
    EXPECT_FALSE(verify_chain(wrong_end, 3));
}

TEST(Chain, RandomOrdersReplay)
{
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::uint64_t> dist(2, 1000000);
    for (int i = 0; i < 1000; ++i)
    {
        const auto m = dist(rng);
        for (auto policy : {ChainPolicy::binary, ChainPolicy::naf, ChainPolicy::ladder})
        {
            const auto c = build_chain(m, policy);
            ASSERT_TRUE(verify_chain(c, m)) << m << " " << to_string(policy);
            ASSERT_EQ(c.back().value, m);
        }
    }
}

TEST(Chain, ExhaustiveProperties)
{
    for (std::uint64_t m = 1; m <= 1000000; ++m)
    {
        const auto naf = build_chain(m, ChainPolicy::naf);
        const auto bin = build_chain(m, ChainPolicy::binary);
        const auto bound = 2 * static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(m)))) + 1;
        ASSERT_LE(naf.size(), bound) << m;
        ASSERT_TRUE(verify_chain(naf, m)) << m;
        ASSERT_TRUE(verify_chain(bin, m)) << m;
        for (const auto& s : bin)
            ASSERT_NE(s.kind, StepKind::subtract);
    }
}

TEST(Chain, LadderOperandsAreConsecutive)
{
    for (std::uint64_t m = 2; m < 5000; ++m)
    {
        const auto c = build_chain(m, ChainPolicy::ladder);
        ASSERT_TRUE(verify_chain(c, m)) << m;
        const auto v = chain_values(c);
        for (const auto& s : c)
        {
            ASSERT_NE(s.kind, StepKind::subtract);
            if (s.kind == StepKind::add)
                ASSERT_EQ(v[s.right], v[s.left] + 1) << m;
        }
    }
}

TEST(Chain, Format)
{
    EXPECT_EQ(format_chain(build_chain(5, ChainPolicy::binary)), "1: 2 = 1 + 1\n2: 4 = 2 + 2\n3: 5 = 4 + 1\n");
    EXPECT_EQ(parse_policy("naf"), ChainPolicy::naf);
    EXPECT_THROW(parse_policy("fast"), Error);
}
