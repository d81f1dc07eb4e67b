// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/field.hpp"

#include <gtest/gtest.h>

using namespace pairlab;

namespace
{
// Schoolbook product of two F_p[x] residues reduced by a monic modulus; the
// oracle for extension-field multiplication.
std::vector<std::uint64_t> oracle_mul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
    const std::vector<std::uint64_t>& mod, std::uint64_t p)
{
    const std::size_t k = mod.size() - 1;
    std::vector<std::uint64_t> r(2 * k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    for (std::size_t d = 2 * k - 1; d >= k; --d)
    {
        const std::uint64_t c = r[d];
        r[d] = 0;
        for (std::size_t i = 0; i < k; ++i)
            r[d - k + i] = (r[d - k + i] + (p - c) * mod[i]) % p;
    }
    r.resize(k);
    return r;
}
}  // namespace

TEST(Field, PrimeAddition)
{
    const auto F = Field::prime(31);
    EXPECT_EQ(F.element(23) + F.element(15), F.element(7));
    for (std::int64_t x = 0; x < 31; ++x)
        EXPECT_EQ(F.zero() + F.element(x), F.element(x));
}

TEST(Field, ExtensionAddition)
{
    const auto F = Field::extension(5, 2);
    EXPECT_EQ(F.params().modulus, (std::vector<std::uint64_t>{2, 0, 1}));
    EXPECT_TRUE((F.element({1, 1}) + F.element({4, 4})).is_zero());
}

TEST(Field, Multiplication)
{
    const auto F = Field::prime(31);
    EXPECT_EQ(F.element(13) * F.element(28), F.element(23));
    for (std::int64_t x = 0; x < 31; ++x)
        EXPECT_EQ(F.one() * F.element(x), F.element(x));
    const auto F25 = Field::extension(5, 2);
    EXPECT_EQ(F25.generator() * F25.generator(), F25.element(3));
}

TEST(Field, Inverse)
{
    const auto F = Field::prime(31);
    EXPECT_EQ(inv(F.element(2)), F.element(16));
    EXPECT_EQ(inv(F.one()), F.one());
    EXPECT_THROW(inv(F.zero()), Error);
    try
    {
        inv(F.zero());
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::division_by_zero);
    }
}

TEST(Field, ExtensionInverseAgainstExhaustiveSearch)
{
    const auto F = Field::extension(7, 2);
    const auto& mod = F.params().modulus;
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial)
    {
        const auto a = F.random_nonzero(rng);
        // Oracle: scan every element for the one whose product with a is 1.
        std::vector<std::uint64_t> found;
        for (std::uint64_t i = 0; i < 49; ++i)
        {
            std::vector<std::uint64_t> b{i % 7, i / 7};
            if (oracle_mul(a.coeffs(), b, mod, 7) == std::vector<std::uint64_t>{1, 0})
                found = b;
        }
        ASSERT_FALSE(found.empty());
        EXPECT_EQ(inv(a).coeffs(), found);
        EXPECT_TRUE((inv(a) * a).is_one());
    }
}

TEST(Field, Power)
{
    const auto F = Field::prime(31);
    // Oracle: repeated multiplication.
    std::uint64_t acc = 1;
    for (int i = 0; i < 5; ++i)
        acc = acc * 4 % 31;
    EXPECT_EQ(acc, 1u);
    EXPECT_EQ(pow(F.element(4), 5), F.element(static_cast<std::int64_t>(acc)));
    for (std::int64_t a = 0; a < 31; ++a)
        EXPECT_EQ(pow(F.element(a), 1), F.element(a));
    EXPECT_TRUE(pow(F.element(2), 30).is_one());
    EXPECT_TRUE(pow(F.zero(), 0).is_one());
}

TEST(Field, ExtensionMultiplicationMatchesOracle)
{
    for (auto [p, k] : {std::pair{7ull, 2u}, {5ull, 3u}, {31ull, 2u}, {11ull, 4u}})
    {
        const auto F = Field::extension(p, k);
        Rng rng(p * 100 + k);
        for (int i = 0; i < 200; ++i)
        {
            const auto a = F.random(rng), b = F.random(rng);
            EXPECT_EQ((a * b).coeffs(), oracle_mul(a.coeffs(), b.coeffs(), F.params().modulus, p));
        }
    }
}

TEST(Field, AxiomsOnRandomTriples)
{
    for (auto [p, k] : {std::pair{31ull, 1u}, {7ull, 2u}, {13ull, 3u}, {1000003ull, 2u}})
    {
        const auto F = Field::extension(p, k);
        Rng rng(p + k);
        for (int i = 0; i < 1000; ++i)
        {
            const auto a = F.random(rng), b = F.random(rng), c = F.random(rng);
            ASSERT_EQ((a + b) + c, a + (b + c));
            ASSERT_EQ((a * b) * c, a * (b * c));
            ASSERT_EQ(a + b, b + a);
            ASSERT_EQ(a * b, b * a);
            ASSERT_EQ(a * (b + c), a * b + a * c);
            if (!a.is_zero())
            {
                ASSERT_TRUE((a * inv(a)).is_one());
                ASSERT_EQ(b / a * a, b);
            }
        }
    }
}

TEST(Field, FermatOnExtension)
{
    const auto F = Field::extension(7, 3);
    const BigInt e = F.order() - 1;
    for (std::uint64_t i = 1; i < 343; ++i)
        ASSERT_TRUE(pow(F.from_index(i), e).is_one()) << i;
}

TEST(Field, IndexRoundTrip)
{
    const auto F = Field::extension(5, 2);
    for (std::uint64_t i = 0; i < 25; ++i)
        EXPECT_EQ(F.from_index(i).index(), i);
}

TEST(Field, MismatchedFieldsRejected)
{
    const auto A = Field::prime(31), B = Field::prime(37);
    try
    {
        (void)(A.one() + B.one());
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::param_mismatch);
    }
}

TEST(Field, ParameterValidation)
{
    EXPECT_THROW(Field::prime(15), Error);
    EXPECT_THROW(Field::prime(3), Error);
    EXPECT_THROW(Field::prime(2), Error);
    try
    {
        Field::prime((1ull << 61) + 1);
        FAIL();
    }
    catch (const Error& e)
    {
        EXPECT_EQ(e.code(), Errc::unsupported_modulus);
    }
    // x^2 + 1 is reducible mod 5 (2^2 = -1).
    EXPECT_THROW(Field::extension(5, 2, {1, 0, 1}), Error);
    EXPECT_NO_THROW(Field::extension(7, 2, {1, 0, 1}));
    EXPECT_THROW(Field::extension(7, 2, {1, 0, 2}), Error);
}

TEST(Field, DefaultModulusIsSmallestIrreducible)
{
    for (auto [p, k] : {std::pair{5ull, 2u}, {7ull, 2u}, {31ull, 2u}, {5ull, 3u}, {7ull, 4u}})
    {
        const auto F = Field::extension(p, k);
        // Oracle: scan candidates in the same order and test irreducibility
        // by checking for roots (degree <= 3) or brute-force quadratic factors.
        auto has_root = [&](const std::vector<std::uint64_t>& f) {
            for (std::uint64_t x = 0; x < p; ++x)
            {
                std::uint64_t acc = 0;
                for (std::size_t i = f.size(); i-- > 0;)
                    acc = (acc * x + f[i]) % p;
                if (acc == 0)
                    return true;
            }
            return false;
        };
        auto divisible_by_quadratic = [&](const std::vector<std::uint64_t>& f) {
            for (std::uint64_t c0 = 0; c0 < p; ++c0)
                for (std::uint64_t c1 = 0; c1 < p; ++c1)
                {
                    std::vector<std::uint64_t> r = f;
                    for (std::size_t d = r.size() - 1; d >= 2; --d)
                    {
                        const std::uint64_t c = r[d];
                        r[d] = 0;
                        r[d - 1] = (r[d - 1] + (p - c) * c1) % p;
                        r[d - 2] = (r[d - 2] + (p - c) * c0) % p;
                    }
                    if (r[0] == 0 && r[1] == 0)
                        return true;
                }
            return false;
        };
        std::vector<std::uint64_t> expect;
        for (std::uint64_t idx = 0;; ++idx)
        {
            std::vector<std::uint64_t> cand(k + 1, 0);
            std::uint64_t t = idx;
            for (unsigned i = 0; i < k; ++i)
            {
                cand[i] = t % p;
                t /= p;
            }
            cand[k] = 1;
            if (has_root(cand))
                continue;
            if (k == 4 && divisible_by_quadratic(cand))
                continue;
            expect = cand;
            break;
        }
        EXPECT_EQ(F.params().modulus, expect) << p << "^" << k;
    }
}

TEST(Field, SquareRoots)
{
    for (auto [p, k] : {std::pair{31ull, 1u}, {41ull, 1u}, {7ull, 2u}, {13ull, 2u}})
    {
        const auto F = Field::extension(p, k);
        std::uint64_t squares = 0;
        const std::uint64_t q = static_cast<std::uint64_t>(F.order());
        for (std::uint64_t i = 0; i < q; ++i)
        {
            const auto a = F.from_index(i);
            const auto r = sqrt(a);
            EXPECT_EQ(r.has_value(), is_square(a));
            if (r)
            {
                EXPECT_EQ(*r * *r, a);
                ++squares;
            }
        }
        EXPECT_EQ(squares, (q - 1) / 2 + 1);
    }
}

TEST(OpCounter, CountsExactly)
{
    const auto F = Field::prime(31);
    CountingScope outer;
    {
        CountingScope inner;
        auto a = F.element(3);
        for (int i = 0; i < 17; ++i)
            a = a * F.element(5);
        EXPECT_EQ(inner.counts().mul, 17u);
        (void)(a / F.element(2));
        (void)inv(F.element(2));
        EXPECT_EQ(inner.counts().div, 2u);
        EXPECT_EQ(inner.counts().mul, 17u);
    }
    {
        CountingScope inner2;
        (void)(F.element(1) + F.element(2));
        EXPECT_EQ(inner2.counts().add, 1u);
        {
            UncountedScope quiet;
            (void)(F.element(1) * F.element(2));
        }
        EXPECT_EQ(inner2.counts().mul, 0u);
    }
    EXPECT_EQ(outer.counts(), (OpCounter{17, 2, 1}));
}

TEST(OpCounter, PowCountsSquareAndMultiply)
{
    const auto F = Field::prime(31);
    CountingScope s;
    (void)pow(F.element(3), 13);  // 1101b: 3 squarings, 2 multiplies
    EXPECT_EQ(s.counts().mul, 5u);
}

TEST(Primality, MillerRabin)
{
    std::vector<bool> sieve(10000, true);
    sieve[0] = sieve[1] = false;
    for (std::size_t i = 2; i < sieve.size(); ++i)
        if (sieve[i])
            for (std::size_t j = i * i; j < sieve.size(); j += i)
                sieve[j] = false;
    for (std::uint64_t n = 0; n < sieve.size(); ++n)
        ASSERT_EQ(detail::is_prime_u64(n), sieve[n]) << n;
    EXPECT_TRUE(detail::is_prime_u64(2305843009213693951ull));  // 2^61 - 1
    EXPECT_FALSE(detail::is_prime_u64(3215031751ull));          // strong pseudoprime to 2,3,5,7
}
