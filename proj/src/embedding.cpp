// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/embedding.hpp"

#include <algorithm>

namespace pairlab
{
FieldEmbedding::FieldEmbedding(Field source, Field target)
  : source_(std::move(source)), target_(std::move(target)), identity_(source_.same_as(target_))
{
    if (identity_)
        return;
    const auto& s = source_.params();
    const auto& t = target_.params();
    if (s.p != t.p || t.k % s.k != 0)
        throw Error(Errc::invalid_field, "no embedding between these fields");
    UncountedScope quiet;
    FieldElement g = target_.one();
    if (s.k > 1)
    {
        std::vector<FieldElement> mod;
        for (auto c : s.modulus)
            mod.push_back(target_.element(std::vector<std::uint64_t>{c}));
        const auto roots = poly_roots(Poly(target_, std::move(mod)));
        if (roots.empty())
            throw Error(Errc::invalid_field, "modulus has no root in the target field");
        g = roots.front();
    }
    FieldElement acc = target_.one();
    for (unsigned i = 0; i < s.k; ++i)
    {
        basis_.push_back(acc);
        acc *= g;
    }
}

FieldElement FieldEmbedding::lift(const FieldElement& a) const
{
    if (identity_)
        return a;
    if (!a.field().same_as(source_))
        throw Error(Errc::param_mismatch, "element is not in the source field");
    UncountedScope quiet;
    FieldElement out = target_.zero();
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (a.coeffs()[i] != 0)
            out += target_.element(std::vector<std::uint64_t>{a.coeffs()[i]}) * basis_[i];
    return out;
}

Poly FieldEmbedding::lift(const Poly& u) const
{
    if (identity_)
        return u;
    return poly_map(u, target_, [this](const FieldElement& c) { return lift(c); });
}

std::optional<FieldElement> FieldEmbedding::project(const FieldElement& a) const
{
    if (identity_)
        return a;
    UncountedScope quiet;
    // Solve sum_i c_i basis_i = a coordinatewise over F_p.
    const Field Fp = Field::prime(source_.characteristic());
    const std::size_t rows = target_.degree();
    const std::size_t cols = basis_.size();
    std::vector<std::vector<FieldElement>> m(rows);
    for (std::size_t r = 0; r < rows; ++r)
    {
        for (std::size_t c = 0; c < cols; ++c)
            m[r].push_back(Fp.element(std::vector<std::uint64_t>{basis_[c].coeffs()[r]}));
        m[r].push_back(Fp.element(std::vector<std::uint64_t>{a.coeffs()[r]}));
    }
    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && pivot_row < rows; ++c)
    {
        std::size_t r = pivot_row;
        while (r < rows && m[r][c].is_zero())
            ++r;
        if (r == rows)
            continue;
        std::swap(m[r], m[pivot_row]);
        const auto s = inv(m[pivot_row][c]);
        for (auto& v : m[pivot_row])
            v *= s;
        for (std::size_t o = 0; o < rows; ++o)
        {
            if (o == pivot_row || m[o][c].is_zero())
                continue;
            const auto t = m[o][c];
            for (std::size_t k = 0; k <= cols; ++k)
                m[o][k] -= t * m[pivot_row][k];
        }
        pivot_col.push_back(c);
        ++pivot_row;
    }
    for (std::size_t r = pivot_row; r < rows; ++r)
        if (!m[r][cols].is_zero())
            return std::nullopt;
    std::vector<std::uint64_t> coeffs(cols, 0);
    for (std::size_t r = 0; r < pivot_row; ++r)
        coeffs[pivot_col[r]] = m[r][cols].coeffs()[0];
    return source_.element(coeffs);
}

Field quadratic_extension(const Field& f)
{
    const std::uint64_t p = f.characteristic();
    const unsigned k = 2 * f.degree();
    // Same order as Field::extension, but with every lower coefficient
    // below kDigitBound. For p <= kDigitBound the two agree.
    constexpr std::uint64_t kDigitBound = 16;
    const std::uint64_t base = std::min(p, kDigitBound);
    std::vector<std::uint64_t> digits(k, 0);
    for (;;)
    {
        std::vector<std::uint64_t> cand(digits);
        cand.push_back(1);
        if (cand[0] != 0 && detail::is_irreducible_mod_p(cand, p))
            return Field::extension(p, k, std::move(cand));
        std::size_t i = 0;
        while (i < k && ++digits[i] == base)
            digits[i++] = 0;
        if (i == k)
            return Field::extension(p, k);
    }
}

}  // namespace pairlab
