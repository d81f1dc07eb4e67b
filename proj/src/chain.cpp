// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/chain.hpp"
#include "pairlab/error.hpp"

#include <bit>
#include <sstream>

namespace pairlab
{
namespace
{
class Builder
{
public:
    std::size_t push(StepKind kind, std::size_t l, std::size_t r)
    {
        const std::uint64_t a = values_[l], b = values_[r];
        const std::uint64_t v = kind == StepKind::double_ ? 2 * a : kind == StepKind::add ? a + b : a - b;
        chain_.push_back({kind, l, r, v});
        values_.push_back(v);
        return values_.size() - 1;
    }

    Chain take() { return std::move(chain_); }

private:
    Chain chain_;
    std::vector<std::uint64_t> values_{1};
};

Chain binary_chain(std::uint64_t m)
{
    Builder b;
    std::size_t cur = 0;
    for (int bit = std::bit_width(m) - 2; bit >= 0; --bit)
    {
        cur = b.push(StepKind::double_, cur, cur);
        if ((m >> bit) & 1)
            cur = b.push(StepKind::add, cur, 0);
    }
    return b.take();
}

Chain naf_chain(std::uint64_t m)
{
    // Width-2 NAF digits, least significant first.
    std::vector<int> digits;
    for (std::uint64_t n = m; n != 0; n >>= 1)
    {
        int d = 0;
        if (n & 1)
        {
            d = (n & 3) == 3 ? -1 : 1;
            n = d == 1 ? n - 1 : n + 1;
        }
        digits.push_back(d);
    }
    Builder b;
    std::size_t cur = 0;
    for (std::size_t i = digits.size() - 1; i-- > 0;)
    {
        cur = b.push(StepKind::double_, cur, cur);
        if (digits[i] == 1)
            cur = b.push(StepKind::add, cur, 0);
        else if (digits[i] == -1)
            cur = b.push(StepKind::subtract, cur, 0);
    }
    return b.take();
}

Chain ladder_chain(std::uint64_t m)
{
    Builder b;
    if (m == 1)
        return b.take();
    std::size_t r0 = 0;                                  // k
    std::size_t r1 = b.push(StepKind::double_, 0, 0);    // k + 1
    std::uint64_t k = 1;
    for (int bit = std::bit_width(m) - 2; bit >= 0; --bit)
    {
        const bool set = (m >> bit) & 1;
        const bool last = bit == 0;
        if (set)
        {
            r0 = b.push(StepKind::add, r0, r1);
            k = 2 * k + 1;
            if (!last)
                r1 = b.push(StepKind::double_, r1, r1);
        }
        else
        {
            const std::size_t old0 = r0, old1 = r1;
            if (!last)
                r1 = b.push(StepKind::add, old0, old1);
            // 2k is already present as the old r1 when k == 1.
            r0 = k == 1 ? old1 : b.push(StepKind::double_, old0, old0);
            k = 2 * k;
        }
    }
    Chain c = b.take();
    // The final step must produce m; the k == 1 shortcut can leave r1 last.
    if (!c.empty() && c.back().value != m)
        throw Error(Errc::invalid_order, "ladder construction failed");
    return c;
}
}  // namespace

Chain build_chain(std::uint64_t m, ChainPolicy policy)
{
    if (m == 0)
        throw Error(Errc::invalid_order, "chain order must be positive");
    if (m >= (std::uint64_t{1} << 62))
        throw Error(Errc::invalid_order, "chain order too large");
    switch (policy)
    {
    case ChainPolicy::binary: return binary_chain(m);
    case ChainPolicy::naf: return naf_chain(m);
    case ChainPolicy::ladder: return ladder_chain(m);
    }
    return {};
}

std::vector<std::uint64_t> chain_values(const Chain& chain)
{
    std::vector<std::uint64_t> v{1};
    for (const auto& s : chain)
        v.push_back(s.value);
    return v;
}

bool verify_chain(const Chain& chain, std::uint64_t m)
{
    std::vector<std::uint64_t> v{1};
    for (const auto& s : chain)
    {
        if (s.left >= v.size() || s.right >= v.size())
            return false;
        const std::uint64_t a = v[s.left], b = v[s.right];
        std::uint64_t expect = 0;
        switch (s.kind)
        {
        case StepKind::double_:
            if (s.left != s.right)
                return false;
            expect = 2 * a;
            break;
        case StepKind::add: expect = a + b; break;
        case StepKind::subtract:
            if (a <= b)
                return false;
            expect = a - b;
            break;
        }
        if (s.value != expect)
            return false;
        v.push_back(expect);
    }
    return v.back() == m;
}

const char* to_string(StepKind kind) noexcept
{
    switch (kind)
    {
    case StepKind::double_: return "double";
    case StepKind::add: return "add";
    case StepKind::subtract: return "subtract";
    }
    return "?";
}

const char* to_string(ChainPolicy policy) noexcept
{
    switch (policy)
    {
    case ChainPolicy::binary: return "binary";
    case ChainPolicy::naf: return "naf";
    case ChainPolicy::ladder: return "ladder";
    }
    return "?";
}

ChainPolicy parse_policy(std::string_view name)
{
    if (name == "binary")
        return ChainPolicy::binary;
    if (name == "naf")
        return ChainPolicy::naf;
    if (name == "ladder")
        return ChainPolicy::ladder;
    throw Error(Errc::parse_error, "unknown chain policy: " + std::string(name));
}

std::string format_chain(const Chain& chain)
{
    const auto v = chain_values(chain);
    std::ostringstream os;
    for (std::size_t i = 0; i < chain.size(); ++i)
    {
        const auto& s = chain[i];
        os << i + 1 << ": " << s.value << " = " << v[s.left] << (s.kind == StepKind::subtract ? " - " : " + ")
           << v[s.right] << "\n";
    }
    return os.str();
}

}  // namespace pairlab
