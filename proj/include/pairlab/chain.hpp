// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pairlab
{
enum class StepKind
{
    double_,
    add,
    subtract,
};

/// One chain step. Entry 0 of every chain is the value 1 and step i produces
/// entry i + 1, so `left` and `right` index entries, not steps.
struct ChainStep
{
    StepKind kind = StepKind::double_;
    std::size_t left = 0;
    std::size_t right = 0;
    std::uint64_t value = 0;

    friend bool operator==(const ChainStep&, const ChainStep&) = default;
};

using Chain = std::vector<ChainStep>;

enum class ChainPolicy
{
    binary,  ///< left-to-right double-and-add
    naf,     ///< non-adjacent form; may subtract
    ladder,  ///< Montgomery ladder over consecutive pairs (k, k+1)
};

/// Throws InvalidOrder when m == 0.
Chain build_chain(std::uint64_t m, ChainPolicy policy);

/// Replays the chain; true iff every operand index is strictly earlier, every
/// value matches its operands and the last entry equals m.
bool verify_chain(const Chain& chain, std::uint64_t m);

/// Values of all entries, starting with the implicit 1.
std::vector<std::uint64_t> chain_values(const Chain& chain);

const char* to_string(StepKind kind) noexcept;
const char* to_string(ChainPolicy policy) noexcept;
ChainPolicy parse_policy(std::string_view name);

/// `idx: value = left op right`, one step per line.
std::string format_chain(const Chain& chain);

}  // namespace pairlab
