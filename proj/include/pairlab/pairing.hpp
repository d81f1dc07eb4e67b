// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pairlab/chain.hpp"
#include "pairlab/field.hpp"
#include "pairlab/op_counter.hpp"

#include <vector>

namespace pairlab
{
/// Cost of one chain step of a pairing loop.
struct StepRecord
{
    StepKind kind = StepKind::double_;
    /// No degenerate geometry: distinct x (EC) or gcd 1 with one reduction
    /// and two full-degree operands (genus 2), and not the closing step.
    bool generic = false;
    OpCounter ops;
};

struct PairingResult
{
    explicit PairingResult(FieldElement v) : value(std::move(v)) {}

    FieldElement value;
    /// A line factor vanished; see the engine for how value is then set.
    bool degenerate = false;
    /// Miller loop, including any setup for auxiliary points.
    OpCounter ops;
    /// Final division and exponentiation.
    OpCounter final_ops;
    std::vector<StepRecord> steps;
    /// Number of auxiliary-point draws (baselines only).
    unsigned attempts = 1;
    /// Genus 2 only: steps that needed a reduction and steps that did not.
    std::size_t case_i = 0;
    std::size_t case_ii = 0;
    /// Genus 2 only: evaluations of the composed a(x).
    std::size_t comp_a_evals = 0;

    std::size_t count(StepKind k) const noexcept
    {
        std::size_t n = 0;
        for (const auto& s : steps)
            n += s.kind == k;
        return n;
    }
};

}  // namespace pairlab
