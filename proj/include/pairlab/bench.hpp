// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pairlab/pairing.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace pairlab
{
using Rational = boost::multiprecision::cpp_rational;

enum class BenchFamily
{
    ec_weil,   ///< "ec-weil": miller_weil vs squared_weil
    ec_tate,   ///< "ec-tate": miller_tate vs squared_tate
    hec_tate,  ///< "hec": standard_tate_hec vs squared_tate_hec
};

const char* to_string(BenchFamily f) noexcept;
BenchFamily parse_bench_family(std::string_view name);

/// Division weight the family is usually quoted at: 5 for EC, 4 for genus 2.
Rational default_div_weight(BenchFamily f);

struct StepTally
{
    std::uint64_t steps = 0;
    OpCounter ops;

    void add(const OpCounter& c)
    {
        ++steps;
        ops += c;
    }
    Rational mean_mul() const;
    Rational mean_div() const;
    /// Mean of mul + w * div per step.
    Rational weighted_mean(const Rational& w) const;
};

struct BenchSide
{
    std::string alg;
    StepTally doubling;  ///< generic doublings
    StepTally addition;  ///< generic additions
    StepTally special;   ///< everything else, reported but not in the savings
};

struct BenchReport
{
    BenchFamily family = BenchFamily::ec_weil;
    std::uint64_t p = 0;  ///< curve over F_{p^2}
    std::uint64_t m = 0;
    std::size_t trials = 0;
    Rational div_weight;
    BenchSide baseline;
    BenchSide squared;
    /// Every trial satisfied the squared/baseline identity.
    bool values_agree = true;

    Rational savings_doubling() const;
    Rational savings_addition() const;
    /// Over all generic steps together.
    Rational savings_overall() const;
};

struct BenchOptions
{
    std::size_t trials = 5;
    std::optional<Rational> div_weight;
    std::uint64_t seed = 1;
};

/// Runs paired pairings on random inputs over the supersingular bench
/// curves (p = 46137211 for EC, p = 83885839 for genus 2, m = 1048573) with
/// a shared binary chain.
BenchReport run_bench(BenchFamily family, const BenchOptions& opt = {});

double to_double(const Rational& r);
nlohmann::json bench_json(const BenchReport& r);
std::string bench_text(const BenchReport& r);

}  // namespace pairlab
