// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace pairlab
{
struct CheckResult
{
    std::string name;
    bool pass = false;
    std::string expected;
    std::string actual;
};

/// The worked F_31 genus-2 example: group order, printed multiples, the
/// four pairing values, their bilinear relations and the closed-form h_{5,D}.
std::vector<CheckResult> run_genus2_example();

bool all_passed(const std::vector<CheckResult>& checks);
nlohmann::json checks_json(const std::vector<CheckResult>& checks);
/// One PASS/FAIL line per check, with expected/actual on failures.
std::string checks_text(const std::vector<CheckResult>& checks);

}  // namespace pairlab
