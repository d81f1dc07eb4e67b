// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/report.hpp"

#include <iomanip>
#include <sstream>

namespace pairlab
{
int exit_code_for(Errc code) noexcept
{
    switch (code)
    {
    case Errc::parse_error: return kExitUsage;
    case Errc::divisor_collision: return kExitDivisorCollision;
    case Errc::multiple_of_base_point: return kExitMultipleOfBasePoint;
    case Errc::not_torsion: return kExitNotTorsion;
    case Errc::randomness_exhausted: return kExitRandomnessExhausted;
    default: return kExitOtherError;
    }
}

nlohmann::json to_json(const OpCounter& c) { return {{"mul", c.mul}, {"div", c.div}, {"add", c.add}}; }

nlohmann::json pairing_json(const std::string& alg, const PairingResult& r, std::uint64_t m, bool genus2)
{
    nlohmann::json j;
    j["schema"] = kJsonSchema;
    j["alg"] = alg;
    j["value"] = r.value.coeffs();
    j["m"] = m;
    j["degenerate"] = r.degenerate;
    j["ops"] = to_json(r.ops);
    j["final_ops"] = to_json(r.final_ops);
    j["steps"] = {{"double", r.count(StepKind::double_)}, {"add", r.count(StepKind::add)},
        {"subtract", r.count(StepKind::subtract)}};
    j["attempts"] = r.attempts;
    if (genus2)
    {
        j["case_counts"] = {{"case_i", r.case_i}, {"case_ii", r.case_ii}};
        j["comp_a_evals"] = r.comp_a_evals;
    }
    return j;
}

std::string pairing_text(const std::string& alg, const PairingResult& r, std::uint64_t m, bool genus2)
{
    std::ostringstream os;
    auto row = [&os](const std::string& k, const auto& v) { os << std::left << std::setw(12) << k << v << '\n'; };
    row("alg", alg);
    row("m", m);
    row("value", r.value.to_string());
    if (r.degenerate)
        row("degenerate", "yes");
    std::ostringstream steps;
    steps << r.count(StepKind::double_) << " double, " << r.count(StepKind::add) << " add, "
          << r.count(StepKind::subtract) << " subtract";
    row("steps", steps.str());
    row("loop ops", r.ops);
    row("final ops", r.final_ops);
    if (r.attempts != 1)
        row("attempts", r.attempts);
    if (genus2)
    {
        std::ostringstream cases;
        cases << r.case_i << " reduced, " << r.case_ii << " unreduced";
        row("cases", cases.str());
    }
    return os.str();
}

}  // namespace pairlab
