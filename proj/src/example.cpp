// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/example.hpp"

#include "pairlab/golden.hpp"
#include "pairlab/hec_pairing.hpp"
#include "pairlab/report.hpp"

#include <optional>
#include <sstream>

namespace pairlab
{
namespace
{
constexpr int kRandomMultiples = 20;
constexpr std::uint64_t kExampleSeed = 2026;

template <class T>
std::string str(const T& v)
{
    std::ostringstream os;
    os << v;
    return os.str();
}

void expect_equal(std::vector<CheckResult>& out, std::string name, const std::string& want, const std::string& got)
{
    out.push_back({std::move(name), want == got, want, got});
}

/// h_{5,D}(P) from the printed closed form, or nullopt at a pole.
std::optional<FieldElement> h5d(const Field& F, const HecPoint& P)
{
    FieldElement num = F.one();
    for (const auto& factor : golden::kH5DNumerator)
        num *= poly_eval(Poly::from_ints(F, factor), P.x);
    const auto den_at = poly_eval(Poly::from_ints(F, golden::kH5DDenominator), P.x) + P.y;
    if (den_at.is_zero())
        return std::nullopt;
    return num / den_at;
}

}  // namespace

std::vector<CheckResult> run_genus2_example()
{
    std::vector<CheckResult> out;
    const Field F = Field::prime(golden::kP);
    const HyperCurve C = HyperCurve::from_ints(F, golden::kF);
    const auto D = make_divisor(C, golden::kD.a, golden::kD.b);
    const auto E = make_divisor(C, golden::kE.a, golden::kE.b);
    auto printed = [&C](const golden::DivisorInts& X) { return make_divisor(C, X.a, X.b).to_string(); };

    expect_equal(out, "#J(F_31) = 1040", std::to_string(golden::kOrder), str(jacobian_order(C)));

    const auto D2 = jac_double(C, D);
    const auto D3 = jac_add(C, D2, D);
    const auto E2 = jac_double(C, E);
    expect_equal(out, "2D", printed(golden::k2D), D2.to_string());
    expect_equal(out, "3D", printed(golden::k3D), D3.to_string());
    expect_equal(out, "2E", printed(golden::k2E), E2.to_string());
    expect_equal(out, "3D = -2D", jac_neg(C, D2).to_string(), D3.to_string());
    expect_equal(out, "5D = 0", MumfordDivisor::identity(F).to_string(),
        jac_scalar_mul(C, static_cast<std::int64_t>(golden::kM), D).to_string());

    {
        Rng rng(kExampleSeed);
        int bad = 0;
        std::string first;
        for (int i = 0; i < kRandomMultiples; ++i)
        {
            const auto X = random_divisor(C, rng);
            const auto NX = jac_scalar_mul(C, static_cast<std::int64_t>(golden::kOrder), X);
            if (!NX.is_identity() && bad++ == 0)
                first = "1040*(" + X.to_string() + ") = " + NX.to_string();
        }
        out.push_back({"1040 X = 0 for " + std::to_string(kRandomMultiples) + " random X", bad == 0,
            "identity every time", bad == 0 ? "identity every time" : first});
    }

    auto v = [&](const MumfordDivisor& X, const MumfordDivisor& Y) {
        return squared_tate_hec(C, X, Y, golden::kM).value;
    };
    const auto vDE = v(D, E);
    const auto v2DE = v(D2, E);
    const auto vD2E = v(D, E2);
    const auto v3DE = v(D3, E);
    expect_equal(out, "v5(D,E)", std::to_string(golden::kV_D_E), vDE.to_string());
    expect_equal(out, "v5(2D,E)", std::to_string(golden::kV_2D_E), v2DE.to_string());
    expect_equal(out, "v5(D,2E)", std::to_string(golden::kV_D_2E), vD2E.to_string());
    expect_equal(out, "v5(3D,E)", std::to_string(golden::kV_3D_E), v3DE.to_string());
    expect_equal(out, "v5(2D,E) = v5(D,E)^2", (vDE * vDE).to_string(), v2DE.to_string());
    expect_equal(out, "v5(D,2E) = v5(D,E)^2", (vDE * vDE).to_string(), vD2E.to_string());
    expect_equal(out, "v5(3D,E) = v5(D,E)^3", (vDE * vDE * vDE).to_string(), v3DE.to_string());

    {
        // h at Q1 - Q1' + Q2 - Q2' for the two points of E.
        FieldElement acc = F.one();
        bool defined = true;
        for (const auto& Q : divisor_points(C, E))
        {
            const auto at = h5d(F, Q);
            const auto at_conj = h5d(F, Q.conjugate());
            if (!at || !at_conj || at_conj->is_zero())
            {
                defined = false;
                break;
            }
            acc *= *at / *at_conj;
        }
        const std::string got = defined ? pow(acc, BigInt(golden::kFinalPower)).to_string() : "pole";
        expect_equal(out, "h5D(Q1 - Q1' + Q2 - Q2')^6", std::to_string(golden::kV_D_E), got);
    }
    return out;
}

bool all_passed(const std::vector<CheckResult>& checks)
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return !checks.empty();
}

nlohmann::json checks_json(const std::vector<CheckResult>& checks)
{
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks)
        arr.push_back({{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
    return {{"schema", kJsonSchema}, {"checks", arr}, {"passed", all_passed(checks)}};
}

std::string checks_text(const std::vector<CheckResult>& checks)
{
    std::ostringstream os;
    for (const auto& c : checks)
    {
        os << (c.pass ? "PASS  " : "FAIL  ") << c.name << '\n';
        if (!c.pass)
            os << "      expected " << c.expected << "\n      actual   " << c.actual << '\n';
    }
    return os.str();
}

}  // namespace pairlab
