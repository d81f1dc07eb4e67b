// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failing criteria.

#include "pairlab/bench.hpp"
#include "pairlab/ec_pairing.hpp"
#include "pairlab/golden.hpp"
#include "pairlab/hec_pairing.hpp"
#include "pairlab/testbed.hpp"
#include "pairlab/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pairlab;

namespace
{
// Pinned limits.
constexpr double kGoldenSeconds = 1.0;
constexpr double kIdentitySeconds = 10.0;
constexpr double kPropertySeconds = 60.0;
constexpr std::size_t kPairsPerCurve = 100;
constexpr std::size_t kMinWeilCurves = 3;
constexpr std::size_t kHecPairsPerCurve = 20;
constexpr std::size_t kMinHecPairs = 50;
constexpr std::size_t kMinGenericSteps = 20;
constexpr std::size_t kMinPropertySamples = 1000;
constexpr std::size_t kRandomMultiples = 20;
const Rational kEcSavingsLo(18, 100);
const Rational kEcSavingsHi(22, 100);
const Rational kHecDoublingMin(25, 100);
const Rational kHecAdditionMin(33, 100);

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Verdict
{
    bool pass = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok)
        {
            pass = false;
            detail << " [" << what << "]";
        }
    }
};

std::string pct(const Rational& r)
{
    std::ostringstream os;
    os.precision(4);
    os << 100 * to_double(r) << "%";
    return os.str();
}

Verdict golden_example()
{
    Verdict v;
    const auto t0 = Clock::now();
    const Field F = Field::prime(golden::kP);
    const HyperCurve C = HyperCurve::from_ints(F, golden::kF);
    const auto D = make_divisor(C, golden::kD.a, golden::kD.b);
    const auto E = make_divisor(C, golden::kE.a, golden::kE.b);
    const auto D2 = jac_double(C, D);
    const auto D3 = jac_add(C, D2, D);
    const auto E2 = jac_double(C, E);
    v.require(D2 == make_divisor(C, golden::k2D.a, golden::k2D.b), "2D " + D2.to_string());
    v.require(D3 == make_divisor(C, golden::k3D.a, golden::k3D.b), "3D " + D3.to_string());
    v.require(E2 == make_divisor(C, golden::k2E.a, golden::k2E.b), "2E " + E2.to_string());
    auto check = [&](const MumfordDivisor& X, const MumfordDivisor& Y, std::int64_t want, const char* name) {
        const auto got = squared_tate_hec(C, X, Y, golden::kM).value;
        v.require(got == F.element(want), std::string(name) + " = " + got.to_string());
    };
    check(D, E, golden::kV_D_E, "v5(D,E)");
    check(D2, E, golden::kV_2D_E, "v5(2D,E)");
    check(D, E2, golden::kV_D_2E, "v5(D,2E)");
    check(D3, E, golden::kV_3D_E, "v5(3D,E)");
    Rng rng(5);
    for (std::size_t i = 0; i < kRandomMultiples; ++i)
    {
        const auto X = random_divisor(C, rng);
        v.require(jac_scalar_mul(C, static_cast<std::int64_t>(golden::kOrder), X).is_identity(),
            "1040 X != 0 for X = " + X.to_string());
    }
    const double s = seconds_since(t0);
    v.require(s < kGoldenSeconds, "took " + std::to_string(s) + " s");
    v.detail << " 4 values, 3 multiples, " << kRandomMultiples << " random X in " << s << " s";
    return v;
}

Verdict closed_form()
{
    Verdict v;
    const Field F = Field::prime(golden::kP);
    const HyperCurve C = HyperCurve::from_ints(F, golden::kF);
    const auto E = make_divisor(C, golden::kE.a, golden::kE.b);
    auto h = [&F](const FieldElement& x, const FieldElement& y) {
        FieldElement num = F.one();
        for (const auto& factor : golden::kH5DNumerator)
            num *= poly_eval(Poly::from_ints(F, factor), x);
        return num / (poly_eval(Poly::from_ints(F, golden::kH5DDenominator), x) + y);
    };
    FieldElement acc = F.one();
    for (const auto& Q : divisor_points(C, E))
        acc *= h(Q.x, Q.y) / h(Q.x, -Q.y);
    const auto got = pow(acc, BigInt(golden::kFinalPower));
    v.require(got == F.element(golden::kV_D_E), "got " + got.to_string());
    v.detail << " h5D(Q1 - Q1' + Q2 - Q2')^6 = " << got.to_string();
    return v;
}

std::pair<CurvePoint, CurvePoint> torsion_pair(const EcTestCurve& c, Rng& rng)
{
    std::uniform_int_distribution<std::size_t> pick(0, c.torsion.size() - 1);
    for (;;)
    {
        const auto& P = c.torsion[pick(rng)];
        const auto& Q = c.torsion[pick(rng)];
        if (P != Q && P != ec_neg(Q))
            return {P, Q};
    }
}

Verdict weil_identity()
{
    Verdict v;
    const auto t0 = Clock::now();
    const auto curves = weil_test_curves();
    v.require(curves.size() >= kMinWeilCurves, "too few curves");
    std::size_t pairs = 0;
    for (const auto& c : curves)
    {
        Rng rng(c.m * 101);
        const auto sign = c.m % 2 ? -c.curve.field().one() : c.curve.field().one();
        for (std::size_t i = 0; i < kPairsPerCurve; ++i)
        {
            const auto [P, Q] = torsion_pair(c, rng);
            EcPairingOptions o;
            o.seed = i + 1;
            const auto e = miller_weil(c.curve, P, Q, c.m, o).value;
            const auto sq = squared_weil(c.curve, P, Q, c.m).value;
            if (sq != sign * e * e)
                v.require(false, c.name + " mismatch");
            ++pairs;
        }
    }
    const double s = seconds_since(t0);
    v.require(s < kIdentitySeconds, "took " + std::to_string(s) + " s");
    v.detail << " " << curves.size() << " curves, " << pairs << " pairs in " << s << " s";
    return v;
}

Verdict tate_identity()
{
    Verdict v;
    const auto t0 = Clock::now();
    const auto curves = tate_test_curves();
    std::size_t pairs = 0;
    for (const auto& c : curves)
    {
        Rng rng(c.m * 103);
        std::uniform_int_distribution<std::size_t> tp(0, c.torsion.size() - 1), pt(0, c.points.size() - 1);
        std::size_t done = 0;
        while (done < kPairsPerCurve)
        {
            const auto& P = c.torsion[tp(rng)];
            const auto& Q = c.points[pt(rng)];
            if (Q.is_infinity() || Q == P || Q == ec_neg(P))
                continue;
            try
            {
                EcPairingOptions o;
                o.seed = done + 1;
                const auto phi = miller_tate(c.curve, P, Q, c.m, o).value;
                const auto sq = squared_tate(c.curve, P, Q, c.m).value;
                if (sq != phi * phi)
                    v.require(false, c.name + " mismatch");
                ++done;
            }
            catch (const Error& e)
            {
                if (e.code() != Errc::multiple_of_base_point)
                    throw;
            }
        }
        pairs += done;
    }
    const double s = seconds_since(t0);
    v.require(s < kIdentitySeconds, "took " + std::to_string(s) + " s");
    v.detail << " " << curves.size() << " curves, " << pairs << " pairs in " << s << " s";
    return v;
}

Verdict hec_identity()
{
    Verdict v;
    const auto curves = hec_test_curves();
    v.require(curves.size() >= 3 && curves.front().curve.f() == Poly::from_ints(Field::prime(golden::kP), golden::kF),
        "golden curve plus two derived curves expected");
    std::size_t pairs = 0;
    for (const auto& c : curves)
    {
        Rng rng(c.m * 107);
        std::size_t done = 0;
        while (done < kHecPairsPerCurve)
        {
            const auto D = c.torsion(rng);
            const auto E = random_divisor(c.curve, rng);
            try
            {
                HecPairingOptions o;
                o.seed = rng();
                const auto st = standard_tate_hec(c.curve, D, E, c.m, o).value;
                const auto sq = squared_tate_hec(c.curve, D, E, c.m).value;
                if (pow(st, BigInt(4)) != sq * sq)
                    v.require(false, c.name + " mismatch at D=" + D.to_string() + " E=" + E.to_string());
                ++done;
            }
            catch (const DivisorCollision&)
            {
            }
        }
        pairs += done;
    }
    v.require(pairs >= kMinHecPairs, "only " + std::to_string(pairs) + " pairs");
    v.detail << " " << curves.size() << " curves, " << pairs << " pairs";
    return v;
}

struct StepCost
{
    const StepTally& tally;
    std::uint64_t mul;
    std::uint64_t div;
    const char* name;
};

Verdict op_counts(const BenchReport& weil, const BenchReport& tate, const BenchReport& hec)
{
    Verdict v;
    const StepCost expected[] = {
        {weil.baseline.addition, 18, 2, "weil add"},
        {weil.squared.addition, 12, 2, "weil2 add"},
        {weil.baseline.doubling, 20, 2, "weil double"},
        {weil.squared.doubling, 14, 2, "weil2 double"},
        {tate.baseline.addition, 10, 1, "tate add"},
        {tate.squared.addition, 7, 1, "tate2 add"},
        {tate.baseline.doubling, 11, 1, "tate double"},
        {tate.squared.doubling, 8, 1, "tate2 double"},
        {hec.baseline.doubling, 64, 2, "hec double"},
        {hec.squared.doubling, 46, 2, "hec2 double"},
        {hec.baseline.addition, 60, 2, "hec add"},
        {hec.squared.addition, 38, 2, "hec2 add"},
    };
    for (const auto& e : expected)
    {
        // Every generic step must cost exactly this, so the totals are exact multiples.
        const bool exact = e.tally.ops.mul == e.mul * e.tally.steps && e.tally.ops.div == e.div * e.tally.steps;
        std::ostringstream got;
        got << e.name << " " << to_double(e.tally.mean_mul()) << "/" << to_double(e.tally.mean_div());
        v.require(exact && e.tally.steps > 0, got.str());
    }
    for (const auto* r : {&weil, &tate, &hec})
    {
        const auto generic = r->squared.doubling.steps + r->squared.addition.steps;
        v.require(generic >= kMinGenericSteps, std::string(to_string(r->family)) + " has few generic steps");
    }
    v.detail << " weil 18/2 12/2 20/2 14/2, tate 10/1 7/1 11/1 8/1, hec 64/2 46/2 60/2 38/2 on "
             << weil.squared.doubling.steps + weil.squared.addition.steps << "+"
             << tate.squared.doubling.steps + tate.squared.addition.steps << "+"
             << hec.squared.doubling.steps + hec.squared.addition.steps << " generic steps";
    return v;
}

Verdict savings(const BenchReport& weil, const BenchReport& tate, const BenchReport& hec)
{
    Verdict v;
    auto in_band = [&](const Rational& s, const std::string& name) {
        v.require(s >= kEcSavingsLo && s <= kEcSavingsHi, name + " " + pct(s) + " outside [18%, 22%]");
    };
    for (const auto* r : {&weil, &tate})
    {
        in_band(r->savings_addition(), std::string(to_string(r->family)) + " add");
        in_band(r->savings_doubling(), std::string(to_string(r->family)) + " double");
        in_band(r->savings_overall(), std::string(to_string(r->family)) + " overall");
    }
    v.require(hec.savings_doubling() >= kHecDoublingMin, "hec double " + pct(hec.savings_doubling()) + " < 25%");
    v.require(hec.savings_addition() >= kHecAdditionMin, "hec add " + pct(hec.savings_addition()) + " < 33%");
    v.detail << " weil " << pct(weil.savings_addition()) << "/" << pct(weil.savings_doubling()) << ", tate "
             << pct(tate.savings_addition()) << "/" << pct(tate.savings_doubling()) << ", hec double "
             << pct(hec.savings_doubling()) << ", hec add " << pct(hec.savings_addition());
    return v;
}

Verdict property_suites()
{
    Verdict v;
    const auto t0 = Clock::now();
    std::size_t total = 0;
    for (auto p : {Property::chain_independence, Property::bilinearity, Property::roots_of_unity,
             Property::nondegeneracy, Property::cantor})
    {
        const auto r = run_property(p);
        v.require(r.passed(), std::string(to_string(p)) + ": " + r.first_failure);
        total += r.samples;
        v.detail << " " << to_string(p) << "=" << r.samples;
    }
    const double s = seconds_since(t0);
    v.require(total >= kMinPropertySamples, "only " + std::to_string(total) + " samples");
    v.require(s < kPropertySeconds, "took " + std::to_string(s) + " s");
    v.detail << " total " << total << " in " << s << " s";
    return v;
}

}  // namespace

int main()
{
    const auto weil = run_bench(BenchFamily::ec_weil, {.trials = 2});
    const auto tate = run_bench(BenchFamily::ec_tate, {.trials = 2});
    const auto hec = run_bench(BenchFamily::hec_tate, {.trials = 2});

    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"golden genus-2 example", golden_example},
        {"closed-form h5D", closed_form},
        {"squared Weil = (-1)^m Weil^2", weil_identity},
        {"squared Tate = Tate^2", tate_identity},
        {"genus-2 Tate^4 = squared^2", hec_identity},
        {"exact generic step costs", [&] { return op_counts(weil, tate, hec); }},
        {"savings at div = 5 mul (EC), inv = 4 mul (genus 2)", [&] { return savings(weil, tate, hec); }},
        {"property suites", property_suites},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i)
    {
        Verdict v;
        try
        {
            v = criteria[i].second();
        }
        catch (const std::exception& e)
        {
            v.pass = false;
            v.detail << " [threw: " << e.what() << "]";
        }
        failed += !v.pass;
        std::cout << (v.pass ? "PASS " : "FAIL ") << i + 1 << " " << criteria[i].first << ":" << v.detail.str()
                  << std::endl;
    }
    return failed;
}
