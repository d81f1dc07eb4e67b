// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/bench.hpp"

#include "pairlab/ec_pairing.hpp"
#include "pairlab/hec_pairing.hpp"
#include "pairlab/report.hpp"
#include "pairlab/testbed.hpp"

#include <iomanip>
#include <sstream>

namespace pairlab
{
namespace
{
constexpr std::uint64_t kBenchOrder = 1048573;
constexpr std::uint64_t kBenchEcPrime = 46137211;
constexpr std::uint64_t kBenchHecPrime = 83885839;

void tally(BenchSide& side, const PairingResult& r)
{
    for (const auto& s : r.steps)
    {
        if (!s.generic)
            side.special.add(s.ops);
        else if (s.kind == StepKind::double_)
            side.doubling.add(s.ops);
        else
            side.addition.add(s.ops);
    }
}

Rational savings(const Rational& squared, const Rational& baseline)
{
    if (baseline == 0)
        return 0;
    return 1 - squared / baseline;
}

Rational weighted_total(const StepTally& t, const Rational& w)
{
    return Rational(t.ops.mul) + w * Rational(t.ops.div);
}

nlohmann::json tally_json(const StepTally& t, const Rational& w)
{
    return {{"steps", t.steps}, {"mul", t.ops.mul}, {"div", t.ops.div}, {"mean_mul", to_double(t.mean_mul())},
        {"mean_div", to_double(t.mean_div())}, {"weighted_mean", to_double(t.weighted_mean(w))}};
}

}  // namespace

const char* to_string(BenchFamily f) noexcept
{
    switch (f)
    {
    case BenchFamily::ec_weil: return "ec-weil";
    case BenchFamily::ec_tate: return "ec-tate";
    case BenchFamily::hec_tate: return "hec";
    }
    return "?";
}

BenchFamily parse_bench_family(std::string_view name)
{
    if (name == "ec-weil")
        return BenchFamily::ec_weil;
    if (name == "ec-tate")
        return BenchFamily::ec_tate;
    if (name == "hec")
        return BenchFamily::hec_tate;
    throw Error(Errc::parse_error, "unknown bench family: " + std::string(name));
}

Rational default_div_weight(BenchFamily f) { return f == BenchFamily::hec_tate ? 4 : 5; }

Rational StepTally::mean_mul() const { return steps ? Rational(ops.mul) / steps : Rational(0); }
Rational StepTally::mean_div() const { return steps ? Rational(ops.div) / steps : Rational(0); }
Rational StepTally::weighted_mean(const Rational& w) const { return mean_mul() + w * mean_div(); }

Rational BenchReport::savings_doubling() const
{
    return savings(squared.doubling.weighted_mean(div_weight), baseline.doubling.weighted_mean(div_weight));
}

Rational BenchReport::savings_addition() const
{
    return savings(squared.addition.weighted_mean(div_weight), baseline.addition.weighted_mean(div_weight));
}

Rational BenchReport::savings_overall() const
{
    return savings(weighted_total(squared.doubling, div_weight) + weighted_total(squared.addition, div_weight),
        weighted_total(baseline.doubling, div_weight) + weighted_total(baseline.addition, div_weight));
}

BenchReport run_bench(BenchFamily family, const BenchOptions& opt)
{
    if (opt.trials == 0)
        throw Error(Errc::precondition, "bench needs at least one trial");
    BenchReport rep;
    rep.family = family;
    rep.m = kBenchOrder;
    rep.trials = opt.trials;
    rep.div_weight = opt.div_weight.value_or(default_div_weight(family));
    Rng rng(opt.seed);
    const Chain chain = build_chain(rep.m, ChainPolicy::binary);

    if (family == BenchFamily::hec_tate)
    {
        rep.p = kBenchHecPrime;
        rep.baseline.alg = to_string(HecAlgorithm::standard_tate);
        rep.squared.alg = to_string(HecAlgorithm::squared_tate);
        const auto S = SupersingularHec::create(rep.p, rep.m);
        for (std::size_t t = 0; t < opt.trials; ++t)
        {
            const auto D = S.torsion_divisor(rng);
            const auto E = random_divisor(S.curve, rng);
            HecPairingOptions o;
            o.chain = chain;
            o.seed = rng();
            const auto base = standard_tate_hec(S.curve, D, E, rep.m, o);
            const auto sq = squared_tate_hec(S.curve, D, E, rep.m, o);
            const BigInt two(2), four(4);
            rep.values_agree &= pow(base.value, four) == pow(sq.value, two);
            tally(rep.baseline, base);
            tally(rep.squared, sq);
        }
        return rep;
    }

    rep.p = kBenchEcPrime;
    const bool weil = family == BenchFamily::ec_weil;
    rep.baseline.alg = to_string(weil ? EcAlgorithm::miller_weil : EcAlgorithm::miller_tate);
    rep.squared.alg = to_string(weil ? EcAlgorithm::squared_weil : EcAlgorithm::squared_tate);
    const auto S = SupersingularEc::create(rep.p, rep.m);
    for (std::size_t t = 0; t < opt.trials; ++t)
    {
        const auto P = S.torsion_point(rng);
        const auto Q = S.torsion_point(rng);
        EcPairingOptions o;
        o.chain = chain;
        o.seed = rng();
        const auto base = weil ? miller_weil(S.curve, P, Q, rep.m, o) : miller_tate(S.curve, P, Q, rep.m, o);
        const auto sq = weil ? squared_weil(S.curve, P, Q, rep.m, o) : squared_tate(S.curve, P, Q, rep.m, o);
        FieldElement expect = base.value * base.value;
        if (weil && rep.m % 2 == 1)
            expect = -expect;
        rep.values_agree &= sq.value == expect;
        tally(rep.baseline, base);
        tally(rep.squared, sq);
    }
    return rep;
}

double to_double(const Rational& r) { return static_cast<double>(r); }

nlohmann::json bench_json(const BenchReport& r)
{
    const auto& w = r.div_weight;
    auto side = [&w](const BenchSide& s) {
        return nlohmann::json{{"alg", s.alg}, {"double", tally_json(s.doubling, w)},
            {"add", tally_json(s.addition, w)}, {"special", tally_json(s.special, w)}};
    };
    std::ostringstream weight;
    weight << w;
    return {{"schema", kJsonSchema}, {"family", to_string(r.family)}, {"p", r.p}, {"m", r.m}, {"trials", r.trials},
        {"div_weight", weight.str()}, {"baseline", side(r.baseline)}, {"squared", side(r.squared)},
        {"savings", {{"double", to_double(r.savings_doubling())}, {"add", to_double(r.savings_addition())},
                        {"overall", to_double(r.savings_overall())}}},
        {"values_agree", r.values_agree}};
}

std::string bench_text(const BenchReport& r)
{
    std::ostringstream os;
    os << "family " << to_string(r.family) << "  p=" << r.p << " (curve over F_p^2)  m=" << r.m
       << "  trials=" << r.trials << "  div weight=" << r.div_weight << "\n\n";
    os << std::left << std::setw(10) << "step" << std::setw(10) << "alg" << std::right << std::setw(8) << "count"
       << std::setw(10) << "mul" << std::setw(8) << "div" << std::setw(12) << "weighted" << '\n';
    auto line = [&](const char* step, const BenchSide& s, const StepTally& t) {
        os << std::left << std::setw(10) << step << std::setw(10) << s.alg << std::right << std::setw(8) << t.steps
           << std::fixed << std::setprecision(2) << std::setw(10) << to_double(t.mean_mul()) << std::setw(8)
           << to_double(t.mean_div()) << std::setw(12) << to_double(t.weighted_mean(r.div_weight)) << '\n';
    };
    line("double", r.baseline, r.baseline.doubling);
    line("double", r.squared, r.squared.doubling);
    line("add", r.baseline, r.baseline.addition);
    line("add", r.squared, r.squared.addition);
    line("special", r.baseline, r.baseline.special);
    line("special", r.squared, r.squared.special);
    os << "\nsavings  double " << std::setprecision(2) << 100 * to_double(r.savings_doubling()) << "%  add "
       << 100 * to_double(r.savings_addition()) << "%  overall " << 100 * to_double(r.savings_overall()) << "%\n";
    os << "values   " << (r.values_agree ? "agree" : "DISAGREE") << '\n';
    return os.str();
}

}  // namespace pairlab
