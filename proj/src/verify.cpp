// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/verify.hpp"

#include "pairlab/ec_pairing.hpp"
#include "pairlab/error.hpp"
#include "pairlab/hec_pairing.hpp"
#include "pairlab/report.hpp"
#include "pairlab/testbed.hpp"

#include <functional>
#include <iomanip>
#include <optional>
#include <sstream>

namespace pairlab
{
namespace
{
/// nullopt means the draw was skipped.
using Outcome = std::optional<std::string>;
constexpr const char* kOk = "";

struct Check
{
    std::string curve;
    std::function<Outcome(Rng&)> run;
};

bool skippable(const Error& e)
{
    return e.code() == Errc::divisor_collision || e.code() == Errc::multiple_of_base_point;
}

std::uniform_int_distribution<std::size_t> index_of(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1); }

std::uint64_t draw_scalar(Rng& rng, std::uint64_t lo, std::uint64_t hi)
{
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

std::pair<CurvePoint, CurvePoint> torsion_pair(const EcTestCurve& c, Rng& rng)
{
    auto pick = index_of(c.torsion.size());
    for (;;)
    {
        const auto& P = c.torsion[pick(rng)];
        const auto& Q = c.torsion[pick(rng)];
        if (P != Q && P != ec_neg(Q))
            return {P, Q};
    }
}

/// P from the m-torsion and Q any point other than O and ±P.
std::pair<CurvePoint, CurvePoint> tate_pair(const EcTestCurve& c, Rng& rng)
{
    auto tp = index_of(c.torsion.size());
    auto pt = index_of(c.points.size());
    for (;;)
    {
        const auto& P = c.torsion[tp(rng)];
        const auto& Q = c.points[pt(rng)];
        if (!Q.is_infinity() && Q != P && Q != ec_neg(P))
            return {P, Q};
    }
}

FieldElement weil_sign(const Field& F, std::uint64_t m) { return m % 2 ? -F.one() : F.one(); }

std::string describe(const std::string& what, const FieldElement& got, const FieldElement& want)
{
    return what + ": got " + got.to_string() + ", expected " + want.to_string();
}

EcPairingOptions seeded(Rng& rng)
{
    EcPairingOptions o;
    o.seed = rng();
    return o;
}

HecPairingOptions hec_seeded(Rng& rng)
{
    HecPairingOptions o;
    o.seed = rng();
    return o;
}

EcPairingOptions normalized()
{
    EcPairingOptions o;
    o.normalized = true;
    return o;
}

template <class Fn>
Outcome guarded(Fn&& fn)
{
    try
    {
        return fn();
    }
    catch (const Error& e)
    {
        if (skippable(e))
            return std::nullopt;
        throw;
    }
}

std::vector<Check> weil_square_checks()
{
    std::vector<Check> out;
    for (auto c : weil_test_curves())
        out.push_back({c.name, [c](Rng& rng) -> Outcome {
                           const auto [P, Q] = torsion_pair(c, rng);
                           const auto sq = squared_weil(c.curve, P, Q, c.m).value;
                           const auto e = miller_weil(c.curve, P, Q, c.m, seeded(rng)).value;
                           const auto want = weil_sign(c.curve.field(), c.m) * e * e;
                           return sq == want ? kOk : describe("squared_weil", sq, want);
                       }});
    return out;
}

std::vector<Check> tate_square_checks()
{
    std::vector<Check> out;
    for (auto c : tate_test_curves())
        out.push_back({c.name, [c](Rng& rng) -> Outcome {
                           return guarded([&]() -> Outcome {
                               const auto [P, Q] = tate_pair(c, rng);
                               const auto sq = squared_tate(c.curve, P, Q, c.m).value;
                               const auto phi = miller_tate(c.curve, P, Q, c.m, seeded(rng)).value;
                               return sq == phi * phi ? kOk : describe("squared_tate", sq, phi * phi);
                           });
                       }});
    return out;
}

std::vector<Check> hec_square_checks()
{
    std::vector<Check> out;
    for (auto c : hec_test_curves())
        out.push_back({c.name, [c](Rng& rng) -> Outcome {
                           return guarded([&]() -> Outcome {
                               const auto D = c.torsion(rng);
                               const auto E = random_divisor(c.curve, rng);
                               const auto sq = squared_tate_hec(c.curve, D, E, c.m).value;
                               const auto st = standard_tate_hec(c.curve, D, E, c.m, hec_seeded(rng)).value;
                               const auto lhs = pow(st, BigInt(4));
                               const auto rhs = sq * sq;
                               return lhs == rhs ? kOk : describe("standard^4 vs squared^2", lhs, rhs);
                           });
                       }});
    return out;
}

std::vector<Check> bilinearity_checks()
{
    std::vector<Check> out;
    for (auto c : weil_test_curves())
        out.push_back({c.name + " weil2", [c](Rng& rng) -> Outcome {
                           const auto [P, Q] = torsion_pair(c, rng);
                           const auto a = draw_scalar(rng, 2, c.m - 1);
                           const auto aP = ec_scalar_mul(c.curve, static_cast<std::int64_t>(a), P);
                           if (aP.is_infinity() || aP == Q || aP == ec_neg(Q))
                               return std::nullopt;
                           const auto base = squared_weil(c.curve, P, Q, c.m, normalized()).value;
                           const auto got = squared_weil(c.curve, aP, Q, c.m, normalized()).value;
                           const auto want = pow(base, BigInt(a));
                           return got == want ? kOk : describe("weil2(aP,Q)", got, want);
                       }});
    for (auto c : tate_test_curves())
        out.push_back({c.name + " tate2", [c](Rng& rng) -> Outcome {
                           return guarded([&]() -> Outcome {
                               const auto [P, Q] = tate_pair(c, rng);
                               const auto a = draw_scalar(rng, 2, c.m + 3);
                               const auto base = squared_tate(c.curve, P, Q, c.m).value;
                               const auto want = pow(base, BigInt(a));
                               const auto aQ = ec_scalar_mul(c.curve, static_cast<std::int64_t>(a), Q);
                               if (!aQ.is_infinity() && aQ != P && aQ != ec_neg(P))
                               {
                                   const auto got = squared_tate(c.curve, P, aQ, c.m).value;
                                   if (got != want)
                                       return describe("tate2(P,aQ)", got, want);
                               }
                               const auto aP = ec_scalar_mul(c.curve, static_cast<std::int64_t>(a), P);
                               if (!aP.is_infinity() && aP != Q && aP != ec_neg(Q))
                               {
                                   const auto got = squared_tate(c.curve, aP, Q, c.m).value;
                                   if (got != want)
                                       return describe("tate2(aP,Q)", got, want);
                               }
                               return kOk;
                           });
                       }});
    for (auto c : hec_test_curves())
        out.push_back({c.name + " hec", [c](Rng& rng) -> Outcome {
                           return guarded([&]() -> Outcome {
                               const auto D = c.torsion(rng);
                               const auto E = random_divisor(c.curve, rng);
                               const auto a = draw_scalar(rng, 2, c.m - 1);
                               const auto base = squared_tate_hec(c.curve, D, E, c.m).value;
                               const auto want = pow(base, BigInt(a));
                               const auto aD = jac_scalar_mul(c.curve, static_cast<std::int64_t>(a), D);
                               const auto left = squared_tate_hec(c.curve, aD, E, c.m).value;
                               if (left != want)
                                   return describe("hec(aD,E)", left, want);
                               const auto aE = jac_scalar_mul(c.curve, static_cast<std::int64_t>(a), E);
                               if (!aE.is_identity())
                               {
                                   const auto right = squared_tate_hec(c.curve, D, aE, c.m).value;
                                   if (right != want)
                                       return describe("hec(D,aE)", right, want);
                               }
                               return kOk;
                           });
                       }});
    return out;
}

std::vector<Check> roots_checks()
{
    std::vector<Check> out;
    for (auto c : weil_test_curves())
        out.push_back({c.name + " weil", [c](Rng& rng) -> Outcome {
                           const auto [P, Q] = torsion_pair(c, rng);
                           const auto sq = squared_weil(c.curve, P, Q, c.m, normalized()).value;
                           const auto e = miller_weil(c.curve, P, Q, c.m, seeded(rng)).value;
                           if (!pow(sq, BigInt(c.m)).is_one())
                               return "weil2 value " + sq.to_string() + " is not an m-th root of unity";
                           if (!pow(e, BigInt(c.m)).is_one())
                               return "weil value " + e.to_string() + " is not an m-th root of unity";
                           return kOk;
                       }});
    for (auto c : tate_test_curves())
        out.push_back({c.name + " tate", [c](Rng& rng) -> Outcome {
                           return guarded([&]() -> Outcome {
                               const auto [P, Q] = tate_pair(c, rng);
                               const auto sq = squared_tate(c.curve, P, Q, c.m).value;
                               const auto phi = miller_tate(c.curve, P, Q, c.m, seeded(rng)).value;
                               if (!pow(sq, BigInt(c.m)).is_one())
                                   return "tate2 value " + sq.to_string() + " is not an m-th root of unity";
                               if (!pow(phi, BigInt(c.m)).is_one())
                                   return "tate value " + phi.to_string() + " is not an m-th root of unity";
                               return kOk;
                           });
                       }});
    for (auto c : hec_test_curves())
        out.push_back({c.name + " hec", [c](Rng& rng) -> Outcome {
                           return guarded([&]() -> Outcome {
                               const auto D = c.torsion(rng);
                               const auto E = random_divisor(c.curve, rng);
                               const auto sq = squared_tate_hec(c.curve, D, E, c.m).value;
                               const auto st = standard_tate_hec(c.curve, D, E, c.m, hec_seeded(rng)).value;
                               if (!pow(sq, BigInt(c.m)).is_one())
                                   return "hec tate2 value " + sq.to_string() + " is not an m-th root of unity";
                               if (!pow(st, BigInt(c.m)).is_one())
                                   return "hec tate value " + st.to_string() + " is not an m-th root of unity";
                               return kOk;
                           });
                       }});
    return out;
}

constexpr int kWitnessDraws = 200;

std::vector<Check> nondegeneracy_checks()
{
    std::vector<Check> out;
    for (auto c : weil_test_curves())
        out.push_back({c.name + " weil2", [c](Rng& rng) -> Outcome {
                           for (int i = 0; i < kWitnessDraws; ++i)
                           {
                               const auto [P, Q] = torsion_pair(c, rng);
                               if (!squared_weil(c.curve, P, Q, c.m, normalized()).value.is_one())
                                   return kOk;
                           }
                           return std::string("no pair with a nontrivial value");
                       }});
    for (auto c : tate_test_curves())
        out.push_back({c.name + " tate2", [c](Rng& rng) -> Outcome {
                           for (int i = 0; i < kWitnessDraws; ++i)
                           {
                               const auto [P, Q] = tate_pair(c, rng);
                               try
                               {
                                   if (!squared_tate(c.curve, P, Q, c.m).value.is_one())
                                       return kOk;
                               }
                               catch (const Error& e)
                               {
                                   if (!skippable(e))
                                       throw;
                               }
                           }
                           return std::string("no pair with a nontrivial value");
                       }});
    for (auto c : hec_test_curves())
        out.push_back({c.name + " hec", [c](Rng& rng) -> Outcome {
                           for (int i = 0; i < kWitnessDraws; ++i)
                           {
                               const auto D = c.torsion(rng);
                               const auto E = random_divisor(c.curve, rng);
                               try
                               {
                                   if (!squared_tate_hec(c.curve, D, E, c.m).value.is_one())
                                       return kOk;
                               }
                               catch (const Error& e)
                               {
                                   if (!skippable(e))
                                       throw;
                               }
                           }
                           return std::string("no pair with a nontrivial value");
                       }});
    return out;
}

std::vector<Check> chain_checks()
{
    std::vector<Check> out;
    for (auto c : weil_test_curves())
        out.push_back({c.name, [c](Rng& rng) -> Outcome {
                           const auto [P, Q] = torsion_pair(c, rng);
                           const auto seed = rng();
                           for (auto alg : {EcAlgorithm::squared_weil, EcAlgorithm::miller_weil,
                                    EcAlgorithm::squared_tate, EcAlgorithm::miller_tate})
                           {
                               EcPairingOptions o;
                               o.seed = seed;
                               std::optional<FieldElement> first;
                               for (auto policy : {ChainPolicy::naf, ChainPolicy::binary, ChainPolicy::ladder})
                               {
                                   o.policy = policy;
                                   try
                                   {
                                       const auto v = ec_pairing(alg, c.curve, P, Q, c.m, o).value;
                                       if (!first)
                                           first = v;
                                       else if (v != *first)
                                           return std::string(to_string(alg)) + " differs under "
                                                  + to_string(policy) + " chain";
                                   }
                                   catch (const Error& e)
                                   {
                                       if (!skippable(e))
                                           throw;
                                       break;
                                   }
                               }
                           }
                           return kOk;
                       }});
    for (auto c : hec_test_curves())
        out.push_back({c.name, [c](Rng& rng) -> Outcome {
                           return guarded([&]() -> Outcome {
                               const auto D = c.torsion(rng);
                               const auto E = random_divisor(c.curve, rng);
                               for (auto alg : {HecAlgorithm::squared_tate, HecAlgorithm::standard_tate})
                               {
                                   HecPairingOptions o;
                                   o.seed = rng();
                                   o.policy = ChainPolicy::binary;
                                   const auto a = hec_pairing(alg, c.curve, D, E, c.m, o).value;
                                   o.policy = ChainPolicy::ladder;
                                   const auto b = hec_pairing(alg, c.curve, D, E, c.m, o).value;
                                   if (a != b)
                                       return std::string(to_string(alg)) + " differs under ladder chain";
                               }
                               return kOk;
                           });
                       }});
    return out;
}

bool congruent_square(const HyperCurve& C, const Poly& a, const Poly& b)
{
    return poly_mod(b * b - C.f(), a).is_zero();
}

MumfordDivisor point_divisor(const HyperCurve& C, Rng& rng)
{
    const auto P = random_curve_point(C, rng);
    return make_divisor(C, Poly::linear_root(P.x), Poly::constant(P.y));
}

std::vector<Check> cantor_checks()
{
    std::vector<Check> out;
    for (auto c : hec_test_curves())
        out.push_back({c.name, [c](Rng& rng) -> Outcome {
                           const auto& C = c.curve;
                           const auto D1 = random_divisor(C, rng);
                           MumfordDivisor D2 = D1;
                           // Mix in the special shapes: doubling, inverse,
                           // shared point and degree one.
                           switch (rng() % 6)
                           {
                           case 0: break;
                           case 1: D2 = jac_neg(C, D1); break;
                           case 2: D2 = jac_add(C, point_divisor(C, rng), D1); break;
                           case 3: D2 = point_divisor(C, rng); break;
                           default: D2 = random_divisor(C, rng); break;
                           }
                           const auto out = jac_compose(C, D1, D2);
                           const auto comp_a = out.comp_a();
                           if (!congruent_square(C, comp_a, out.comp_b))
                               return "composition " + D1.to_string() + " + " + D2.to_string()
                                      + " breaks b^2 = f mod a";
                           if (!is_valid_divisor(C, out.result) || !congruent_square(C, out.result.a, out.result.b))
                               return "result " + out.result.to_string() + " is not a reduced divisor";
                           return kOk;
                       }});
    return out;
}

std::vector<Check> checks_for(Property p)
{
    switch (p)
    {
    case Property::weil_square: return weil_square_checks();
    case Property::tate_square: return tate_square_checks();
    case Property::hec_square: return hec_square_checks();
    case Property::bilinearity: return bilinearity_checks();
    case Property::roots_of_unity: return roots_checks();
    case Property::nondegeneracy: return nondegeneracy_checks();
    case Property::chain_independence: return chain_checks();
    case Property::cantor: return cantor_checks();
    }
    return {};
}

std::size_t default_samples(Property p, std::size_t curves)
{
    switch (p)
    {
    case Property::weil_square: return 100 * curves;
    case Property::tate_square: return 100 * curves;
    case Property::hec_square: return 20 * curves;
    case Property::bilinearity: return 400;
    case Property::roots_of_unity: return 400;
    case Property::nondegeneracy: return curves;
    case Property::chain_independence: return 300;
    case Property::cantor: return 500;
    }
    return curves;
}

}  // namespace

const char* to_string(Property p) noexcept
{
    switch (p)
    {
    case Property::weil_square: return "weil-square";
    case Property::tate_square: return "tate-square";
    case Property::hec_square: return "hec-square";
    case Property::bilinearity: return "bilinearity";
    case Property::roots_of_unity: return "roots";
    case Property::nondegeneracy: return "nondegeneracy";
    case Property::chain_independence: return "chain-independence";
    case Property::cantor: return "cantor";
    }
    return "?";
}

const std::vector<Property>& all_properties()
{
    static const std::vector<Property> all{Property::weil_square, Property::tate_square, Property::hec_square,
        Property::bilinearity, Property::roots_of_unity, Property::nondegeneracy, Property::chain_independence,
        Property::cantor};
    return all;
}

Property parse_property(std::string_view name)
{
    for (auto p : all_properties())
        if (name == to_string(p))
            return p;
    throw Error(Errc::parse_error, "unknown property: " + std::string(name));
}

PropertyReport run_property(Property p, const VerifyOptions& opt)
{
    const auto checks = checks_for(p);
    PropertyReport rep;
    rep.property = p;
    const std::size_t target = opt.samples ? opt.samples : default_samples(p, checks.size());
    // Every curve gets its own stream so adding a curve leaves the others'
    // samples unchanged.
    std::vector<Rng> streams;
    for (std::size_t i = 0; i < checks.size(); ++i)
        streams.emplace_back(opt.seed * 0x9e3779b97f4a7c15ULL + i * 7919 + static_cast<std::uint64_t>(p));
    const std::size_t max_draws = 20 * target + 100;
    for (std::size_t draw = 0; rep.samples < target && draw < max_draws; ++draw)
    {
        const std::size_t i = draw % checks.size();
        const auto result = checks[i].run(streams[i]);
        if (!result)
        {
            ++rep.skipped;
            continue;
        }
        ++rep.samples;
        ++rep.per_curve[checks[i].curve];
        if (!result->empty())
        {
            if (rep.failures++ == 0)
                rep.first_failure = checks[i].curve + ": " + *result;
        }
    }
    return rep;
}

nlohmann::json verify_json(const std::vector<PropertyReport>& reports)
{
    nlohmann::json props = nlohmann::json::array();
    bool all = true;
    for (const auto& r : reports)
    {
        all = all && r.passed();
        nlohmann::json j{{"property", to_string(r.property)}, {"samples", r.samples}, {"failures", r.failures},
            {"skipped", r.skipped}, {"passed", r.passed()}, {"per_curve", r.per_curve}};
        if (!r.first_failure.empty())
            j["first_failure"] = r.first_failure;
        props.push_back(std::move(j));
    }
    return {{"schema", kJsonSchema}, {"properties", props}, {"passed", all}};
}

std::string verify_text(const std::vector<PropertyReport>& reports)
{
    std::ostringstream os;
    os << std::left << std::setw(20) << "property" << std::right << std::setw(9) << "samples" << std::setw(10)
       << "failures" << std::setw(9) << "skipped" << "  result\n";
    std::size_t total = 0;
    for (const auto& r : reports)
    {
        total += r.samples;
        os << std::left << std::setw(20) << to_string(r.property) << std::right << std::setw(9) << r.samples
           << std::setw(10) << r.failures << std::setw(9) << r.skipped << "  " << (r.passed() ? "PASS" : "FAIL")
           << '\n';
        if (!r.first_failure.empty())
            os << "    first failure: " << r.first_failure << '\n';
    }
    os << "total samples " << total << '\n';
    return os.str();
}

}  // namespace pairlab
