// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/hec_pairing.hpp"

#include <string>

namespace pairlab
{
namespace
{
struct Retry
{};

struct Accumulator
{
    MumfordDivisor A;
    FieldElement n;
    FieldElement d;
};

Chain resolve_chain(std::uint64_t m, const HecPairingOptions& opt)
{
    Chain chain;
    if (opt.chain)
    {
        if (!verify_chain(*opt.chain, m))
            throw Error(Errc::invalid_order, "supplied chain does not produce m");
        chain = *opt.chain;
    }
    else
    {
        if (opt.policy == ChainPolicy::naf)
            throw Error(Errc::precondition, "genus-2 pairings take binary or ladder chains");
        chain = build_chain(m, opt.policy);
    }
    for (const auto& s : chain)
        if (s.kind == StepKind::subtract)
            throw Error(Errc::precondition, "genus-2 pairings do not support subtraction steps");
    return chain;
}

BigInt tate_exponent(const HyperCurve& C, std::uint64_t m)
{
    const BigInt q1 = C.field().order() - 1;
    if (q1 % m != 0)
        throw Error(Errc::invalid_order, "m must divide q - 1");
    return q1 / m;
}

bool coprime(const Poly& u, const Poly& v)
{
    UncountedScope quiet;
    return poly_gcd(u, v).degree() == 0;
}

void common_checks(const HyperCurve& C, const MumfordDivisor& D, const MumfordDivisor& E, std::uint64_t m)
{
    if (m < 2)
        throw Error(Errc::invalid_order, "m must be at least 2");
    if (!is_valid_divisor(C, D))
        throw Error(Errc::not_on_curve, "D is not a reduced divisor on the curve");
    if (!is_valid_divisor(C, E))
        throw Error(Errc::not_on_curve, "E is not a reduced divisor on the curve");
    (void)tate_exponent(C, m);
    UncountedScope quiet;
    if (!jac_scalar_mul(C, BigInt(m), D).is_identity())
        throw Error(Errc::not_torsion, "mD is not the identity");
    if (!coprime(D.a, E.a))
        throw DivisorCollision(0, 1, "E shares support with D");
}

[[noreturn]] void collision(std::size_t index, std::uint64_t multiple)
{
    throw DivisorCollision(index, multiple,
        "E shares support with " + std::to_string(multiple) + "D at chain entry " + std::to_string(index) +
            "; try another chain");
}

/// Field holding the support of every divisor given.
FieldEmbedding evaluation_field(const HyperCurve& C, std::initializer_list<const MumfordDivisor*> divs)
{
    unsigned deg = 1;
    for (const auto* D : divs)
        deg = std::max(deg, support_degree(C, *D));
    if (deg == 1)
        return FieldEmbedding::identity(C.field());
    return FieldEmbedding(C.field(), quadratic_extension(C.field()));
}

FieldElement finish(const FieldEmbedding& emb, const FieldElement& n, const FieldElement& d, const BigInt& e)
{
    const auto ratio = emb.project(n / d);
    if (!ratio)
        throw Error(Errc::invalid_field, "accumulated ratio is not rational over the base field");
    return pow(*ratio, e);
}

PairingResult squared_engine(const HyperCurve& C, const MumfordDivisor& D, const MumfordDivisor& E,
    std::uint64_t m, const Chain& chain)
{
    const FieldEmbedding emb = evaluation_field(C, {&E});
    const auto Qs = divisor_points(C, E, emb);
    const Field& K = emb.target();
    const std::size_t evals_before = comp_a_evaluations();

    PairingResult res(C.field().one());
    std::vector<Accumulator> t;
    t.reserve(chain.size() + 1);
    t.push_back({D, K.one(), K.one()});
    {
        CountingScope loop;
        for (std::size_t i = 0; i < chain.size(); ++i)
        {
            const auto& s = chain[i];
            CountingScope sc;
            const Accumulator& L = t[s.left];
            const Accumulator& R = t[s.right];
            const CompositionOutput comp = jac_compose(C, L.A, R.A);
            FieldElement n = L.n * R.n;
            FieldElement d = L.d * R.d;
            if (comp.reduced)
            {
                // The a(x) and d(x) parts agree at Q and Q' and cancel.
                const Poly b = emb.lift(comp.comp_b);
                for (const auto& Q : Qs)
                {
                    const auto bx = poly_eval(b, Q.x);
                    n *= bx - Q.y;
                    d *= bx + Q.y;
                }
                ++res.case_i;
            }
            else
            {
                ++res.case_ii;
            }
            if (n.is_zero() || d.is_zero())
                collision(i + 1, s.value);
            const bool closing = i + 1 == chain.size();
            res.steps.push_back({s.kind, comp.generic && !closing, sc.counts()});
            if (!closing && !coprime(comp.result.a, E.a))
                collision(i + 1, s.value);
            t.push_back({comp.result, std::move(n), std::move(d)});
        }
        res.ops = loop.counts();
    }
    res.comp_a_evals = comp_a_evaluations() - evals_before;

    CountingScope fin;
    res.value = finish(emb, t.back().n, t.back().d, tate_exponent(C, m));
    res.final_ops = fin.counts();
    return res;
}

/// u(P) = comp_a(x) d(x) / (b(x) + y) in Case i and d(x) in Case ii, split
/// into numerator and denominator.
struct UFactor
{
    FieldElement num;
    FieldElement den;
};

UFactor eval_u(const CompositionOutput& comp, const Poly& b, const Poly& dpoly, const HecPoint& P,
    const FieldEmbedding& emb)
{
    const Field& K = emb.target();
    const bool has_d = dpoly.degree() > 0;
    if (!comp.reduced)
        return {has_d ? eval_monic(dpoly, P.x) : K.one(), K.one()};
    FieldElement a = comp.eval_comp_a(P.x, emb);
    if (has_d)
        a *= eval_monic(dpoly, P.x);
    return {std::move(a), poly_eval(b, P.x) + P.y};
}

PairingResult standard_attempt(const HyperCurve& C, const MumfordDivisor& D, const MumfordDivisor& E,
    std::uint64_t m, const Chain& chain, Rng& rng)
{
    PairingResult res(C.field().one());
    CountingScope loop;
    const MumfordDivisor T = random_divisor(C, rng);
    const MumfordDivisor U = jac_add(C, E, T);
    // U - T must have degree zero, else the point at infinity enters the
    // evaluation divisor.
    if (U.a.degree() != T.a.degree())
        throw Retry{};
    if (!coprime(U.a, D.a) || !coprime(T.a, D.a) || !coprime(U.a, T.a))
        throw Retry{};
    const FieldEmbedding emb = evaluation_field(C, {&U, &T});
    const auto Rnum = divisor_points(C, U, emb);
    const auto Rden = divisor_points(C, T, emb);
    const Field& K = emb.target();
    const std::size_t evals_before = comp_a_evaluations();

    std::vector<Accumulator> t;
    t.reserve(chain.size() + 1);
    t.push_back({D, K.one(), K.one()});
    for (std::size_t i = 0; i < chain.size(); ++i)
    {
        const auto& s = chain[i];
        CountingScope sc;
        const Accumulator& L = t[s.left];
        const Accumulator& R = t[s.right];
        const CompositionOutput comp = jac_compose(C, L.A, R.A);
        FieldElement n = L.n * R.n;
        FieldElement d = L.d * R.d;
        const Poly b = emb.lift(comp.comp_b);
        const Poly dpoly = emb.lift(comp.gcd_d);
        if (comp.reduced || dpoly.degree() > 0)
        {
            for (const auto& P : Rnum)
            {
                const auto u = eval_u(comp, b, dpoly, P, emb);
                n *= u.num;
                d *= u.den;
            }
            for (const auto& P : Rden)
            {
                const auto u = eval_u(comp, b, dpoly, P, emb);
                n *= u.den;
                d *= u.num;
            }
        }
        if (comp.reduced)
            ++res.case_i;
        else
            ++res.case_ii;
        if (n.is_zero() || d.is_zero())
            throw Retry{};
        const bool closing = i + 1 == chain.size();
        res.steps.push_back({s.kind, comp.generic && !closing, sc.counts()});
        if (!closing && (!coprime(comp.result.a, U.a) || !coprime(comp.result.a, T.a)))
            throw Retry{};
        t.push_back({comp.result, std::move(n), std::move(d)});
    }
    res.ops = loop.counts();
    res.comp_a_evals = comp_a_evaluations() - evals_before;

    CountingScope fin;
    res.value = finish(emb, t.back().n, t.back().d, tate_exponent(C, m));
    res.final_ops = fin.counts();
    return res;
}

/// E itself is never evaluated by the baseline, but the same support
/// condition is enforced so both engines accept the same inputs.
void check_chain_support(const HyperCurve& C, const MumfordDivisor& D, const MumfordDivisor& E, const Chain& chain)
{
    UncountedScope quiet;
    std::vector<MumfordDivisor> A{D};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    {
        A.push_back(jac_add(C, A[chain[i].left], A[chain[i].right]));
        if (!coprime(A.back().a, E.a))
            collision(i + 1, chain[i].value);
    }
}

}  // namespace

const char* to_string(HecAlgorithm a) noexcept
{
    switch (a)
    {
    case HecAlgorithm::squared_tate: return "tate2";
    case HecAlgorithm::standard_tate: return "tate-std";
    }
    return "?";
}

HecAlgorithm parse_hec_algorithm(std::string_view name)
{
    if (name == "tate2")
        return HecAlgorithm::squared_tate;
    if (name == "tate-std")
        return HecAlgorithm::standard_tate;
    throw Error(Errc::parse_error, "unknown genus-2 algorithm: " + std::string(name));
}

PairingResult squared_tate_hec(const HyperCurve& C, const MumfordDivisor& D, const MumfordDivisor& E,
    std::uint64_t m, const HecPairingOptions& opt)
{
    common_checks(C, D, E, m);
    return squared_engine(C, D, E, m, resolve_chain(m, opt));
}

PairingResult standard_tate_hec(const HyperCurve& C, const MumfordDivisor& D, const MumfordDivisor& E,
    std::uint64_t m, const HecPairingOptions& opt)
{
    common_checks(C, D, E, m);
    const Chain chain = resolve_chain(m, opt);
    check_chain_support(C, D, E, chain);
    Rng rng(opt.seed);
    for (unsigned attempt = 1; attempt <= opt.retry_cap; ++attempt)
    {
        try
        {
            PairingResult res = standard_attempt(C, D, E, m, chain, rng);
            res.attempts = attempt;
            return res;
        }
        catch (const Retry&)
        {
        }
    }
    throw Error(Errc::randomness_exhausted, "no usable auxiliary divisor within the retry cap");
}

PairingResult hec_pairing(HecAlgorithm alg, const HyperCurve& C, const MumfordDivisor& D, const MumfordDivisor& E,
    std::uint64_t m, const HecPairingOptions& opt)
{
    switch (alg)
    {
    case HecAlgorithm::squared_tate: return squared_tate_hec(C, D, E, m, opt);
    case HecAlgorithm::standard_tate: return standard_tate_hec(C, D, E, m, opt);
    }
    throw Error(Errc::precondition, "unknown algorithm");
}

}  // namespace pairlab
