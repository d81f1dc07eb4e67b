// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/ec_pairing.hpp"

namespace pairlab
{
namespace
{
struct Entry
{
    CurvePoint jP;
    CurvePoint jQ;
    FieldElement n;
    FieldElement d;
};

/// A factor vanished at an auxiliary point; draw new ones.
struct Retry
{};

Chain resolve_chain(std::uint64_t m, const EcPairingOptions& opt)
{
    if (opt.chain)
    {
        if (!verify_chain(*opt.chain, m))
            throw Error(Errc::invalid_order, "supplied chain does not produce m");
        return *opt.chain;
    }
    return build_chain(m, opt.policy);
}

void require_point(const EllipticCurve& E, const CurvePoint& X, const char* name)
{
    if (!E.contains(X))
        throw Error(Errc::not_on_curve, std::string(name) + " is not on the curve");
}

void require_torsion(const EllipticCurve& E, const CurvePoint& X, std::uint64_t m, const char* name)
{
    UncountedScope quiet;
    if (!ec_scalar_mul(E, BigInt(m), X).is_infinity())
        throw Error(Errc::not_torsion, std::string(name) + " is not m-torsion");
}

void require_distinct(const CurvePoint& P, const CurvePoint& Q)
{
    if (P.is_infinity() || Q.is_infinity())
        throw Error(Errc::precondition, "P and Q must not be the identity");
    if (P == Q || P == ec_neg(Q))
        throw Error(Errc::precondition, "P must differ from Q and -Q");
}

BigInt tate_exponent(const EllipticCurve& E, std::uint64_t m)
{
    const BigInt q1 = E.field().order() - 1;
    if (q1 % m != 0)
        throw Error(Errc::invalid_order, "m must divide q - 1");
    return q1 / m;
}

void common_checks(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q, std::uint64_t m,
    const EcPairingOptions& opt, bool torsion_q)
{
    if (m < 2)
        throw Error(Errc::invalid_order, "m must be at least 2");
    require_point(E, P, "P");
    require_point(E, Q, "Q");
    if (!opt.relax_preconditions)
        require_distinct(P, Q);
    require_torsion(E, P, m, "P");
    if (torsion_q)
        require_torsion(E, Q, m, "Q");
}

AddResult step_add(const EllipticCurve& E, const CurvePoint& L, const CurvePoint& R, StepKind kind)
{
    return ec_add_chord(E, L, kind == StepKind::subtract ? ec_neg(R) : R);
}

/// Multiplies the accumulated value by every factor (one mul each).
void absorb(FieldElement& acc, const std::vector<FieldElement>& factors)
{
    for (const auto& f : factors)
        acc *= f;
}

template <typename OnZero>
void check_nonzero(const std::vector<FieldElement>& a, const std::vector<FieldElement>& b, OnZero&& on_zero)
{
    for (const auto& f : a)
        if (f.is_zero())
            on_zero();
    for (const auto& f : b)
        if (f.is_zero())
            on_zero();
}

/// Squared-pairing line factor at (+W, -W). Vertical lines and the O + O
/// case contribute equally to numerator and denominator and are skipped.
void squared_factor(const Chord& c, const CurvePoint& W, bool numerator_at_plus, std::vector<FieldElement>& num,
    std::vector<FieldElement>& den)
{
    if (c.kind != Chord::Kind::sloped)
        return;
    auto [plus, minus] = c.eval_pm(W);
    if (numerator_at_plus)
    {
        num.push_back(std::move(plus));
        den.push_back(std::move(minus));
    }
    else
    {
        num.push_back(std::move(minus));
        den.push_back(std::move(plus));
    }
}

enum class SquaredKind
{
    weil,
    tate,
};

PairingResult squared_engine(SquaredKind kind, const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q,
    std::uint64_t m, const EcPairingOptions& opt)
{
    const bool weil = kind == SquaredKind::weil;
    const Chain chain = resolve_chain(m, opt);
    const Field& F = E.field();
    PairingResult res(F.one());
    std::vector<Entry> t;
    t.reserve(chain.size() + 1);
    t.push_back({P, Q, F.one(), F.one()});
    bool vanished = false;
    {
        CountingScope loop;
        for (const auto& s : chain)
        {
            CountingScope sc;
            const bool sub = s.kind == StepKind::subtract;
            const Entry& a = t[s.left];
            const Entry& b = t[s.right];
            const AddResult arP = step_add(E, a.jP, b.jP, s.kind);
            std::optional<AddResult> arQ;
            if (weil)
                arQ = step_add(E, a.jQ, b.jQ, s.kind);

            // Lines through multiples of P are read at (Q, -Q); lines through
            // multiples of Q at (-P, P).
            std::vector<FieldElement> num, den;
            squared_factor(arP.chord, Q, true, num, den);
            if (weil)
                squared_factor(arQ->chord, P, false, num, den);
            check_nonzero(num, den, [&] { vanished = true; });
            if (vanished)
            {
                if (!weil)
                    throw Error(Errc::multiple_of_base_point,
                        "line through multiples of P vanished at Q; Q is a multiple of P");
                res.steps.push_back({s.kind, false, sc.counts()});
                break;
            }
            FieldElement n = a.n * (sub ? b.d : b.n);
            FieldElement d = a.d * (sub ? b.n : b.d);
            absorb(n, num);
            absorb(d, den);
            const bool generic = arP.generic && (!weil || arQ->generic);
            t.push_back({arP.sum, weil ? arQ->sum : CurvePoint::infinity(), std::move(n), std::move(d)});
            res.steps.push_back({s.kind, generic, sc.counts()});
        }
        res.ops = loop.counts();
    }

    CountingScope fin;
    if (vanished)
    {
        // e_m(P, Q) = 1 when Q is a multiple of P.
        res.degenerate = true;
        res.value = (m % 2 == 1 && !opt.normalized) ? -F.one() : F.one();
    }
    else if (weil)
    {
        res.value = t.back().n / t.back().d;
        if (opt.normalized && m % 2 == 1)
            res.value = -res.value;
    }
    else
    {
        res.value = pow(t.back().n / t.back().d, tate_exponent(E, m));
    }
    res.final_ops = fin.counts();
    return res;
}

/// Ratio f(A) / f(B) contributions of one Miller step for the functions
/// built from multiples of a single point.
struct MillerSide
{
    const CurvePoint* A;
    const CurvePoint* B;
};

void vertical_pair(const CurvePoint& X, const MillerSide& side, std::vector<FieldElement>& num,
    std::vector<FieldElement>& den)
{
    // 1/V_X contributes V_X(B) above and V_X(A) below.
    if (X.is_infinity())
        return;
    num.push_back(side.B->x() - X.x());
    den.push_back(side.A->x() - X.x());
}

void miller_factors(const AddResult& ar, StepKind kind, const CurvePoint& k_point, const MillerSide& side,
    std::vector<FieldElement>& num, std::vector<FieldElement>& den)
{
    if (ar.chord.kind != Chord::Kind::none)
    {
        num.push_back(ar.chord.eval(*side.A));
        den.push_back(ar.chord.eval(*side.B));
    }
    if (kind == StepKind::subtract)
        vertical_pair(k_point, side, num, den);
    vertical_pair(ar.sum, side, num, den);
}

struct MillerOutcome
{
    PairingResult res;
    FieldElement n;
    FieldElement d;
};

MillerOutcome miller_attempt(bool weil, const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q,
    const Chain& chain, Rng& rng)
{
    const Field& F = E.field();
    const CurvePoint R1 = E.random_point(rng);
    const CurvePoint R2 = E.random_point(rng);
    PairingResult res(F.one());
    std::vector<Entry> t;
    t.reserve(chain.size() + 1);
    auto retry_if_zero = [] { throw Retry{}; };

    std::optional<CountingScope> loop;
    loop.emplace();
    // A_P = (P + R1) - (R1), A_Q = (Q + R2) - (R2).
    const AddResult initP = ec_add_chord(E, P, R1);
    const AddResult initQ = ec_add_chord(E, Q, R2);
    if (R1.is_infinity() || R2.is_infinity() || !initP.generic || !initQ.generic)
        throw Retry{};
    const CurvePoint& T2 = initP.sum;  // P + R1
    const CurvePoint& S1 = initQ.sum;  // Q + R2
    const CurvePoint& S2 = R2;
    const CurvePoint& T1 = R1;
    for (const auto* X : {&T2, &R1})
        for (const auto* Y : {&S1, &S2})
            if (*X == *Y)
                throw Retry{};

    const MillerSide sideP{&S1, &S2};
    const MillerSide sideQ{&T1, &T2};
    // f_1 = V_{P+R1} / L_{P,R1}, and likewise for Q.
    std::vector<FieldElement> num, den;
    num.push_back(S1.x() - T2.x());
    num.push_back(initP.chord.eval(S2));
    den.push_back(S2.x() - T2.x());
    den.push_back(initP.chord.eval(S1));
    if (weil)
    {
        num.push_back(T1.x() - S1.x());
        num.push_back(initQ.chord.eval(T2));
        den.push_back(T2.x() - S1.x());
        den.push_back(initQ.chord.eval(T1));
    }
    check_nonzero(num, den, retry_if_zero);
    FieldElement n0 = num[0], d0 = den[0];
    for (std::size_t i = 1; i < num.size(); ++i)
    {
        n0 *= num[i];
        d0 *= den[i];
    }
    t.push_back({P, Q, std::move(n0), std::move(d0)});

    for (const auto& s : chain)
    {
        CountingScope sc;
        const bool sub = s.kind == StepKind::subtract;
        const Entry& a = t[s.left];
        const Entry& b = t[s.right];
        const AddResult arP = step_add(E, a.jP, b.jP, s.kind);
        std::optional<AddResult> arQ;
        if (weil)
            arQ = step_add(E, a.jQ, b.jQ, s.kind);
        num.clear();
        den.clear();
        miller_factors(arP, s.kind, b.jP, sideP, num, den);
        if (weil)
            miller_factors(*arQ, s.kind, b.jQ, sideQ, num, den);
        check_nonzero(num, den, retry_if_zero);
        FieldElement n = a.n * (sub ? b.d : b.n);
        FieldElement d = a.d * (sub ? b.n : b.d);
        absorb(n, num);
        absorb(d, den);
        const bool generic = arP.generic && (!weil || arQ->generic);
        t.push_back({arP.sum, weil ? arQ->sum : CurvePoint::infinity(), std::move(n), std::move(d)});
        res.steps.push_back({s.kind, generic, sc.counts()});
    }
    res.ops = loop->counts();
    loop.reset();
    return {std::move(res), std::move(t.back().n), std::move(t.back().d)};
}

PairingResult miller_engine(bool weil, const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q,
    std::uint64_t m, const EcPairingOptions& opt)
{
    const Chain chain = resolve_chain(m, opt);
    Rng rng(opt.seed);
    for (unsigned attempt = 1; attempt <= opt.retry_cap; ++attempt)
    {
        try
        {
            MillerOutcome out = miller_attempt(weil, E, P, Q, chain, rng);
            out.res.attempts = attempt;
            CountingScope fin;
            out.res.value = out.n / out.d;
            out.res.final_ops = fin.counts();
            return std::move(out.res);
        }
        catch (const Retry&)
        {
        }
    }
    throw Error(Errc::randomness_exhausted, "no usable auxiliary points within the retry cap");
}
}  // namespace

const char* to_string(EcAlgorithm a) noexcept
{
    switch (a)
    {
    case EcAlgorithm::miller_weil: return "weil";
    case EcAlgorithm::squared_weil: return "weil2";
    case EcAlgorithm::miller_tate: return "tate";
    case EcAlgorithm::squared_tate: return "tate2";
    }
    return "?";
}

EcAlgorithm parse_ec_algorithm(std::string_view name)
{
    if (name == "weil")
        return EcAlgorithm::miller_weil;
    if (name == "weil2")
        return EcAlgorithm::squared_weil;
    if (name == "tate")
        return EcAlgorithm::miller_tate;
    if (name == "tate2")
        return EcAlgorithm::squared_tate;
    throw Error(Errc::parse_error, "unknown EC algorithm: " + std::string(name));
}

PairingResult squared_weil(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q, std::uint64_t m,
    const EcPairingOptions& opt)
{
    common_checks(E, P, Q, m, opt, true);
    return squared_engine(SquaredKind::weil, E, P, Q, m, opt);
}

PairingResult squared_tate(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q, std::uint64_t m,
    const EcPairingOptions& opt)
{
    common_checks(E, P, Q, m, opt, false);
    (void)tate_exponent(E, m);
    return squared_engine(SquaredKind::tate, E, P, Q, m, opt);
}

PairingResult miller_weil(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q, std::uint64_t m,
    const EcPairingOptions& opt)
{
    common_checks(E, P, Q, m, opt, true);
    PairingResult res = miller_engine(true, E, P, Q, m, opt);
    return res;
}

PairingResult miller_tate(const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q, std::uint64_t m,
    const EcPairingOptions& opt)
{
    common_checks(E, P, Q, m, opt, false);
    const BigInt e = tate_exponent(E, m);
    PairingResult res = miller_engine(false, E, P, Q, m, opt);
    CountingScope fin;
    res.value = pow(res.value, e);
    res.final_ops += fin.counts();
    return res;
}

PairingResult ec_pairing(EcAlgorithm alg, const EllipticCurve& E, const CurvePoint& P, const CurvePoint& Q,
    std::uint64_t m, const EcPairingOptions& opt)
{
    switch (alg)
    {
    case EcAlgorithm::miller_weil: return miller_weil(E, P, Q, m, opt);
    case EcAlgorithm::squared_weil: return squared_weil(E, P, Q, m, opt);
    case EcAlgorithm::miller_tate: return miller_tate(E, P, Q, m, opt);
    case EcAlgorithm::squared_tate: return squared_tate(E, P, Q, m, opt);
    }
    throw Error(Errc::precondition, "unknown algorithm");
}

}  // namespace pairlab
