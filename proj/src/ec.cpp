// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/ec.hpp"
#include "pairlab/chain.hpp"

#include <sstream>

namespace pairlab
{
const FieldElement& CurvePoint::x() const
{
    if (!x_)
        throw Error(Errc::infinity_evaluation, "point at infinity has no coordinates");
    return *x_;
}

const FieldElement& CurvePoint::y() const
{
    if (!y_)
        throw Error(Errc::infinity_evaluation, "point at infinity has no coordinates");
    return *y_;
}

std::string CurvePoint::to_string() const
{
    if (is_infinity())
        return "inf";
    return x_->to_string() + "," + y_->to_string();
}

std::ostream& operator<<(std::ostream& os, const CurvePoint& P) { return os << P.to_string(); }

EllipticCurve::EllipticCurve(FieldElement a4, FieldElement a6) : a4_(std::move(a4)), a6_(std::move(a6))
{
    if (!a4_.field().same_as(a6_.field()))
        throw Error(Errc::param_mismatch, "curve coefficients from different fields");
    UncountedScope quiet;
    const Field& F = a4_.field();
    const auto disc = F.element(4) * a4_ * a4_ * a4_ + F.element(27) * a6_ * a6_;
    if (disc.is_zero())
        throw Error(Errc::invalid_curve, "singular curve: 4 a4^3 + 27 a6^2 = 0");
}

bool EllipticCurve::contains(const CurvePoint& P) const
{
    if (P.is_infinity())
        return true;
    if (!P.x().field().same_as(field()))
        return false;
    UncountedScope quiet;
    const auto& x = P.x();
    return P.y() * P.y() == (x * x + a4_) * x + a6_;
}

CurvePoint EllipticCurve::point(const FieldElement& x, const FieldElement& y) const
{
    CurvePoint P(x, y);
    if (!contains(P))
        throw Error(Errc::not_on_curve, "point " + P.to_string() + " is not on the curve");
    return P;
}

CurvePoint EllipticCurve::random_point(Rng& rng) const
{
    UncountedScope quiet;
    std::uniform_int_distribution<int> coin(0, 1);
    for (;;)
    {
        const auto x = field().random(rng);
        const auto rhs = (x * x + a4_) * x + a6_;
        if (auto y = sqrt(rhs, rng()))
        {
            if (y->is_zero())
                return CurvePoint(x, *y);
            return CurvePoint(x, coin(rng) ? *y : -*y);
        }
    }
}

std::vector<CurvePoint> EllipticCurve::points() const
{
    UncountedScope quiet;
    const auto q = field().order();
    if (q > 1000000)
        throw Error(Errc::precondition, "point enumeration only supports small fields");
    std::vector<CurvePoint> out{CurvePoint::infinity()};
    const auto n = static_cast<std::uint64_t>(q);
    for (std::uint64_t i = 0; i < n; ++i)
    {
        const auto x = field().from_index(i);
        const auto rhs = (x * x + a4_) * x + a6_;
        if (auto y = sqrt(rhs))
        {
            out.emplace_back(x, *y);
            if (!y->is_zero())
                out.emplace_back(x, -*y);
        }
    }
    return out;
}

FieldElement Chord::eval(const CurvePoint& W) const
{
    switch (kind)
    {
    case Kind::none: return W.x().field().one();
    case Kind::vertical: return W.x() - *x0;
    case Kind::sloped: return W.y() - *y0 - *lambda * (W.x() - *x0);
    }
    return W.x().field().one();
}

std::pair<FieldElement, FieldElement> Chord::eval_pm(const CurvePoint& W) const
{
    switch (kind)
    {
    case Kind::none: return {W.x().field().one(), W.x().field().one()};
    case Kind::vertical:
    {
        auto v = W.x() - *x0;
        return {v, v};
    }
    case Kind::sloped:
    {
        const auto s = *y0 + *lambda * (W.x() - *x0);
        return {W.y() - s, -W.y() - s};
    }
    }
    return {W.x().field().one(), W.x().field().one()};
}

LineCoeffs Chord::coeffs(const Field& F) const
{
    UncountedScope quiet;
    switch (kind)
    {
    case Kind::none: return {F.one(), F.zero(), F.zero()};
    case Kind::vertical: return {-*x0, F.one(), F.zero()};
    case Kind::sloped: return {*lambda * *x0 - *y0, -*lambda, F.one()};
    }
    return {F.one(), F.zero(), F.zero()};
}

AddResult ec_add_chord(const EllipticCurve& E, const CurvePoint& U, const CurvePoint& V)
{
    AddResult r{CurvePoint::infinity(), {}, false};
    if (U.is_infinity() && V.is_infinity())
        return r;
    if (U.is_infinity() || V.is_infinity())
    {
        const CurvePoint& W = U.is_infinity() ? V : U;
        r.sum = W;
        r.chord.kind = Chord::Kind::vertical;
        r.chord.x0 = W.x();
        return r;
    }
    const auto& x1 = U.x();
    const auto& y1 = U.y();
    const auto& x2 = V.x();
    const auto& y2 = V.y();
    if (x1 == x2)
    {
        if (y1 != y2 || y1.is_zero())
        {
            // U == -V: vertical line, sum O.
            r.chord.kind = Chord::Kind::vertical;
            r.chord.x0 = x1;
            return r;
        }
        // Tangent: 3 mul + 1 div.
        const auto xx = x1 * x1;
        const auto lambda = (xx + xx + xx + E.a4()) / (y1 + y1);
        const auto x3 = lambda * lambda - x1 - x1;
        const auto y3 = lambda * (x1 - x3) - y1;
        r.sum = CurvePoint(x3, y3);
        r.chord = {Chord::Kind::sloped, lambda, x1, y1};
        r.generic = true;
        return r;
    }
    // Chord: 2 mul + 1 div.
    const auto lambda = (y2 - y1) / (x2 - x1);
    const auto x3 = lambda * lambda - x1 - x2;
    const auto y3 = lambda * (x1 - x3) - y1;
    r.sum = CurvePoint(x3, y3);
    r.chord = {Chord::Kind::sloped, lambda, x1, y1};
    r.generic = true;
    return r;
}

CurvePoint ec_add(const EllipticCurve& E, const CurvePoint& U, const CurvePoint& V)
{
    return ec_add_chord(E, U, V).sum;
}

CurvePoint ec_double(const EllipticCurve& E, const CurvePoint& U) { return ec_add_chord(E, U, U).sum; }

CurvePoint ec_neg(const CurvePoint& U)
{
    if (U.is_infinity())
        return U;
    return CurvePoint(U.x(), -U.y());
}

CurvePoint ec_sub(const EllipticCurve& E, const CurvePoint& U, const CurvePoint& V)
{
    return ec_add(E, U, ec_neg(V));
}

CurvePoint ec_scalar_mul(const EllipticCurve& E, std::int64_t n, const CurvePoint& U)
{
    if (n == 0 || U.is_infinity())
        return CurvePoint::infinity();
    const std::uint64_t a = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    const auto chain = build_chain(a, ChainPolicy::naf);
    std::vector<CurvePoint> entries{U};
    for (const auto& s : chain)
    {
        const auto& L = entries[s.left];
        const auto& R = entries[s.right];
        switch (s.kind)
        {
        case StepKind::double_: entries.push_back(ec_double(E, L)); break;
        case StepKind::add: entries.push_back(ec_add(E, L, R)); break;
        case StepKind::subtract: entries.push_back(ec_sub(E, L, R)); break;
        }
    }
    return n < 0 ? ec_neg(entries.back()) : entries.back();
}

CurvePoint ec_scalar_mul(const EllipticCurve& E, const BigInt& n, const CurvePoint& U)
{
    if (n == 0 || U.is_infinity())
        return CurvePoint::infinity();
    const BigInt a = n < 0 ? BigInt(-n) : n;
    CurvePoint acc = CurvePoint::infinity();
    for (long i = static_cast<long>(boost::multiprecision::msb(a)); i >= 0; --i)
    {
        acc = ec_double(E, acc);
        if (boost::multiprecision::bit_test(a, static_cast<unsigned>(i)))
            acc = ec_add(E, acc, U);
    }
    return n < 0 ? ec_neg(acc) : acc;
}

LineCoeffs line_through(const EllipticCurve& E, const CurvePoint& U, const CurvePoint& V)
{
    if (U.is_infinity() && V.is_infinity())
        throw Error(Errc::degenerate_line, "no line through O and O");
    UncountedScope quiet;
    return ec_add_chord(E, U, V).chord.coeffs(E.field());
}

FieldElement eval_line(const LineCoeffs& L, const CurvePoint& W)
{
    if (W.is_infinity())
        throw Error(Errc::infinity_evaluation, "cannot evaluate a line at O");
    return L.c0 + L.c1 * W.x() + L.c2 * W.y();
}

}  // namespace pairlab
