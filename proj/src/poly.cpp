// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/poly.hpp"

#include <algorithm>
#include <sstream>

namespace pairlab
{
Poly::Poly(Field field, std::vector<FieldElement> coeffs) : field_(std::move(field)), c_(std::move(coeffs))
{
    for (const auto& c : c_)
        if (!c.field().same_as(field_))
            throw Error(Errc::param_mismatch, "coefficient from a different field");
    trim();
}

Poly Poly::from_ints(const Field& field, std::initializer_list<std::int64_t> coeffs)
{
    return from_ints(field, std::vector<std::int64_t>(coeffs));
}

Poly Poly::from_ints(const Field& field, const std::vector<std::int64_t>& coeffs)
{
    std::vector<FieldElement> c;
    c.reserve(coeffs.size());
    for (auto v : coeffs)
        c.push_back(field.element(v));
    return Poly(field, std::move(c));
}

Poly Poly::constant(const FieldElement& c) { return Poly(c.field(), {c}); }

Poly Poly::linear_root(const FieldElement& r)
{
    UncountedScope quiet;
    return Poly(r.field(), {-r, r.field().one()});
}

Poly Poly::x(const Field& field) { return Poly(field, {field.zero(), field.one()}); }

void Poly::trim()
{
    while (!c_.empty() && c_.back().is_zero())
        c_.pop_back();
}

FieldElement Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

const FieldElement& Poly::lead() const
{
    if (c_.empty())
        throw Error(Errc::precondition, "zero polynomial has no leading coefficient");
    return c_.back();
}

Poly& Poly::operator+=(const Poly& o)
{
    if (!field_.same_as(o.field_))
        throw Error(Errc::param_mismatch, "polynomials over different fields");
    const std::size_t n = std::min(c_.size(), o.c_.size());
    for (std::size_t i = 0; i < n; ++i)
        c_[i] += o.c_[i];
    for (std::size_t i = c_.size(); i < o.c_.size(); ++i)
        c_.push_back(o.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o)
{
    if (!field_.same_as(o.field_))
        throw Error(Errc::param_mismatch, "polynomials over different fields");
    const std::size_t n = std::min(c_.size(), o.c_.size());
    for (std::size_t i = 0; i < n; ++i)
        c_[i] -= o.c_[i];
    for (std::size_t i = c_.size(); i < o.c_.size(); ++i)
        c_.push_back(-o.c_[i]);
    trim();
    return *this;
}

Poly& Poly::operator*=(const Poly& o)
{
    if (!field_.same_as(o.field_))
        throw Error(Errc::param_mismatch, "polynomials over different fields");
    if (c_.empty() || o.c_.empty())
    {
        c_.clear();
        return *this;
    }
    std::vector<FieldElement> r(c_.size() + o.c_.size() - 1, field_.zero());
    std::vector<bool> touched(r.size(), false);
    for (std::size_t i = 0; i < c_.size(); ++i)
    {
        for (std::size_t j = 0; j < o.c_.size(); ++j)
        {
            // Multiplications by 1 are free (monic leading terms).
            FieldElement t = c_[i].is_one() ? o.c_[j] : o.c_[j].is_one() ? c_[i] : c_[i] * o.c_[j];
            if (touched[i + j])
                r[i + j] += t;
            else
            {
                r[i + j] = std::move(t);
                touched[i + j] = true;
            }
        }
    }
    c_ = std::move(r);
    trim();
    return *this;
}

Poly& Poly::operator*=(const FieldElement& s)
{
    if (s.is_zero())
    {
        c_.clear();
        return *this;
    }
    if (s.is_one())
        return *this;
    for (auto& c : c_)
        c *= s;
    return *this;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& c : r.c_)
        c = -c;
    return r;
}

std::string Poly::to_string() const
{
    if (c_.empty())
        return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i)
    {
        if (i)
            os << ",";
        os << c_[i].to_string();
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& u) { return os << u.to_string(); }

std::pair<Poly, Poly> poly_divmod(const Poly& u, const Poly& v)
{
    if (v.is_zero())
        throw Error(Errc::division_by_zero, "polynomial division by zero");
    if (!u.field().same_as(v.field()))
        throw Error(Errc::param_mismatch, "polynomials over different fields");
    const Field& F = u.field();
    if (u.degree() < v.degree())
        return {Poly(F), u};
    std::vector<FieldElement> rem = u.coeffs();
    const auto& vc = v.coeffs();
    const std::size_t dv = vc.size() - 1;
    std::vector<FieldElement> q(rem.size() - dv, F.zero());
    const bool v_monic = v.is_monic();
    const FieldElement lead_inv = v_monic ? F.one() : inv(v.lead());
    for (std::size_t k = rem.size(); k-- > dv;)
    {
        const FieldElement c = v_monic ? rem[k] : rem[k] * lead_inv;
        q[k - dv] = c;
        if (c.is_zero())
            continue;
        for (std::size_t i = 0; i < dv; ++i)
            rem[k - dv + i] -= c * vc[i];
        rem[k] = F.zero();
    }
    rem.resize(dv, F.zero());
    return {Poly(F, std::move(q)), Poly(F, std::move(rem))};
}

Poly poly_mod(const Poly& u, const Poly& v) { return poly_divmod(u, v).second; }

Poly monic(const Poly& u)
{
    if (u.is_zero() || u.is_monic())
        return u;
    return u * inv(u.lead());
}

Poly poly_gcd(const Poly& u, const Poly& v)
{
    if (u.is_zero() && v.is_zero())
        throw Error(Errc::undefined_gcd, "gcd(0, 0) is undefined");
    Poly a = u, b = v;
    while (!b.is_zero())
    {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

XgcdResult poly_xgcd(const Poly& u, const Poly& v)
{
    if (u.is_zero() && v.is_zero())
        throw Error(Errc::undefined_gcd, "gcd(0, 0) is undefined");
    const Field& F = u.field();
    Poly r0 = u, r1 = v;
    Poly s0 = Poly::constant(F.one()), s1(F);
    Poly t0(F), t1 = Poly::constant(F.one());
    while (!r1.is_zero())
    {
        auto [q, r] = poly_divmod(r0, r1);
        Poly s2 = s0 - q * s1;
        Poly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (!r0.is_monic())
    {
        const FieldElement li = inv(r0.lead());
        r0 *= li;
        s0 *= li;
        t0 *= li;
    }
    return {std::move(r0), std::move(s0), std::move(t0)};
}

FieldElement poly_eval(const Poly& u, const FieldElement& x0)
{
    if (u.is_zero())
        return x0.field().zero();
    const auto& c = u.coeffs();
    FieldElement acc = c.back();
    for (std::size_t i = c.size() - 1; i-- > 0;)
    {
        acc *= x0;
        acc += c[i];
    }
    return acc;
}

Poly derivative(const Poly& u)
{
    if (u.degree() < 1)
        return Poly(u.field());
    std::vector<FieldElement> d;
    for (std::size_t i = 1; i < u.coeffs().size(); ++i)
        d.push_back(u.coeffs()[i] * u.field().element(static_cast<std::int64_t>(i)));
    return Poly(u.field(), std::move(d));
}

Poly poly_powmod(const Poly& base, const BigInt& e, const Poly& m)
{
    Poly r = poly_mod(Poly::constant(base.field().one()), m);
    if (e == 0)
        return r;
    Poly b = poly_mod(base, m);
    const auto bits = static_cast<long>(boost::multiprecision::msb(e));
    for (long i = bits; i >= 0; --i)
    {
        r = poly_mod(r * r, m);
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i)))
            r = poly_mod(r * b, m);
    }
    return r;
}

namespace
{
/// Splits a monic product of distinct linear factors into its roots.
void split_linear(const Poly& g, Rng& rng, std::vector<FieldElement>& out)
{
    const Field& F = g.field();
    if (g.degree() <= 0)
        return;
    if (g.degree() == 1)
    {
        out.push_back(-g.coeff(0));
        return;
    }
    const BigInt half = (F.order() - 1) / 2;
    for (;;)
    {
        Poly probe(F, {F.random(rng), F.one()});
        Poly h = poly_powmod(probe, half, g) - Poly::constant(F.one());
        if (h.is_zero())
            continue;
        Poly d = poly_gcd(h, g);
        if (d.degree() > 0 && d.degree() < g.degree())
        {
            split_linear(d, rng, out);
            split_linear(poly_divmod(g, d).first, rng, out);
            return;
        }
    }
}
}  // namespace

std::vector<FieldElement> poly_roots(const Poly& u, std::uint64_t seed)
{
    UncountedScope quiet;
    if (u.is_zero())
        throw Error(Errc::precondition, "roots of the zero polynomial");
    const Field& F = u.field();
    std::vector<FieldElement> roots;
    if (u.degree() == 0)
        return roots;
    Poly um = monic(u);
    Poly x = Poly::x(F);
    Poly xq = poly_powmod(x, F.order(), um);
    Poly g = poly_gcd(xq - x, um);
    Rng rng(seed);
    std::vector<FieldElement> distinct;
    split_linear(g, rng, distinct);
    for (const auto& r : distinct)
    {
        Poly lin = Poly::linear_root(r);
        Poly rest = um;
        for (;;)
        {
            auto [q, rem] = poly_divmod(rest, lin);
            if (!rem.is_zero())
                break;
            roots.push_back(r);
            rest = std::move(q);
        }
    }
    std::sort(roots.begin(), roots.end(), [](const FieldElement& a, const FieldElement& b) {
        return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(),
                                            b.coeffs().rend());
    });
    return roots;
}

}  // namespace pairlab
