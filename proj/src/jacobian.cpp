// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/jacobian.hpp"

#include "pairlab/chain.hpp"
#include "pairlab/parse.hpp"

#include <optional>
#include <sstream>

namespace pairlab
{
namespace
{
thread_local std::size_t comp_a_eval_count = 0;

Poly one_poly(const Field& F) { return Poly::constant(F.one()); }

/// s = w / r mod e for linear r, w and monic quadratic e; nullopt when r is
/// not invertible modulo e. 10 mul + 1 inv.
struct Linear
{
    FieldElement c1;
    FieldElement c0;
};

std::optional<Linear> solve_mod_quadratic(const Linear& r, const Linear& w, const FieldElement& e1,
    const FieldElement& e0)
{
    const auto t1 = r.c1 * e1;
    const auto t2 = r.c1 * e0;
    const auto u = r.c0 - t1;
    const auto det = u * r.c0 + r.c1 * t2;
    if (det.is_zero())
        return std::nullopt;
    const auto di = inv(det);
    const auto s1 = (w.c1 * r.c0 - r.c1 * w.c0) * di;
    const auto s0 = (u * w.c0 + t2 * w.c1) * di;
    return Linear{s1, s0};
}

/// Reduction of a composed (a, b) with deg a = 4 and deg b = 3. The top two
/// coefficients of a are passed as A3, A2. Returns nullopt when b3 = 0.
/// 11 mul + 1 inv.
std::optional<MumfordDivisor> reduce_quartic(const HyperCurve& C, const Poly& b, const FieldElement& A3,
    const FieldElement& A2)
{
    const Field& F = C.field();
    const auto b3 = b.coeff(3);
    if (b3.is_zero())
        return std::nullopt;
    const auto b2 = b.coeff(2);
    const auto b1 = b.coeff(1);
    const auto b0 = b.coeff(0);
    const auto f4 = C.f().coeff(4);
    const auto Linv = inv(-(b3 * b3));
    const auto t = b3 * b2;
    const auto g1 = (F.one() - (t + t)) * Linv - A3;
    const auto v = b3 * b1;
    const auto g0 = (f4 - b2 * b2 - (v + v)) * Linv - A2 - A3 * g1;
    // b mod (x^2 + g1 x + g0), then negate.
    const auto h2 = b2 - b3 * g1;
    const auto h1 = b1 - b3 * g0;
    const auto r1 = h1 - h2 * g1;
    const auto r0 = b0 - h2 * g0;
    return MumfordDivisor{Poly(F, {g0, g1, F.one()}), Poly(F, {-r0, -r1})};
}

/// b + a*s for monic quadratic a and linear s. 4 mul.
Poly compose_b(const Poly& b, const Poly& a, const Linear& s)
{
    const Field& F = a.field();
    const auto c1 = a.coeff(1);
    const auto c0 = a.coeff(0);
    return Poly(F, {b.coeff(0) + c0 * s.c0, b.coeff(1) + c1 * s.c0 + c0 * s.c1, c1 * s.c1 + s.c0, s.c1});
}

std::optional<CompositionOutput> fast_add(const HyperCurve& C, const MumfordDivisor& Di, const MumfordDivisor& Dj)
{
    const Field& F = C.field();
    const auto c1 = Di.a.coeff(1);
    const auto c0 = Di.a.coeff(0);
    const auto e1 = Dj.a.coeff(1);
    const auto e0 = Dj.a.coeff(0);
    // s = (b_j - b_i) / a_i mod a_j, where a_i = a_i - a_j mod a_j.
    const Linear r{c1 - e1, c0 - e0};
    const Linear w{Dj.b.coeff(1) - Di.b.coeff(1), Dj.b.coeff(0) - Di.b.coeff(0)};
    const auto s = solve_mod_quadratic(r, w, e1, e0);
    if (!s)
        return std::nullopt;
    Poly b = compose_b(Di.b, Di.a, *s);
    const auto red = reduce_quartic(C, b, c1 + e1, c0 + e0 + c1 * e1);
    if (!red)
        return std::nullopt;
    return CompositionOutput(*red, std::move(b), one_poly(F), true, true, false, Di.a, Dj.a);
}

std::optional<CompositionOutput> fast_double(const HyperCurve& C, const MumfordDivisor& D)
{
    const Field& F = C.field();
    const auto a1 = D.a.coeff(1);
    const auto a0 = D.a.coeff(0);
    const auto b1 = D.b.coeff(1);
    const auto b0 = D.b.coeff(0);
    // h = f - b^2, then k = (h / a) mod a. The quotient is read off the top
    // coefficients of h since the division is exact.
    const auto cross = b1 * b0;
    const Poly h = C.f() - Poly(F, {b0 * b0, cross + cross, b1 * b1});
    const auto q2 = h.coeff(4) - a1;
    const auto q1 = h.coeff(3) - a1 * q2 - a0;
    const auto q0 = h.coeff(2) - a1 * q1 - a0 * q2;
    const auto t = q2 - a1;
    const Linear k{q1 - a0 - t * a1, q0 - t * a0};
    const Linear r{b1 + b1, b0 + b0};
    const auto s = solve_mod_quadratic(r, k, a1, a0);
    if (!s)
        return std::nullopt;
    Poly b = compose_b(D.b, D.a, *s);
    const auto red = reduce_quartic(C, b, a1 + a1, a1 * a1 + (a0 + a0));
    if (!red)
        return std::nullopt;
    return CompositionOutput(*red, std::move(b), one_poly(F), true, true, true, D.a, D.a);
}

CompositionOutput general_compose(const HyperCurve& C, const MumfordDivisor& Di, const MumfordDivisor& Dj)
{
    const Field& F = C.field();
    const auto& f = C.f();
    const auto [d1, e1, e2] = poly_xgcd(Di.a, Dj.a);
    const auto [d, c1, c2] = poly_xgcd(d1, Di.b + Dj.b);
    const Poly s1 = c1 * e1;
    const Poly s2 = c1 * e2;
    const Poly& s3 = c2;
    const Poly a = poly_divmod(Di.a * Dj.a, d * d).first;
    const Poly num = s1 * Di.a * Dj.b + s2 * Dj.a * Di.b + s3 * (Di.b * Dj.b + f);
    const Poly b = poly_mod(poly_divmod(num, d).first, a);
    const bool doubling = Di == Dj;
    if (a.degree() <= 2)
        return CompositionOutput(MumfordDivisor{a, b}, b, d, false, false, doubling, Di.a, Dj.a);
    const Poly at = monic(poly_divmod(f - b * b, a).first);
    Poly bt = at.degree() == 0 ? Poly(F) : poly_mod(-b, at);
    return CompositionOutput(MumfordDivisor{at, std::move(bt)}, b, d, true, false, doubling, Di.a, Dj.a);
}

}  // namespace

HyperCurve::HyperCurve(Poly f) : f_(std::move(f))
{
    UncountedScope quiet;
    if (f_.field().characteristic() == 2)
        throw Error(Errc::invalid_curve, "characteristic 2 is not supported");
    if (f_.degree() != 5)
        throw Error(Errc::invalid_curve, "f must have degree 5");
    if (!f_.is_monic())
        throw Error(Errc::invalid_curve, "f must be monic");
    if (poly_gcd(f_, derivative(f_)).degree() != 0)
        throw Error(Errc::invalid_curve, "f must be squarefree");
}

HyperCurve HyperCurve::from_ints(const Field& field, const std::vector<std::int64_t>& coeffs)
{
    if (coeffs.size() != 6)
        throw Error(Errc::invalid_curve, "f needs six coefficients");
    return HyperCurve(Poly::from_ints(field, coeffs));
}

bool HyperCurve::contains(const FieldElement& x, const FieldElement& y, const FieldEmbedding& emb) const
{
    UncountedScope quiet;
    return y * y == poly_eval(emb.lift(f_), x);
}

MumfordDivisor MumfordDivisor::identity(const Field& field) { return {one_poly(field), Poly(field)}; }

std::string MumfordDivisor::to_string() const
{
    std::ostringstream os;
    auto list = [&os](const Poly& u) {
        if (u.is_zero())
        {
            os << '0';
            return;
        }
        for (std::size_t i = 0; i < u.coeffs().size(); ++i)
            os << (i ? "," : "") << u.coeffs()[i].to_string();
    };
    list(a);
    os << ';';
    list(b);
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const MumfordDivisor& D) { return os << D.to_string(); }

bool is_valid_divisor(const HyperCurve& C, const MumfordDivisor& D)
{
    UncountedScope quiet;
    const Field& F = C.field();
    if (!D.a.field().same_as(F) || !D.b.field().same_as(F))
        return false;
    if (!D.a.is_monic() || D.a.degree() > 2 || D.b.degree() >= D.a.degree())
        return false;
    return poly_mod(D.b * D.b - C.f(), D.a).is_zero();
}

MumfordDivisor make_divisor(const HyperCurve& C, Poly a, Poly b)
{
    MumfordDivisor D{std::move(a), std::move(b)};
    if (!is_valid_divisor(C, D))
        throw Error(Errc::not_on_curve, "(" + D.to_string() + ") is not a reduced divisor on the curve");
    return D;
}

MumfordDivisor make_divisor(
    const HyperCurve& C, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b)
{
    return make_divisor(C, Poly::from_ints(C.field(), a), Poly::from_ints(C.field(), b));
}

MumfordDivisor parse_divisor(const HyperCurve& C, std::string_view text)
{
    const auto semi = text.find(';');
    if (semi == std::string_view::npos)
        throw Error(Errc::parse_error, "divisor must look like 'a0,a1,...;b0,b1,...'");
    const Field& F = C.field();
    // Each coefficient takes k integers; a lone 0 is the zero polynomial.
    auto to_poly = [&F](const std::vector<std::int64_t>& v) {
        const std::size_t k = F.degree();
        if (v.size() == 1 && v[0] == 0)
            return Poly(F);
        if (v.size() % k != 0)
            throw Error(Errc::parse_error, "coefficient list length must be a multiple of k");
        std::vector<FieldElement> c;
        for (std::size_t i = 0; i < v.size(); i += k)
        {
            std::vector<std::uint64_t> digits;
            for (std::size_t j = 0; j < k; ++j)
                digits.push_back(F.element(v[i + j]).coeffs()[0]);
            c.push_back(F.element(digits));
        }
        return Poly(F, std::move(c));
    };
    const auto a = parse_int_list(text.substr(0, semi));
    if (a.empty())
        throw Error(Errc::parse_error, "divisor needs a non-empty a");
    return make_divisor(C, to_poly(a), to_poly(parse_int_list(text.substr(semi + 1))));
}

CompositionOutput::CompositionOutput(MumfordDivisor result_, Poly comp_b_, Poly gcd_d_, bool reduced_, bool generic_,
    bool doubling_, Poly ai, Poly aj)
  : result(std::move(result_)),
    comp_b(std::move(comp_b_)),
    gcd_d(std::move(gcd_d_)),
    reduced(reduced_),
    generic(generic_),
    doubling(doubling_),
    ai_(std::move(ai)),
    aj_(std::move(aj))
{}

Poly CompositionOutput::comp_a() const
{
    UncountedScope quiet;
    return poly_divmod(ai_ * aj_, gcd_d * gcd_d).first;
}

FieldElement CompositionOutput::eval_comp_a(const FieldElement& x, const FieldEmbedding& emb) const
{
    ++comp_a_eval_count;
    const auto vi = eval_monic(emb.lift(ai_), x);
    FieldElement v = doubling ? vi * vi : vi * eval_monic(emb.lift(aj_), x);
    if (gcd_d.degree() > 0)
    {
        const auto vd = eval_monic(emb.lift(gcd_d), x);
        v /= vd * vd;
    }
    return v;
}

std::size_t comp_a_evaluations() noexcept { return comp_a_eval_count; }

FieldElement eval_monic(const Poly& u, const FieldElement& x)
{
    if (u.degree() <= 0)
        return u.is_zero() ? x.field().zero() : u.coeff(0);
    if (!u.is_monic())
        throw Error(Errc::precondition, "eval_monic needs a monic polynomial");
    const auto& c = u.coeffs();
    FieldElement acc = x + c[c.size() - 2];
    for (std::size_t i = c.size() - 2; i-- > 0;)
    {
        acc *= x;
        acc += c[i];
    }
    return acc;
}

CompositionOutput jac_compose(const HyperCurve& C, const MumfordDivisor& Di, const MumfordDivisor& Dj)
{
    if (Di.a.degree() == 2 && Dj.a.degree() == 2)
    {
        auto fast = Di == Dj ? fast_double(C, Di) : fast_add(C, Di, Dj);
        if (fast)
            return std::move(*fast);
    }
    return general_compose(C, Di, Dj);
}

MumfordDivisor jac_add(const HyperCurve& C, const MumfordDivisor& Di, const MumfordDivisor& Dj)
{
    return jac_compose(C, Di, Dj).result;
}

MumfordDivisor jac_double(const HyperCurve& C, const MumfordDivisor& D) { return jac_compose(C, D, D).result; }

MumfordDivisor jac_neg(const HyperCurve&, const MumfordDivisor& D) { return {D.a, -D.b}; }

MumfordDivisor jac_sub(const HyperCurve& C, const MumfordDivisor& Di, const MumfordDivisor& Dj)
{
    return jac_add(C, Di, jac_neg(C, Dj));
}

MumfordDivisor jac_scalar_mul(const HyperCurve& C, std::int64_t n, const MumfordDivisor& D)
{
    if (n == 0 || D.is_identity())
        return MumfordDivisor::identity(C.field());
    const std::uint64_t m = n < 0 ? 0 - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
    const auto chain = build_chain(m, ChainPolicy::naf);
    std::vector<MumfordDivisor> entries{D};
    for (const auto& s : chain)
    {
        const auto& L = entries[s.left];
        const auto& R = entries[s.right];
        entries.push_back(s.kind == StepKind::subtract ? jac_sub(C, L, R) : jac_add(C, L, R));
    }
    return n < 0 ? jac_neg(C, entries.back()) : entries.back();
}

MumfordDivisor jac_scalar_mul(const HyperCurve& C, const BigInt& n, const MumfordDivisor& D)
{
    if (n == 0 || D.is_identity())
        return MumfordDivisor::identity(C.field());
    const BigInt m = n < 0 ? BigInt(-n) : n;
    MumfordDivisor acc = MumfordDivisor::identity(C.field());
    for (long i = static_cast<long>(boost::multiprecision::msb(m)); i >= 0; --i)
    {
        acc = jac_double(C, acc);
        if (boost::multiprecision::bit_test(m, static_cast<unsigned>(i)))
            acc = jac_add(C, acc, D);
    }
    return n < 0 ? jac_neg(C, acc) : acc;
}

unsigned support_degree(const HyperCurve& C, const MumfordDivisor& D)
{
    UncountedScope quiet;
    if (D.a.degree() <= 1)
        return 1;
    const auto roots = poly_roots(D.a);
    (void)C;
    return roots.size() == static_cast<std::size_t>(D.a.degree()) ? 1 : 2;
}

std::vector<HecPoint> divisor_points(const HyperCurve& C, const MumfordDivisor& D, const FieldEmbedding& emb)
{
    UncountedScope quiet;
    std::vector<HecPoint> out;
    if (D.is_identity())
        return out;
    const Poly a = emb.lift(D.a);
    const Poly b = emb.lift(D.b);
    const auto roots = poly_roots(a);
    if (roots.size() != static_cast<std::size_t>(a.degree()))
    {
        const unsigned deg = support_degree(C, D);
        throw NeedsFieldExtension(deg, "support of the divisor needs an extension of degree " + std::to_string(deg));
    }
    for (const auto& x : roots)
        out.push_back({x, poly_eval(b, x)});
    return out;
}

std::vector<HecPoint> divisor_points(const HyperCurve& C, const MumfordDivisor& D)
{
    return divisor_points(C, D, FieldEmbedding::identity(C.field()));
}

HecPoint random_curve_point(const HyperCurve& C, Rng& rng)
{
    UncountedScope quiet;
    std::uniform_int_distribution<int> coin(0, 1);
    for (;;)
    {
        const auto x = C.field().random(rng);
        if (auto y = sqrt(poly_eval(C.f(), x), rng()))
            return {x, coin(rng) ? *y : -*y};
    }
}

MumfordDivisor random_divisor(const HyperCurve& C, Rng& rng)
{
    UncountedScope quiet;
    for (;;)
    {
        const auto P = random_curve_point(C, rng);
        const auto Q = random_curve_point(C, rng);
        const MumfordDivisor DP{Poly::linear_root(P.x), Poly::constant(P.y)};
        const MumfordDivisor DQ{Poly::linear_root(Q.x), Poly::constant(Q.y)};
        auto D = jac_add(C, DP, DQ);
        if (D.a.degree() == 2)
            return D;
    }
}

MumfordDivisor random_divisor(const HyperCurve& C, std::uint64_t seed)
{
    Rng rng(seed);
    return random_divisor(C, rng);
}

BigInt jacobian_order(const HyperCurve& C)
{
    UncountedScope quiet;
    const Field& F = C.field();
    const BigInt q = F.order();
    if (q * q >= 10000000)
        throw Error(Errc::precondition, "point counting only supports small fields");
    auto count = [](const Poly& f, const Field& K) {
        const auto n = static_cast<std::uint64_t>(K.order());
        BigInt N = 1;
        for (std::uint64_t i = 0; i < n; ++i)
        {
            const auto v = poly_eval(f, K.from_index(i));
            N += v.is_zero() ? 1 : (is_square(v) ? 2 : 0);
        }
        return N;
    };
    const Field K = quadratic_extension(F);
    const BigInt N1 = count(C.f(), F);
    const BigInt N2 = count(FieldEmbedding(F, K).lift(C.f()), K);
    const BigInt a1 = N1 - q - 1;
    const BigInt a2 = (N2 - q * q - 1 + a1 * a1) / 2;
    return 1 + a1 + a2 + q * a1 + q * q;
}

}  // namespace pairlab
