// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pairlab/embedding.hpp"
#include "pairlab/poly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace pairlab
{
/// y^2 = f(x) with f monic of degree 5 and squarefree, odd characteristic.
class HyperCurve
{
public:
    /// Throws InvalidCurve for anything other than a monic squarefree quintic.
    explicit HyperCurve(Poly f);

    /// Coefficients constant term first, six of them.
    static HyperCurve from_ints(const Field& field, const std::vector<std::int64_t>& coeffs);

    const Field& field() const noexcept { return f_.field(); }
    const Poly& f() const noexcept { return f_; }
    int genus() const noexcept { return 2; }

    /// Checks y^2 = f(x) for a point whose coordinates live in emb.target().
    bool contains(const FieldElement& x, const FieldElement& y, const FieldEmbedding& emb) const;

private:
    Poly f_;
};

/// Affine point of C over some extension of the curve's field.
struct HecPoint
{
    FieldElement x;
    FieldElement y;

    /// (x, -y)
    HecPoint conjugate() const { return {x, -y}; }
};

/// Mumford pair (a, b): a monic with deg a <= 2, deg b < deg a, b^2 = f mod a.
struct MumfordDivisor
{
    Poly a;
    Poly b;

    static MumfordDivisor identity(const Field& field);

    bool is_identity() const noexcept { return a.degree() == 0; }

    /// "a0,a1,...;b0,b1,..." with constant terms first.
    std::string to_string() const;

    friend bool operator==(const MumfordDivisor&, const MumfordDivisor&) = default;
};

std::ostream& operator<<(std::ostream& os, const MumfordDivisor& D);

bool is_valid_divisor(const HyperCurve& C, const MumfordDivisor& D);

/// Validates; throws NotOnCurve when the pair is not a reduced divisor of C.
MumfordDivisor make_divisor(const HyperCurve& C, Poly a, Poly b);
MumfordDivisor make_divisor(
    const HyperCurve& C, const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b);

/// Parses the "a;b" text form. Throws ParseError or NotOnCurve.
MumfordDivisor parse_divisor(const HyperCurve& C, std::string_view text);

/// One Cantor step, with the unreduced pieces kept for the pairing.
class CompositionOutput
{
public:
    CompositionOutput(MumfordDivisor result, Poly comp_b, Poly gcd_d, bool reduced, bool generic, bool doubling,
        Poly ai, Poly aj);

    MumfordDivisor result;
    /// b of the composed divisor before reduction; deg < deg comp_a.
    Poly comp_b;
    /// gcd(a_i, a_j, b_i + b_j), monic.
    Poly gcd_d;
    /// A reduction step ran (deg comp_a > 2).
    bool reduced;
    /// Taken on the fast path: both inputs of degree 2, gcd_d = 1 and a
    /// reduction producing a degree 2 output.
    bool generic;
    bool doubling;

    /// a_i a_j / d^2, formed on demand. Not part of the step cost.
    Poly comp_a() const;

    /// comp_a at x using the factored form a_i(x) a_j(x) / d(x)^2. Monic
    /// quadratics cost one multiplication each; a doubling squares once.
    FieldElement eval_comp_a(const FieldElement& x, const FieldEmbedding& emb) const;

private:
    Poly ai_;
    Poly aj_;
};

/// Running count of eval_comp_a calls on this thread.
std::size_t comp_a_evaluations() noexcept;

/// Cantor composition followed by at most one reduction. Generic additions
/// cost 26 mul + 2 inv and generic doublings 34 mul + 2 inv.
CompositionOutput jac_compose(const HyperCurve& C, const MumfordDivisor& Di, const MumfordDivisor& Dj);

MumfordDivisor jac_add(const HyperCurve& C, const MumfordDivisor& Di, const MumfordDivisor& Dj);
MumfordDivisor jac_double(const HyperCurve& C, const MumfordDivisor& D);
MumfordDivisor jac_neg(const HyperCurve& C, const MumfordDivisor& D);
MumfordDivisor jac_sub(const HyperCurve& C, const MumfordDivisor& Di, const MumfordDivisor& Dj);
MumfordDivisor jac_scalar_mul(const HyperCurve& C, std::int64_t n, const MumfordDivisor& D);
MumfordDivisor jac_scalar_mul(const HyperCurve& C, const BigInt& n, const MumfordDivisor& D);

/// The points (x_r, b(x_r)) over the roots of a, with multiplicity, as
/// elements of emb.target(). Throws NeedsFieldExtension carrying the degree
/// over the curve's field that the roots require.
std::vector<HecPoint> divisor_points(const HyperCurve& C, const MumfordDivisor& D, const FieldEmbedding& emb);
std::vector<HecPoint> divisor_points(const HyperCurve& C, const MumfordDivisor& D);

/// Degree over the curve's field of the smallest extension holding the
/// support of D (1 or 2; 1 for the identity).
unsigned support_degree(const HyperCurve& C, const MumfordDivisor& D);

/// Sum of two random affine points, redrawn until deg a = 2.
MumfordDivisor random_divisor(const HyperCurve& C, Rng& rng);
MumfordDivisor random_divisor(const HyperCurve& C, std::uint64_t seed);

/// Random affine point of C over its own field.
HecPoint random_curve_point(const HyperCurve& C, Rng& rng);

/// #J(F_q) from point counts over F_q and F_{q^2}; q^2 must stay below 10^7.
BigInt jacobian_order(const HyperCurve& C);

/// Evaluates a monic polynomial by Horner, skipping the multiplication by
/// the leading one.
FieldElement eval_monic(const Poly& u, const FieldElement& x);

}  // namespace pairlab
