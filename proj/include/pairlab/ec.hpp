// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pairlab/field.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pairlab
{
/// Affine point or the point at infinity O.
class CurvePoint
{
public:
    static CurvePoint infinity() { return CurvePoint(); }
    CurvePoint(FieldElement x, FieldElement y) : x_(std::move(x)), y_(std::move(y)) {}

    bool is_infinity() const noexcept { return !x_.has_value(); }
    const FieldElement& x() const;
    const FieldElement& y() const;

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) noexcept
    {
        return a.x_ == b.x_ && a.y_ == b.y_;
    }

    /// `x,y` or `inf`.
    std::string to_string() const;

private:
    CurvePoint() = default;

    std::optional<FieldElement> x_;
    std::optional<FieldElement> y_;
};

std::ostream& operator<<(std::ostream& os, const CurvePoint& P);

/// y^2 = x^3 + a4 x + a6.
class EllipticCurve
{
public:
    /// Throws InvalidCurve when 4 a4^3 + 27 a6^2 == 0.
    EllipticCurve(FieldElement a4, FieldElement a6);

    const Field& field() const noexcept { return a4_.field(); }
    const FieldElement& a4() const noexcept { return a4_; }
    const FieldElement& a6() const noexcept { return a6_; }

    bool contains(const CurvePoint& P) const;
    /// Validated constructor; throws NotOnCurve.
    CurvePoint point(const FieldElement& x, const FieldElement& y) const;
    CurvePoint random_point(Rng& rng) const;
    /// Every affine point plus O, for small fields only.
    std::vector<CurvePoint> points() const;

private:
    FieldElement a4_;
    FieldElement a6_;
};

/// Line c0 + c1 x + c2 y.
struct LineCoeffs
{
    FieldElement c0;
    FieldElement c1;
    FieldElement c2;
};

/// The line met while adding U and V, kept in point-slope form so that
/// evaluations cost one multiplication. `vertical` is x - x0; `sloped` is
/// y - y0 - lambda (x - x0); `none` only occurs for O + O.
struct Chord
{
    enum class Kind
    {
        none,
        vertical,
        sloped,
    };
    Kind kind = Kind::none;
    std::optional<FieldElement> lambda;
    std::optional<FieldElement> x0;
    std::optional<FieldElement> y0;

    /// Value at an affine point (1 mul when sloped).
    FieldElement eval(const CurvePoint& W) const;
    /// Values at W and -W sharing the x term (1 mul when sloped).
    std::pair<FieldElement, FieldElement> eval_pm(const CurvePoint& W) const;

    LineCoeffs coeffs(const Field& F) const;
};

struct AddResult
{
    CurvePoint sum;
    Chord chord;
    /// Both operands affine with distinct x (or a doubling with y != 0).
    bool generic = false;
};

/// U + V together with the line through U and V. Distinct-x addition costs
/// 2 mul + 1 div, doubling 3 mul + 1 div.
AddResult ec_add_chord(const EllipticCurve& E, const CurvePoint& U, const CurvePoint& V);

CurvePoint ec_add(const EllipticCurve& E, const CurvePoint& U, const CurvePoint& V);
CurvePoint ec_double(const EllipticCurve& E, const CurvePoint& U);
CurvePoint ec_neg(const CurvePoint& U);
CurvePoint ec_sub(const EllipticCurve& E, const CurvePoint& U, const CurvePoint& V);

/// n U by replaying a NAF chain; negative n negates.
CurvePoint ec_scalar_mul(const EllipticCurve& E, std::int64_t n, const CurvePoint& U);
CurvePoint ec_scalar_mul(const EllipticCurve& E, const BigInt& n, const CurvePoint& U);

/// Line through U and V (tangent when equal). Vertical lines have c2 = 0.
/// Throws DegenerateLine when both are O.
LineCoeffs line_through(const EllipticCurve& E, const CurvePoint& U, const CurvePoint& V);

/// c0 + c1 x(W) + c2 y(W); throws InfinityEvaluation at O.
FieldElement eval_line(const LineCoeffs& L, const CurvePoint& W);

}  // namespace pairlab
