// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pairlab/field.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace pairlab
{
/// Degree of the zero polynomial.
inline constexpr int kZeroDegree = -1;

/// Univariate polynomial over a Field, coefficients constant-first with no
/// trailing zeros.
class Poly
{
public:
    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<FieldElement> coeffs);

    /// Convenience constructor from signed integers, constant term first.
    static Poly from_ints(const Field& field, std::initializer_list<std::int64_t> coeffs);
    static Poly from_ints(const Field& field, const std::vector<std::int64_t>& coeffs);
    static Poly constant(const FieldElement& c);
    /// x - r
    static Poly linear_root(const FieldElement& r);
    static Poly x(const Field& field);

    const Field& field() const noexcept { return field_; }
    const std::vector<FieldElement>& coeffs() const noexcept { return c_; }

    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0].is_one(); }
    bool is_monic() const noexcept { return !c_.empty() && c_.back().is_one(); }

    /// Coefficient of x^i (zero past the degree).
    FieldElement coeff(std::size_t i) const;
    const FieldElement& lead() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const FieldElement& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
    friend Poly operator*(Poly a, const FieldElement& s) { return a *= s; }
    Poly operator-() const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept
    {
        return a.field_.same_as(b.field_) && a.c_ == b.c_;
    }

    std::string to_string() const;

private:
    void trim();

    Field field_;
    std::vector<FieldElement> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& u);

/// u = q*v + r with deg r < deg v. Throws DivisionByZero when v is zero.
std::pair<Poly, Poly> poly_divmod(const Poly& u, const Poly& v);
Poly poly_mod(const Poly& u, const Poly& v);

/// Monic gcd. Throws UndefinedGcd when both inputs are zero.
Poly poly_gcd(const Poly& u, const Poly& v);

struct XgcdResult
{
    Poly g;  ///< monic gcd
    Poly s;
    Poly t;  ///< s*u + t*v == g
};
XgcdResult poly_xgcd(const Poly& u, const Poly& v);

/// Horner evaluation; costs deg(u) multiplications.
FieldElement poly_eval(const Poly& u, const FieldElement& x0);

Poly monic(const Poly& u);
Poly derivative(const Poly& u);

/// base^e mod m.
Poly poly_powmod(const Poly& base, const BigInt& e, const Poly& m);

/// Roots in the coefficient field, with multiplicity, sorted by index.
/// Uncounted. Equal-degree splitting is driven by `seed`.
std::vector<FieldElement> poly_roots(const Poly& u, std::uint64_t seed = 0x5eed);

/// Coefficients of u mapped into another field via `map`.
template <typename Fn>
Poly poly_map(const Poly& u, const Field& target, Fn&& map)
{
    std::vector<FieldElement> out;
    out.reserve(u.coeffs().size());
    for (const auto& c : u.coeffs())
        out.push_back(map(c));
    return Poly(target, std::move(out));
}

}  // namespace pairlab
