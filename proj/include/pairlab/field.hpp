// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pairlab/error.hpp"
#include "pairlab/op_counter.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace pairlab
{
using BigInt = boost::multiprecision::cpp_int;
using Rng = std::mt19937_64;

/// Largest supported characteristic (exclusive); products fit in 128 bits.
inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 61;

/// F_{p^k} = F_p[x] / (modulus). `modulus` is monic of degree k, constant term
/// first; it is empty when k == 1.
struct FieldParams
{
    std::uint64_t p = 0;
    unsigned k = 1;
    std::vector<std::uint64_t> modulus;

    friend bool operator==(const FieldParams&, const FieldParams&) = default;
};

class FieldElement;

/// Shared handle to immutable field parameters.
class Field
{
public:
    /// F_p. Throws UnsupportedModulus for p >= 2^61 and InvalidField when p is
    /// not an odd prime greater than 3.
    static Field prime(std::uint64_t p);

    /// F_{p^k} using the smallest monic irreducible of degree k, ordering
    /// candidates by the integer sum(c_i * p^i) of their lower coefficients.
    static Field extension(std::uint64_t p, unsigned k);

    /// F_{p^k} with a caller-supplied monic irreducible modulus of degree k.
    static Field extension(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus);

    const FieldParams& params() const noexcept { return *params_; }
    std::uint64_t characteristic() const noexcept { return params_->p; }
    unsigned degree() const noexcept { return params_->k; }

    /// q = p^k.
    BigInt order() const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement element(std::int64_t v) const;
    FieldElement element(const std::vector<std::uint64_t>& coeffs) const;
    /// The class of x in F_p[x]/(modulus); equals 0 in a prime field.
    FieldElement generator() const;
    FieldElement random(Rng& rng) const;
    FieldElement random_nonzero(Rng& rng) const;

    /// Element with index i = sum(c_j p^j); inverse of FieldElement::index().
    FieldElement from_index(std::uint64_t index) const;

    bool same_as(const Field& o) const noexcept
    {
        return params_ == o.params_ || *params_ == *o.params_;
    }
    friend bool operator==(const Field& a, const Field& b) noexcept { return a.same_as(b); }

private:
    explicit Field(std::shared_ptr<const FieldParams> p) : params_(std::move(p)) {}

    std::shared_ptr<const FieldParams> params_;

    friend class FieldElement;
};

/// Element of F_p or F_{p^k}: k residues in [0, p), constant term first.
/// Arithmetic ticks the active CountingScope.
class FieldElement
{
public:
    FieldElement(Field field, std::vector<std::uint64_t> coeffs);

    const Field& field() const noexcept { return field_; }
    const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }

    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// sum(c_j p^j); only meaningful when q fits in 64 bits.
    std::uint64_t index() const noexcept;

    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);

    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    /// Fused division: one `div` tick, no `mul` tick.
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
    FieldElement operator-() const;

    friend bool operator==(const FieldElement& a, const FieldElement& b) noexcept
    {
        return a.c_ == b.c_ && a.field_.same_as(b.field_);
    }

    std::string to_string() const;

private:
    Field field_;
    std::vector<std::uint64_t> c_;

    friend FieldElement inv(const FieldElement& a);
    friend class Field;
};

FieldElement inv(const FieldElement& a);

/// Square-and-multiply; 0^0 == 1. Every squaring and multiplication ticks.
FieldElement pow(const FieldElement& a, const BigInt& e);

/// Euler's criterion (uncounted). Zero counts as a square.
bool is_square(const FieldElement& a);

/// A square root when one exists (uncounted).
std::optional<FieldElement> sqrt(const FieldElement& a, std::uint64_t seed = 0x5eed);

std::ostream& operator<<(std::ostream& os, const FieldElement& a);

// Named forms of the operators.
inline FieldElement ff_add(const FieldElement& a, const FieldElement& b) { return a + b; }
inline FieldElement ff_sub(const FieldElement& a, const FieldElement& b) { return a - b; }
inline FieldElement ff_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
inline FieldElement ff_div(const FieldElement& a, const FieldElement& b) { return a / b; }
inline FieldElement ff_inv(const FieldElement& a) { return inv(a); }
inline FieldElement ff_pow(const FieldElement& a, const BigInt& e) { return pow(a, e); }

namespace detail
{
bool is_prime_u64(std::uint64_t n);
bool is_irreducible_mod_p(const std::vector<std::uint64_t>& monic, std::uint64_t p);
}  // namespace detail

}  // namespace pairlab
