// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "pairlab/poly.hpp"

#include <optional>
#include <vector>

namespace pairlab
{
/// F_{p^k} inside F_{p^{kn}}: the generator of the small field is sent to a
/// fixed root of its modulus in the large one. Lifting and projecting are
/// representation changes and never tick the counter.
class FieldEmbedding
{
public:
    /// Throws InvalidField unless both fields share p and k divides the
    /// large degree.
    FieldEmbedding(Field source, Field target);

    static FieldEmbedding identity(const Field& f) { return FieldEmbedding(f, f); }

    const Field& source() const noexcept { return source_; }
    const Field& target() const noexcept { return target_; }
    bool is_identity() const noexcept { return identity_; }

    FieldElement lift(const FieldElement& a) const;
    Poly lift(const Poly& u) const;

    /// Preimage of a, or nullopt when a is outside the image.
    std::optional<FieldElement> project(const FieldElement& a) const;

private:
    Field source_;
    Field target_;
    bool identity_;
    /// Images of g^0 .. g^{k-1}.
    std::vector<FieldElement> basis_;
};

/// F_{q^2} for q = p^k. The modulus is the first irreducible of degree 2k
/// whose lower coefficients are all below 16, which is the default modulus
/// whenever p <= 16.
Field quadratic_extension(const Field& f);

}  // namespace pairlab
