// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace pairlab
{
enum class Errc
{
    param_mismatch,
    division_by_zero,
    undefined_gcd,
    unsupported_modulus,
    invalid_field,
    invalid_order,
    invalid_curve,
    not_on_curve,
    degenerate_line,
    infinity_evaluation,
    precondition,
    multiple_of_base_point,
    not_torsion,
    divisor_collision,
    randomness_exhausted,
    needs_field_extension,
    parse_error,
};

const char* to_string(Errc code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// CLI can map it to a stable exit status.
class Error : public std::runtime_error
{
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

/// Raised when the evaluation divisor shares support with an intermediate
/// multiple A_i of the torsion divisor.
class DivisorCollision : public Error
{
public:
    DivisorCollision(std::size_t chain_index, std::uint64_t multiple, const std::string& what)
      : Error(Errc::divisor_collision, what), index_(chain_index), multiple_(multiple)
    {}

    std::size_t chain_index() const noexcept { return index_; }
    std::uint64_t multiple() const noexcept { return multiple_; }

private:
    std::size_t index_;
    std::uint64_t multiple_;
};

/// Raised by divisor_points when the roots of a(x) need an extension.
class NeedsFieldExtension : public Error
{
public:
    NeedsFieldExtension(unsigned degree, const std::string& what)
      : Error(Errc::needs_field_extension, what), degree_(degree)
    {}

    unsigned minimal_degree() const noexcept { return degree_; }

private:
    unsigned degree_;
};

}  // namespace pairlab
