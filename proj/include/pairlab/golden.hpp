// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

/// Worked genus-2 example: y^2 = x^5 + 13x^4 + 2x^3 + 4x^2 + 11x + 1 over
/// F_31 with 5-torsion D. All coefficient lists are constant term first.
namespace pairlab::golden
{
struct DivisorInts
{
    std::vector<std::int64_t> a;
    std::vector<std::int64_t> b;
};

inline constexpr std::uint64_t kP = 31;
inline const std::vector<std::int64_t> kF{1, 11, 4, 2, 13, 1};
inline constexpr std::uint64_t kM = 5;
inline constexpr std::uint64_t kOrder = 1040;

inline const DivisorInts kD{{15, 23, 1}, {28, 13}};
/// Order 260.
inline const DivisorInts kE{{2, 4, 1}, {20, 29}};
inline const DivisorInts k2D{{9, 25, 1}, {6, 10}};
inline const DivisorInts k3D{{9, 25, 1}, {25, 21}};
inline const DivisorInts k2E{{3, 1, 1}, {3, 26}};

inline constexpr std::int64_t kV_D_E = 4;
inline constexpr std::int64_t kV_2D_E = 16;
inline constexpr std::int64_t kV_D_2E = 16;
inline constexpr std::int64_t kV_3D_E = 2;

/// h_{5,D} = (x+26)^2 (x^4+19x^3+23x^2+16x+19) (x^2+23x+15) / (x^3+6x^2+9x+21 + y)
inline const std::vector<std::vector<std::int64_t>> kH5DNumerator{
    {26, 1}, {26, 1}, {19, 16, 23, 19, 1}, {15, 23, 1}};
inline const std::vector<std::int64_t> kH5DDenominator{21, 9, 6, 1};
/// (q - 1) / m
inline constexpr std::uint64_t kFinalPower = 6;

}  // namespace pairlab::golden
