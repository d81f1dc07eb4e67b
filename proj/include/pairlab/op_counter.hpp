// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <ostream>

namespace pairlab
{
/// Tally of field operations. Squarings count as multiplications and an
/// inversion or a fused division counts as one `div`.
struct OpCounter
{
    std::uint64_t mul = 0;
    std::uint64_t div = 0;
    std::uint64_t add = 0;

    OpCounter& operator+=(const OpCounter& o) noexcept
    {
        mul += o.mul;
        div += o.div;
        add += o.add;
        return *this;
    }

    friend OpCounter operator+(OpCounter a, const OpCounter& b) noexcept { return a += b; }

    friend OpCounter operator-(const OpCounter& a, const OpCounter& b) noexcept
    {
        return {a.mul - b.mul, a.div - b.div, a.add - b.add};
    }

    friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

std::ostream& operator<<(std::ostream& os, const OpCounter& c);

namespace detail
{
struct CounterSink
{
    OpCounter counts;
    CounterSink* parent = nullptr;
};

inline thread_local CounterSink* active_sink = nullptr;

inline void tick_mul() noexcept
{
    if (auto* s = active_sink)
        ++s->counts.mul;
}
inline void tick_div() noexcept
{
    if (auto* s = active_sink)
        ++s->counts.div;
}
inline void tick_add() noexcept
{
    if (auto* s = active_sink)
        ++s->counts.add;
}
}  // namespace detail

/// RAII measurement scope. Arithmetic on this thread ticks the innermost open
/// scope; when a scope closes its totals are added to the enclosing one, so
/// nested deltas always sum to the parent's delta.
class CountingScope
{
public:
    CountingScope() noexcept : parent_(detail::active_sink)
    {
        sink_.parent = parent_;
        detail::active_sink = &sink_;
    }

    ~CountingScope()
    {
        detail::active_sink = parent_;
        if (parent_ != nullptr)
            parent_->counts += sink_.counts;
    }

    CountingScope(const CountingScope&) = delete;
    CountingScope& operator=(const CountingScope&) = delete;

    const OpCounter& counts() const noexcept { return sink_.counts; }

private:
    detail::CounterSink sink_;
    detail::CounterSink* parent_;
};

/// Suspends counting for bookkeeping work (validation, sampling, changes of
/// representation) that is not part of the algorithm being measured.
class UncountedScope
{
public:
    UncountedScope() noexcept : saved_(detail::active_sink) { detail::active_sink = nullptr; }
    ~UncountedScope() { detail::active_sink = saved_; }

    UncountedScope(const UncountedScope&) = delete;
    UncountedScope& operator=(const UncountedScope&) = delete;

private:
    detail::CounterSink* saved_;
};

}  // namespace pairlab
