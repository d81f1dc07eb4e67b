// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/field.hpp"

#include <algorithm>
#include <sstream>

namespace pairlab
{
namespace
{
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using RawPoly = std::vector<u64>;  // coefficients mod p, constant first

inline u64 add_mod(u64 a, u64 b, u64 p) noexcept
{
    const u64 s = a + b;
    return s >= p ? s - p : s;
}

inline u64 sub_mod(u64 a, u64 b, u64 p) noexcept { return a >= b ? a - b : a + p - b; }

inline u64 mul_mod(u64 a, u64 b, u64 p) noexcept
{
    return static_cast<u64>((static_cast<u128>(a) * b) % p);
}

u64 pow_mod(u64 a, u64 e, u64 p) noexcept
{
    u64 r = 1 % p;
    while (e != 0)
    {
        if (e & 1)
            r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p)
{
    if (a == 0)
        throw Error(Errc::division_by_zero, "inverse of zero");
    // Extended Euclid on signed 128-bit values.
    __int128 r0 = p, r1 = a, t0 = 0, t1 = 1;
    while (r1 != 0)
    {
        const __int128 q = r0 / r1;
        const __int128 r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        const __int128 t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (t0 < 0)
        t0 += p;
    return static_cast<u64>(t0);
}

void trim(RawPoly& a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

RawPoly raw_mul(const RawPoly& a, const RawPoly& b, u64 p)
{
    if (a.empty() || b.empty())
        return {};
    RawPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
    }
    trim(r);
    return r;
}

/// Remainder modulo a monic polynomial.
RawPoly raw_rem_monic(RawPoly a, const RawPoly& m, u64 p)
{
    trim(a);
    const std::size_t dm = m.size() - 1;
    while (a.size() > dm)
    {
        const u64 c = a.back();
        const std::size_t shift = a.size() - 1 - dm;
        for (std::size_t i = 0; i < dm; ++i)
            a[shift + i] = sub_mod(a[shift + i], mul_mod(c, m[i], p), p);
        a.pop_back();
        trim(a);
    }
    return a;
}

/// Generic remainder (divisor need not be monic).
RawPoly raw_rem(RawPoly a, const RawPoly& b, u64 p)
{
    trim(a);
    const u64 lead_inv = inv_mod(b.back(), p);
    const std::size_t db = b.size() - 1;
    while (!a.empty() && a.size() > db)
    {
        const u64 c = mul_mod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - 1 - db;
        for (std::size_t i = 0; i <= db; ++i)
            a[shift + i] = sub_mod(a[shift + i], mul_mod(c, b[i], p), p);
        trim(a);
    }
    return a;
}

RawPoly raw_gcd(RawPoly a, RawPoly b, u64 p)
{
    trim(a);
    trim(b);
    while (!b.empty())
    {
        RawPoly r = raw_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

RawPoly raw_sub(RawPoly a, const RawPoly& b, u64 p)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = sub_mod(a[i], b[i], p);
    trim(a);
    return a;
}

RawPoly raw_powmod(RawPoly base, u64 e, const RawPoly& m, u64 p)
{
    RawPoly r{1};
    base = raw_rem_monic(base, m, p);
    while (e != 0)
    {
        if (e & 1)
            r = raw_rem_monic(raw_mul(r, base, p), m, p);
        base = raw_rem_monic(raw_mul(base, base, p), m, p);
        e >>= 1;
    }
    return r;
}

/// Inverse of a nonzero residue modulo an irreducible modulus.
RawPoly raw_inv_mod(const RawPoly& a, const RawPoly& m, u64 p)
{
    RawPoly r0 = m, r1 = a, t0, t1{1};
    trim(r1);
    if (r1.empty())
        throw Error(Errc::division_by_zero, "inverse of zero");
    while (!r1.empty())
    {
        // q = r0 / r1
        RawPoly rem = r0;
        RawPoly q(rem.size() >= r1.size() ? rem.size() - r1.size() + 1 : 1, 0);
        const u64 li = inv_mod(r1.back(), p);
        while (!rem.empty() && rem.size() >= r1.size())
        {
            const u64 c = mul_mod(rem.back(), li, p);
            const std::size_t shift = rem.size() - r1.size();
            q[shift] = c;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = sub_mod(rem[shift + i], mul_mod(c, r1[i], p), p);
            trim(rem);
        }
        trim(q);
        RawPoly t2 = raw_sub(t0, raw_mul(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    // r0 is a nonzero constant.
    const u64 ci = inv_mod(r0[0], p);
    for (auto& c : t0)
        c = mul_mod(c, ci, p);
    return t0;
}

std::vector<unsigned> prime_divisors(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d)
    {
        if (n % d == 0)
        {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

void validate_characteristic(u64 p)
{
    if (p >= kMaxModulus)
        throw Error(Errc::unsupported_modulus, "characteristic must be below 2^61");
    if (p <= 3 || !detail::is_prime_u64(p))
        throw Error(Errc::invalid_field, "characteristic must be a prime greater than 3");
}

}  // namespace

namespace detail
{
bool is_prime_u64(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (u64 sp : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
    {
        if (n % sp == 0)
            return n == sp;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0)
    {
        d >>= 1;
        ++s;
    }
    // Deterministic for all 64-bit inputs.
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL})
    {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r)
        {
            x = mul_mod(x, x, n);
            if (x == n - 1)
            {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

bool is_irreducible_mod_p(const std::vector<std::uint64_t>& monic, std::uint64_t p)
{
    // Rabin's test: x^(p^k) == x mod f and gcd(x^(p^(k/r)) - x, f) == 1 for
    // every prime r dividing k.
    const unsigned k = static_cast<unsigned>(monic.size() - 1);
    if (k == 1)
        return true;
    std::vector<RawPoly> frob(k + 1);  // frob[i] = x^(p^i) mod f
    frob[0] = raw_rem_monic(RawPoly{0, 1}, monic, p);
    for (unsigned i = 1; i <= k; ++i)
        frob[i] = raw_powmod(frob[i - 1], p, monic, p);
    if (frob[k] != frob[0])
        return false;
    for (unsigned r : prime_divisors(k))
    {
        RawPoly diff = raw_sub(frob[k / r], RawPoly{0, 1}, p);
        if (diff.empty())
            return false;
        RawPoly g = raw_gcd(monic, diff, p);
        if (g.size() != 1)
            return false;
    }
    return true;
}
}  // namespace detail

Field Field::prime(std::uint64_t p)
{
    validate_characteristic(p);
    return Field(std::make_shared<const FieldParams>(FieldParams{p, 1, {}}));
}

Field Field::extension(std::uint64_t p, unsigned k)
{
    validate_characteristic(p);
    if (k == 0)
        throw Error(Errc::invalid_field, "extension degree must be at least 1");
    if (k == 1)
        return prime(p);
    // Enumerate lower coefficient vectors in increasing sum(c_i p^i).
    std::vector<u64> digits(k, 0);
    for (;;)
    {
        std::vector<u64> cand(digits);
        cand.push_back(1);
        if (cand[0] != 0 && detail::is_irreducible_mod_p(cand, p))
            return Field(std::make_shared<const FieldParams>(FieldParams{p, k, std::move(cand)}));
        std::size_t i = 0;
        while (i < k && ++digits[i] == p)
            digits[i++] = 0;
        if (i == k)
            throw Error(Errc::invalid_field, "no irreducible polynomial found");
    }
}

Field Field::extension(std::uint64_t p, unsigned k, std::vector<std::uint64_t> modulus)
{
    validate_characteristic(p);
    if (k == 1 && (modulus.empty() || modulus.size() == 2))
        return prime(p);
    if (modulus.size() != k + 1 || modulus.back() != 1)
        throw Error(Errc::invalid_field, "modulus must be monic of degree k");
    for (auto c : modulus)
        if (c >= p)
            throw Error(Errc::invalid_field, "modulus coefficients must lie in [0, p)");
    if (!detail::is_irreducible_mod_p(modulus, p))
        throw Error(Errc::invalid_field, "modulus is reducible");
    return Field(std::make_shared<const FieldParams>(FieldParams{p, k, std::move(modulus)}));
}

BigInt Field::order() const
{
    BigInt q = 1;
    for (unsigned i = 0; i < params_->k; ++i)
        q *= params_->p;
    return q;
}

FieldElement Field::zero() const
{
    return FieldElement(*this, std::vector<u64>(params_->k, 0));
}

FieldElement Field::one() const
{
    std::vector<u64> c(params_->k, 0);
    c[0] = 1;
    return FieldElement(*this, std::move(c));
}

FieldElement Field::element(std::int64_t v) const
{
    std::vector<u64> c(params_->k, 0);
    const auto p = static_cast<__int128>(params_->p);
    __int128 r = static_cast<__int128>(v) % p;
    if (r < 0)
        r += p;
    c[0] = static_cast<u64>(r);
    return FieldElement(*this, std::move(c));
}

FieldElement Field::element(const std::vector<std::uint64_t>& coeffs) const
{
    if (coeffs.size() > params_->k)
        throw Error(Errc::param_mismatch, "too many coefficients for field element");
    std::vector<u64> c(params_->k, 0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        c[i] = coeffs[i] % params_->p;
    return FieldElement(*this, std::move(c));
}

FieldElement Field::generator() const
{
    std::vector<u64> c(params_->k, 0);
    if (params_->k > 1)
        c[1] = 1;
    return FieldElement(*this, std::move(c));
}

FieldElement Field::random(Rng& rng) const
{
    std::uniform_int_distribution<u64> dist(0, params_->p - 1);
    std::vector<u64> c(params_->k);
    for (auto& x : c)
        x = dist(rng);
    return FieldElement(*this, std::move(c));
}

FieldElement Field::random_nonzero(Rng& rng) const
{
    for (;;)
    {
        auto e = random(rng);
        if (!e.is_zero())
            return e;
    }
}

FieldElement Field::from_index(std::uint64_t index) const
{
    std::vector<u64> c(params_->k);
    for (auto& x : c)
    {
        x = index % params_->p;
        index /= params_->p;
    }
    return FieldElement(*this, std::move(c));
}

FieldElement::FieldElement(Field field, std::vector<std::uint64_t> coeffs)
  : field_(std::move(field)), c_(std::move(coeffs))
{
    if (c_.size() != field_.params_->k)
        throw Error(Errc::param_mismatch, "coefficient count must equal the extension degree");
    for (auto x : c_)
        if (x >= field_.params_->p)
            throw Error(Errc::param_mismatch, "coefficient out of range");
}

bool FieldElement::is_zero() const noexcept
{
    return std::all_of(c_.begin(), c_.end(), [](u64 x) { return x == 0; });
}

bool FieldElement::is_one() const noexcept
{
    return c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](u64 x) { return x == 0; });
}

std::uint64_t FieldElement::index() const noexcept
{
    u64 r = 0;
    for (std::size_t i = c_.size(); i-- > 0;)
        r = r * field_.params_->p + c_[i];
    return r;
}

namespace
{
void check_same(const FieldElement& a, const FieldElement& b)
{
    if (!a.field().same_as(b.field()))
        throw Error(Errc::param_mismatch, "operands belong to different fields");
}

std::vector<u64> mul_raw(const FieldParams& fp, const std::vector<u64>& a, const std::vector<u64>& b)
{
    const u64 p = fp.p;
    if (fp.k == 1)
        return {mul_mod(a[0], b[0], p)};
    RawPoly prod = raw_mul(a, b, p);
    prod = raw_rem_monic(std::move(prod), fp.modulus, p);
    prod.resize(fp.k, 0);
    return prod;
}

std::vector<u64> inv_raw(const FieldParams& fp, const std::vector<u64>& a)
{
    if (fp.k == 1)
        return {inv_mod(a[0], fp.p)};
    RawPoly r = raw_inv_mod(a, fp.modulus, fp.p);
    r.resize(fp.k, 0);
    return r;
}
}  // namespace

FieldElement& FieldElement::operator+=(const FieldElement& o)
{
    check_same(*this, o);
    const u64 p = field_.params_->p;
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] = add_mod(c_[i], o.c_[i], p);
    detail::tick_add();
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o)
{
    check_same(*this, o);
    const u64 p = field_.params_->p;
    for (std::size_t i = 0; i < c_.size(); ++i)
        c_[i] = sub_mod(c_[i], o.c_[i], p);
    detail::tick_add();
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o)
{
    check_same(*this, o);
    c_ = mul_raw(*field_.params_, c_, o.c_);
    detail::tick_mul();
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o)
{
    check_same(*this, o);
    if (o.is_zero())
        throw Error(Errc::division_by_zero, "division by zero");
    c_ = mul_raw(*field_.params_, c_, inv_raw(*field_.params_, o.c_));
    detail::tick_div();
    return *this;
}

FieldElement FieldElement::operator-() const
{
    FieldElement r = *this;
    const u64 p = field_.params_->p;
    for (auto& x : r.c_)
        x = x == 0 ? 0 : p - x;
    detail::tick_add();
    return r;
}

std::string FieldElement::to_string() const
{
    std::ostringstream os;
    for (std::size_t i = 0; i < c_.size(); ++i)
        os << (i ? "," : "") << c_[i];
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const FieldElement& a) { return os << a.to_string(); }

FieldElement inv(const FieldElement& a)
{
    if (a.is_zero())
        throw Error(Errc::division_by_zero, "inverse of zero");
    FieldElement r(a.field_, inv_raw(a.field_.params(), a.c_));
    detail::tick_div();
    return r;
}

FieldElement pow(const FieldElement& a, const BigInt& e)
{
    if (e < 0)
        throw Error(Errc::precondition, "negative exponent");
    FieldElement r = a.field().one();
    if (e == 0)
        return r;
    const auto bits = static_cast<long>(boost::multiprecision::msb(e));
    r = a;
    for (long i = bits - 1; i >= 0; --i)
    {
        r *= r;
        if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i)))
            r *= a;
    }
    return r;
}

bool is_square(const FieldElement& a)
{
    if (a.is_zero())
        return true;
    UncountedScope quiet;
    return pow(a, (a.field().order() - 1) / 2).is_one();
}

std::optional<FieldElement> sqrt(const FieldElement& a, std::uint64_t seed)
{
    UncountedScope quiet;
    if (a.is_zero())
        return a;
    if (!is_square(a))
        return std::nullopt;
    // Tonelli-Shanks over F_q.
    const BigInt q = a.field().order();
    BigInt t = q - 1;
    unsigned s = 0;
    while (!boost::multiprecision::bit_test(t, 0))
    {
        t >>= 1;
        ++s;
    }
    Rng rng(seed);
    FieldElement z = a.field().one();
    do
        z = a.field().random_nonzero(rng);
    while (is_square(z));

    FieldElement c = pow(z, t);
    FieldElement x = pow(a, (t + 1) / 2);
    FieldElement b = pow(a, t);
    unsigned m = s;
    while (!b.is_one())
    {
        unsigned i = 0;
        FieldElement b2 = b;
        while (!b2.is_one())
        {
            b2 *= b2;
            ++i;
        }
        FieldElement g = c;
        for (unsigned j = 0; j + 1 < m - i; ++j)
            g *= g;
        x *= g;
        c = g * g;
        b *= c;
        m = i;
    }
    return x;
}

const char* to_string(Errc code) noexcept
{
    switch (code)
    {
    case Errc::param_mismatch: return "ParamMismatch";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::undefined_gcd: return "UndefinedGcd";
    case Errc::unsupported_modulus: return "UnsupportedModulus";
    case Errc::invalid_field: return "InvalidField";
    case Errc::invalid_order: return "InvalidOrder";
    case Errc::invalid_curve: return "InvalidCurve";
    case Errc::not_on_curve: return "NotOnCurve";
    case Errc::degenerate_line: return "DegenerateLine";
    case Errc::infinity_evaluation: return "InfinityEvaluation";
    case Errc::precondition: return "PreconditionViolated";
    case Errc::multiple_of_base_point: return "MultipleOfBasePoint";
    case Errc::not_torsion: return "NotTorsion";
    case Errc::divisor_collision: return "DivisorCollision";
    case Errc::randomness_exhausted: return "RandomnessExhausted";
    case Errc::needs_field_extension: return "NeedsFieldExtension";
    case Errc::parse_error: return "ParseError";
    }
    return "Unknown";
}

std::ostream& operator<<(std::ostream& os, const OpCounter& c)
{
    return os << "{mul=" << c.mul << ", div=" << c.div << ", add=" << c.add << "}";
}

}  // namespace pairlab
