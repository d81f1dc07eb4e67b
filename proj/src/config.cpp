// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace pairlab
{
namespace
{
std::string_view strip(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

std::int64_t single_int(std::string_view key, std::string_view value)
{
    const auto v = parse_int_list(value);
    if (v.size() != 1)
        throw Error(Errc::parse_error, std::string(key) + " takes one integer");
    return v[0];
}

std::vector<std::uint64_t> digits_of(const Field& F, const std::vector<std::int64_t>& v, std::size_t at)
{
    std::vector<std::uint64_t> out;
    for (std::size_t j = 0; j < F.degree(); ++j)
        out.push_back(F.element(v[at + j]).coeffs()[0]);
    return out;
}

}  // namespace

Field CurveConfig::field() const
{
    if (k == 1 || modulus.empty())
        return Field::extension(p, k);
    return Field::extension(p, k, modulus);
}

EllipticCurve CurveConfig::elliptic() const
{
    if (!a4 || !a6)
        throw Error(Errc::parse_error, "config needs a4 and a6 for an elliptic curve");
    const Field F = field();
    return EllipticCurve(F.element(*a4), F.element(*a6));
}

HyperCurve CurveConfig::hyperelliptic() const
{
    if (f.empty())
        throw Error(Errc::parse_error, "config needs f for a genus-2 curve");
    return HyperCurve::from_ints(field(), f);
}

CurveConfig parse_config(std::string_view text)
{
    CurveConfig cfg;
    std::set<std::string> seen;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw))
    {
        const auto line = strip(raw);
        if (line.empty() || line.front() == '#')
            continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw Error(Errc::parse_error, "expected key=value, got '" + std::string(line) + "'");
        const std::string key(strip(line.substr(0, eq)));
        const auto value = strip(line.substr(eq + 1));
        if (!seen.insert(key).second)
            throw Error(Errc::parse_error, "repeated key '" + key + "'");
        if (key == "p")
        {
            const auto v = single_int(key, value);
            if (v <= 0)
                throw Error(Errc::parse_error, "p must be positive");
            cfg.p = static_cast<std::uint64_t>(v);
        }
        else if (key == "k")
        {
            const auto v = single_int(key, value);
            if (v < 1 || v > 64)
                throw Error(Errc::parse_error, "k must be between 1 and 64");
            cfg.k = static_cast<unsigned>(v);
        }
        else if (key == "modulus")
        {
            for (auto c : parse_int_list(value))
            {
                if (c < 0)
                    throw Error(Errc::parse_error, "modulus coefficients must be non-negative");
                cfg.modulus.push_back(static_cast<std::uint64_t>(c));
            }
        }
        else if (key == "a4")
            cfg.a4 = single_int(key, value);
        else if (key == "a6")
            cfg.a6 = single_int(key, value);
        else if (key == "f")
            cfg.f = parse_int_list(value);
        else
            throw Error(Errc::parse_error, "unknown key '" + key + "'");
    }
    if (cfg.p == 0)
        throw Error(Errc::parse_error, "config needs p");
    return cfg;
}

CurveConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(Errc::parse_error, "cannot read config file " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

FieldElement parse_element(const Field& F, std::string_view text)
{
    const auto v = parse_int_list(text);
    if (v.size() != F.degree())
        throw Error(Errc::parse_error, "field element needs " + std::to_string(F.degree()) + " integers");
    return F.element(digits_of(F, v, 0));
}

CurvePoint parse_point(const EllipticCurve& E, std::string_view text)
{
    text = strip(text);
    if (text == "inf")
        return CurvePoint::infinity();
    const Field& F = E.field();
    const auto v = parse_int_list(text);
    if (v.size() != 2 * F.degree())
        throw Error(Errc::parse_error, "point needs 'inf' or " + std::to_string(2 * F.degree()) + " integers");
    return E.point(F.element(digits_of(F, v, 0)), F.element(digits_of(F, v, F.degree())));
}

}  // namespace pairlab
