// pairlab: squared Weil and Tate pairings on elliptic and genus-2 curves
// Copyright 2026 The pairlab Authors.
// SPDX-License-Identifier: Apache-2.0

#include "pairlab/parse.hpp"

#include "pairlab/error.hpp"

#include <sstream>
#include <string>

namespace pairlab
{
std::vector<std::int64_t> parse_int_list(std::string_view text)
{
    std::vector<std::int64_t> out;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ','))
    {
        std::size_t used = 0;
        try
        {
            out.push_back(std::stoll(item, &used));
        }
        catch (const std::exception&)
        {
            throw Error(Errc::parse_error, "bad integer '" + item + "'");
        }
        while (used < item.size() && item[used] == ' ')
            ++used;
        if (used != item.size())
            throw Error(Errc::parse_error, "bad integer '" + item + "'");
    }
    return out;
}


}  // namespace pairlab
