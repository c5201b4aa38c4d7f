#pragma once

#include <sepsys/io.hh>
#include <sepsys/verify.hh>

#include <random>
#include <set>
#include <string>
#include <vector>

namespace testing {

using namespace sepsys;

using Pairs = std::vector<std::pair<std::string, std::string>>;

inline SepSystem make_system(std::vector<std::string> names, std::vector<std::string> degenerate, Pairs rel)
{
    std::vector<std::string> labels;
    Pairs inv;
    for (const auto & n : names) {
        labels.push_back(n + "+");
        labels.push_back(n + "-");
        inv.emplace_back(n + "+", n + "-");
    }
    for (const auto & d : degenerate) {
        labels.push_back(d);
        inv.emplace_back(d, d);
    }
    return SepSystem::build(labels, inv, rel);
}

inline Universe as_universe(const ConcreteSystem & c)
{
    return *as_abstract(c, true).universe;
}

/// |V| points named v0.. with the set separations given by (A,B) masks.
inline SetSep mask_sep(std::size_t n, unsigned a, unsigned b)
{
    SetSep s{Bitset(n), Bitset(n)};
    for (std::size_t i = 0; i < n; ++i) {
        s.a.assign(i, (a >> i) & 1u);
        s.b.assign(i, (b >> i) & 1u);
    }
    return s;
}

}
