#pragma once

#include <sepsys/core.hh>

#include <span>
#include <vector>

namespace sepsys {

/// One orientation of every unoriented separation, stored as the set of
/// chosen elements. Degenerate separations are always chosen.
struct Orientation
{
    Bitset members;

    bool contains(Elem x) const { return members.test(x); }
    friend bool operator==(const Orientation &, const Orientation &) = default;
};

/// No r←, s→ in the set with r ≠ s (as unoriented separations) and r→ <= s→.
/// Requires exactly one orientation per unoriented separation.
bool is_consistent_orientation(const SepSystem & s, const Bitset & members);

/// All consistent orientations, sorted by member mask.
std::vector<Orientation> consistent_orientations(const SepSystem & s);

/// Indices into `all` of the orientations containing x.
std::vector<std::size_t> orientations_containing(const SepSystem & s, Elem x, std::span<const Orientation> all);

}
