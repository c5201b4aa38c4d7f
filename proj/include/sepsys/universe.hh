#pragma once

#include <sepsys/core.hh>

#include <optional>
#include <vector>

namespace sepsys {

/// A separation system in which every pair has a join and a meet. The
/// tables are always computed from the order, never supplied.
class Universe
{
public:
    Universe() = default;

    /// Throws SepError(not_a_lattice) with the first pair lacking a join or meet.
    static Universe build(SepSystem base);

    const SepSystem & base() const { return _base; }
    std::size_t size() const { return _base.size(); }

    Elem join(Elem r, Elem s) const { return _join[r * size() + s]; }
    Elem meet(Elem r, Elem s) const { return _meet[r * size() + s]; }
    Elem inv(Elem x) const { return _base.inv(x); }
    bool leq(Elem x, Elem y) const { return _base.leq(x, y); }

    /// Defined whenever the universe is non-empty.
    Elem least() const { return _least; }
    Elem greatest() const { return _greatest; }

    const std::vector<Elem> & join_table() const { return _join; }
    const std::vector<Elem> & meet_table() const { return _meet; }

    friend bool operator==(const Universe & a, const Universe & b) = default;

private:
    SepSystem _base;
    std::vector<Elem> _join;
    std::vector<Elem> _meet;
    Elem _least = 0;
    Elem _greatest = 0;
};

struct Triple
{
    Elem x, y, z;
    friend bool operator==(const Triple &, const Triple &) = default;
};

/// x ∧ (y ∨ z) = (x ∧ y) ∨ (x ∧ z) for all triples. The dual law is
/// equivalent in a lattice and is not checked separately.
Verdict<Triple> is_distributive(const Universe & u);

/// First (s, t, x) with s ∧ x <= t ∧ x and s ∨ x <= t ∨ x but s ≰ t. Never
/// exists in a distributive universe. Returned as Triple{s, t, x}.
std::optional<Triple> cancellation_witness(const Universe & u);

/// The join of any two small elements is small. Witness: the pair.
Verdict<ElemPair> small_joins_are_small(const Universe & u);

/// The meet of any two co-small elements is co-small. Witness: the pair.
Verdict<ElemPair> cosmall_meets_are_cosmall(const Universe & u);

struct SmallAlgebraReport
{
    std::vector<Elem> smalls;
    /// Non-empty and closed under the universe's join and meet.
    bool is_bounded_sublattice = false;
    /// Sublattice that is distributive and complemented, with bottom the
    /// least element of the universe and top max_small.
    bool is_boolean = false;
    std::optional<Elem> max_small;
    bool max_degenerate = false;
    std::vector<Elem> atoms;
};

SmallAlgebraReport small_algebra(const Universe & u);

}
