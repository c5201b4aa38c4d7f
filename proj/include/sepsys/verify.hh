#pragma once

#include <sepsys/implementation.hh>

#include <optional>
#include <string_view>

namespace sepsys {

enum class MapDefect
{
    not_total,       ///< assignment size or an image does not fit the codomain
    involution,      ///< m(inv r) != inv(m(r)); witness (r, r)
    order,           ///< r <= s but m(r) ≰ m(s)
    injectivity,     ///< r != s but m(r) = m(s)
    reflection,      ///< m(r) <= m(s) but r ≰ s
    join,            ///< m(r ∨ s) != m(r) ∨ m(s)
    meet,            ///< m(r ∧ s) != m(r) ∧ m(s)
    not_universe     ///< universe check requested without lattice structure
};

std::string_view to_string(MapDefect d);

struct MapWitness
{
    MapDefect defect;
    Elem r = 0;
    Elem s = 0;
};

Verdict<MapWitness> check_homomorphism(const SepMap & m);
Verdict<MapWitness> check_isomorphism_onto_image(const SepMap & m);
Verdict<MapWitness> check_universe_isomorphism(const SepMap & m);

/// Number of non-co-small elements: a ground set of this size always
/// suffices for a scrupulous system.
std::size_t canonical_ground_bound(const SepSystem & s);

inline constexpr std::size_t default_oracle_node_budget = 50'000'000;

/// Exhaustive search for an implementation by set separations over ground
/// sets of size 0..max_ground, smallest first; assignments explored in
/// element order with set masks ascending. Throws
/// SepError(budget_exceeded) when the search tree outgrows `node_budget`.
std::optional<Implementation> oracle_brute_force_set_implementation(
    const SepSystem & s, std::size_t max_ground, std::size_t node_budget = default_oracle_node_budget);

/// Re-derives every property an implementation claims, from the raw
/// definitions: coverage and disjointness of the sides, involution,
/// order preservation and reflection by pointwise subset tests,
/// injectivity, joins and meets in universe modes, the target family, and
/// in graphic mode target = U(graph) by enumerating all pairs of subsets.
bool oracle_definitional_recheck(const Implementation & impl);

/// Every X ⊆ U that is up-closed and meet-closed, whose complement is
/// down-closed and join-closed, and that contains all co-small elements.
/// Scans all 2^|U| subsets; throws SepError(budget_exceeded) above 20 elements.
std::vector<Bitset> naive_strong_ground_set(const Universe & u);

}
