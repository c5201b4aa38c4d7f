#pragma once

#include <sepsys/construct.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sepsys {

/// A finite lattice given by its order; joins and meets are derived.
class Lattice
{
public:
    Lattice() = default;
    /// `relations` generate the order (reflexive-transitive closure).
    /// Throws SepError(antisymmetry_violation / not_a_lattice).
    static Lattice build(std::vector<std::string> elems, std::span<const std::pair<std::string, std::string>> relations);
    static Lattice from_order(std::vector<std::string> elems, BitMatrix leq);

    std::size_t size() const { return _elems.size(); }
    const std::vector<std::string> & elems() const { return _elems; }
    bool leq(std::size_t a, std::size_t b) const { return _leq.test(a, b); }
    const BitMatrix & order() const { return _leq; }
    std::size_t join(std::size_t a, std::size_t b) const { return _join[a * size() + b]; }
    std::size_t meet(std::size_t a, std::size_t b) const { return _meet[a * size() + b]; }
    bool is_distributive() const;

private:
    std::vector<std::string> _elems;
    BitMatrix _leq;
    std::vector<std::size_t> _join, _meet;
};

/// 0 < a < b < 1, 0 < c < 1
Lattice pentagon_lattice();
/// 0 < a, b, c < 1
Lattice diamond_lattice();
Lattice chain_lattice(std::size_t n);

/// r+ <= s+ and s- <= r- iff r <= s, and r+ <= s- for all r, s.
Universe universe_from_lattice(const Lattice & l);

struct Tree
{
    GroundSet vertices;
    std::vector<std::pair<std::size_t, std::size_t>> edges;

    /// Throws SepError(not_a_tree).
    void validate() const;
};

/// The edge tree set with its component labelling. Oriented edge (v, w)
/// gets label "v~w+" when the edge was listed as {v, w}, and "v~w-" for the
/// opposite orientation.
struct EdgeTreeSet
{
    SepSystem system;
    /// (tail, head) of each element
    std::vector<std::pair<std::size_t, std::size_t>> oriented_edges;
    /// (v, w) ↦ (C(v,w), C(w,v)), verified, over the tree's vertex set
    Implementation components;
};

/// Requires at least one edge.
EdgeTreeSet edge_tree_set(const Tree & t);

/// The separation system or universe behind a named example.
struct Instance
{
    SepSystem system;
    std::optional<Universe> universe;
    std::optional<ConcreteSystem> concrete;
};

/// nonscrupulous, pentagon, diamond, three-star. Throws SepError(unknown_example).
Instance gen_example(std::string_view name);
const std::vector<std::string> & example_names();

inline constexpr std::size_t max_enumerated_unoriented = 3;

/// Every separation system with at most `max_unoriented` unoriented
/// separations, one per isomorphism class, in a fixed order. Throws
/// SepError(budget_exceeded) above max_enumerated_unoriented.
std::vector<SepSystem> enumerate_systems(std::size_t max_unoriented);

/// Canonical encoding: equal iff the systems are isomorphic.
std::vector<std::uint8_t> canonical_form(const SepSystem & s);

inline constexpr std::size_t max_random_unoriented = 8;

/// Exactly n unoriented separations with random relations.
SepSystem random_system(std::size_t n, std::uint64_t seed);

enum class UniverseMode
{
    /// join/meet closure of random separations in some U(V); always distributive
    sub_universe,
    /// universe_from_lattice of a random lattice; may be non-distributive
    lattice,
    /// as lattice, with a pentagon glued in below, hence never distributive
    lattice_with_pentagon,
    /// sub-universe of L × L^op with involution (x, y) ↦ (y, x) for a random
    /// lattice L; often not scrupulous
    square
};

/// At most n unoriented separations.
Universe random_universe(std::size_t n, std::uint64_t seed, UniverseMode mode = UniverseMode::sub_universe);

/// Uniform labelled tree via a Prüfer sequence. Vertices t0, t1, ...
Tree random_tree(std::size_t vertices, std::uint64_t seed);
/// Each edge present with probability 1/2. Vertices g0, g1, ...
Graph random_graph(std::size_t vertices, std::uint64_t seed);

}
