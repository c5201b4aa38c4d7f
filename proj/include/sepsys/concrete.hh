#pragma once

#include <sepsys/universe.hh>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace sepsys {

class GroundSet
{
public:
    GroundSet() = default;
    /// Throws SepError(malformed_input) on duplicate point ids.
    explicit GroundSet(std::vector<std::string> points);
    static GroundSet numbered(std::size_t n, const std::string & prefix = "v");

    std::size_t size() const { return _points.size(); }
    const std::string & name(std::size_t i) const { return _points.at(i); }
    const std::vector<std::string> & points() const { return _points; }
    std::optional<std::size_t> index_of(const std::string & point) const;

    friend bool operator==(const GroundSet &, const GroundSet &) = default;

private:
    std::vector<std::string> _points;
};

/// An oriented separation (A, B) of a ground set, sides stored as masks over
/// the ground order.
struct SetSep
{
    Bitset a;
    Bitset b;

    SetSep inverse() const { return {b, a}; }
    bool covers_ground() const { return (a | b).all(); }
    bool is_bipartition() const { return ! a.intersects(b); }

    /// (A,B) <= (C,D) iff A ⊆ C and D ⊆ B
    static bool leq(const SetSep & x, const SetSep & y) { return x.a.is_subset_of(y.a) && y.b.is_subset_of(x.b); }
    static SetSep join(const SetSep & x, const SetSep & y) { return {x.a | y.a, x.b & y.b}; }
    static SetSep meet(const SetSep & x, const SetSep & y) { return {x.a & y.a, x.b | y.b}; }

    friend bool operator==(const SetSep &, const SetSep &) = default;
    friend bool operator<(const SetSep & x, const SetSep & y)
    {
        if (x.a == y.a)
            return x.b < y.b;
        return x.a < y.a;
    }
};

/// "({a},{a,b})"
std::string format_setsep(const GroundSet & ground, const SetSep & s);
std::string format_subset(const GroundSet & ground, const Bitset & subset);

class Graph
{
public:
    Graph() = default;
    /// Edges are unordered; duplicates are merged. Throws on self-loops or
    /// out-of-range endpoints.
    Graph(GroundSet vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

    const GroundSet & vertices() const { return _vertices; }
    std::size_t vertex_count() const { return _vertices.size(); }
    /// Normalized: first < second, sorted, unique.
    const std::vector<std::pair<std::size_t, std::size_t>> & edges() const { return _edges; }
    bool adjacent(std::size_t u, std::size_t v) const;

private:
    GroundSet _vertices;
    std::vector<std::pair<std::size_t, std::size_t>> _edges;
    std::vector<Bitset> _adjacency;
};

enum class ConcreteKind { general, bipartition, graph };

/// A family of separations of one ground set, closed under inversion.
/// Separations are kept deduplicated in canonical (mask) order.
class ConcreteSystem
{
public:
    ConcreteSystem() = default;
    /// Throws SepError(malformed_input) if a separation does not cover the
    /// ground set, or is not disjoint for bipartition kind, and
    /// SepError(not_closed) if the family is not closed under inversion.
    ConcreteSystem(GroundSet ground, std::vector<SetSep> seps, ConcreteKind kind = ConcreteKind::general);

    const GroundSet & ground() const { return _ground; }
    const std::vector<SetSep> & seps() const { return _seps; }
    ConcreteKind kind() const { return _kind; }
    std::size_t size() const { return _seps.size(); }
    std::optional<std::size_t> index_of(const SetSep & s) const;
    bool contains(const SetSep & s) const { return index_of(s).has_value(); }
    std::string label(std::size_t i) const { return format_setsep(_ground, _seps.at(i)); }

    /// Closed under componentwise union/intersection joins and meets.
    bool is_lattice_closed() const;

private:
    GroundSet _ground;
    std::vector<SetSep> _seps;
    ConcreteKind _kind = ConcreteKind::general;
};

/// Largest ground set accepted by the full-universe constructors.
inline constexpr std::size_t max_full_universe_ground = 12;

/// U(V): every (A, B) with A ∪ B = V. 3^|V| oriented separations.
ConcreteSystem full_set_universe(const GroundSet & ground);
/// UB(V): every (A, B) with A ∪ B = V and A ∩ B = ∅. 2^|V| oriented separations.
ConcreteSystem bipartition_universe(const GroundSet & ground);
/// U(G): the members of U(V(G)) with no edge between A∖B and B∖A.
ConcreteSystem graph_universe(const Graph & g);

/// The abstract system underlying a concrete one. `labelling[x]` is the set
/// separation behind element x.
struct AbstractView
{
    SepSystem system;
    std::optional<Universe> universe;
    GroundSet ground;
    std::vector<SetSep> labelling;
};

/// With `as_universe`, throws SepError(not_closed) unless the family is
/// closed under joins and meets; the lattice tables are then rebuilt from
/// the order and checked against union/intersection.
AbstractView as_abstract(const ConcreteSystem & c, bool as_universe);

}
