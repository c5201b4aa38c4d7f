#include <sepsys/concrete.hh>

#include <algorithm>
#include <unordered_set>

namespace sepsys {

GroundSet::GroundSet(std::vector<std::string> points) :
    _points(std::move(points))
{
    std::unordered_set<std::string> seen;
    for (const auto & p : _points)
        if (! seen.insert(p).second)
            throw SepError(ErrorKind::malformed_input, "duplicate point '" + p + "'");
}

GroundSet GroundSet::numbered(std::size_t n, const std::string & prefix)
{
    std::vector<std::string> points;
    for (std::size_t i = 0; i < n; ++i)
        points.push_back(prefix + std::to_string(i));
    return GroundSet(std::move(points));
}

std::optional<std::size_t> GroundSet::index_of(const std::string & point) const
{
    for (std::size_t i = 0; i < _points.size(); ++i)
        if (_points[i] == point)
            return i;
    return std::nullopt;
}

std::string format_subset(const GroundSet & ground, const Bitset & subset)
{
    std::string out = "{";
    bool first = true;
    subset.for_each([&](std::size_t i) {
        if (! first)
            out += ",";
        out += ground.name(i);
        first = false;
    });
    return out + "}";
}

std::string format_setsep(const GroundSet & ground, const SetSep & s)
{
    return "(" + format_subset(ground, s.a) + "," + format_subset(ground, s.b) + ")";
}

Graph::Graph(GroundSet vertices, std::vector<std::pair<std::size_t, std::size_t>> edges) :
    _vertices(std::move(vertices))
{
    const std::size_t n = _vertices.size();
    _adjacency.assign(n, Bitset(n));
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw SepError(ErrorKind::malformed_input, "edge endpoint out of range");
        if (u == v)
            throw SepError(ErrorKind::malformed_input, "self-loop at '" + _vertices.name(u) + "'");
        if (u > v)
            std::swap(u, v);
        _edges.emplace_back(u, v);
        _adjacency[u].set(v);
        _adjacency[v].set(u);
    }
    std::sort(_edges.begin(), _edges.end());
    _edges.erase(std::unique(_edges.begin(), _edges.end()), _edges.end());
}

bool Graph::adjacent(std::size_t u, std::size_t v) const
{
    return _adjacency.at(u).test(v);
}

ConcreteSystem::ConcreteSystem(GroundSet ground, std::vector<SetSep> seps, ConcreteKind kind) :
    _ground(std::move(ground)),
    _seps(std::move(seps)),
    _kind(kind)
{
    const std::size_t n = _ground.size();
    for (const auto & s : _seps) {
        if (s.a.size() != n || s.b.size() != n)
            throw SepError(ErrorKind::malformed_input, "separation over a different ground set");
        if (! s.covers_ground())
            throw SepError(ErrorKind::malformed_input, format_setsep(_ground, s) + " does not cover the ground set");
        if (kind == ConcreteKind::bipartition && ! s.is_bipartition())
            throw SepError(ErrorKind::malformed_input, format_setsep(_ground, s) + " is not a bipartition");
    }
    std::sort(_seps.begin(), _seps.end());
    _seps.erase(std::unique(_seps.begin(), _seps.end()), _seps.end());
    for (const auto & s : _seps)
        if (! contains(s.inverse()))
            throw SepError(ErrorKind::not_closed, "inverse of " + format_setsep(_ground, s) + " missing");
}

std::optional<std::size_t> ConcreteSystem::index_of(const SetSep & s) const
{
    auto it = std::lower_bound(_seps.begin(), _seps.end(), s);
    if (it != _seps.end() && *it == s)
        return static_cast<std::size_t>(it - _seps.begin());
    return std::nullopt;
}

bool ConcreteSystem::is_lattice_closed() const
{
    for (const auto & x : _seps)
        for (const auto & y : _seps)
            if (! contains(SetSep::join(x, y)) || ! contains(SetSep::meet(x, y)))
                return false;
    return true;
}

namespace {
    void check_ground_budget(const GroundSet & ground)
    {
        if (ground.size() > max_full_universe_ground)
            throw SepError(ErrorKind::budget_exceeded,
                "ground set of size " + std::to_string(ground.size()) + " exceeds the limit of "
                    + std::to_string(max_full_universe_ground));
    }

    // Calls f(a, b) for every pair of masks with a ∪ b = V, in mask order.
    template <typename F>
    void for_each_cover(std::size_t n, F && f)
    {
        const std::uint64_t full = (n == 64) ? ~0ull : ((1ull << n) - 1);
        for (std::uint64_t a = 0;; ++a) {
            const std::uint64_t rest = full & ~a;
            // b ranges over supersets of rest
            for (std::uint64_t extra = 0;; extra = (extra - a) & a) {
                f(a, rest | extra);
                if (extra == a)
                    break;
            }
            if (a == full)
                break;
        }
    }

    Bitset mask_to_bits(std::size_t n, std::uint64_t mask)
    {
        Bitset b(n);
        for (std::size_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u)
                b.set(i);
        return b;
    }
}

ConcreteSystem full_set_universe(const GroundSet & ground)
{
    check_ground_budget(ground);
    const std::size_t n = ground.size();
    std::vector<SetSep> seps;
    for_each_cover(n, [&](std::uint64_t a, std::uint64_t b) { seps.push_back({mask_to_bits(n, a), mask_to_bits(n, b)}); });
    return ConcreteSystem(ground, std::move(seps));
}

ConcreteSystem bipartition_universe(const GroundSet & ground)
{
    check_ground_budget(ground);
    const std::size_t n = ground.size();
    const std::uint64_t full = (1ull << n) - 1;
    std::vector<SetSep> seps;
    for (std::uint64_t a = 0; a <= full; ++a)
        seps.push_back({mask_to_bits(n, a), mask_to_bits(n, full & ~a)});
    return ConcreteSystem(ground, std::move(seps), ConcreteKind::bipartition);
}

ConcreteSystem graph_universe(const Graph & g)
{
    check_ground_budget(g.vertices());
    const std::size_t n = g.vertex_count();
    std::vector<SetSep> seps;
    for_each_cover(n, [&](std::uint64_t a, std::uint64_t b) {
        const std::uint64_t a_only = a & ~b, b_only = b & ~a;
        for (auto [u, v] : g.edges()) {
            const bool u_a = (a_only >> u) & 1u, u_b = (b_only >> u) & 1u;
            const bool v_a = (a_only >> v) & 1u, v_b = (b_only >> v) & 1u;
            if ((u_a && v_b) || (u_b && v_a))
                return;
        }
        seps.push_back({mask_to_bits(n, a), mask_to_bits(n, b)});
    });
    return ConcreteSystem(g.vertices(), std::move(seps), ConcreteKind::graph);
}

AbstractView as_abstract(const ConcreteSystem & c, bool as_universe)
{
    if (as_universe && ! c.is_lattice_closed())
        throw SepError(ErrorKind::not_closed, "family is not closed under joins and meets");

    const std::size_t n = c.size();
    std::vector<std::string> labels;
    std::vector<Elem> inv(n);
    BitMatrix leq(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto & s = c.seps()[i];
        labels.push_back(c.label(i));
        inv[i] = *c.index_of(s.inverse());
        for (std::size_t j = 0; j < n; ++j)
            if (SetSep::leq(s, c.seps()[j]))
                leq.set(i, j);
    }

    AbstractView view;
    view.system = SepSystem::from_order(std::move(labels), std::move(inv), std::move(leq));
    view.ground = c.ground();
    view.labelling = c.seps();
    if (as_universe) {
        view.universe = Universe::build(view.system);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const auto & x = c.seps()[i];
                const auto & y = c.seps()[j];
                if (c.seps()[view.universe->join(i, j)] != SetSep::join(x, y)
                    || c.seps()[view.universe->meet(i, j)] != SetSep::meet(x, y))
                    throw InternalAssertionFailed("order-derived lattice disagrees with union/intersection");
            }
    }
    return view;
}

}
