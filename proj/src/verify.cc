#include <sepsys/verify.hh>

#include <algorithm>
#include <set>

namespace sepsys {

std::string_view to_string(Mode m)
{
    switch (m) {
    case Mode::sets: return "sets";
    case Mode::bipartitions: return "bipartitions";
    case Mode::strong_sets: return "strong-sets";
    case Mode::strong_bipartitions: return "strong-bipartitions";
    case Mode::graphic: return "graph";
    }
    return "unknown";
}

std::optional<Mode> parse_mode(std::string_view name)
{
    for (Mode m : {Mode::sets, Mode::bipartitions, Mode::strong_sets, Mode::strong_bipartitions, Mode::graphic})
        if (to_string(m) == name)
            return m;
    return std::nullopt;
}

bool is_universe_mode(Mode m)
{
    return m == Mode::strong_sets || m == Mode::strong_bipartitions || m == Mode::graphic;
}

bool is_bipartition_mode(Mode m)
{
    return m == Mode::bipartitions || m == Mode::strong_bipartitions;
}

std::string_view to_string(MapDefect d)
{
    switch (d) {
    case MapDefect::not_total: return "not_total";
    case MapDefect::involution: return "involution";
    case MapDefect::order: return "order";
    case MapDefect::injectivity: return "injectivity";
    case MapDefect::reflection: return "reflection";
    case MapDefect::join: return "join";
    case MapDefect::meet: return "meet";
    case MapDefect::not_universe: return "not_universe";
    }
    return "unknown";
}

SepMap SepMap::into_sets(
    SepSystem domain, std::optional<Universe> domain_universe, std::size_t ground_size, std::vector<SetSep> images)
{
    SepMap m;
    m._domain = std::move(domain);
    m._domain_universe = std::move(domain_universe);
    m._codomain = SetCodomain{ground_size, std::move(images)};
    return m;
}

SepMap SepMap::into_system(SepSystem domain, SepSystem codomain, std::vector<Elem> images)
{
    SepMap m;
    m._domain = std::move(domain);
    m._codomain = SystemCodomain{std::move(codomain), std::nullopt, std::move(images)};
    return m;
}

SepMap SepMap::into_universe(Universe domain, Universe codomain, std::vector<Elem> images)
{
    SepMap m;
    m._domain = domain.base();
    m._domain_universe = std::move(domain);
    m._codomain = SystemCodomain{codomain.base(), std::move(codomain), std::move(images)};
    return m;
}

SepMap SepMap::of(const Implementation & impl)
{
    return into_sets(impl.source, impl.source_universe, impl.ground.size(), impl.map);
}

namespace {
    // Uniform view of the two codomain kinds, phrased over domain elements.
    struct SetView
    {
        const SepMap::SetCodomain & c;

        bool total(std::size_t n) const
        {
            if (c.images.size() != n)
                return false;
            return std::all_of(c.images.begin(), c.images.end(), [&](const SetSep & s) {
                return s.a.size() == c.ground_size && s.b.size() == c.ground_size && s.covers_ground();
            });
        }
        bool has_lattice() const { return true; }
        bool eq(Elem r, Elem s) const { return c.images[r] == c.images[s]; }
        bool leq(Elem r, Elem s) const { return SetSep::leq(c.images[r], c.images[s]); }
        bool inverse_of(Elem r, Elem s) const { return c.images[s] == c.images[r].inverse(); }
        bool join_is(Elem r, Elem s, Elem j) const { return c.images[j] == SetSep::join(c.images[r], c.images[s]); }
        bool meet_is(Elem r, Elem s, Elem m) const { return c.images[m] == SetSep::meet(c.images[r], c.images[s]); }
    };

    struct SystemView
    {
        const SepMap::SystemCodomain & c;

        bool total(std::size_t n) const
        {
            return c.images.size() == n
                && std::all_of(c.images.begin(), c.images.end(), [&](Elem x) { return x < c.system.size(); });
        }
        bool has_lattice() const { return c.universe.has_value(); }
        bool eq(Elem r, Elem s) const { return c.images[r] == c.images[s]; }
        bool leq(Elem r, Elem s) const { return c.system.leq(c.images[r], c.images[s]); }
        bool inverse_of(Elem r, Elem s) const { return c.images[s] == c.system.inv(c.images[r]); }
        bool join_is(Elem r, Elem s, Elem j) const { return c.images[j] == c.universe->join(c.images[r], c.images[s]); }
        bool meet_is(Elem r, Elem s, Elem m) const { return c.images[m] == c.universe->meet(c.images[r], c.images[s]); }
    };

    template <typename View>
    Verdict<MapWitness> homomorphism(const SepSystem & d, const View & v)
    {
        using V = Verdict<MapWitness>;
        if (! v.total(d.size()))
            return V::fail({MapDefect::not_total, 0, 0});
        for (Elem r = 0; r < d.size(); ++r)
            if (! v.inverse_of(r, d.inv(r)))
                return V::fail({MapDefect::involution, r, r});
        for (Elem r = 0; r < d.size(); ++r)
            for (Elem s = 0; s < d.size(); ++s)
                if (d.leq(r, s) && ! v.leq(r, s))
                    return V::fail({MapDefect::order, r, s});
        return V::pass();
    }

    template <typename View>
    Verdict<MapWitness> injective(const SepSystem & d, const View & v)
    {
        for (Elem r = 0; r < d.size(); ++r)
            for (Elem s = r + 1; s < d.size(); ++s)
                if (v.eq(r, s))
                    return Verdict<MapWitness>::fail({MapDefect::injectivity, r, s});
        return Verdict<MapWitness>::pass();
    }

    template <typename View>
    Verdict<MapWitness> iso_onto_image(const SepSystem & d, const View & v)
    {
        if (auto h = homomorphism(d, v); ! h)
            return h;
        if (auto i = injective(d, v); ! i)
            return i;
        for (Elem r = 0; r < d.size(); ++r)
            for (Elem s = 0; s < d.size(); ++s)
                if (v.leq(r, s) && ! d.leq(r, s))
                    return Verdict<MapWitness>::fail({MapDefect::reflection, r, s});
        return Verdict<MapWitness>::pass();
    }

    template <typename View>
    Verdict<MapWitness> universe_iso(const SepSystem & d, const std::optional<Universe> & du, const View & v)
    {
        using V = Verdict<MapWitness>;
        if (! du || ! v.has_lattice())
            return V::fail({MapDefect::not_universe, 0, 0});
        if (! v.total(d.size()))
            return V::fail({MapDefect::not_total, 0, 0});
        for (Elem r = 0; r < d.size(); ++r)
            if (! v.inverse_of(r, d.inv(r)))
                return V::fail({MapDefect::involution, r, r});
        if (auto i = injective(d, v); ! i)
            return i;
        for (Elem r = 0; r < d.size(); ++r)
            for (Elem s = 0; s < d.size(); ++s) {
                if (! v.join_is(r, s, du->join(r, s)))
                    return V::fail({MapDefect::join, r, s});
                if (! v.meet_is(r, s, du->meet(r, s)))
                    return V::fail({MapDefect::meet, r, s});
            }
        return V::pass();
    }

    template <typename F>
    auto visit_view(const SepMap & m, F && f)
    {
        if (auto set = std::get_if<SepMap::SetCodomain>(&m.codomain()))
            return f(SetView{*set});
        return f(SystemView{std::get<SepMap::SystemCodomain>(m.codomain())});
    }
}

Verdict<MapWitness> check_homomorphism(const SepMap & m)
{
    return visit_view(m, [&](const auto & v) { return homomorphism(m.domain(), v); });
}

Verdict<MapWitness> check_isomorphism_onto_image(const SepMap & m)
{
    return visit_view(m, [&](const auto & v) { return iso_onto_image(m.domain(), v); });
}

Verdict<MapWitness> check_universe_isomorphism(const SepMap & m)
{
    return visit_view(m, [&](const auto & v) { return universe_iso(m.domain(), m.domain_universe(), v); });
}

std::size_t canonical_ground_bound(const SepSystem & s)
{
    return s.size() - s.cosmalls().size();
}

namespace {
    struct MaskSep
    {
        std::uint64_t a, b;
        bool operator==(const MaskSep &) const = default;
    };

    bool mask_leq(const MaskSep & x, const MaskSep & y) { return (x.a & ~y.a) == 0 && (y.b & ~x.b) == 0; }

    class SetSearch
    {
    public:
        SetSearch(const SepSystem & s, std::size_t k, std::size_t & nodes, std::size_t budget) :
            _s(s),
            _nodes(nodes),
            _budget(budget),
            _full(k == 0 ? 0 : ((1ull << k) - 1)),
            _image(s.size()),
            _assigned(s.size(), false),
            _reps(s.unoriented())
        {
            for (std::uint64_t a = 0; a <= _full; ++a)
                for (std::uint64_t b = 0; b <= _full; ++b)
                    if ((a | b) == _full)
                        _candidates.push_back({a, b});
        }

        bool run() { return place(0); }
        const std::vector<MaskSep> & images() const { return _image; }

    private:
        bool fits(Elem x) const
        {
            for (Elem y = 0; y < _s.size(); ++y) {
                if (! _assigned[y] || y == x)
                    continue;
                if (_image[x] == _image[y])
                    return false;
                if (_s.leq(x, y) != mask_leq(_image[x], _image[y]) || _s.leq(y, x) != mask_leq(_image[y], _image[x]))
                    return false;
            }
            return true;
        }

        bool place(std::size_t depth)
        {
            if (depth == _reps.size())
                return true;
            const Elem x = _reps[depth], y = _s.inv(x);
            for (const auto & c : _candidates) {
                if (++_nodes > _budget)
                    throw SepError(ErrorKind::budget_exceeded, "brute-force search exceeded its node budget");
                const MaskSep ci{c.b, c.a};
                if ((x == y) != (c == ci))
                    continue;
                _image[x] = c;
                _assigned[x] = true;
                bool ok = fits(x);
                if (ok && x != y) {
                    _image[y] = ci;
                    _assigned[y] = true;
                    ok = fits(y);
                }
                if (ok && place(depth + 1))
                    return true;
                _assigned[x] = false;
                _assigned[y] = false;
            }
            return false;
        }

        const SepSystem & _s;
        std::size_t & _nodes;
        std::size_t _budget;
        std::uint64_t _full;
        std::vector<MaskSep> _image;
        std::vector<bool> _assigned;
        std::vector<Elem> _reps;
        std::vector<MaskSep> _candidates;
    };
}

std::optional<Implementation> oracle_brute_force_set_implementation(
    const SepSystem & s, std::size_t max_ground, std::size_t node_budget)
{
    if (max_ground > 8)
        throw SepError(ErrorKind::budget_exceeded, "ground bound above 8 is out of reach for exact search");
    std::size_t nodes = 0;
    for (std::size_t k = 0; k <= max_ground; ++k) {
        SetSearch search(s, k, nodes, node_budget);
        if (! search.run())
            continue;

        Implementation impl;
        impl.mode = Mode::sets;
        impl.source = s;
        impl.ground = GroundSet::numbered(k, "p");
        for (const auto & m : search.images()) {
            SetSep sep{Bitset(k), Bitset(k)};
            for (std::size_t i = 0; i < k; ++i) {
                sep.a.assign(i, (m.a >> i) & 1u);
                sep.b.assign(i, (m.b >> i) & 1u);
            }
            impl.map.push_back(std::move(sep));
        }
        impl.target = ConcreteSystem(impl.ground, impl.map);
        impl.verified = bool(check_isomorphism_onto_image(SepMap::of(impl)));
        if (! impl.verified)
            throw InternalAssertionFailed("brute-force search produced an unverifiable map");
        return impl;
    }
    return std::nullopt;
}

namespace {
    // Pointwise helpers that avoid the Bitset word kernels entirely.
    bool point_subset(const Bitset & x, const Bitset & y)
    {
        for (std::size_t p = 0; p < x.size(); ++p)
            if (x.test(p) && ! y.test(p))
                return false;
        return true;
    }

    bool point_equal(const Bitset & x, const Bitset & y)
    {
        if (x.size() != y.size())
            return false;
        for (std::size_t p = 0; p < x.size(); ++p)
            if (x.test(p) != y.test(p))
                return false;
        return true;
    }

    bool point_equal(const SetSep & x, const SetSep & y) { return point_equal(x.a, y.a) && point_equal(x.b, y.b); }

    bool point_leq(const SetSep & x, const SetSep & y) { return point_subset(x.a, y.a) && point_subset(y.b, x.b); }

    Bitset point_union(const Bitset & x, const Bitset & y)
    {
        Bitset r(x.size());
        for (std::size_t p = 0; p < x.size(); ++p)
            r.assign(p, x.test(p) || y.test(p));
        return r;
    }

    Bitset point_intersection(const Bitset & x, const Bitset & y)
    {
        Bitset r(x.size());
        for (std::size_t p = 0; p < x.size(); ++p)
            r.assign(p, x.test(p) && y.test(p));
        return r;
    }

    bool same_family(const std::vector<SetSep> & xs, const std::vector<SetSep> & ys)
    {
        auto covered = [](const std::vector<SetSep> & from, const std::vector<SetSep> & into) {
            return std::all_of(from.begin(), from.end(), [&](const SetSep & x) {
                return std::any_of(into.begin(), into.end(), [&](const SetSep & y) { return point_equal(x, y); });
            });
        };
        return covered(xs, ys) && covered(ys, xs);
    }

    // All (A, B) over the ground set with no edge between A∖B and B∖A,
    // by assigning each point to A only, B only, or both.
    std::vector<SetSep> enumerate_graph_separations(std::size_t n, const Graph & g)
    {
        std::vector<SetSep> out;
        std::vector<int> side(n, 0);
        auto rec = [&](auto & self, std::size_t p) -> void {
            if (p == n) {
                for (auto [u, v] : g.edges())
                    if ((side[u] == 1 && side[v] == 2) || (side[u] == 2 && side[v] == 1))
                        return;
                SetSep s{Bitset(n), Bitset(n)};
                for (std::size_t q = 0; q < n; ++q) {
                    s.a.assign(q, side[q] != 2);
                    s.b.assign(q, side[q] != 1);
                }
                out.push_back(std::move(s));
                return;
            }
            for (int k = 0; k < 3; ++k) {
                side[p] = k;
                self(self, p + 1);
            }
        };
        rec(rec, 0);
        return out;
    }
}

bool oracle_definitional_recheck(const Implementation & impl)
{
    const auto & src = impl.source;
    const std::size_t n = impl.ground.size();
    if (impl.map.size() != src.size())
        return false;

    for (Elem x = 0; x < src.size(); ++x) {
        const auto & img = impl.map[x];
        if (img.a.size() != n || img.b.size() != n)
            return false;
        for (std::size_t p = 0; p < n; ++p) {
            if (! img.a.test(p) && ! img.b.test(p))
                return false;
            if (is_bipartition_mode(impl.mode) && img.a.test(p) && img.b.test(p))
                return false;
        }
        const auto & inv_img = impl.map[src.inv(x)];
        if (! point_equal(inv_img.a, img.b) || ! point_equal(inv_img.b, img.a))
            return false;
    }

    for (Elem r = 0; r < src.size(); ++r)
        for (Elem s = 0; s < src.size(); ++s) {
            if (src.leq(r, s) != point_leq(impl.map[r], impl.map[s]))
                return false;
            if (r != s && point_equal(impl.map[r], impl.map[s]))
                return false;
        }

    if (is_universe_mode(impl.mode)) {
        if (! impl.source_universe)
            return false;
        const auto & u = *impl.source_universe;
        for (Elem r = 0; r < src.size(); ++r)
            for (Elem s = 0; s < src.size(); ++s) {
                const auto & x = impl.map[r];
                const auto & y = impl.map[s];
                const auto & j = impl.map[u.join(r, s)];
                const auto & m = impl.map[u.meet(r, s)];
                if (! point_equal(j.a, point_union(x.a, y.a)) || ! point_equal(j.b, point_intersection(x.b, y.b)))
                    return false;
                if (! point_equal(m.a, point_intersection(x.a, y.a)) || ! point_equal(m.b, point_union(x.b, y.b)))
                    return false;
            }
    }

    if (impl.target.ground().size() != n)
        return false;
    if (impl.mode == Mode::graphic) {
        if (! impl.graph || impl.graph->vertex_count() != n)
            return false;
        auto graph_seps = enumerate_graph_separations(n, *impl.graph);
        if (! same_family(graph_seps, impl.map) || ! same_family(graph_seps, impl.target.seps()))
            return false;
    }
    else if (! same_family(impl.map, impl.target.seps()))
        return false;
    return true;
}

std::vector<Bitset> naive_strong_ground_set(const Universe & u)
{
    const std::size_t n = u.size();
    if (n > 20)
        throw SepError(ErrorKind::budget_exceeded, "subset scan limited to universes of at most 20 elements");
    const auto & b = u.base();
    std::vector<Bitset> result;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        auto in = [&](Elem x) { return (mask >> x) & 1u; };
        bool ok = true;
        for (Elem x = 0; x < n && ok; ++x) {
            if (b.is_cosmall(x) && ! in(x))
                ok = false;
            for (Elem y = 0; y < n && ok; ++y) {
                if (in(x) && b.leq(x, y) && ! in(y))
                    ok = false;
                if (in(x) && in(y) && ! in(u.meet(x, y)))
                    ok = false;
                if (! in(x) && b.leq(y, x) && in(y))
                    ok = false;
                if (! in(x) && ! in(y) && in(u.join(x, y)))
                    ok = false;
            }
        }
        if (! ok)
            continue;
        Bitset x(n);
        for (Elem e = 0; e < n; ++e)
            x.assign(e, in(e));
        result.push_back(std::move(x));
    }
    std::sort(result.begin(), result.end());
    return result;
}

}
