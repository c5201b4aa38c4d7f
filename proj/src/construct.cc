#include <sepsys/construct.hh>
#include <sepsys/verify.hh>

#include <algorithm>

namespace sepsys {

std::string_view to_string(RefusalReason r)
{
    switch (r) {
    case RefusalReason::not_scrupulous: return "NotScrupulous";
    case RefusalReason::not_fastidious: return "NotFastidious";
    case RefusalReason::not_distributive: return "NotDistributive";
    case RefusalReason::smalls_not_boolean: return "SmallsNotBoolean";
    case RefusalReason::max_small_not_degenerate: return "MaxSmallNotDegenerate";
    }
    return "Unknown";
}

namespace {
    Refusal refuse(RefusalReason reason, std::vector<Elem> witness, std::string detail)
    {
        return Refusal{reason, std::move(witness), std::move(detail)};
    }

    Refusal not_scrupulous(const SepSystem & s, ElemPair w)
    {
        return refuse(RefusalReason::not_scrupulous, {w.first, w.second},
            "small '" + s.label(w.first) + "' is not below the inverse of small '" + s.label(w.second) + "'");
    }

    Refusal not_fastidious(const SepSystem & s, ElemPair w)
    {
        return refuse(RefusalReason::not_fastidious, {w.first, w.second},
            "small '" + s.label(w.first) + "' is not below '" + s.label(w.second) + "'");
    }

    Refusal not_distributive(const Universe & u, Triple t)
    {
        const auto & b = u.base();
        return refuse(RefusalReason::not_distributive, {t.x, t.y, t.z},
            "distributive law fails for ('" + b.label(t.x) + "', '" + b.label(t.y) + "', '" + b.label(t.z) + "')");
    }

    Implementation & release(Implementation & impl, ConcreteKind kind)
    {
        if (impl.mode != Mode::graphic)
            impl.target = ConcreteSystem(impl.ground, impl.map, kind);
        auto map = SepMap::of(impl);
        auto verdict = is_universe_mode(impl.mode) ? check_universe_isomorphism(map) : check_isomorphism_onto_image(map);
        if (! verdict)
            throw InternalAssertionFailed("constructed map failed verification (" + std::string(to_string(verdict.witness->defect))
                + " at '" + impl.source.label(verdict.witness->r) + "', '" + impl.source.label(verdict.witness->s) + "')");
        impl.verified = true;
        return impl;
    }

    // s ↦ ({X ∈ ground : s ∈ X}, {X ∈ ground : inv s ∈ X})
    std::vector<SetSep> membership_map(const SepSystem & s, const std::vector<Bitset> & ground)
    {
        std::vector<SetSep> map;
        for (Elem x = 0; x < s.size(); ++x) {
            SetSep img{Bitset(ground.size()), Bitset(ground.size())};
            for (std::size_t i = 0; i < ground.size(); ++i) {
                img.a.assign(i, ground[i].test(x));
                img.b.assign(i, ground[i].test(s.inv(x)));
            }
            map.push_back(std::move(img));
        }
        return map;
    }

    std::optional<Refusal> check_strong_preconditions(const Universe & u)
    {
        if (auto d = is_distributive(u); ! d)
            return not_distributive(u, *d.witness);
        if (auto s = is_scrupulous(u.base()); ! s)
            return not_scrupulous(u.base(), *s.witness);
        return std::nullopt;
    }

    Implementation strong_from_ground(const Universe & u, const std::vector<Bitset> & ground, Mode mode)
    {
        const auto & b = u.base();
        Implementation impl;
        impl.mode = mode;
        impl.source = b;
        impl.source_universe = u;
        std::vector<std::string> names;
        for (const auto & x : ground) {
            // x is ↑r for the least r in x
            std::optional<Elem> bottom;
            x.for_each([&](Elem e) {
                if (! bottom && x.is_subset_of(b.up(e)))
                    bottom = e;
            });
            names.push_back(bottom ? "up(" + b.label(*bottom) + ")" : "empty");
        }
        impl.ground = GroundSet(std::move(names));
        impl.map = membership_map(b, ground);
        return impl;
    }

    // regular systems: ground = consistent orientations
    struct OrientationImplementation
    {
        GroundSet ground;
        std::vector<SetSep> map;
    };

    OrientationImplementation implement_regular(const SepSystem & s)
    {
        auto all = consistent_orientations(s);
        OrientationImplementation out;
        out.ground = GroundSet::numbered(all.size(), "o");
        for (Elem x = 0; x < s.size(); ++x) {
            SetSep img{Bitset(all.size()), Bitset(all.size())};
            for (auto i : orientations_containing(s, s.inv(x), all))
                img.a.set(i);
            for (auto i : orientations_containing(s, x, all))
                img.b.set(i);
            out.map.push_back(std::move(img));
        }
        return out;
    }
}

Outcome implement_by_sets(const SepSystem & s)
{
    if (auto v = is_scrupulous(s); ! v)
        return not_scrupulous(s, *v.witness);

    std::vector<Elem> points;
    std::vector<std::string> names;
    for (Elem x = 0; x < s.size(); ++x)
        if (! s.is_cosmall(x)) {
            points.push_back(x);
            names.push_back(s.label(x));
        }

    Implementation impl;
    impl.mode = Mode::sets;
    impl.source = s;
    impl.ground = GroundSet(std::move(names));

    // A_s = {x ∈ V : x ≱ s}
    auto side = [&](Elem t) {
        Bitset a(points.size());
        for (std::size_t i = 0; i < points.size(); ++i)
            a.assign(i, ! s.leq(t, points[i]));
        return a;
    };
    for (Elem x = 0; x < s.size(); ++x)
        impl.map.push_back({side(x), side(s.inv(x))});
    return release(impl, ConcreteKind::general);
}

std::vector<Bitset> strong_ground_set(const Universe & u)
{
    const auto & b = u.base();
    if (u.size() == 0)
        return {Bitset(0)};

    Bitset cosmall(u.size());
    for (Elem x : b.cosmalls())
        cosmall.set(x);

    std::vector<Bitset> result;
    for (Elem r = 0; r < u.size(); ++r) {
        const Bitset & x = b.up(r);
        if (! cosmall.is_subset_of(x))
            continue;
        const Bitset rest = x.complement();
        bool join_closed = true;
        rest.for_each([&](Elem p) {
            rest.for_each([&](Elem q) {
                if (x.test(u.join(p, q)))
                    join_closed = false;
            });
        });
        if (join_closed)
            result.push_back(x);
    }
    std::sort(result.begin(), result.end());
    return result;
}

Outcome strong_implement_by_sets(const Universe & u)
{
    if (auto r = check_strong_preconditions(u))
        return *r;
    auto impl = strong_from_ground(u, strong_ground_set(u), Mode::strong_sets);
    return release(impl, ConcreteKind::general);
}

Outcome atomic_strong_implementation(const Universe & u)
{
    if (auto r = check_strong_preconditions(u))
        return *r;
    auto ground = strong_ground_set(u);
    const Bitset everything = Bitset::full(u.size());
    std::erase_if(ground, [&](const Bitset & x) { return x == everything; });

    auto impl = strong_from_ground(u, ground, Mode::strong_sets);
    const auto & b = u.base();
    for (Elem x : b.smalls()) {
        auto c = classify(b, x);
        if (c.atomic.value_or(false) && (impl.map[x].a.count() != 1 || ! impl.map[x].b.all()))
            throw InternalAssertionFailed("small atom '" + b.label(x) + "' does not map to a singleton separation");
    }
    return release(impl, ConcreteKind::general);
}

Outcome strong_implement_by_bipartitions(const Universe & u)
{
    const auto & b = u.base();
    if (auto d = is_distributive(u); ! d)
        return not_distributive(u, *d.witness);
    if (auto f = is_fastidious(b); ! f)
        return not_fastidious(b, *f.witness);

    auto sets = strong_implement_by_sets(u);
    if (! sets.accepted())
        throw InternalAssertionFailed("fastidious universe was refused a strong set implementation");
    const auto & f = sets.implementation();
    if (u.size() == 0) {
        Implementation impl = f;
        impl.mode = Mode::strong_bipartitions;
        impl.verified = false;
        return release(impl, ConcreteKind::bipartition);
    }

    const Elem top = u.greatest();
    if (b.cosmalls() != std::vector<Elem>{top})
        throw InternalAssertionFailed("fastidious universe has a co-small element other than its maximum");
    const SetSep & top_image = f.map[top];
    if (! top_image.a.all())
        throw InternalAssertionFailed("image of the maximum does not have the whole ground set as first side");
    const Bitset & shared = top_image.b;
    for (Elem x = 0; x < u.size(); ++x)
        if (! ((f.map[x].a & f.map[x].b) == shared))
            throw InternalAssertionFailed("sides of '" + b.label(x) + "' do not meet in the common intersection");

    // g(A, B) = (A ∖ X, B ∖ X)
    const auto keep = shared.complement().members();
    Implementation impl;
    impl.mode = Mode::strong_bipartitions;
    impl.source = b;
    impl.source_universe = u;
    std::vector<std::string> names;
    for (auto p : keep)
        names.push_back(f.ground.name(p));
    impl.ground = GroundSet(std::move(names));
    for (const auto & img : f.map) {
        SetSep g{Bitset(keep.size()), Bitset(keep.size())};
        for (std::size_t i = 0; i < keep.size(); ++i) {
            g.a.assign(i, img.a.test(keep[i]));
            g.b.assign(i, img.b.test(keep[i]));
        }
        impl.map.push_back(std::move(g));
    }
    return release(impl, ConcreteKind::bipartition);
}

Outcome implement_by_bipartitions(const SepSystem & s)
{
    if (auto f = is_fastidious(s); ! f)
        return not_fastidious(s, *f.witness);

    Implementation impl;
    impl.mode = Mode::bipartitions;
    impl.source = s;

    auto regular = is_regular(s);
    if (regular) {
        auto o = implement_regular(s);
        impl.ground = std::move(o.ground);
        impl.map = std::move(o.map);
        return release(impl, ConcreteKind::bipartition);
    }

    const Elem small = *regular.witness;
    if (s.unoriented_count() == 1) {
        if (s.is_degenerate(small)) {
            impl.ground = GroundSet();
            impl.map = {SetSep{Bitset(0), Bitset(0)}};
        }
        else {
            impl.ground = GroundSet::numbered(1, "v");
            impl.map.resize(2);
            impl.map[small] = {Bitset(1), Bitset::full(1)};
            impl.map[s.inv(small)] = {Bitset::full(1), Bitset(1)};
        }
        return release(impl, ConcreteKind::bipartition);
    }

    if (s.is_degenerate(small))
        throw InternalAssertionFailed("fastidious system with further separations has a degenerate small element");

    Bitset keep = Bitset::full(s.size());
    keep.reset(small);
    keep.reset(s.inv(small));
    const auto rest = s.induced(keep);
    if (! is_regular(rest))
        throw InternalAssertionFailed("removing the unique small separation left a small element");
    auto o = implement_regular(rest);

    const std::size_t n = o.ground.size();
    impl.ground = std::move(o.ground);
    impl.map.resize(s.size());
    std::size_t next = 0;
    keep.for_each([&](Elem x) { impl.map[x] = std::move(o.map[next++]); });
    impl.map[small] = {Bitset(n), Bitset::full(n)};
    impl.map[s.inv(small)] = {Bitset::full(n), Bitset(n)};
    return release(impl, ConcreteKind::bipartition);
}

Outcome graphic_implementation(const Universe & u)
{
    if (auto d = is_distributive(u); ! d)
        return not_distributive(u, *d.witness);
    auto report = small_algebra(u);
    if (! report.is_boolean)
        return refuse(RefusalReason::smalls_not_boolean, {}, "small separations do not form a boolean algebra");
    if (! report.max_degenerate)
        return refuse(RefusalReason::max_small_not_degenerate, {*report.max_small},
            "maximal small separation '" + u.base().label(*report.max_small) + "' is not degenerate");

    auto atomic = atomic_strong_implementation(u);
    if (! atomic.accepted())
        throw InternalAssertionFailed("boolean small algebra with degenerate maximum but no strong implementation");
    Implementation impl = std::move(atomic.implementation());
    impl.mode = Mode::graphic;
    impl.verified = false;

    // v ~ w iff no image (A, B) has v ∈ A∖B and w ∈ B∖A
    const std::size_t n = impl.ground.size();
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t v = 0; v < n; ++v)
        for (std::size_t w = v + 1; w < n; ++w) {
            bool separated = std::any_of(impl.map.begin(), impl.map.end(), [&](const SetSep & s) {
                return s.a.test(v) && ! s.b.test(v) && s.b.test(w) && ! s.a.test(w);
            });
            if (! separated)
                edges.emplace_back(v, w);
        }
    impl.graph = Graph(impl.ground, std::move(edges));
    impl.target = graph_universe(*impl.graph);

    ConcreteSystem image(impl.ground, impl.map);
    if (image.seps() != impl.target.seps())
        throw InternalAssertionFailed("image of the universe differs from the universe of the reconstructed graph");
    return release(impl, ConcreteKind::graph);
}

}
