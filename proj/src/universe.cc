#include <sepsys/universe.hh>

namespace sepsys {

namespace {
    // Least element of `candidates` in the order, if it is below all of them.
    std::optional<Elem> minimum_of(const SepSystem & s, const Bitset & candidates)
    {
        std::optional<Elem> found;
        candidates.for_each([&](Elem c) {
            if (! found && candidates.is_subset_of(s.up(c)))
                found = c;
        });
        return found;
    }

    std::optional<Elem> maximum_of(const SepSystem & s, const Bitset & candidates)
    {
        std::optional<Elem> found;
        candidates.for_each([&](Elem c) {
            if (! found && candidates.is_subset_of(s.down(c)))
                found = c;
        });
        return found;
    }
}

Universe Universe::build(SepSystem base)
{
    Universe u;
    const std::size_t n = base.size();
    u._join.assign(n * n, 0);
    u._meet.assign(n * n, 0);
    for (Elem r = 0; r < n; ++r)
        for (Elem s = r; s < n; ++s) {
            auto j = minimum_of(base, base.up(r) & base.up(s));
            auto m = maximum_of(base, base.down(r) & base.down(s));
            if (! j || ! m)
                throw SepError(ErrorKind::not_a_lattice,
                    "'" + base.label(r) + "' and '" + base.label(s) + "' have no " + (j ? "meet" : "join"), {r, s});
            u._join[r * n + s] = u._join[s * n + r] = *j;
            u._meet[r * n + s] = u._meet[s * n + r] = *m;
        }
    if (n > 0) {
        u._least = *base.least();
        u._greatest = *base.greatest();
    }
    u._base = std::move(base);
    return u;
}

Verdict<Triple> is_distributive(const Universe & u)
{
    const std::size_t n = u.size();
    for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
            for (Elem z = 0; z < n; ++z)
                if (u.meet(x, u.join(y, z)) != u.join(u.meet(x, y), u.meet(x, z)))
                    return Verdict<Triple>::fail({x, y, z});
    return Verdict<Triple>::pass();
}

std::optional<Triple> cancellation_witness(const Universe & u)
{
    const std::size_t n = u.size();
    for (Elem s = 0; s < n; ++s)
        for (Elem t = 0; t < n; ++t) {
            if (u.leq(s, t))
                continue;
            for (Elem x = 0; x < n; ++x)
                if (u.leq(u.meet(s, x), u.meet(t, x)) && u.leq(u.join(s, x), u.join(t, x)))
                    return Triple{s, t, x};
        }
    return std::nullopt;
}

Verdict<ElemPair> small_joins_are_small(const Universe & u)
{
    const auto & b = u.base();
    for (Elem s = 0; s < u.size(); ++s)
        for (Elem t = 0; t < u.size(); ++t)
            if (b.is_small(s) && b.is_small(t) && ! b.is_small(u.join(s, t)))
                return Verdict<ElemPair>::fail({s, t});
    return Verdict<ElemPair>::pass();
}

Verdict<ElemPair> cosmall_meets_are_cosmall(const Universe & u)
{
    const auto & b = u.base();
    for (Elem s = 0; s < u.size(); ++s)
        for (Elem t = 0; t < u.size(); ++t)
            if (b.is_cosmall(s) && b.is_cosmall(t) && ! b.is_cosmall(u.meet(s, t)))
                return Verdict<ElemPair>::fail({s, t});
    return Verdict<ElemPair>::pass();
}

SmallAlgebraReport small_algebra(const Universe & u)
{
    const auto & b = u.base();
    SmallAlgebraReport report;
    report.smalls = b.smalls();
    if (report.smalls.empty())
        return report;

    Bitset in_small(u.size());
    for (Elem x : report.smalls)
        in_small.set(x);

    bool closed = true;
    for (Elem x : report.smalls)
        for (Elem y : report.smalls)
            if (! in_small.test(u.join(x, y)) || ! in_small.test(u.meet(x, y)))
                closed = false;
    report.is_bounded_sublattice = closed;

    report.max_small = maximum_of(b, in_small);
    if (report.max_small)
        report.max_degenerate = b.is_degenerate(*report.max_small);

    // Small(U) is down-closed, so its atoms are exactly the atoms of U that are small.
    const Elem bottom = u.least();
    for (Elem x : report.smalls)
        if (x != bottom && b.down(x).count() == 2)
            report.atoms.push_back(x);

    if (! closed || ! report.max_small)
        return report;

    const Elem top = *report.max_small;
    bool distributive = true;
    for (Elem x : report.smalls)
        for (Elem y : report.smalls)
            for (Elem z : report.smalls)
                if (u.meet(x, u.join(y, z)) != u.join(u.meet(x, y), u.meet(x, z)))
                    distributive = false;

    bool complemented = true;
    for (Elem x : report.smalls) {
        bool has_complement = false;
        for (Elem y : report.smalls)
            if (u.join(x, y) == top && u.meet(x, y) == bottom)
                has_complement = true;
        if (! has_complement)
            complemented = false;
    }
    report.is_boolean = distributive && complemented;
    return report;
}

}
