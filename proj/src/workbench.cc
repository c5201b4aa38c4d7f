#include <sepsys/workbench.hh>
#include <sepsys/verify.hh>

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <unordered_map>

namespace sepsys {

namespace {
    std::string letter_name(std::size_t i)
    {
        std::string name;
        do {
            name.insert(name.begin(), static_cast<char>('a' + i % 26));
            i /= 26;
        } while (i-- > 0);
        return name;
    }
}

Lattice Lattice::from_order(std::vector<std::string> elems, BitMatrix leq)
{
    const std::size_t n = elems.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            if (leq.test(a, b) && leq.test(b, a))
                throw SepError(ErrorKind::antisymmetry_violation,
                    "lattice elements '" + elems[a] + "' and '" + elems[b] + "' are mutually <=", {a, b});

    const BitMatrix geq = leq.transpose();
    Lattice l;
    l._join.assign(n * n, 0);
    l._meet.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Bitset upper = leq.row(a) & leq.row(b);
            const Bitset lower = geq.row(a) & geq.row(b);
            std::optional<std::size_t> j, m;
            upper.for_each([&](std::size_t c) {
                if (! j && upper.is_subset_of(leq.row(c)))
                    j = c;
            });
            lower.for_each([&](std::size_t c) {
                if (! m && lower.is_subset_of(geq.row(c)))
                    m = c;
            });
            if (! j || ! m)
                throw SepError(ErrorKind::not_a_lattice,
                    "'" + elems[a] + "' and '" + elems[b] + "' have no " + (j ? "meet" : "join"), {a, b});
            l._join[a * n + b] = *j;
            l._meet[a * n + b] = *m;
        }
    l._elems = std::move(elems);
    l._leq = std::move(leq);
    return l;
}

Lattice Lattice::build(std::vector<std::string> elems, std::span<const std::pair<std::string, std::string>> relations)
{
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < elems.size(); ++i)
        if (! index.emplace(elems[i], i).second)
            throw SepError(ErrorKind::malformed_input, "duplicate lattice element '" + elems[i] + "'");
    BitMatrix leq(elems.size());
    leq.set_diagonal();
    for (const auto & [a, b] : relations) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            throw SepError(ErrorKind::unknown_element, "unknown lattice element in relation ('" + a + "', '" + b + "')");
        leq.set(ia->second, ib->second);
    }
    leq.transitive_closure();
    return from_order(std::move(elems), std::move(leq));
}

bool Lattice::is_distributive() const
{
    for (std::size_t x = 0; x < size(); ++x)
        for (std::size_t y = 0; y < size(); ++y)
            for (std::size_t z = 0; z < size(); ++z)
                if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z)))
                    return false;
    return true;
}

Lattice pentagon_lattice()
{
    std::vector<std::pair<std::string, std::string>> rel{{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}};
    return Lattice::build({"0", "a", "b", "c", "1"}, rel);
}

Lattice diamond_lattice()
{
    std::vector<std::pair<std::string, std::string>> rel{
        {"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}};
    return Lattice::build({"0", "a", "b", "c", "1"}, rel);
}

Lattice chain_lattice(std::size_t n)
{
    std::vector<std::string> elems;
    std::vector<std::pair<std::string, std::string>> rel;
    for (std::size_t i = 0; i < n; ++i) {
        elems.push_back(std::to_string(i));
        if (i > 0)
            rel.emplace_back(elems[i - 1], elems[i]);
    }
    return Lattice::build(std::move(elems), rel);
}

Universe universe_from_lattice(const Lattice & l)
{
    const std::size_t n = l.size();
    std::vector<std::string> labels;
    std::vector<Elem> inv;
    for (std::size_t r = 0; r < n; ++r) {
        labels.push_back(l.elems()[r] + "+");
        labels.push_back(l.elems()[r] + "-");
        inv.push_back(2 * r + 1);
        inv.push_back(2 * r);
    }
    std::vector<ElemPair> rel;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            if (l.leq(r, s)) {
                rel.emplace_back(2 * r, 2 * s);
                rel.emplace_back(2 * s + 1, 2 * r + 1);
            }
            rel.emplace_back(2 * r, 2 * s + 1);
        }
    return Universe::build(SepSystem::from_indices(std::move(labels), std::move(inv), rel));
}

void Tree::validate() const
{
    const std::size_t n = vertices.size();
    if (n == 0)
        throw SepError(ErrorKind::not_a_tree, "a tree needs at least one vertex");
    if (edges.size() != n - 1)
        throw SepError(ErrorKind::not_a_tree, "a tree on " + std::to_string(n) + " vertices has " + std::to_string(n - 1) + " edges");
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x)
            x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : edges) {
        if (u >= n || v >= n || u == v)
            throw SepError(ErrorKind::not_a_tree, "invalid edge");
        auto ru = find(u), rv = find(v);
        if (ru == rv)
            throw SepError(ErrorKind::not_a_tree, "edges contain a cycle");
        parent[ru] = rv;
    }
}

EdgeTreeSet edge_tree_set(const Tree & t)
{
    t.validate();
    if (t.edges.empty())
        throw SepError(ErrorKind::not_a_tree, "edge tree set needs at least one edge");

    const std::size_t n = t.vertices.size();
    std::vector<std::vector<std::size_t>> adj(n);
    for (auto [u, v] : t.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::vector<std::size_t>> dist(n, std::vector<std::size_t>(n, n));
    for (std::size_t s = 0; s < n; ++s) {
        std::queue<std::size_t> q;
        dist[s][s] = 0;
        q.push(s);
        while (! q.empty()) {
            auto x = q.front();
            q.pop();
            for (auto y : adj[x])
                if (dist[s][y] == n) {
                    dist[s][y] = dist[s][x] + 1;
                    q.push(y);
                }
        }
    }

    EdgeTreeSet out;
    std::vector<std::string> labels;
    std::vector<Elem> inv;
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        auto [v, w] = t.edges[i];
        const std::string name = t.vertices.name(v) + "~" + t.vertices.name(w);
        out.oriented_edges.emplace_back(v, w);
        out.oriented_edges.emplace_back(w, v);
        labels.push_back(name + "+");
        labels.push_back(name + "-");
        inv.push_back(2 * i + 1);
        inv.push_back(2 * i);
    }

    // (v,w) < (x,y) iff the edges differ and the path between them joins w to x
    std::vector<ElemPair> rel;
    const auto & oe = out.oriented_edges;
    for (Elem p = 0; p < oe.size(); ++p)
        for (Elem q = 0; q < oe.size(); ++q) {
            if (p / 2 == q / 2)
                continue;
            auto [v, w] = oe[p];
            auto [x, y] = oe[q];
            std::size_t best = n, from = 0, to = 0;
            for (auto a : {v, w})
                for (auto b : {x, y})
                    if (dist[a][b] < best) {
                        best = dist[a][b];
                        from = a;
                        to = b;
                    }
            if (from == w && to == x)
                rel.emplace_back(p, q);
        }
    out.system = SepSystem::from_indices(std::move(labels), std::move(inv), rel);

    // C(v,w): the component of v after deleting {v,w}
    auto component = [&](std::size_t v, std::size_t w) {
        Bitset c(n);
        std::vector<std::size_t> stack{v};
        c.set(v);
        while (! stack.empty()) {
            auto x = stack.back();
            stack.pop_back();
            for (auto y : adj[x])
                if (! c.test(y) && ! (x == v && y == w)) {
                    c.set(y);
                    stack.push_back(y);
                }
        }
        return c;
    };

    auto & impl = out.components;
    impl.mode = Mode::bipartitions;
    impl.source = out.system;
    impl.ground = t.vertices;
    for (auto [v, w] : oe)
        impl.map.push_back({component(v, w), component(w, v)});
    impl.target = ConcreteSystem(impl.ground, impl.map, ConcreteKind::bipartition);
    if (! check_isomorphism_onto_image(SepMap::of(impl)))
        throw InternalAssertionFailed("component labelling of an edge tree set is not an implementation");
    impl.verified = true;
    return out;
}

const std::vector<std::string> & example_names()
{
    static const std::vector<std::string> names{"nonscrupulous", "pentagon", "diamond", "three-star"};
    return names;
}

Instance gen_example(std::string_view name)
{
    using Pairs = std::vector<std::pair<std::string, std::string>>;
    const Pairs three_pairs{{"r+", "r-"}, {"s+", "s-"}, {"t+", "t-"}};
    const std::vector<std::string> six{"r+", "r-", "s+", "s-", "t+", "t-"};

    Instance inst;
    if (name == "nonscrupulous") {
        Pairs inv{{"r+", "r-"}, {"s+", "s-"}};
        Pairs rel{{"r+", "r-"}, {"s+", "s-"}};
        inst.system = SepSystem::build({"r+", "r-", "s+", "s-"}, inv, rel);
    }
    else if (name == "pentagon") {
        Pairs rel{{"r+", "s+"}, {"s+", "t+"}, {"t+", "r-"}, {"r+", "t-"}, {"t-", "s-"}, {"s-", "r-"}};
        inst.system = SepSystem::build(six, three_pairs, rel);
        inst.universe = Universe::build(inst.system);
    }
    else if (name == "diamond") {
        Pairs rel;
        for (const char * mid : {"s+", "s-", "t+", "t-"}) {
            rel.emplace_back("r+", mid);
            rel.emplace_back(mid, "r-");
        }
        inst.system = SepSystem::build(six, three_pairs, rel);
        inst.universe = Universe::build(inst.system);
    }
    else if (name == "three-star") {
        GroundSet ground({"x", "y", "z"});
        auto subset = [&](std::initializer_list<std::size_t> pts) {
            Bitset b(3);
            for (auto p : pts)
                b.set(p);
            return b;
        };
        const Bitset xy = subset({0, 1}), xz = subset({0, 2}), yz = subset({1, 2});
        std::vector<SetSep> seps{{xy, xz}, {xz, xy}, {xy, yz}, {yz, xy}, {xz, yz}, {yz, xz}};
        inst.concrete = ConcreteSystem(ground, std::move(seps));
        inst.system = as_abstract(*inst.concrete, false).system;
    }
    else
        throw SepError(ErrorKind::unknown_example, "unknown example '" + std::string(name) + "'");
    return inst;
}

namespace {
    // Element layout shared by the enumerator and the canonical form:
    // nondegenerate pairs first as (2i, 2i+1), then degenerate elements.
    struct Layout
    {
        std::size_t pairs = 0;
        std::size_t degenerate = 0;
        std::size_t size() const { return 2 * pairs + degenerate; }
        std::size_t inv(std::size_t x) const { return x < 2 * pairs ? (x ^ 1u) : x; }
    };

    SepSystem system_from_layout(const Layout & layout, const std::vector<std::uint16_t> & rows)
    {
        std::vector<std::string> labels;
        std::vector<Elem> inv;
        for (std::size_t i = 0; i < layout.pairs; ++i) {
            labels.push_back(letter_name(i) + "+");
            labels.push_back(letter_name(i) + "-");
        }
        for (std::size_t i = 0; i < layout.degenerate; ++i)
            labels.push_back(letter_name(layout.pairs + i));
        for (std::size_t x = 0; x < layout.size(); ++x)
            inv.push_back(layout.inv(x));
        BitMatrix leq(layout.size());
        for (std::size_t x = 0; x < layout.size(); ++x)
            for (std::size_t y = 0; y < layout.size(); ++y)
                if ((rows[x] >> y) & 1u)
                    leq.set(x, y);
        return SepSystem::from_order(std::move(labels), std::move(inv), std::move(leq));
    }

    // Minimal encoding over all relabellings that respect the layout:
    // permute pairs, flip pairs, permute degenerate elements.
    std::vector<std::uint8_t> canonical_encoding(const Layout & layout, const std::vector<std::uint16_t> & rows)
    {
        const std::size_t m = layout.size();
        std::vector<std::size_t> pair_perm(layout.pairs), degen_perm(layout.degenerate);
        std::iota(pair_perm.begin(), pair_perm.end(), 0);
        std::iota(degen_perm.begin(), degen_perm.end(), 0);

        std::vector<std::uint8_t> best;
        std::vector<std::size_t> pos(m);
        std::vector<std::uint8_t> code(m * m + 2);
        code[0] = static_cast<std::uint8_t>(layout.pairs);
        code[1] = static_cast<std::uint8_t>(layout.degenerate);
        do {
            for (std::uint32_t flips = 0; flips < (1u << layout.pairs); ++flips) {
                do {
                    // pos[new] = old
                    for (std::size_t i = 0; i < layout.pairs; ++i) {
                        const bool f = (flips >> i) & 1u;
                        pos[2 * i] = 2 * pair_perm[i] + (f ? 1 : 0);
                        pos[2 * i + 1] = 2 * pair_perm[i] + (f ? 0 : 1);
                    }
                    for (std::size_t i = 0; i < layout.degenerate; ++i)
                        pos[2 * layout.pairs + i] = 2 * layout.pairs + degen_perm[i];
                    for (std::size_t x = 0; x < m; ++x)
                        for (std::size_t y = 0; y < m; ++y)
                            code[2 + x * m + y] = (rows[pos[x]] >> pos[y]) & 1u;
                    if (best.empty() || code < best)
                        best = code;
                } while (std::next_permutation(degen_perm.begin(), degen_perm.end()));
            }
        } while (std::next_permutation(pair_perm.begin(), pair_perm.end()));
        return best;
    }

    std::vector<std::uint16_t> rows_of_code(const std::vector<std::uint8_t> & code, std::size_t m)
    {
        std::vector<std::uint16_t> rows(m, 0);
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = 0; y < m; ++y)
                if (code[2 + x * m + y])
                    rows[x] |= static_cast<std::uint16_t>(1u << y);
        return rows;
    }

    bool is_partial_order(const std::vector<std::uint16_t> & rows)
    {
        const std::size_t m = rows.size();
        for (std::size_t x = 0; x < m; ++x)
            for (std::size_t y = 0; y < m; ++y) {
                if (! ((rows[x] >> y) & 1u))
                    continue;
                if (x != y && ((rows[y] >> x) & 1u))
                    return false;
                if ((rows[y] & ~rows[x]) != 0)
                    return false;
            }
        return true;
    }
}

std::vector<std::uint8_t> canonical_form(const SepSystem & s)
{
    Layout layout;
    std::vector<Elem> old_of_new;
    for (Elem x = 0; x < s.size(); ++x)
        if (! s.is_degenerate(x) && x < s.inv(x)) {
            old_of_new.push_back(x);
            old_of_new.push_back(s.inv(x));
            ++layout.pairs;
        }
    for (Elem x = 0; x < s.size(); ++x)
        if (s.is_degenerate(x)) {
            old_of_new.push_back(x);
            ++layout.degenerate;
        }
    if (layout.pairs + layout.degenerate > 5)
        throw SepError(ErrorKind::budget_exceeded, "canonical form limited to 5 unoriented separations");
    std::vector<std::uint16_t> rows(layout.size(), 0);
    for (std::size_t x = 0; x < layout.size(); ++x)
        for (std::size_t y = 0; y < layout.size(); ++y)
            if (s.leq(old_of_new[x], old_of_new[y]))
                rows[x] |= static_cast<std::uint16_t>(1u << y);
    return canonical_encoding(layout, rows);
}

std::vector<SepSystem> enumerate_systems(std::size_t max_unoriented)
{
    if (max_unoriented > max_enumerated_unoriented)
        throw SepError(ErrorKind::budget_exceeded,
            "enumeration limited to " + std::to_string(max_enumerated_unoriented) + " unoriented separations");

    std::vector<SepSystem> out;
    for (std::size_t n = 0; n <= max_unoriented; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            Layout layout{n - k, k};
            const std::size_t m = layout.size();

            // Orbits of off-diagonal pairs under (x, y) -> (inv y, inv x).
            std::vector<std::vector<std::pair<std::size_t, std::size_t>>> orbits;
            std::set<std::pair<std::size_t, std::size_t>> seen;
            for (std::size_t x = 0; x < m; ++x)
                for (std::size_t y = 0; y < m; ++y) {
                    if (x == y || seen.count({x, y}))
                        continue;
                    std::pair<std::size_t, std::size_t> mate{layout.inv(y), layout.inv(x)};
                    seen.insert({x, y});
                    seen.insert(mate);
                    if (mate == std::pair{x, y})
                        orbits.push_back({{x, y}});
                    else
                        orbits.push_back({{x, y}, mate});
                }

            std::set<std::vector<std::uint8_t>> classes;
            for (std::uint32_t pick = 0; pick < (1u << orbits.size()); ++pick) {
                std::vector<std::uint16_t> rows(m, 0);
                for (std::size_t x = 0; x < m; ++x)
                    rows[x] = static_cast<std::uint16_t>(1u << x);
                for (std::size_t o = 0; o < orbits.size(); ++o)
                    if ((pick >> o) & 1u)
                        for (auto [x, y] : orbits[o])
                            rows[x] |= static_cast<std::uint16_t>(1u << y);
                if (is_partial_order(rows))
                    classes.insert(canonical_encoding(layout, rows));
            }
            for (const auto & code : classes)
                out.push_back(system_from_layout(layout, rows_of_code(code, m)));
        }
    return out;
}

SepSystem random_system(std::size_t n, std::uint64_t seed)
{
    if (n > max_random_unoriented)
        throw SepError(ErrorKind::budget_exceeded, "random systems limited to 8 unoriented separations");
    std::mt19937_64 rng(seed);
    Layout layout;
    for (std::size_t i = 0; i < n; ++i)
        (rng() % 8 == 0) ? ++layout.degenerate : ++layout.pairs;
    const std::size_t m = layout.size();

    std::vector<std::uint16_t> rows(m);
    for (std::size_t x = 0; x < m; ++x)
        rows[x] = static_cast<std::uint16_t>(1u << x);

    std::vector<std::pair<std::size_t, std::size_t>> candidates;
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            if (x != y)
                candidates.emplace_back(x, y);
    std::shuffle(candidates.begin(), candidates.end(), rng);

    const double density = std::uniform_real_distribution<double>(0.05, 0.4)(rng);
    std::bernoulli_distribution take(density);
    std::vector<ElemPair> accepted;
    for (auto [x, y] : candidates) {
        if (! take(rng) || ((rows[x] >> y) & 1u))
            continue;
        auto trial = rows;
        trial[x] |= static_cast<std::uint16_t>(1u << y);
        trial[layout.inv(y)] |= static_cast<std::uint16_t>(1u << layout.inv(x));
        for (std::size_t via = 0; via < m; ++via)
            for (std::size_t i = 0; i < m; ++i)
                if ((trial[i] >> via) & 1u)
                    trial[i] |= trial[via];
        if (is_partial_order(trial)) {
            rows = std::move(trial);
            accepted.emplace_back(x, y);
        }
    }
    return system_from_layout(layout, rows);
}

namespace {
    Lattice random_lattice(std::size_t max_size, std::mt19937_64 & rng)
    {
        // Intersection-closed families containing the full set are exactly the
        // finite lattices (ordered by inclusion).
        const std::size_t target = 1 + rng() % max_size;
        const std::uint32_t ground_bits = 4, full = (1u << ground_bits) - 1;
        std::set<std::uint32_t> family{full};
        auto close = [&](std::set<std::uint32_t> f) {
            bool grew = true;
            while (grew) {
                grew = false;
                for (auto a : f)
                    for (auto b : f)
                        if (f.insert(a & b).second)
                            grew = true;
            }
            return f;
        };
        for (int attempt = 0; attempt < 32 && family.size() < target; ++attempt) {
            auto trial = family;
            trial.insert(static_cast<std::uint32_t>(rng() & full));
            trial = close(std::move(trial));
            if (trial.size() <= target)
                family = std::move(trial);
        }
        std::vector<std::uint32_t> members(family.begin(), family.end());
        std::vector<std::string> names;
        for (std::size_t i = 0; i < members.size(); ++i)
            names.push_back("l" + std::to_string(i));
        BitMatrix leq(members.size());
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = 0; j < members.size(); ++j)
                if ((members[i] & ~members[j]) == 0)
                    leq.set(i, j);
        return Lattice::from_order(std::move(names), std::move(leq));
    }

    // The pentagon below `upper`, with the pentagon's top identified with
    // the bottom of `upper`.
    Lattice pentagon_below(const Lattice & upper)
    {
        const Lattice p = pentagon_lattice();
        const std::size_t low = p.size() - 1;
        std::vector<std::string> names;
        for (std::size_t i = 0; i < low; ++i)
            names.push_back("p" + p.elems()[i]);
        for (const auto & e : upper.elems())
            names.push_back(e);
        const std::size_t n = names.size();
        BitMatrix leq(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                bool le;
                if (i < low && j < low)
                    le = p.leq(i, j);
                else if (i < low)
                    le = true;
                else if (j < low)
                    le = false;
                else
                    le = upper.leq(i - low, j - low);
                if (le)
                    leq.set(i, j);
            }
        return Lattice::from_order(std::move(names), std::move(leq));
    }

    // L × L^op: (x, y) <= (x', y') iff x <= x' and y' <= y
    Universe square_universe(const Lattice & l)
    {
        const std::size_t n = l.size(), m = n * n;
        std::vector<std::string> labels;
        std::vector<Elem> inv;
        BitMatrix leq(m);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) {
                labels.push_back("(" + l.elems()[x] + "," + l.elems()[y] + ")");
                inv.push_back(y * n + x);
                for (std::size_t x2 = 0; x2 < n; ++x2)
                    for (std::size_t y2 = 0; y2 < n; ++y2)
                        if (l.leq(x, x2) && l.leq(y2, y))
                            leq.set(x * n + y, x2 * n + y2);
            }
        return Universe::build(SepSystem::from_order(std::move(labels), std::move(inv), std::move(leq)));
    }

    Bitset close_in(const Universe & u, Bitset keep)
    {
        bool grew = true;
        while (grew) {
            grew = false;
            const auto members = keep.members();
            for (Elem x : members) {
                if (! keep.test(u.inv(x))) {
                    keep.set(u.inv(x));
                    grew = true;
                }
                for (Elem y : members)
                    for (Elem z : {u.join(x, y), u.meet(x, y)})
                        if (! keep.test(z)) {
                            keep.set(z);
                            grew = true;
                        }
            }
        }
        return keep;
    }

    std::size_t unoriented_in(const Universe & u, const Bitset & keep)
    {
        std::size_t n = 0;
        keep.for_each([&](Elem x) { n += x <= u.inv(x); });
        return n;
    }

    Universe random_subuniverse(const Universe & ambient, std::size_t max_unoriented, std::mt19937_64 & rng)
    {
        Bitset keep(ambient.size());
        const std::size_t attempts = 4 * max_unoriented + 8;
        for (std::size_t i = 0; i < attempts; ++i) {
            Bitset trial = keep;
            trial.set(rng() % ambient.size());
            trial = close_in(ambient, std::move(trial));
            if (unoriented_in(ambient, trial) <= max_unoriented)
                keep = std::move(trial);
        }
        if (keep.none()) {
            const Elem x = rng() % ambient.size();
            keep = close_in(ambient, Bitset::from_indices(ambient.size(), std::vector<Elem>{ambient.join(x, ambient.inv(x))}));
        }
        return Universe::build(ambient.base().induced(keep));
    }

    // Join/meet/inverse closure inside U(V); nullopt once it exceeds the cap.
    std::optional<std::set<SetSep>> close_family(std::set<SetSep> family, std::size_t max_elems)
    {
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<SetSep> current(family.begin(), family.end());
            for (const auto & x : current) {
                if (family.insert(x.inverse()).second)
                    grew = true;
                for (const auto & y : current) {
                    if (family.insert(SetSep::join(x, y)).second)
                        grew = true;
                    if (family.insert(SetSep::meet(x, y)).second)
                        grew = true;
                }
                if (family.size() > max_elems)
                    return std::nullopt;
            }
        }
        return family;
    }

    std::size_t unoriented_in(const std::set<SetSep> & family)
    {
        std::size_t n = 0;
        for (const auto & x : family)
            if (! (x.inverse() < x))
                ++n;
        return n;
    }
}

Universe random_universe(std::size_t n, std::uint64_t seed, UniverseMode mode)
{
    if (n == 0 || n > max_random_unoriented)
        throw SepError(ErrorKind::budget_exceeded, "random universes need 1 to 8 unoriented separations");
    std::mt19937_64 rng(seed);

    if (mode == UniverseMode::lattice)
        return universe_from_lattice(random_lattice(n, rng));
    if (mode == UniverseMode::lattice_with_pentagon) {
        if (n < 5)
            throw SepError(ErrorKind::budget_exceeded, "a universe containing the pentagon needs 5 unoriented separations");
        return universe_from_lattice(pentagon_below(random_lattice(n - 4, rng)));
    }
    if (mode == UniverseMode::square)
        return random_subuniverse(square_universe(random_lattice(4, rng)), n, rng);

    const std::size_t k = 2 + rng() % 3;
    const GroundSet ground = GroundSet::numbered(k, "v");
    auto random_sep = [&] {
        SetSep s{Bitset(k), Bitset(k)};
        for (std::size_t p = 0; p < k; ++p) {
            auto side = rng() % 3;
            s.a.assign(p, side != 1);
            s.b.assign(p, side != 0);
        }
        return s;
    };

    std::set<SetSep> family;
    const std::size_t attempts = 4 * n + 8;
    for (std::size_t i = 0; i < attempts; ++i) {
        auto trial = family;
        trial.insert(random_sep());
        auto closed = close_family(std::move(trial), 2 * n);
        if (closed && unoriented_in(*closed) <= n)
            family = std::move(*closed);
    }
    if (family.empty())
        family.insert(SetSep{Bitset::full(k), Bitset::full(k)});

    ConcreteSystem c(ground, std::vector<SetSep>(family.begin(), family.end()));
    return *as_abstract(c, true).universe;
}

Tree random_tree(std::size_t vertices, std::uint64_t seed)
{
    if (vertices == 0)
        throw SepError(ErrorKind::not_a_tree, "a tree needs at least one vertex");
    std::mt19937_64 rng(seed);
    Tree t;
    t.vertices = GroundSet::numbered(vertices, "t");
    if (vertices == 1)
        return t;
    if (vertices == 2) {
        t.edges.emplace_back(0, 1);
        return t;
    }
    std::vector<std::size_t> code(vertices - 2);
    for (auto & c : code)
        c = rng() % vertices;
    std::vector<std::size_t> degree(vertices, 1);
    for (auto c : code)
        ++degree[c];
    for (auto c : code)
        for (std::size_t leaf = 0; leaf < vertices; ++leaf)
            if (degree[leaf] == 1) {
                t.edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
                --degree[leaf];
                --degree[c];
                break;
            }
    std::vector<std::size_t> last;
    for (std::size_t v = 0; v < vertices; ++v)
        if (degree[v] == 1)
            last.push_back(v);
    t.edges.emplace_back(last[0], last[1]);
    return t;
}

Graph random_graph(std::size_t vertices, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < vertices; ++u)
        for (std::size_t v = u + 1; v < vertices; ++v)
            if (rng() & 1u)
                edges.emplace_back(u, v);
    return Graph(GroundSet::numbered(vertices, "g"), std::move(edges));
}

}
