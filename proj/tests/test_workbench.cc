#include <doctest.h>

#include "support.hh"

#include <algorithm>
#include <map>
#include <numeric>

using namespace testing;

namespace {

// Independent enumeration: all order-reversing partial orders on the
// element layout, deduplicated by trying every involution-preserving
// permutation.
struct Raw
{
    std::size_t pairs, degen;
    std::vector<std::vector<bool>> leq;
};

std::size_t raw_inv(const Raw & r, std::size_t x) { return x < 2 * r.pairs ? (x % 2 ? x - 1 : x + 1) : x; }

bool raw_isomorphic(const Raw & a, const Raw & b)
{
    if (a.pairs != b.pairs || a.degen != b.degen)
        return false;
    const std::size_t m = 2 * a.pairs + a.degen;
    std::vector<std::size_t> p(m);
    std::iota(p.begin(), p.end(), 0);
    do {
        bool commutes = true;
        for (std::size_t x = 0; x < m; ++x)
            commutes = commutes && p[raw_inv(a, x)] == raw_inv(a, p[x]);
        if (! commutes)
            continue;
        bool same = true;
        for (std::size_t x = 0; x < m && same; ++x)
            for (std::size_t y = 0; y < m && same; ++y)
                same = a.leq[x][y] == b.leq[p[x]][p[y]];
        if (same)
            return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

std::vector<Raw> naive_classes(std::size_t max)
{
    std::vector<Raw> classes;
    for (std::size_t n = 0; n <= max; ++n)
        for (std::size_t k = 0; k <= n; ++k) {
            Raw base{n - k, k, {}};
            const std::size_t m = 2 * base.pairs + k;
            std::vector<std::pair<std::size_t, std::size_t>> off;
            for (std::size_t x = 0; x < m; ++x)
                for (std::size_t y = 0; y < m; ++y)
                    if (x != y)
                        off.emplace_back(x, y);
            for (std::uint32_t pick = 0; pick < (1u << off.size()); ++pick) {
                Raw r = base;
                r.leq.assign(m, std::vector<bool>(m, false));
                for (std::size_t x = 0; x < m; ++x)
                    r.leq[x][x] = true;
                for (std::size_t i = 0; i < off.size(); ++i)
                    if ((pick >> i) & 1u)
                        r.leq[off[i].first][off[i].second] = true;
                bool ok = true;
                for (std::size_t x = 0; x < m && ok; ++x)
                    for (std::size_t y = 0; y < m && ok; ++y) {
                        if (! r.leq[x][y])
                            continue;
                        ok = r.leq[raw_inv(r, y)][raw_inv(r, x)];
                        ok = ok && (x == y || ! r.leq[y][x]);
                        for (std::size_t z = 0; z < m && ok; ++z)
                            ok = ! r.leq[y][z] || r.leq[x][z];
                    }
                if (! ok)
                    continue;
                if (std::none_of(classes.begin(), classes.end(), [&](const Raw & c) { return raw_isomorphic(c, r); }))
                    classes.push_back(std::move(r));
            }
        }
    return classes;
}

Raw raw_of(const SepSystem & s)
{
    Raw r{0, 0, {}};
    std::vector<Elem> order;
    for (Elem x : s.unoriented())
        if (! s.is_degenerate(x)) {
            order.push_back(x);
            order.push_back(s.inv(x));
            ++r.pairs;
        }
    for (Elem x : s.degenerates()) {
        order.push_back(x);
        ++r.degen;
    }
    r.leq.assign(order.size(), std::vector<bool>(order.size()));
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j)
            r.leq[i][j] = s.leq(order[i], order[j]);
    return r;
}

}

TEST_CASE("enumeration with at most one unoriented separation")
{
    auto all = enumerate_systems(1);
    CHECK(all.size() == 4);
    std::size_t small_pairs = 0, antichain_pairs = 0, degenerate = 0, empty = 0;
    for (const auto & s : all) {
        if (s.empty())
            ++empty;
        else if (s.size() == 1)
            ++degenerate;
        else if (s.smalls().empty())
            ++antichain_pairs;
        else
            ++small_pairs;
    }
    CHECK(empty == 1);
    CHECK(degenerate == 1);
    CHECK(antichain_pairs == 1);
    CHECK(small_pairs == 1);
    CHECK_THROWS_AS(enumerate_systems(4), SepError);
}

TEST_CASE("enumeration with at most two matches a naive enumerator")
{
    auto naive = naive_classes(2);
    auto ours = enumerate_systems(2);
    CHECK(ours.size() == naive.size());
    std::vector<int> hit(naive.size(), 0);
    for (const auto & s : ours) {
        auto r = raw_of(s);
        for (std::size_t i = 0; i < naive.size(); ++i)
            if (raw_isomorphic(naive[i], r))
                ++hit[i];
    }
    for (int h : hit)
        CHECK(h == 1);
}

TEST_CASE("enumeration is deterministic and canonical")
{
    auto a = enumerate_systems(3), b = enumerate_systems(3);
    CHECK(a == b);
    std::set<std::vector<std::uint8_t>> forms;
    for (const auto & s : a)
        forms.insert(canonical_form(s));
    CHECK(forms.size() == a.size());
}

TEST_CASE("canonical form is invariant under relabelling")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        auto s = random_system(1 + seed % 4, seed);
        // reverse the element order, flipping every pair
        std::vector<Elem> perm(s.size());
        for (Elem x = 0; x < s.size(); ++x)
            perm[x] = s.size() - 1 - x;
        std::vector<std::string> labels(s.size());
        std::vector<Elem> inv(s.size());
        std::vector<ElemPair> rel;
        for (Elem x = 0; x < s.size(); ++x) {
            labels[perm[x]] = s.label(x);
            inv[perm[x]] = perm[s.inv(x)];
        }
        for (auto [x, y] : s.relations())
            rel.emplace_back(perm[x], perm[y]);
        auto t = SepSystem::from_indices(labels, inv, rel);
        CHECK(canonical_form(s) == canonical_form(t));
    }
    auto a = make_system({"r", "s"}, {}, {{"r+", "s+"}});
    auto b = make_system({"r", "s"}, {}, {{"r+", "s-"}});
    auto c = make_system({"r", "s"}, {}, {{"r+", "r-"}});
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) != canonical_form(c));
}

TEST_CASE("examples")
{
    auto ns = gen_example("nonscrupulous");
    CHECK(! is_scrupulous(ns.system).holds);
    CHECK(ns.system.size() == 4);
    CHECK(ns.system.relations().size() == 2);

    auto p = gen_example("pentagon");
    CHECK(is_fastidious(p.system).holds);
    CHECK(! is_distributive(*p.universe).holds);
    CHECK(*p.system.least() == p.system.at("r+"));

    auto d = gen_example("diamond");
    CHECK(*d.system.least() == d.system.at("r+"));
    CHECK(*d.system.greatest() == d.system.at("r-"));
    for (auto a : {"s+", "s-", "t+", "t-"})
        for (auto b : {"s+", "s-", "t+", "t-"})
            if (std::string(a) != b)
                CHECK(! d.system.leq(d.system.at(a), d.system.at(b)));

    auto star = gen_example("three-star");
    CHECK(star.concrete);
    CHECK(star.system.smalls().empty());
    CHECK(is_fastidious(star.system).holds);
    CHECK_THROWS_AS(gen_example("hexagon"), SepError);
    CHECK(example_names().size() == 4);
}

TEST_CASE("edge tree sets")
{
    Tree path{GroundSet({"a", "b", "c"}), {{0, 1}, {1, 2}}};
    auto e = edge_tree_set(path);
    const auto & s = e.system;
    CHECK(s.size() == 4);
    CHECK(s.leq(s.at("a~b+"), s.at("b~c+")));
    CHECK(! s.leq(s.at("b~c+"), s.at("a~b+")));
    CHECK(s.leq(s.at("b~c-"), s.at("a~b-")));
    CHECK(is_regular(s).holds);

    Tree edge{GroundSet({"a", "b"}), {{0, 1}}};
    auto one = edge_tree_set(edge);
    CHECK(one.system.size() == 2);
    CHECK(one.system.relations().empty());

    CHECK_THROWS_AS(edge_tree_set(Tree{GroundSet({"a"}), {}}), SepError);
    CHECK_THROWS_AS((Tree{GroundSet({"a", "b", "c"}), {{0, 1}, {0, 1}}}).validate(), SepError);
    CHECK_THROWS_AS((Tree{GroundSet({"a", "b", "c"}), {{0, 1}}}).validate(), SepError);
}

TEST_CASE("edge tree order matches component containment")
{
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        auto t = random_tree(2 + seed % 7, seed);
        t.validate();
        auto e = edge_tree_set(t);
        const auto & s = e.system;
        CHECK(is_regular(s).holds);
        for (Elem x = 0; x < s.size(); ++x)
            for (Elem y = 0; y < s.size(); ++y)
                CHECK(s.leq(x, y) == e.components.map[x].a.is_subset_of(e.components.map[y].a));
        CHECK(e.components.verified);
        auto g = implement_by_bipartitions(s);
        REQUIRE(g);
        CHECK(check_isomorphism_onto_image(SepMap::of(g.implementation())).holds);
    }
}

TEST_CASE("random generators")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto a = random_system(1 + seed % 8, seed);
        CHECK(a == random_system(1 + seed % 8, seed));
        CHECK(a.unoriented_count() == 1 + seed % 8);
        CHECK(random_universe(5, seed) == random_universe(5, seed));
        CHECK(random_tree(6, seed).edges == random_tree(6, seed).edges);
    }
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto u = random_universe(1 + seed % 8, seed);
        CHECK(u.base().unoriented_count() <= 1 + seed % 8);
        CHECK(is_distributive(u).holds);
    }
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto u = random_universe(5 + seed % 4, seed, UniverseMode::lattice_with_pentagon);
        CHECK(! is_distributive(u).holds);
        CHECK(u.base().unoriented_count() <= 5 + seed % 4);
        auto l = random_universe(1 + seed % 8, seed, UniverseMode::lattice);
        CHECK(l.base().unoriented_count() <= 1 + seed % 8);
    }
    CHECK_THROWS_AS(random_system(9, 0), SepError);
    auto g = random_graph(4, 3);
    CHECK(g.vertex_count() == 4);
}
