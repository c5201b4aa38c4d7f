#include <doctest.h>

#include "support.hh"

using namespace testing;

namespace {

std::vector<SepSystem> small_systems()
{
    auto all = enumerate_systems(3);
    for (std::uint64_t seed = 0; seed < 80; ++seed)
        all.push_back(random_system(1 + seed % 6, seed));
    return all;
}

std::vector<Universe> sample_universes()
{
    std::vector<Universe> all;
    for (std::uint64_t seed = 0; seed < 60; ++seed)
        all.push_back(random_universe(1 + seed % 6, seed));
    for (std::size_t n = 0; n <= 3; ++n) {
        all.push_back(as_universe(full_set_universe(GroundSet::numbered(n))));
        all.push_back(as_universe(bipartition_universe(GroundSet::numbered(n))));
    }
    return all;
}

}

TEST_CASE("implement_by_sets accepts exactly the scrupulous systems")
{
    for (const auto & s : small_systems()) {
        auto out = implement_by_sets(s);
        CHECK(out.accepted() == is_scrupulous(s).holds);
        if (out) {
            CHECK(out.implementation().verified);
            CHECK(oracle_definitional_recheck(out.implementation()));
            CHECK(out.implementation().ground.size() == canonical_ground_bound(s));
        }
        else
            CHECK(out.refusal().reason == RefusalReason::not_scrupulous);
    }
}

TEST_CASE("implement_by_sets ground points and images")
{
    auto s = make_system({"r", "s"}, {}, {{"r+", "s+"}});
    auto out = implement_by_sets(s);
    REQUIRE(out);
    const auto & impl = out.implementation();
    CHECK(impl.ground.points() == std::vector<std::string>{"r+", "r-", "s+", "s-"});
    // A_s = points not >= s
    for (Elem x = 0; x < s.size(); ++x)
        for (std::size_t p = 0; p < impl.ground.size(); ++p)
            CHECK(impl.map[x].a.test(p) == ! s.leq(x, s.at(impl.ground.name(p))));
    auto empty = implement_by_sets(SepSystem{});
    REQUIRE(empty);
    CHECK(empty.implementation().ground.size() == 0);
}

TEST_CASE("implement_by_bipartitions accepts exactly the fastidious systems")
{
    for (const auto & s : small_systems()) {
        auto out = implement_by_bipartitions(s);
        CHECK(out.accepted() == is_fastidious(s).holds);
        if (! out)
            continue;
        const auto & impl = out.implementation();
        CHECK(oracle_definitional_recheck(impl));
        for (const auto & x : impl.map)
            CHECK(! x.a.intersects(x.b));
    }
}

TEST_CASE("strong implementations by sets")
{
    for (const auto & u : sample_universes()) {
        auto out = strong_implement_by_sets(u);
        const bool expect = is_distributive(u).holds && is_scrupulous(u.base()).holds;
        CHECK(out.accepted() == expect);
        if (! out)
            continue;
        CHECK(check_universe_isomorphism(SepMap::of(out.implementation())).holds);
        CHECK(oracle_definitional_recheck(out.implementation()));
        if (u.size() <= 20)
            CHECK(strong_ground_set(u) == naive_strong_ground_set(u));

        auto atomic = atomic_strong_implementation(u);
        REQUIRE(atomic);
        CHECK(oracle_definitional_recheck(atomic.implementation()));
        CHECK(atomic.implementation().ground.size() + 1 == out.implementation().ground.size());
    }
    auto p = gen_example("pentagon");
    auto r = strong_implement_by_sets(*p.universe);
    REQUIRE(! r);
    CHECK(r.refusal().reason == RefusalReason::not_distributive);
}

TEST_CASE("strong implementations by bipartitions")
{
    for (const auto & u : sample_universes()) {
        auto out = strong_implement_by_bipartitions(u);
        const bool expect = is_distributive(u).holds && is_fastidious(u.base()).holds;
        CHECK(out.accepted() == expect);
        if (out) {
            CHECK(oracle_definitional_recheck(out.implementation()));
            CHECK(check_universe_isomorphism(SepMap::of(out.implementation())).holds);
        }
    }
    auto ub = as_universe(bipartition_universe(GroundSet::numbered(3)));
    CHECK(strong_implement_by_bipartitions(ub).accepted());
    auto uv = as_universe(full_set_universe(GroundSet::numbered(2)));
    auto r = strong_implement_by_bipartitions(uv);
    REQUIRE(! r);
    CHECK(r.refusal().reason == RefusalReason::not_fastidious);
}

TEST_CASE("graphic implementation")
{
    Graph path(GroundSet::numbered(3), {{0, 1}, {1, 2}});
    auto u = as_universe(graph_universe(path));
    auto out = graphic_implementation(u);
    REQUIRE(out);
    const auto & impl = out.implementation();
    REQUIRE(impl.graph);
    CHECK(impl.graph->vertex_count() == 3);
    CHECK(impl.graph->edges().size() == 2);
    CHECK(oracle_definitional_recheck(impl));

    auto refuse = [](const Universe & x) { return graphic_implementation(x).refusal().reason; };
    CHECK(refuse(*gen_example("pentagon").universe) == RefusalReason::not_distributive);
    CHECK(refuse(universe_from_lattice(chain_lattice(3))) == RefusalReason::smalls_not_boolean);
    CHECK(refuse(universe_from_lattice(chain_lattice(2))) == RefusalReason::max_small_not_degenerate);
    CHECK(refuse(as_universe(bipartition_universe(GroundSet::numbered(2))))
        == RefusalReason::max_small_not_degenerate);
}
