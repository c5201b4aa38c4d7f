#include <doctest.h>

#include "support.hh"

using namespace testing;

namespace {

Implementation sets_impl(const SepSystem & s)
{
    auto out = implement_by_sets(s);
    REQUIRE(out.accepted());
    return out.implementation();
}

}

TEST_CASE("a constructed implementation passes every check")
{
    auto s = make_system({"r", "s", "t"}, {}, {{"r+", "s+"}, {"s+", "t-"}});
    auto impl = sets_impl(s);
    CHECK(check_homomorphism(SepMap::of(impl)).holds);
    CHECK(check_isomorphism_onto_image(SepMap::of(impl)).holds);
    CHECK(oracle_definitional_recheck(impl));
}

TEST_CASE("corrupted maps are caught with the right defect")
{
    auto s = make_system({"r", "s"}, {}, {{"r+", "s+"}});
    auto impl = sets_impl(s);
    const Elem r = s.at("r+"), t = s.at("s+");

    auto swapped = impl;
    std::swap(swapped.map[r], swapped.map[t]);
    std::swap(swapped.map[s.inv(r)], swapped.map[s.inv(t)]);
    auto v = check_homomorphism(SepMap::of(swapped));
    CHECK(! v.holds);
    CHECK(v.witness->defect == MapDefect::order);
    CHECK(! oracle_definitional_recheck(swapped));

    auto half = impl;
    half.map[r] = half.map[t];
    auto w = check_isomorphism_onto_image(SepMap::of(half));
    CHECK(! w.holds);
    CHECK(! oracle_definitional_recheck(half));

    // everything onto (V, V): a homomorphism but not injective
    auto flat = impl;
    const std::size_t n = impl.ground.size();
    for (auto & x : flat.map)
        x = SetSep{Bitset::full(n), Bitset::full(n)};
    CHECK(check_homomorphism(SepMap::of(flat)).holds);
    auto f = check_isomorphism_onto_image(SepMap::of(flat));
    CHECK(! f.holds);
    CHECK(f.witness->defect == MapDefect::injectivity);

    auto shortmap = impl;
    shortmap.map.pop_back();
    CHECK(check_homomorphism(SepMap::of(shortmap)).witness->defect == MapDefect::not_total);
}

TEST_CASE("maps between abstract systems")
{
    auto p = gen_example("pentagon");
    std::vector<Elem> id(p.system.size());
    std::iota(id.begin(), id.end(), Elem{0});
    CHECK(check_isomorphism_onto_image(SepMap::into_system(p.system, p.system, id)).holds);
    CHECK(check_universe_isomorphism(SepMap::into_universe(*p.universe, *p.universe, id)).holds);
    auto v = check_universe_isomorphism(SepMap::into_system(p.system, p.system, id));
    CHECK(! v.holds);
    CHECK(v.witness->defect == MapDefect::not_universe);

    // skip the middle of the chain
    auto two = universe_from_lattice(chain_lattice(2));
    auto three = universe_from_lattice(chain_lattice(3));
    std::vector<Elem> skip{0, 1, 4, 5};
    CHECK(check_isomorphism_onto_image(SepMap::into_system(two.base(), three.base(), skip)).holds);
}

TEST_CASE("brute-force oracle")
{
    auto nonscr = gen_example("nonscrupulous").system;
    CHECK(! oracle_brute_force_set_implementation(nonscr, canonical_ground_bound(nonscr)));
    auto s = make_system({"r", "s"}, {"d"}, {{"r+", "s+"}});
    auto found = oracle_brute_force_set_implementation(s, canonical_ground_bound(s));
    REQUIRE(found);
    CHECK(found->verified);
    CHECK(oracle_definitional_recheck(*found));
    CHECK_THROWS_AS(oracle_brute_force_set_implementation(s, 9), SepError);
    CHECK_THROWS_AS(oracle_brute_force_set_implementation(random_system(6, 1), 6, 10), SepError);
    CHECK(canonical_ground_bound(s) == 4);
}

TEST_CASE("naive strong ground set on U(V)")
{
    for (std::size_t n = 0; n <= 2; ++n) {
        auto u = as_universe(full_set_universe(GroundSet::numbered(n)));
        CHECK(strong_ground_set(u) == naive_strong_ground_set(u));
    }
}
