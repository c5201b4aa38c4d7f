#include <doctest.h>

#include <sepsys/bits.hh>

#include <random>
#include <set>

using sepsys::BitMatrix;
using sepsys::Bitset;

namespace {

std::set<std::size_t> as_set(const Bitset & b)
{
    auto m = b.members();
    return {m.begin(), m.end()};
}

Bitset random_bits(std::mt19937_64 & rng, std::size_t n)
{
    Bitset b(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng() % 3 == 0)
            b.set(i);
    return b;
}

}

TEST_CASE("bitset operations match std::set")
{
    std::mt19937_64 rng(5);
    for (std::size_t n : {0, 1, 7, 63, 64, 65, 130, 300}) {
        for (int t = 0; t < 20; ++t) {
            Bitset a = random_bits(rng, n), b = random_bits(rng, n);
            auto sa = as_set(a), sb = as_set(b);
            std::set<std::size_t> u, i, d;
            std::set_union(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(u, u.end()));
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(i, i.end()));
            std::set_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(d, d.end()));
            CHECK(as_set(a | b) == u);
            CHECK(as_set(a & b) == i);
            CHECK(as_set(a - b) == d);
            CHECK(a.count() == sa.size());
            CHECK(a.intersects(b) == ! i.empty());
            CHECK(a.is_subset_of(b) == (d.empty()));
            CHECK((a | b).is_subset_of(b) == std::includes(sb.begin(), sb.end(), sa.begin(), sa.end()));
            CHECK((a.complement() | a).all());
            CHECK(! a.complement().intersects(a));
            CHECK(a.first() == (sa.empty() ? n : *sa.begin()));
            std::vector<std::size_t> seen;
            a.for_each([&](std::size_t x) { seen.push_back(x); });
            CHECK(seen == a.members());
        }
    }
}

TEST_CASE("bitset order and hashing")
{
    Bitset a(3), b(3);
    a.set(2);
    b.set(0);
    b.set(1);
    CHECK(b < a);
    CHECK(! (a < b));
    CHECK(Bitset(2) < Bitset(3));
    CHECK(Bitset::full(70).count() == 70);
    CHECK(std::hash<Bitset>{}(a) == std::hash<Bitset>{}(Bitset::from_indices(3, std::vector<std::size_t>{2})));
}

TEST_CASE("transitive closure matches Floyd-Warshall")
{
    std::mt19937_64 rng(9);
    for (std::size_t n : {1, 5, 20, 70}) {
        BitMatrix m(n);
        std::vector<std::vector<bool>> ref(n, std::vector<bool>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (rng() % (2 * n + 1) == 0) {
                    m.set(i, j);
                    ref[i][j] = true;
                }
        m.transitive_closure();
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (ref[i][k] && ref[k][j])
                        ref[i][j] = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(m.test(i, j) == ref[i][j]);
        auto t = m.transpose();
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                CHECK(t.test(j, i) == m.test(i, j));
    }
}
