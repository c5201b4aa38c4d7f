#include <doctest.h>

#include <sepsys/kernels.hh>

#include <random>
#include <stdexcept>
#include <vector>

using namespace sepsys::kernels;

namespace {

std::vector<Word> random_words(std::mt19937_64 & rng, std::size_t n, int density)
{
    std::vector<Word> w(n);
    for (auto & x : w) {
        x = rng();
        for (int i = 0; i < density; ++i)
            x &= rng();
    }
    return w;
}

void compare_backends(const WordOps & ref, const WordOps & vec)
{
    std::mt19937_64 rng(17);
    for (std::size_t n = 0; n < 41; ++n)
        for (int trial = 0; trial < 30; ++trial) {
            auto a = random_words(rng, n, trial % 4);
            auto b = random_words(rng, n, trial % 3);
            if (trial % 5 == 0)
                b = a;
            if (trial % 7 == 0 && n > 0) {
                // a ⊆ b
                for (std::size_t i = 0; i < n; ++i)
                    b[i] |= a[i];
            }
            CHECK(ref.is_subset(a.data(), b.data(), n) == vec.is_subset(a.data(), b.data(), n));
            CHECK(ref.intersects(a.data(), b.data(), n) == vec.intersects(a.data(), b.data(), n));
            CHECK(ref.equal(a.data(), b.data(), n) == vec.equal(a.data(), b.data(), n));
            CHECK(ref.popcount(a.data(), n) == vec.popcount(a.data(), n));

            auto x = a, y = a;
            ref.or_into(x.data(), b.data(), n);
            vec.or_into(y.data(), b.data(), n);
            CHECK(x == y);
            x = a, y = a;
            ref.and_into(x.data(), b.data(), n);
            vec.and_into(y.data(), b.data(), n);
            CHECK(x == y);
            x = a, y = a;
            ref.andnot_into(x.data(), b.data(), n);
            vec.andnot_into(y.data(), b.data(), n);
            CHECK(x == y);
        }
}

}

TEST_CASE("scalar kernels agree with a word-by-word loop")
{
    const WordOps & k = scalar_ops();
    std::mt19937_64 rng(3);
    for (std::size_t n = 0; n < 12; ++n) {
        auto a = random_words(rng, n, 1), b = random_words(rng, n, 1);
        bool sub = true, meets = false;
        std::size_t pop = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sub = sub && (a[i] & ~b[i]) == 0;
            meets = meets || (a[i] & b[i]) != 0;
            pop += static_cast<std::size_t>(__builtin_popcountll(a[i]));
        }
        CHECK(k.is_subset(a.data(), b.data(), n) == sub);
        CHECK(k.intersects(a.data(), b.data(), n) == meets);
        CHECK(k.popcount(a.data(), n) == pop);
        CHECK(k.equal(a.data(), a.data(), n));
    }
}

TEST_CASE("vector backends match the scalar reference")
{
    for (Backend b : {Backend::avx2, Backend::neon}) {
        if (! backend_available(b))
            continue;
        CAPTURE(backend_name(b));
        compare_backends(scalar_ops(), ops_for(b));
    }
}

TEST_CASE("backend selection")
{
    CHECK(backend_available(Backend::scalar));
    CHECK(backend_available(detect_backend()));
    const Backend start = active_backend();
    select_backend(Backend::scalar);
    CHECK(active_backend() == Backend::scalar);
    CHECK(&ops() == &scalar_ops());
    for (Backend b : {Backend::avx2, Backend::neon})
        if (! backend_available(b))
            CHECK_THROWS_AS(select_backend(b), std::invalid_argument);
    select_backend(start);
    CHECK(active_backend() == start);
    CHECK(backend_name(Backend::avx2) == "avx2");
}
