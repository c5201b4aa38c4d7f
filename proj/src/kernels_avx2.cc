#include "kernels_detail.hh"

#include <bit>
#include <immintrin.h>

namespace sepsys::kernels::detail {

namespace {
    inline __m256i load(const Word * p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(p)); }
    inline void store(Word * p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i *>(p), v); }

    void avx2_or_into(Word * dst, const Word * src, std::size_t n)
    {
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4)
            store(dst + i, _mm256_or_si256(load(dst + i), load(src + i)));
        for (; i < n; ++i)
            dst[i] |= src[i];
    }

    void avx2_and_into(Word * dst, const Word * src, std::size_t n)
    {
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4)
            store(dst + i, _mm256_and_si256(load(dst + i), load(src + i)));
        for (; i < n; ++i)
            dst[i] &= src[i];
    }

    void avx2_andnot_into(Word * dst, const Word * src, std::size_t n)
    {
        std::size_t i = 0;
        // _mm256_andnot_si256(a, b) computes ~a & b
        for (; i + 4 <= n; i += 4)
            store(dst + i, _mm256_andnot_si256(load(src + i), load(dst + i)));
        for (; i < n; ++i)
            dst[i] &= ~src[i];
    }

    bool avx2_is_subset(const Word * a, const Word * b, std::size_t n)
    {
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4) {
            __m256i stray = _mm256_andnot_si256(load(b + i), load(a + i));
            if (! _mm256_testz_si256(stray, stray))
                return false;
        }
        for (; i < n; ++i)
            if (a[i] & ~b[i])
                return false;
        return true;
    }

    bool avx2_intersects(const Word * a, const Word * b, std::size_t n)
    {
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4)
            if (! _mm256_testz_si256(load(a + i), load(b + i)))
                return true;
        for (; i < n; ++i)
            if (a[i] & b[i])
                return true;
        return false;
    }

    bool avx2_equal(const Word * a, const Word * b, std::size_t n)
    {
        std::size_t i = 0;
        for (; i + 4 <= n; i += 4) {
            __m256i diff = _mm256_xor_si256(load(a + i), load(b + i));
            if (! _mm256_testz_si256(diff, diff))
                return false;
        }
        for (; i < n; ++i)
            if (a[i] != b[i])
                return false;
        return true;
    }

    // No vector popcount in plain AVX2; the scalar instruction is already one op per word.
    std::size_t avx2_popcount(const Word * a, std::size_t n)
    {
        std::size_t total = 0;
        for (std::size_t i = 0; i < n; ++i)
            total += static_cast<std::size_t>(std::popcount(a[i]));
        return total;
    }

    const WordOps avx2_table{avx2_or_into, avx2_and_into, avx2_andnot_into, avx2_is_subset, avx2_intersects,
        avx2_equal, avx2_popcount};
}

const WordOps & avx2_ops()
{
    return avx2_table;
}

}
