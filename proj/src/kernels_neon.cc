#include "kernels_detail.hh"

#include <arm_neon.h>
#include <bit>

namespace sepsys::kernels::detail {

namespace {
    inline bool all_zero(uint64x2_t v) { return (vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1)) == 0; }

    void neon_or_into(Word * dst, const Word * src, std::size_t n)
    {
        std::size_t i = 0;
        for (; i + 2 <= n; i += 2)
            vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
        for (; i < n; ++i)
            dst[i] |= src[i];
    }

    void neon_and_into(Word * dst, const Word * src, std::size_t n)
    {
        std::size_t i = 0;
        for (; i + 2 <= n; i += 2)
            vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
        for (; i < n; ++i)
            dst[i] &= src[i];
    }

    void neon_andnot_into(Word * dst, const Word * src, std::size_t n)
    {
        std::size_t i = 0;
        // vbicq_u64(a, b) computes a & ~b
        for (; i + 2 <= n; i += 2)
            vst1q_u64(dst + i, vbicq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
        for (; i < n; ++i)
            dst[i] &= ~src[i];
    }

    bool neon_is_subset(const Word * a, const Word * b, std::size_t n)
    {
        std::size_t i = 0;
        for (; i + 2 <= n; i += 2)
            if (! all_zero(vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i))))
                return false;
        for (; i < n; ++i)
            if (a[i] & ~b[i])
                return false;
        return true;
    }

    bool neon_intersects(const Word * a, const Word * b, std::size_t n)
    {
        std::size_t i = 0;
        for (; i + 2 <= n; i += 2)
            if (! all_zero(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i))))
                return true;
        for (; i < n; ++i)
            if (a[i] & b[i])
                return true;
        return false;
    }

    bool neon_equal(const Word * a, const Word * b, std::size_t n)
    {
        std::size_t i = 0;
        for (; i + 2 <= n; i += 2)
            if (! all_zero(veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i))))
                return false;
        for (; i < n; ++i)
            if (a[i] != b[i])
                return false;
        return true;
    }

    std::size_t neon_popcount(const Word * a, std::size_t n)
    {
        std::size_t total = 0;
        for (std::size_t i = 0; i < n; ++i)
            total += static_cast<std::size_t>(std::popcount(a[i]));
        return total;
    }

    const WordOps neon_table{neon_or_into, neon_and_into, neon_andnot_into, neon_is_subset, neon_intersects,
        neon_equal, neon_popcount};
}

const WordOps & neon_ops()
{
    return neon_table;
}

}
