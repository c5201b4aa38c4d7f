#include <sepsys/kernels.hh>

#include "kernels_detail.hh"

#include <atomic>
#include <bit>
#include <stdexcept>

namespace sepsys::kernels {

namespace {
    void scalar_or_into(Word * dst, const Word * src, std::size_t n)
    {
        for (std::size_t i = 0; i < n; ++i)
            dst[i] |= src[i];
    }

    void scalar_and_into(Word * dst, const Word * src, std::size_t n)
    {
        for (std::size_t i = 0; i < n; ++i)
            dst[i] &= src[i];
    }

    void scalar_andnot_into(Word * dst, const Word * src, std::size_t n)
    {
        for (std::size_t i = 0; i < n; ++i)
            dst[i] &= ~src[i];
    }

    bool scalar_is_subset(const Word * a, const Word * b, std::size_t n)
    {
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] & ~b[i])
                return false;
        return true;
    }

    bool scalar_intersects(const Word * a, const Word * b, std::size_t n)
    {
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] & b[i])
                return true;
        return false;
    }

    bool scalar_equal(const Word * a, const Word * b, std::size_t n)
    {
        for (std::size_t i = 0; i < n; ++i)
            if (a[i] != b[i])
                return false;
        return true;
    }

    std::size_t scalar_popcount(const Word * a, std::size_t n)
    {
        std::size_t total = 0;
        for (std::size_t i = 0; i < n; ++i)
            total += static_cast<std::size_t>(std::popcount(a[i]));
        return total;
    }

    const WordOps scalar_table{scalar_or_into, scalar_and_into, scalar_andnot_into, scalar_is_subset,
        scalar_intersects, scalar_equal, scalar_popcount};

    bool cpu_has_avx2()
    {
#if defined(SEPSYS_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2");
#else
        return false;
#endif
    }

    std::atomic<const WordOps *> & active_table()
    {
        static std::atomic<const WordOps *> table{&ops_for(detect_backend())};
        return table;
    }

    std::atomic<Backend> & active_tag()
    {
        static std::atomic<Backend> tag{detect_backend()};
        return tag;
    }
}

const WordOps & scalar_ops()
{
    return scalar_table;
}

bool backend_available(Backend b)
{
    switch (b) {
    case Backend::scalar: return true;
    case Backend::avx2: return cpu_has_avx2();
    case Backend::neon:
#if defined(SEPSYS_HAVE_NEON)
        return true;
#else
        return false;
#endif
    }
    return false;
}

Backend detect_backend()
{
    if (backend_available(Backend::avx2))
        return Backend::avx2;
    if (backend_available(Backend::neon))
        return Backend::neon;
    return Backend::scalar;
}

const WordOps & ops_for(Backend b)
{
    if (! backend_available(b))
        throw std::invalid_argument("kernel backend not available: " + std::string(backend_name(b)));
    switch (b) {
#if defined(SEPSYS_HAVE_AVX2)
    case Backend::avx2: return detail::avx2_ops();
#endif
#if defined(SEPSYS_HAVE_NEON)
    case Backend::neon: return detail::neon_ops();
#endif
    default: return scalar_table;
    }
}

const WordOps & ops()
{
    return *active_table().load(std::memory_order_relaxed);
}

Backend active_backend()
{
    return active_tag().load(std::memory_order_relaxed);
}

void select_backend(Backend b)
{
    const WordOps & table = ops_for(b);
    active_table().store(&table, std::memory_order_relaxed);
    active_tag().store(b, std::memory_order_relaxed);
}

std::string_view backend_name(Backend b)
{
    switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
    }
    return "unknown";
}

}
