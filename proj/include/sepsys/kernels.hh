#pragma once

// Word-level bitset kernels. Every set-valued inner loop in the library
// (order closure, up-set intersection, subset tests over ground sets) goes
// through these, so a vector backend speeds up all of them at once.
//
// The scalar backend is the reference. Vector backends must agree with it
// bit for bit; tests/test_kernels.cc checks that on random inputs.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace sepsys::kernels {

using Word = std::uint64_t;

enum class Backend { scalar, avx2, neon };

struct WordOps {
    void (*or_into)(Word * dst, const Word * src, std::size_t n);
    void (*and_into)(Word * dst, const Word * src, std::size_t n);
    /// dst &= ~src
    void (*andnot_into)(Word * dst, const Word * src, std::size_t n);
    /// true iff every bit of a is set in b
    bool (*is_subset)(const Word * a, const Word * b, std::size_t n);
    bool (*intersects)(const Word * a, const Word * b, std::size_t n);
    bool (*equal)(const Word * a, const Word * b, std::size_t n);
    std::size_t (*popcount)(const Word * a, std::size_t n);
};

const WordOps & scalar_ops();

/// Backend chosen at startup: the widest one the running CPU supports.
Backend detect_backend();
bool backend_available(Backend b);
const WordOps & ops_for(Backend b);

const WordOps & ops();
Backend active_backend();

/// Overrides the active backend process-wide. Throws std::invalid_argument
/// when the backend is not available on this CPU or build.
void select_backend(Backend b);

std::string_view backend_name(Backend b);

}
