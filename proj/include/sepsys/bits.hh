#pragma once

#include <sepsys/kernels.hh>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace sepsys {

/// Fixed-width set of small integers. Used both for subsets of a ground set
/// (the canonical representation of a set separation's sides) and for rows
/// of order relations. Binary operations require equal widths.
class Bitset
{
public:
    using Word = kernels::Word;

    Bitset() = default;
    explicit Bitset(std::size_t nbits);

    static Bitset full(std::size_t nbits);
    static Bitset from_indices(std::size_t nbits, std::span<const std::size_t> members);

    std::size_t size() const { return _nbits; }
    bool test(std::size_t i) const { return (_words[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { _words[i >> 6] |= Word{1} << (i & 63); }
    void reset(std::size_t i) { _words[i >> 6] &= ~(Word{1} << (i & 63)); }
    void assign(std::size_t i, bool v) { v ? set(i) : reset(i); }

    std::size_t count() const;
    bool any() const;
    bool none() const { return ! any(); }
    bool all() const { return count() == _nbits; }

    Bitset & operator|=(const Bitset & other);
    Bitset & operator&=(const Bitset & other);
    /// set difference
    Bitset & operator-=(const Bitset & other);

    friend Bitset operator|(Bitset a, const Bitset & b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset & b) { return a &= b; }
    friend Bitset operator-(Bitset a, const Bitset & b) { return a -= b; }

    /// complement within [0, size())
    Bitset complement() const;

    bool is_subset_of(const Bitset & other) const;
    bool intersects(const Bitset & other) const;

    friend bool operator==(const Bitset & a, const Bitset & b);
    /// Numeric order of the masks (bit i has weight 2^i), width first.
    friend bool operator<(const Bitset & a, const Bitset & b);

    std::vector<std::size_t> members() const;
    std::size_t first() const; ///< size() when empty

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t w = 0; w < _words.size(); ++w) {
            Word bits = _words[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                f(w * 64 + static_cast<std::size_t>(b));
                bits &= bits - 1;
            }
        }
    }

    std::span<const Word> words() const { return _words; }
    std::span<Word> words() { return _words; }
    std::size_t hash() const;

private:
    std::size_t _nbits = 0;
    std::vector<Word> _words;
};

/// Square boolean matrix over {0..n-1}, one Bitset per row.
class BitMatrix
{
public:
    BitMatrix() = default;
    explicit BitMatrix(std::size_t n);

    std::size_t size() const { return _rows.size(); }
    bool test(std::size_t i, std::size_t j) const { return _rows[i].test(j); }
    void set(std::size_t i, std::size_t j) { _rows[i].set(j); }
    void reset(std::size_t i, std::size_t j) { _rows[i].reset(j); }
    const Bitset & row(std::size_t i) const { return _rows[i]; }
    Bitset & row(std::size_t i) { return _rows[i]; }

    void set_diagonal();
    /// Warshall closure on bit rows.
    void transitive_closure();
    BitMatrix transpose() const;

    friend bool operator==(const BitMatrix & a, const BitMatrix & b) = default;

private:
    std::vector<Bitset> _rows;
};

}

template <>
struct std::hash<sepsys::Bitset>
{
    std::size_t operator()(const sepsys::Bitset & b) const noexcept { return b.hash(); }
};
