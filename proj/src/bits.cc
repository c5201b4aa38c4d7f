#include <sepsys/bits.hh>

#include <cassert>

namespace sepsys {

namespace {
    std::size_t words_for(std::size_t nbits) { return (nbits + 63) / 64; }
}

Bitset::Bitset(std::size_t nbits) :
    _nbits(nbits),
    _words(words_for(nbits), 0)
{
}

Bitset Bitset::full(std::size_t nbits)
{
    Bitset b(nbits);
    for (auto & w : b._words)
        w = ~Word{0};
    if (nbits % 64)
        b._words.back() = (Word{1} << (nbits % 64)) - 1;
    return b;
}

Bitset Bitset::from_indices(std::size_t nbits, std::span<const std::size_t> members)
{
    Bitset b(nbits);
    for (auto i : members)
        b.set(i);
    return b;
}

std::size_t Bitset::count() const
{
    return kernels::ops().popcount(_words.data(), _words.size());
}

bool Bitset::any() const
{
    for (auto w : _words)
        if (w)
            return true;
    return false;
}

Bitset & Bitset::operator|=(const Bitset & other)
{
    assert(_nbits == other._nbits);
    kernels::ops().or_into(_words.data(), other._words.data(), _words.size());
    return *this;
}

Bitset & Bitset::operator&=(const Bitset & other)
{
    assert(_nbits == other._nbits);
    kernels::ops().and_into(_words.data(), other._words.data(), _words.size());
    return *this;
}

Bitset & Bitset::operator-=(const Bitset & other)
{
    assert(_nbits == other._nbits);
    kernels::ops().andnot_into(_words.data(), other._words.data(), _words.size());
    return *this;
}

Bitset Bitset::complement() const
{
    return full(_nbits) - *this;
}

bool Bitset::is_subset_of(const Bitset & other) const
{
    assert(_nbits == other._nbits);
    return kernels::ops().is_subset(_words.data(), other._words.data(), _words.size());
}

bool Bitset::intersects(const Bitset & other) const
{
    assert(_nbits == other._nbits);
    return kernels::ops().intersects(_words.data(), other._words.data(), _words.size());
}

bool operator==(const Bitset & a, const Bitset & b)
{
    return a._nbits == b._nbits && kernels::ops().equal(a._words.data(), b._words.data(), a._words.size());
}

bool operator<(const Bitset & a, const Bitset & b)
{
    if (a._nbits != b._nbits)
        return a._nbits < b._nbits;
    for (std::size_t w = a._words.size(); w-- > 0;)
        if (a._words[w] != b._words[w])
            return a._words[w] < b._words[w];
    return false;
}

std::vector<std::size_t> Bitset::members() const
{
    std::vector<std::size_t> result;
    for_each([&](std::size_t i) { result.push_back(i); });
    return result;
}

std::size_t Bitset::first() const
{
    for (std::size_t w = 0; w < _words.size(); ++w)
        if (_words[w])
            return w * 64 + static_cast<std::size_t>(__builtin_ctzll(_words[w]));
    return _nbits;
}

std::size_t Bitset::hash() const
{
    // FNV-1a over the words
    std::size_t h = 1469598103934665603ull ^ _nbits;
    for (auto w : _words) {
        h ^= static_cast<std::size_t>(w);
        h *= 1099511628211ull;
    }
    return h;
}

BitMatrix::BitMatrix(std::size_t n) :
    _rows(n, Bitset(n))
{
}

void BitMatrix::set_diagonal()
{
    for (std::size_t i = 0; i < _rows.size(); ++i)
        _rows[i].set(i);
}

void BitMatrix::transitive_closure()
{
    const auto & k = kernels::ops();
    const std::size_t n = _rows.size();
    for (std::size_t via = 0; via < n; ++via) {
        const auto src = _rows[via].words();
        for (std::size_t i = 0; i < n; ++i)
            if (i != via && _rows[i].test(via))
                k.or_into(_rows[i].words().data(), src.data(), src.size());
    }
}

BitMatrix BitMatrix::transpose() const
{
    BitMatrix t(_rows.size());
    for (std::size_t i = 0; i < _rows.size(); ++i)
        _rows[i].for_each([&](std::size_t j) { t.set(j, i); });
    return t;
}

}
