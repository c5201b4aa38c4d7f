#pragma once

#include <sepsys/bits.hh>
#include <sepsys/error.hh>

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sepsys {

/// Outcome of a property check. When the property fails, `witness` holds
/// the lexicographically first counterexample in element order.
template <typename Witness>
struct Verdict
{
    bool holds = true;
    std::optional<Witness> witness;

    explicit operator bool() const { return holds; }

    static Verdict pass() { return {}; }
    static Verdict fail(Witness w) { return Verdict{false, std::move(w)}; }
};

using ElemPair = std::pair<Elem, Elem>;

/// A finite separation system: a poset with an order-reversing involution.
/// Elements are indices 0..size()-1 in input order; labels are for display
/// and file IO only. Immutable once built.
class SepSystem
{
public:
    SepSystem() = default;

    /// Builds the smallest valid system containing the given relations: they
    /// are closed under reflexivity, involution-reversal and transitivity.
    /// `involution` lists 2-cycles and fixed points (a, a); every element must
    /// appear exactly once.
    static SepSystem build(std::vector<std::string> labels,
        std::span<const std::pair<std::string, std::string>> involution,
        std::span<const std::pair<std::string, std::string>> relations);

    /// Index-based form of build(); `inv[x]` is the inverse of x.
    static SepSystem from_indices(
        std::vector<std::string> labels, std::vector<Elem> inv, std::span<const ElemPair> relations);

    /// Takes an already closed order (asserted, not trusted).
    static SepSystem from_order(std::vector<std::string> labels, std::vector<Elem> inv, BitMatrix leq);

    std::size_t size() const { return _inv.size(); }
    bool empty() const { return _inv.empty(); }

    const std::string & label(Elem x) const { return _labels.at(x); }
    const std::vector<std::string> & labels() const { return _labels; }
    std::optional<Elem> find(std::string_view label) const;
    /// Throws SepError(unknown_element).
    Elem at(std::string_view label) const;

    Elem inv(Elem x) const { return _inv[x]; }
    bool leq(Elem x, Elem y) const { return _leq.test(x, y); }
    bool lt(Elem x, Elem y) const { return x != y && leq(x, y); }

    /// {y : x <= y}
    const Bitset & up(Elem x) const { return _leq.row(x); }
    /// {y : y <= x}
    const Bitset & down(Elem x) const { return _geq.row(x); }
    const BitMatrix & order() const { return _leq; }

    bool is_degenerate(Elem x) const { return _inv[x] == x; }
    bool is_small(Elem x) const { return leq(x, _inv[x]); }
    bool is_cosmall(Elem x) const { return leq(_inv[x], x); }

    std::optional<Elem> least() const;
    std::optional<Elem> greatest() const;

    std::vector<Elem> smalls() const;
    std::vector<Elem> cosmalls() const;
    std::vector<Elem> degenerates() const;

    /// One representative per orbit {x, inv(x)}: the one with lower index.
    std::vector<Elem> unoriented() const;
    std::size_t unoriented_count() const;

    /// Non-reflexive pairs (x, y) with x <= y, in lexicographic order.
    std::vector<ElemPair> relations() const;

    /// Subsystem on `keep`, which must be closed under inv. Order restricted,
    /// relative element order kept.
    SepSystem induced(const Bitset & keep) const;

    void check_element(Elem x) const;

    friend bool operator==(const SepSystem & a, const SepSystem & b) = default;

private:
    SepSystem(std::vector<std::string> labels, std::vector<Elem> inv, BitMatrix leq);

    std::vector<std::string> _labels;
    std::vector<Elem> _inv;
    BitMatrix _leq;
    BitMatrix _geq;
};

struct ElementClass
{
    bool small = false;
    bool cosmall = false;
    bool degenerate = false;
    /// Empty when the system has no least element; atomicity is only defined
    /// relative to one.
    std::optional<bool> atomic;
};

ElementClass classify(const SepSystem & s, Elem x);

/// Every two small r, s satisfy r <= inv(s). Witness (r, s).
Verdict<ElemPair> is_scrupulous(const SepSystem & s);

/// Every small s lies below every t. Witness (s, t).
Verdict<ElemPair> is_fastidious(const SepSystem & s);

/// No small elements. Witness: the first small element.
Verdict<Elem> is_regular(const SepSystem & s);

/// Removes the orbit {u, inv(u)}.
SepSystem delete_unoriented(const SepSystem & s, Elem u);

}
