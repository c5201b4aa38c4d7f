#include <sepsys/core.hh>

#include <unordered_map>

namespace sepsys {

std::string_view to_string(ErrorKind k)
{
    switch (k) {
    case ErrorKind::antisymmetry_violation: return "AntisymmetryViolation";
    case ErrorKind::bad_involution: return "BadInvolution";
    case ErrorKind::unknown_element: return "UnknownElement";
    case ErrorKind::not_a_lattice: return "NotALattice";
    case ErrorKind::not_closed: return "NotClosed";
    case ErrorKind::not_a_tree: return "NotATree";
    case ErrorKind::unknown_example: return "UnknownExample";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::malformed_input: return "MalformedInput";
    }
    return "Unknown";
}

namespace {
    void check_involution(const std::vector<std::string> & labels, const std::vector<Elem> & inv)
    {
        if (inv.size() != labels.size())
            throw SepError(ErrorKind::bad_involution, "involution size does not match element count");
        for (Elem x = 0; x < inv.size(); ++x) {
            if (inv[x] >= inv.size())
                throw SepError(ErrorKind::bad_involution, "involution maps outside the system", {x});
            if (inv[inv[x]] != x)
                throw SepError(ErrorKind::bad_involution,
                    "not an involution at '" + labels[x] + "'", {x, inv[x]});
        }
    }

    void check_antisymmetry(const std::vector<std::string> & labels, const BitMatrix & leq)
    {
        for (Elem x = 0; x < leq.size(); ++x)
            for (Elem y = x + 1; y < leq.size(); ++y)
                if (leq.test(x, y) && leq.test(y, x))
                    throw SepError(ErrorKind::antisymmetry_violation,
                        "'" + labels[x] + "' and '" + labels[y] + "' are mutually <=", {x, y});
    }
}

SepSystem::SepSystem(std::vector<std::string> labels, std::vector<Elem> inv, BitMatrix leq) :
    _labels(std::move(labels)),
    _inv(std::move(inv)),
    _leq(std::move(leq)),
    _geq(_leq.transpose())
{
}

SepSystem SepSystem::from_indices(
    std::vector<std::string> labels, std::vector<Elem> inv, std::span<const ElemPair> relations)
{
    check_involution(labels, inv);
    const std::size_t n = labels.size();
    BitMatrix leq(n);
    leq.set_diagonal();
    for (auto [r, s] : relations) {
        if (r >= n || s >= n)
            throw SepError(ErrorKind::unknown_element, "relation mentions an element outside the system");
        leq.set(r, s);
        leq.set(inv[s], inv[r]);
    }
    // The generating set is closed under (r,s) -> (inv s, inv r), and so is
    // its transitive closure.
    leq.transitive_closure();
    check_antisymmetry(labels, leq);
    return SepSystem(std::move(labels), std::move(inv), std::move(leq));
}

SepSystem SepSystem::from_order(std::vector<std::string> labels, std::vector<Elem> inv, BitMatrix leq)
{
    check_involution(labels, inv);
    if (leq.size() != labels.size())
        throw SepError(ErrorKind::malformed_input, "order size does not match element count");
    for (Elem x = 0; x < leq.size(); ++x) {
        if (! leq.test(x, x))
            throw SepError(ErrorKind::malformed_input, "order is not reflexive", {x});
        for (Elem y = 0; y < leq.size(); ++y)
            if (leq.test(x, y) && ! leq.test(inv[y], inv[x]))
                throw SepError(ErrorKind::malformed_input, "involution does not reverse the order", {x, y});
    }
    BitMatrix closed = leq;
    closed.transitive_closure();
    if (! (closed == leq))
        throw SepError(ErrorKind::malformed_input, "order is not transitive");
    check_antisymmetry(labels, leq);
    return SepSystem(std::move(labels), std::move(inv), std::move(leq));
}

SepSystem SepSystem::build(std::vector<std::string> labels,
    std::span<const std::pair<std::string, std::string>> involution,
    std::span<const std::pair<std::string, std::string>> relations)
{
    std::unordered_map<std::string, Elem> index;
    for (Elem x = 0; x < labels.size(); ++x)
        if (! index.emplace(labels[x], x).second)
            throw SepError(ErrorKind::malformed_input, "duplicate element '" + labels[x] + "'");

    auto lookup = [&](const std::string & name) {
        auto it = index.find(name);
        if (it == index.end())
            throw SepError(ErrorKind::unknown_element, "unknown element '" + name + "'");
        return it->second;
    };

    constexpr Elem unset = static_cast<Elem>(-1);
    std::vector<Elem> inv(labels.size(), unset);
    for (const auto & [a, b] : involution) {
        Elem x = lookup(a), y = lookup(b);
        if (inv[x] != unset || inv[y] != unset)
            throw SepError(ErrorKind::bad_involution, "element '" + (inv[x] != unset ? a : b) + "' paired twice");
        inv[x] = y;
        inv[y] = x;
    }
    for (Elem x = 0; x < inv.size(); ++x)
        if (inv[x] == unset)
            throw SepError(ErrorKind::bad_involution, "element '" + labels[x] + "' has no inverse", {x});

    std::vector<ElemPair> rels;
    rels.reserve(relations.size());
    for (const auto & [a, b] : relations)
        rels.emplace_back(lookup(a), lookup(b));
    return from_indices(std::move(labels), std::move(inv), rels);
}

std::optional<Elem> SepSystem::find(std::string_view label) const
{
    for (Elem x = 0; x < _labels.size(); ++x)
        if (_labels[x] == label)
            return x;
    return std::nullopt;
}

Elem SepSystem::at(std::string_view label) const
{
    if (auto x = find(label))
        return *x;
    throw SepError(ErrorKind::unknown_element, "unknown element '" + std::string(label) + "'");
}

void SepSystem::check_element(Elem x) const
{
    if (x >= size())
        throw SepError(ErrorKind::unknown_element, "element index " + std::to_string(x) + " out of range");
}

std::optional<Elem> SepSystem::least() const
{
    for (Elem x = 0; x < size(); ++x)
        if (up(x).all())
            return x;
    return std::nullopt;
}

std::optional<Elem> SepSystem::greatest() const
{
    for (Elem x = 0; x < size(); ++x)
        if (down(x).all())
            return x;
    return std::nullopt;
}

std::vector<Elem> SepSystem::smalls() const
{
    std::vector<Elem> r;
    for (Elem x = 0; x < size(); ++x)
        if (is_small(x))
            r.push_back(x);
    return r;
}

std::vector<Elem> SepSystem::cosmalls() const
{
    std::vector<Elem> r;
    for (Elem x = 0; x < size(); ++x)
        if (is_cosmall(x))
            r.push_back(x);
    return r;
}

std::vector<Elem> SepSystem::degenerates() const
{
    std::vector<Elem> r;
    for (Elem x = 0; x < size(); ++x)
        if (is_degenerate(x))
            r.push_back(x);
    return r;
}

std::vector<Elem> SepSystem::unoriented() const
{
    std::vector<Elem> r;
    for (Elem x = 0; x < size(); ++x)
        if (x <= _inv[x])
            r.push_back(x);
    return r;
}

std::size_t SepSystem::unoriented_count() const
{
    std::size_t n = 0;
    for (Elem x = 0; x < size(); ++x)
        if (x <= _inv[x])
            ++n;
    return n;
}

std::vector<ElemPair> SepSystem::relations() const
{
    std::vector<ElemPair> r;
    for (Elem x = 0; x < size(); ++x)
        up(x).for_each([&](Elem y) {
            if (y != x)
                r.emplace_back(x, y);
        });
    return r;
}

SepSystem SepSystem::induced(const Bitset & keep) const
{
    std::vector<Elem> old_of_new;
    std::vector<Elem> new_of_old(size(), static_cast<Elem>(-1));
    keep.for_each([&](Elem x) {
        check_element(x);
        new_of_old[x] = old_of_new.size();
        old_of_new.push_back(x);
    });

    std::vector<std::string> labels;
    std::vector<Elem> inv;
    for (Elem x : old_of_new) {
        if (! keep.test(_inv[x]))
            throw SepError(ErrorKind::bad_involution, "kept set is not closed under the involution", {x});
        labels.push_back(_labels[x]);
        inv.push_back(new_of_old[_inv[x]]);
    }
    BitMatrix order(old_of_new.size());
    for (Elem i = 0; i < old_of_new.size(); ++i)
        for (Elem j = 0; j < old_of_new.size(); ++j)
            if (leq(old_of_new[i], old_of_new[j]))
                order.set(i, j);
    return SepSystem(std::move(labels), std::move(inv), std::move(order));
}

ElementClass classify(const SepSystem & s, Elem x)
{
    s.check_element(x);
    ElementClass c;
    c.small = s.is_small(x);
    c.cosmall = s.is_cosmall(x);
    c.degenerate = s.is_degenerate(x);
    if (auto bottom = s.least()) {
        if (x == *bottom)
            c.atomic = false;
        else
            c.atomic = (s.down(x).count() == 2);
    }
    return c;
}

Verdict<ElemPair> is_scrupulous(const SepSystem & s)
{
    for (Elem r = 0; r < s.size(); ++r) {
        if (! s.is_small(r))
            continue;
        for (Elem t = 0; t < s.size(); ++t)
            if (s.is_small(t) && ! s.leq(r, s.inv(t)))
                return Verdict<ElemPair>::fail({r, t});
    }
    return Verdict<ElemPair>::pass();
}

Verdict<ElemPair> is_fastidious(const SepSystem & s)
{
    for (Elem r = 0; r < s.size(); ++r) {
        if (! s.is_small(r))
            continue;
        for (Elem t = 0; t < s.size(); ++t)
            if (! s.leq(r, t))
                return Verdict<ElemPair>::fail({r, t});
    }
    return Verdict<ElemPair>::pass();
}

Verdict<Elem> is_regular(const SepSystem & s)
{
    for (Elem x = 0; x < s.size(); ++x)
        if (s.is_small(x))
            return Verdict<Elem>::fail(x);
    return Verdict<Elem>::pass();
}

SepSystem delete_unoriented(const SepSystem & s, Elem u)
{
    s.check_element(u);
    Bitset keep = Bitset::full(s.size());
    keep.reset(u);
    keep.reset(s.inv(u));
    return s.induced(keep);
}

}
