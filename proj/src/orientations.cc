#include <sepsys/orientations.hh>

#include <algorithm>
#include <numeric>

namespace sepsys {

namespace {
    bool same_unoriented(const SepSystem & s, Elem x, Elem y) { return x == y || s.inv(x) == y; }

    // Choosing x and y together is inconsistent when they point away from
    // each other: inv(x) <= y for distinct underlying separations.
    bool clash(const SepSystem & s, Elem x, Elem y)
    {
        if (same_unoriented(s, x, y))
            return false;
        return s.leq(s.inv(x), y) || s.leq(s.inv(y), x);
    }
}

bool is_consistent_orientation(const SepSystem & s, const Bitset & members)
{
    if (members.size() != s.size())
        return false;
    for (Elem x = 0; x < s.size(); ++x) {
        const bool has_x = members.test(x), has_inv = members.test(s.inv(x));
        if (s.is_degenerate(x) ? ! has_x : (has_x == has_inv))
            return false;
    }
    for (Elem r = 0; r < s.size(); ++r)
        for (Elem t = 0; t < s.size(); ++t) {
            if (same_unoriented(s, r, t))
                continue;
            // r← = inv(r) and t→ = t both chosen, while r→ <= t→
            if (members.test(s.inv(r)) && members.test(t) && s.leq(r, t))
                return false;
        }
    return true;
}

std::vector<Orientation> consistent_orientations(const SepSystem & s)
{
    auto reps = s.unoriented();
    // Branch in a linear extension: elements with fewer predecessors first.
    std::stable_sort(reps.begin(), reps.end(), [&](Elem a, Elem b) { return s.down(a).count() < s.down(b).count(); });

    std::vector<Orientation> result;
    std::vector<Elem> chosen;
    chosen.reserve(reps.size());

    auto recurse = [&](auto & self, std::size_t depth) -> void {
        if (depth == reps.size()) {
            Bitset members(s.size());
            for (Elem c : chosen)
                members.set(c);
            result.push_back({std::move(members)});
            return;
        }
        const Elem rep = reps[depth];
        const Elem options[2] = {rep, s.inv(rep)};
        const std::size_t option_count = s.is_degenerate(rep) ? 1 : 2;
        for (std::size_t k = 0; k < option_count; ++k) {
            const Elem x = options[k];
            if (std::any_of(chosen.begin(), chosen.end(), [&](Elem c) { return clash(s, c, x); }))
                continue;
            chosen.push_back(x);
            self(self, depth + 1);
            chosen.pop_back();
        }
    };
    recurse(recurse, 0);

    std::sort(result.begin(), result.end(), [](const Orientation & a, const Orientation & b) { return a.members < b.members; });
    return result;
}

std::vector<std::size_t> orientations_containing(const SepSystem & s, Elem x, std::span<const Orientation> all)
{
    s.check_element(x);
    std::vector<std::size_t> result;
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i].contains(x))
            result.push_back(i);
    return result;
}

}
