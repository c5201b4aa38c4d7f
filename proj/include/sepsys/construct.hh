#pragma once

#include <sepsys/implementation.hh>
#include <sepsys/orientations.hh>

#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace sepsys {

enum class RefusalReason
{
    not_scrupulous,
    not_fastidious,
    not_distributive,
    smalls_not_boolean,
    max_small_not_degenerate
};

std::string_view to_string(RefusalReason r);

/// The input lacks the property the construction requires. The
/// witness is the failing predicate's counterexample (a pair or a triple of
/// elements; empty for the small-algebra refusals).
struct Refusal
{
    RefusalReason reason;
    std::vector<Elem> witness;
    std::string detail;
};

class Outcome
{
public:
    Outcome(Implementation impl) : _value(std::move(impl)) {}
    Outcome(Refusal refusal) : _value(std::move(refusal)) {}

    bool accepted() const { return std::holds_alternative<Implementation>(_value); }
    explicit operator bool() const { return accepted(); }

    const Implementation & implementation() const { return std::get<Implementation>(_value); }
    Implementation & implementation() { return std::get<Implementation>(_value); }
    const Refusal & refusal() const { return std::get<Refusal>(_value); }

private:
    std::variant<Implementation, Refusal> _value;
};

/// Ground set of non-co-small elements, s ↦ (A_s, A_{inv s}) with
/// A_s = {x : x ≱ s}. Accepts exactly the scrupulous systems.
Outcome implement_by_sets(const SepSystem & s);

/// The ground set used by the strong constructions: the principal up-sets
/// ↑r whose complement is join-closed and that contain every co-small
/// element. Sorted by mask.
std::vector<Bitset> strong_ground_set(const Universe & u);

/// s ↦ ({X : s ∈ X}, {X : inv s ∈ X}) over strong_ground_set(u). Accepts
/// exactly the distributive scrupulous universes.
Outcome strong_implement_by_sets(const Universe & u);

/// As strong_implement_by_sets without the member X = U, so that every small
/// atom maps to ({v}, V).
Outcome atomic_strong_implementation(const Universe & u);

/// Strong set implementation with the common intersection of all sides
/// removed. Accepts exactly the distributive fastidious universes.
Outcome strong_implement_by_bipartitions(const Universe & u);

/// Via consistent orientations: s ↦ (O_{inv s}, O_s), handling the one
/// small separation separately. Accepts exactly the fastidious systems.
Outcome implement_by_bipartitions(const SepSystem & s);

/// A graph G with U(G) isomorphic to u. Accepts exactly the distributive
/// universes whose small elements form a boolean algebra with a degenerate
/// maximum.
Outcome graphic_implementation(const Universe & u);

}
