#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sepsys {

using Elem = std::size_t;

enum class ErrorKind
{
    antisymmetry_violation,
    bad_involution,
    unknown_element,
    not_a_lattice,
    not_closed,
    not_a_tree,
    unknown_example,
    budget_exceeded,
    malformed_input
};

std::string_view to_string(ErrorKind k);

/// Malformed or out-of-budget input. Refusals by the constructions
/// are not errors; see construct.hh.
class SepError : public std::runtime_error
{
public:
    SepError(ErrorKind kind, const std::string & what, std::vector<Elem> witness = {}) :
        std::runtime_error(what),
        _kind(kind),
        _witness(std::move(witness))
    {
    }

    ErrorKind kind() const { return _kind; }
    const std::vector<Elem> & witness() const { return _witness; }

private:
    ErrorKind _kind;
    std::vector<Elem> _witness;
};

/// A condition every construction guarantees failed to
/// hold. Always a bug in this library, never a property of the input.
class InternalAssertionFailed : public std::logic_error
{
public:
    using std::logic_error::logic_error;
};

}
