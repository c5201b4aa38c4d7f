#pragma once

#include <sepsys/concrete.hh>

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

namespace sepsys {

enum class Mode { sets, bipartitions, strong_sets, strong_bipartitions, graphic };

std::string_view to_string(Mode m);
/// Accepts the CLI spellings: sets, bipartitions, strong-sets,
/// strong-bipartitions, graph.
std::optional<Mode> parse_mode(std::string_view name);

bool is_universe_mode(Mode m);
bool is_bipartition_mode(Mode m);

/// A representation of a separation system by separations of a ground set.
/// `map[x]` is the image of source element x; `target` is the image family,
/// or U(graph) in graphic mode.
struct Implementation
{
    Mode mode = Mode::sets;
    SepSystem source;
    std::optional<Universe> source_universe;
    GroundSet ground;
    std::vector<SetSep> map;
    ConcreteSystem target;
    std::optional<Graph> graph;
    bool verified = false;
};

struct SetCodomain
{
    std::size_t ground_size = 0;
    std::vector<SetSep> images;
};

struct SystemCodomain
{
    SepSystem system;
    std::optional<Universe> universe;
    std::vector<Elem> images;
};

/// A map between separation systems. The codomain is either an abstract
/// system (optionally a universe) or the set separations of a ground set of
/// the given size, where order, join and meet are the set-theoretic ones.
class SepMap
{
public:
    using SetCodomain = sepsys::SetCodomain;
    using SystemCodomain = sepsys::SystemCodomain;

    static SepMap into_sets(SepSystem domain, std::optional<Universe> domain_universe, std::size_t ground_size,
        std::vector<SetSep> images);
    static SepMap into_system(SepSystem domain, SepSystem codomain, std::vector<Elem> images);
    static SepMap into_universe(Universe domain, Universe codomain, std::vector<Elem> images);
    static SepMap of(const Implementation & impl);

    const SepSystem & domain() const { return _domain; }
    const std::optional<Universe> & domain_universe() const { return _domain_universe; }
    const std::variant<SetCodomain, SystemCodomain> & codomain() const { return _codomain; }

private:
    SepSystem _domain;
    std::optional<Universe> _domain_universe;
    std::variant<SetCodomain, SystemCodomain> _codomain;
};

}
