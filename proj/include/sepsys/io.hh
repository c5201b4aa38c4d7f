#pragma once

#include <sepsys/workbench.hh>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace sepsys {

enum class DocumentKind { system, universe, lattice, graph, tree };

std::string_view to_string(DocumentKind k);

/// Implementation certificate as stored in a file: images given by the
/// oriented names of the document's system.
struct Certificate
{
    Mode mode = Mode::sets;
    GroundSet ground;
    std::vector<SetSep> map; ///< indexed by element of Document::system
    std::optional<Graph> graph;
    bool verified = false;
};

/// A loaded input file. `system` is always set; `universe` whenever the
/// kind carries lattice structure (universe, lattice, graph).
struct Document
{
    DocumentKind kind = DocumentKind::system;
    SepSystem system;
    std::optional<Universe> universe;
    std::optional<Lattice> lattice;
    std::optional<Graph> graph;
    std::optional<Tree> tree;
    std::optional<EdgeTreeSet> edge_tree;
    std::optional<Certificate> certificate;
};

/// Throws SepError; malformed_input for JSON or schema problems, otherwise
/// the structural error of the described object.
Document parse_document(std::string_view text);
Document load_document(const std::string & path);

/// File name of each element: "name+"/"name-" for a nondegenerate pair,
/// the plain name for a degenerate element. Names come from the labels
/// when they already follow that pattern.
std::vector<std::string> oriented_names(const SepSystem & s);

/// kind system or universe (when `as_universe`), relations as cover pairs.
/// indent < 0 gives a single line.
std::string write_system(const SepSystem & s, bool as_universe = false, int indent = 2);
std::string write_graph(const Graph & g);
std::string write_tree(const Tree & t);
/// The source system with the certificate fields added.
std::string write_implementation(const Implementation & impl);

/// Rebuild the implementation a certificate describes, against `doc.system`.
Implementation certificate_implementation(const Document & doc);

std::string to_dot(const Graph & g);

}
