#include <sepsys/io.hh>

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace sepsys {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

std::string_view to_string(DocumentKind k)
{
    switch (k) {
    case DocumentKind::system: return "system";
    case DocumentKind::universe: return "universe";
    case DocumentKind::lattice: return "lattice";
    case DocumentKind::graph: return "graph";
    case DocumentKind::tree: return "tree";
    }
    return "?";
}

namespace {
    [[noreturn]] void malformed(const std::string & what)
    {
        throw SepError(ErrorKind::malformed_input, what);
    }

    std::vector<std::string> string_list(const json & j, const char * key)
    {
        if (! j.is_array())
            malformed(std::string("'") + key + "' must be an array of strings");
        std::vector<std::string> out;
        for (const auto & e : j) {
            if (! e.is_string())
                malformed(std::string("'") + key + "' must be an array of strings");
            out.push_back(e.get<std::string>());
        }
        return out;
    }

    std::vector<std::pair<std::string, std::string>> string_pairs(const json & j, const char * key)
    {
        if (! j.is_array())
            malformed(std::string("'") + key + "' must be an array of pairs");
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto & e : j) {
            if (! e.is_array() || e.size() != 2 || ! e[0].is_string() || ! e[1].is_string())
                malformed(std::string("'") + key + "' entries must be two-element string arrays");
            out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
        }
        return out;
    }

    GroundSet ground_of(const json & doc, const char * key)
    {
        if (! doc.contains(key))
            malformed(std::string("missing '") + key + "'");
        return GroundSet(string_list(doc.at(key), key));
    }

    std::vector<std::pair<std::size_t, std::size_t>> edges_over(const GroundSet & g, const json & j)
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto & [u, v] : string_pairs(j, "edges")) {
            auto iu = g.index_of(u), iv = g.index_of(v);
            if (! iu || ! iv)
                throw SepError(ErrorKind::unknown_element, "edge (" + u + ", " + v + ") names an unknown vertex");
            out.emplace_back(*iu, *iv);
        }
        return out;
    }

    Graph graph_of(const json & j)
    {
        GroundSet vertices = ground_of(j, "vertices");
        auto edges = j.contains("edges") ? edges_over(vertices, j.at("edges")) : decltype(edges_over(vertices, j)){};
        for (auto [u, v] : edges)
            if (u == v)
                malformed("graph edge is a loop at '" + vertices.name(u) + "'");
        return Graph(std::move(vertices), std::move(edges));
    }

    Bitset subset_of(const GroundSet & g, const json & j)
    {
        Bitset b(g.size());
        for (const auto & name : string_list(j, "map"))
            if (auto i = g.index_of(name))
                b.set(*i);
            else
                throw SepError(ErrorKind::unknown_element, "map names unknown ground point '" + name + "'");
        return b;
    }

    const std::set<std::string> & allowed_keys(DocumentKind k)
    {
        static const std::set<std::string> system{"kind", "separations", "degenerate", "relations"};
        static const std::set<std::string> lattice{"kind", "vertices", "relations"};
        static const std::set<std::string> graph{"kind", "vertices", "edges"};
        switch (k) {
        case DocumentKind::system:
        case DocumentKind::universe: return system;
        case DocumentKind::lattice: return lattice;
        case DocumentKind::graph:
        case DocumentKind::tree: return graph;
        }
        return system;
    }

    const std::set<std::string> certificate_keys{"ground", "map", "mode", "verified", "graph"};

    std::optional<DocumentKind> parse_kind(std::string_view s)
    {
        for (auto k : {DocumentKind::system, DocumentKind::universe, DocumentKind::lattice, DocumentKind::graph,
                 DocumentKind::tree})
            if (to_string(k) == s)
                return k;
        return std::nullopt;
    }

    Certificate parse_certificate(const SepSystem & s, const json & doc)
    {
        for (const char * key : {"ground", "map", "mode"})
            if (! doc.contains(key))
                malformed(std::string("certificate is missing '") + key + "'");
        Certificate c;
        if (! doc.at("mode").is_string())
            malformed("'mode' must be a string");
        auto mode = parse_mode(doc.at("mode").get<std::string>());
        if (! mode)
            malformed("unknown mode '" + doc.at("mode").get<std::string>() + "'");
        c.mode = *mode;
        c.ground = ground_of(doc, "ground");
        if (doc.contains("verified")) {
            if (! doc.at("verified").is_boolean())
                malformed("'verified' must be a boolean");
            c.verified = doc.at("verified").get<bool>();
        }
        if (doc.contains("graph")) {
            const auto & g = doc.at("graph");
            if (! g.is_object())
                malformed("'graph' must be an object");
            for (const auto & [key, _] : g.items())
                if (key != "vertices" && key != "edges")
                    malformed("unknown field 'graph." + key + "'");
            c.graph = graph_of(g);
        }

        const auto & map = doc.at("map");
        if (! map.is_object())
            malformed("'map' must be an object");
        const auto names = oriented_names(s);
        std::unordered_map<std::string, Elem> by_name;
        for (Elem x = 0; x < s.size(); ++x)
            by_name.emplace(names[x], x);
        std::vector<std::optional<SetSep>> images(s.size());
        for (const auto & [key, value] : map.items()) {
            auto it = by_name.find(key);
            if (it == by_name.end())
                throw SepError(ErrorKind::unknown_element, "map names unknown separation '" + key + "'");
            if (! value.is_array() || value.size() != 2)
                malformed("map entry '" + key + "' must be a pair of point lists");
            images[it->second] = SetSep{subset_of(c.ground, value[0]), subset_of(c.ground, value[1])};
        }
        for (Elem x = 0; x < s.size(); ++x) {
            if (! images[x])
                malformed("map has no image for '" + names[x] + "'");
            c.map.push_back(*images[x]);
        }
        return c;
    }

    bool is_stem_pair(const std::string & a, const std::string & b, char sa, char sb)
    {
        return a.size() > 1 && a.size() == b.size() && a.back() == sa && b.back() == sb
            && a.compare(0, a.size() - 1, b, 0, b.size() - 1) == 0;
    }

    ojson subset_json(const GroundSet & g, const Bitset & b)
    {
        ojson out = ojson::array();
        b.for_each([&](std::size_t i) { out.push_back(g.name(i)); });
        return out;
    }

    ojson system_json(const SepSystem & s, bool as_universe)
    {
        const auto names = oriented_names(s);
        ojson out;
        out["kind"] = as_universe ? "universe" : "system";
        ojson seps = ojson::array(), degenerate = ojson::array(), relations = ojson::array();
        for (Elem x : s.unoriented()) {
            if (s.is_degenerate(x))
                degenerate.push_back(names[x]);
            else
                seps.push_back(names[x].substr(0, names[x].size() - 1));
        }
        for (Elem x = 0; x < s.size(); ++x)
            for (Elem y = 0; y < s.size(); ++y) {
                if (! s.lt(x, y))
                    continue;
                // cover pairs only
                Bitset between = s.up(x) & s.down(y);
                if (between.count() == 2)
                    relations.push_back(ojson::array({names[x], names[y]}));
            }
        out["separations"] = seps;
        out["degenerate"] = degenerate;
        out["relations"] = relations;
        return out;
    }

    ojson graph_json(const Graph & g)
    {
        ojson out;
        out["vertices"] = g.vertices().points();
        ojson edges = ojson::array();
        for (auto [u, v] : g.edges())
            edges.push_back(ojson::array({g.vertices().name(u), g.vertices().name(v)}));
        out["edges"] = edges;
        return out;
    }

    std::string dot_id(const std::string & s)
    {
        std::string out = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\')
                out += '\\';
            out += c;
        }
        return out + "\"";
    }
}

Document parse_document(std::string_view text)
{
    json doc;
    try {
        doc = json::parse(text);
    }
    catch (const json::parse_error & e) {
        malformed(std::string("invalid JSON: ") + e.what());
    }
    if (! doc.is_object())
        malformed("document must be a JSON object");
    if (! doc.contains("kind") || ! doc.at("kind").is_string())
        malformed("missing string field 'kind'");
    auto kind = parse_kind(doc.at("kind").get<std::string>());
    if (! kind)
        malformed("unknown kind '" + doc.at("kind").get<std::string>() + "'");

    for (const auto & [key, _] : doc.items())
        if (! allowed_keys(*kind).count(key) && ! certificate_keys.count(key))
            malformed("unknown field '" + key + "' for kind " + std::string(to_string(*kind)));

    Document d;
    d.kind = *kind;
    switch (*kind) {
    case DocumentKind::system:
    case DocumentKind::universe: {
        std::vector<std::string> labels;
        std::vector<std::pair<std::string, std::string>> inv;
        if (doc.contains("separations"))
            for (const auto & name : string_list(doc.at("separations"), "separations")) {
                if (name.empty())
                    malformed("empty separation name");
                labels.push_back(name + "+");
                labels.push_back(name + "-");
                inv.emplace_back(name + "+", name + "-");
            }
        if (doc.contains("degenerate"))
            for (const auto & name : string_list(doc.at("degenerate"), "degenerate")) {
                if (name.empty())
                    malformed("empty separation name");
                labels.push_back(name);
                inv.emplace_back(name, name);
            }
        auto rel = doc.contains("relations") ? string_pairs(doc.at("relations"), "relations")
                                             : std::vector<std::pair<std::string, std::string>>{};
        d.system = SepSystem::build(std::move(labels), inv, rel);
        if (*kind == DocumentKind::universe)
            d.universe = Universe::build(d.system);
        break;
    }
    case DocumentKind::lattice: {
        auto elems = string_list(doc.contains("vertices") ? doc.at("vertices") : json::array(), "vertices");
        auto rel = doc.contains("relations") ? string_pairs(doc.at("relations"), "relations")
                                             : std::vector<std::pair<std::string, std::string>>{};
        d.lattice = Lattice::build(std::move(elems), rel);
        d.universe = universe_from_lattice(*d.lattice);
        d.system = d.universe->base();
        break;
    }
    case DocumentKind::graph: {
        d.graph = graph_of(doc);
        auto view = as_abstract(graph_universe(*d.graph), true);
        d.system = std::move(view.system);
        d.universe = std::move(view.universe);
        break;
    }
    case DocumentKind::tree: {
        Tree t;
        t.vertices = ground_of(doc, "vertices");
        if (doc.contains("edges"))
            t.edges = edges_over(t.vertices, doc.at("edges"));
        t.validate();
        if (! t.edges.empty()) {
            d.edge_tree = edge_tree_set(t);
            d.system = d.edge_tree->system;
        }
        d.tree = std::move(t);
        break;
    }
    }

    bool has_certificate = false;
    for (const auto & key : certificate_keys)
        has_certificate |= doc.contains(key);
    if (has_certificate)
        d.certificate = parse_certificate(d.system, doc);
    return d;
}

Document load_document(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        malformed("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

std::vector<std::string> oriented_names(const SepSystem & s)
{
    std::vector<std::string> names(s.size());
    for (Elem x : s.unoriented()) {
        const Elem y = s.inv(x);
        if (x == y) {
            names[x] = s.label(x);
            continue;
        }
        const auto & lx = s.label(x);
        const auto & ly = s.label(y);
        if (is_stem_pair(lx, ly, '+', '-')) {
            names[x] = lx;
            names[y] = ly;
        }
        else if (is_stem_pair(lx, ly, '-', '+')) {
            names[x] = lx;
            names[y] = ly;
        }
        else {
            names[x] = lx + "+";
            names[y] = lx + "-";
        }
    }

    std::unordered_set<std::string> seen(names.begin(), names.end());
    if (seen.size() == names.size())
        return names;
    for (std::size_t i = 0; auto x : s.unoriented()) {
        const std::string stem = "s" + std::to_string(i++);
        if (s.is_degenerate(x))
            names[x] = stem;
        else {
            names[x] = stem + "+";
            names[s.inv(x)] = stem + "-";
        }
    }
    return names;
}

std::string write_system(const SepSystem & s, bool as_universe, int indent)
{
    return system_json(s, as_universe).dump(indent) + "\n";
}

std::string write_graph(const Graph & g)
{
    ojson out;
    out["kind"] = "graph";
    const ojson body = graph_json(g);
    for (const auto & [k, v] : body.items())
        out[k] = v;
    return out.dump(2) + "\n";
}

std::string write_tree(const Tree & t)
{
    ojson out;
    out["kind"] = "tree";
    out["vertices"] = t.vertices.points();
    ojson edges = ojson::array();
    for (auto [u, v] : t.edges)
        edges.push_back(ojson::array({t.vertices.name(u), t.vertices.name(v)}));
    out["edges"] = edges;
    return out.dump(2) + "\n";
}

std::string write_implementation(const Implementation & impl)
{
    ojson out = system_json(impl.source, impl.source_universe.has_value());
    const auto names = oriented_names(impl.source);
    out["ground"] = impl.ground.points();
    ojson map = ojson::object();
    for (Elem x = 0; x < impl.source.size(); ++x)
        map[names[x]] = ojson::array({subset_json(impl.ground, impl.map[x].a), subset_json(impl.ground, impl.map[x].b)});
    out["map"] = map;
    out["mode"] = to_string(impl.mode);
    out["verified"] = impl.verified;
    if (impl.graph)
        out["graph"] = graph_json(*impl.graph);
    return out.dump(2) + "\n";
}

Implementation certificate_implementation(const Document & doc)
{
    if (! doc.certificate)
        malformed("document carries no implementation certificate");
    const Certificate & c = *doc.certificate;
    Implementation impl;
    impl.mode = c.mode;
    impl.source = doc.system;
    impl.source_universe = doc.universe;
    impl.ground = c.ground;
    impl.map = c.map;
    impl.graph = c.graph;
    if (c.mode == Mode::graphic) {
        if (! c.graph)
            malformed("graphic certificate needs 'graph'");
        impl.target = graph_universe(*c.graph);
    }
    else
        impl.target = ConcreteSystem(c.ground, c.map,
            is_bipartition_mode(c.mode) ? ConcreteKind::bipartition : ConcreteKind::general);
    impl.verified = false;
    return impl;
}

std::string to_dot(const Graph & g)
{
    std::string out = "graph {\n";
    for (const auto & v : g.vertices().points())
        out += "  " + dot_id(v) + ";\n";
    for (auto [u, v] : g.edges())
        out += "  " + dot_id(g.vertices().name(u)) + " -- " + dot_id(g.vertices().name(v)) + ";\n";
    return out + "}\n";
}

}
