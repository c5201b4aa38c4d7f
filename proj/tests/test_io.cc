#include <doctest.h>

#include "support.hh"

#include <json.hpp>

using namespace testing;

namespace {

ErrorKind parse_error(std::string_view text)
{
    try {
        parse_document(text);
    }
    catch (const SepError & e) {
        return e.kind();
    }
    FAIL("document accepted: " << text);
    return ErrorKind::malformed_input;
}

}

TEST_CASE("system documents")
{
    auto d = parse_document(R"({"kind":"system","separations":["r","s"],"degenerate":["d"],
        "relations":[["r+","s+"],["s+","s-"]]})");
    CHECK(d.kind == DocumentKind::system);
    CHECK(d.system.size() == 5);
    CHECK(d.system.leq(d.system.at("r+"), d.system.at("s-")));
    CHECK(d.system.is_degenerate(d.system.at("d")));
    CHECK(! d.universe);
    CHECK(! d.certificate);
}

TEST_CASE("rejected documents")
{
    CHECK(parse_error("{") == ErrorKind::malformed_input);
    CHECK(parse_error("[]") == ErrorKind::malformed_input);
    CHECK(parse_error(R"({"separations":[]})") == ErrorKind::malformed_input);
    CHECK(parse_error(R"({"kind":"poset"})") == ErrorKind::malformed_input);
    CHECK(parse_error(R"({"kind":"system","separations":["r"],"colour":1})") == ErrorKind::malformed_input);
    CHECK(parse_error(R"({"kind":"system","edges":[]})") == ErrorKind::malformed_input);
    CHECK(parse_error(R"({"kind":"system","separations":[1]})") == ErrorKind::malformed_input);
    CHECK(parse_error(R"({"kind":"system","separations":["r"],"relations":[["r+"]]})") == ErrorKind::malformed_input);
    CHECK(parse_error(R"({"kind":"system","separations":["r"],"relations":[["r+","x"]]})")
        == ErrorKind::unknown_element);
    CHECK(parse_error(R"({"kind":"system","separations":["r","s"],"relations":[["r+","s+"],["s+","r+"]]})")
        == ErrorKind::antisymmetry_violation);
    CHECK(parse_error(R"({"kind":"universe","separations":["r"]})") == ErrorKind::not_a_lattice);
    CHECK(parse_error(R"({"kind":"tree","vertices":["a","b","c"],"edges":[["a","b"]]})") == ErrorKind::not_a_tree);
    CHECK(parse_error(R"({"kind":"graph","vertices":["a"],"edges":[["a","b"]]})") == ErrorKind::unknown_element);
    CHECK(parse_error(R"({"kind":"system","separations":["r","r"]})") == ErrorKind::malformed_input);
    CHECK(parse_error(R"({"kind":"system","separations":["r"],"mode":"sets"})") == ErrorKind::malformed_input);
}

TEST_CASE("other kinds")
{
    auto l = parse_document(R"({"kind":"lattice","vertices":["0","a","b","c","1"],
        "relations":[["0","a"],["a","b"],["b","1"],["0","c"],["c","1"]]})");
    REQUIRE(l.universe);
    CHECK(! is_distributive(*l.universe).holds);

    auto g = parse_document(R"({"kind":"graph","vertices":["a","b"],"edges":[["a","b"]]})");
    REQUIRE(g.universe);
    CHECK(g.system.size() == 7);

    auto t = parse_document(R"({"kind":"tree","vertices":["a","b","c"],"edges":[["a","b"],["b","c"]]})");
    CHECK(t.system.size() == 4);
    CHECK(t.system.find("a~b+"));

    auto single = parse_document(R"({"kind":"tree","vertices":["a"]})");
    CHECK(single.system.empty());
}

TEST_CASE("system round trip")
{
    std::vector<SepSystem> cases = enumerate_systems(3);
    for (std::uint64_t seed = 0; seed < 20; ++seed)
        cases.push_back(random_system(1 + seed % 5, seed));
    for (const auto & s : cases) {
        auto d = parse_document(write_system(s));
        CHECK(canonical_form(d.system) == canonical_form(s));
        CHECK(d.system.labels() == oriented_names(s));
    }
    auto p = gen_example("pentagon");
    auto d = parse_document(write_system(p.system, true));
    CHECK(d.kind == DocumentKind::universe);
    CHECK(d.system == p.system);
}

TEST_CASE("oriented names")
{
    auto star = gen_example("three-star").system;
    auto names = oriented_names(star);
    for (Elem x : star.unoriented()) {
        CHECK(names[x] == star.label(x) + "+");
        CHECK(names[star.inv(x)] == star.label(x) + "-");
    }
}

TEST_CASE("certificates round trip and are rechecked")
{
    auto s = make_system({"r", "s"}, {}, {{"r+", "s+"}});
    auto out = implement_by_sets(s);
    REQUIRE(out);
    const std::string text = write_implementation(out.implementation());
    auto d = parse_document(text);
    REQUIRE(d.certificate);
    CHECK(d.certificate->verified);
    auto impl = certificate_implementation(d);
    CHECK(impl.map == out.implementation().map);
    CHECK(oracle_definitional_recheck(impl));

    // swap two images in the text
    auto bad = nlohmann::json::parse(text);
    std::swap(bad["map"]["r+"], bad["map"]["s+"]);
    std::swap(bad["map"]["r-"], bad["map"]["s-"]);
    auto tampered = parse_document(bad.dump());
    CHECK(! oracle_definitional_recheck(certificate_implementation(tampered)));

    Graph path(GroundSet({"a", "b", "c"}), {{0, 1}, {1, 2}});
    auto gi = graphic_implementation(as_universe(graph_universe(path)));
    REQUIRE(gi);
    auto gd = parse_document(write_implementation(gi.implementation()));
    REQUIRE(gd.certificate);
    REQUIRE(gd.certificate->graph);
    CHECK(gd.certificate->graph->edges().size() == 2);
    CHECK(oracle_definitional_recheck(certificate_implementation(gd)));
}

TEST_CASE("dot export")
{
    Graph g(GroundSet({"a", "b", "c"}), {{2, 0}, {0, 1}});
    CHECK(to_dot(g) == "graph {\n  \"a\";\n  \"b\";\n  \"c\";\n  \"a\" -- \"b\";\n  \"a\" -- \"c\";\n}\n");
    auto d = parse_document(write_graph(g));
    CHECK(d.graph->edges() == g.edges());
}
