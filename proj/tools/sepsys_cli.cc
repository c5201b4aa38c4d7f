#include <sepsys/io.hh>
#include <sepsys/verify.hh>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace sepsys;

namespace {

enum Exit { ok = 0, fails = 1, bad_input = 2, internal = 3 };

std::string list_labels(const SepSystem & s, const std::vector<Elem> & xs)
{
    std::string out = "[";
    for (std::size_t i = 0; i < xs.size(); ++i)
        out += (i ? ", " : "") + s.label(xs[i]);
    return out + "]";
}

template <typename W, typename F>
void print_verdict(const char * name, const Verdict<W> & v, F && witness)
{
    std::cout << name << ": " << (v.holds ? "yes" : "no");
    if (v.witness)
        std::cout << "  witness " << witness(*v.witness);
    std::cout << "\n";
}

int cmd_validate(const std::string & file)
{
    Document d = load_document(file);
    std::cout << "valid " << to_string(d.kind) << ": " << d.system.size() << " oriented, "
              << d.system.unoriented_count() << " unoriented separations\n";
    if (! d.certificate)
        return ok;
    Implementation impl = certificate_implementation(d);
    if (! oracle_definitional_recheck(impl)) {
        std::cout << "certificate (" << to_string(impl.mode) << "): REJECTED\n";
        return fails;
    }
    std::cout << "certificate (" << to_string(impl.mode) << "): verified\n";
    return ok;
}

int cmd_check(const std::string & file)
{
    Document d = load_document(file);
    const SepSystem & s = d.system;
    auto pair = [&](const ElemPair & p) { return "(" + s.label(p.first) + ", " + s.label(p.second) + ")"; };
    std::cout << "small: " << list_labels(s, s.smalls()) << "\n";
    std::cout << "co-small: " << list_labels(s, s.cosmalls()) << "\n";
    std::cout << "degenerate: " << list_labels(s, s.degenerates()) << "\n";
    print_verdict("scrupulous", is_scrupulous(s), pair);
    print_verdict("fastidious", is_fastidious(s), pair);
    print_verdict("regular", is_regular(s), [&](Elem x) { return s.label(x); });
    if (! d.universe)
        return ok;
    const Universe & u = *d.universe;
    auto triple = [&](const Triple & t) {
        return "(" + s.label(t.x) + ", " + s.label(t.y) + ", " + s.label(t.z) + ")";
    };
    print_verdict("distributive", is_distributive(u), triple);
    auto c = cancellation_witness(u);
    std::cout << "cancellation witness: " << (c ? triple(*c) : std::string("none")) << "\n";
    print_verdict("small joins small", small_joins_are_small(u), pair);
    print_verdict("co-small meets co-small", cosmall_meets_are_cosmall(u), pair);
    auto alg = small_algebra(u);
    std::cout << "small algebra: " << (alg.is_boolean ? "boolean" : "not boolean");
    if (alg.max_small)
        std::cout << ", maximum " << s.label(*alg.max_small) << (alg.max_degenerate ? " (degenerate)" : "");
    std::cout << ", atoms " << list_labels(s, alg.atoms) << "\n";
    return ok;
}

int cmd_implement(const std::string & file, const std::string & mode_name, bool verify)
{
    auto mode = parse_mode(mode_name);
    if (! mode)
        throw SepError(ErrorKind::malformed_input, "unknown mode '" + mode_name + "'");
    Document d = load_document(file);
    if (is_universe_mode(*mode) && ! d.universe)
        throw SepError(ErrorKind::malformed_input, "mode " + mode_name + " needs a universe input");

    auto run = [&]() -> Outcome {
        switch (*mode) {
        case Mode::sets: return implement_by_sets(d.system);
        case Mode::bipartitions: return implement_by_bipartitions(d.system);
        case Mode::strong_sets: return strong_implement_by_sets(*d.universe);
        case Mode::strong_bipartitions: return strong_implement_by_bipartitions(*d.universe);
        case Mode::graphic: return graphic_implementation(*d.universe);
        }
        throw InternalAssertionFailed("unhandled mode");
    };
    Outcome out = run();
    if (! out) {
        const Refusal & r = out.refusal();
        std::cout << "refused: " << to_string(r.reason) << "  witness " << list_labels(d.system, r.witness);
        if (! r.detail.empty())
            std::cout << "  (" << r.detail << ")";
        std::cout << "\n";
        return fails;
    }
    if (verify && ! oracle_definitional_recheck(out.implementation())) {
        std::cerr << "definitional recheck failed\n";
        return internal;
    }
    std::cout << write_implementation(out.implementation());
    return ok;
}

int cmd_orientations(const std::string & file)
{
    Document d = load_document(file);
    auto all = consistent_orientations(d.system);
    std::cout << all.size() << " consistent orientations\n";
    for (const auto & o : all)
        std::cout << list_labels(d.system, o.members.members()) << "\n";
    return ok;
}

int cmd_oracle(const std::string & file, std::size_t max_ground)
{
    Document d = load_document(file);
    auto impl = oracle_brute_force_set_implementation(d.system, max_ground);
    if (! impl) {
        std::cout << "no implementation by sets on at most " << max_ground << " points\n";
        return fails;
    }
    std::cout << write_implementation(*impl);
    return ok;
}

int cmd_export(const std::string & file, const std::string & out_path)
{
    Document d = load_document(file);
    std::optional<Graph> g;
    if (d.graph)
        g = d.graph;
    else if (d.tree)
        g = Graph(d.tree->vertices, d.tree->edges);
    else if (d.certificate && d.certificate->graph)
        g = d.certificate->graph;
    if (! g)
        throw SepError(ErrorKind::malformed_input, "input contains no graph to export");
    std::ofstream out(out_path);
    if (! out)
        throw SepError(ErrorKind::malformed_input, "cannot write '" + out_path + "'");
    out << to_dot(*g);
    return ok;
}

bool passes_filter(const SepSystem & s, const std::string & f)
{
    if (f == "all")
        return true;
    if (f == "scrupulous")
        return is_scrupulous(s).holds;
    if (f == "not-scrupulous")
        return ! is_scrupulous(s).holds;
    if (f == "fastidious")
        return is_fastidious(s).holds;
    if (f == "not-fastidious")
        return ! is_fastidious(s).holds;
    if (f == "regular")
        return is_regular(s).holds;
    if (f == "not-regular")
        return ! is_regular(s).holds;
    throw SepError(ErrorKind::malformed_input, "unknown filter '" + f + "'");
}

int cmd_enumerate(std::size_t max, const std::string & filter)
{
    std::size_t shown = 0;
    for (const auto & s : enumerate_systems(max))
        if (passes_filter(s, filter)) {
            std::cout << write_system(s, false, -1);
            ++shown;
        }
    std::cerr << shown << " systems\n";
    return ok;
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"separation systems workbench"};
    app.require_subcommand(1);

    std::string file, mode = "sets", example, out_path, filter = "all", universe_mode = "sub-universe";
    bool verify = false, universe = false;
    std::size_t max_ground = 4, max = 2, tree = 0, random = 0;
    std::uint64_t seed = 0;

    auto * validate = app.add_subcommand("validate", "load a file and report its structure");
    validate->add_option("FILE", file)->required();
    auto * check = app.add_subcommand("check", "print element classes and property verdicts");
    check->add_option("FILE", file)->required();
    auto * implement = app.add_subcommand("implement", "construct an implementation");
    implement->add_option("FILE", file)->required();
    implement->add_option("--mode", mode)
        ->check(CLI::IsMember({"sets", "bipartitions", "strong-sets", "strong-bipartitions", "graph"}));
    implement->add_flag("--verify", verify, "recheck the result from the definitions");
    auto * orientations = app.add_subcommand("orientations", "list consistent orientations");
    orientations->add_option("FILE", file)->required();
    auto * gen = app.add_subcommand("gen", "generate an example or random instance");
    auto * g_example = gen->add_option("--example", example);
    auto * g_tree = gen->add_option("--tree", tree, "random tree on N vertices");
    auto * g_random = gen->add_option("--random", random, "random system with N unoriented separations");
    g_example->excludes(g_tree)->excludes(g_random);
    g_tree->excludes(g_random);
    gen->add_option("--seed", seed);
    gen->add_flag("--universe", universe, "with --random: generate a universe");
    gen->add_option("--universe-mode", universe_mode)
        ->check(CLI::IsMember({"sub-universe", "lattice", "pentagon", "square"}));
    auto * enumerate = app.add_subcommand("enumerate", "all systems up to isomorphism, one JSON per line");
    enumerate->add_option("--max", max)->required();
    enumerate->add_option("--filter", filter)
        ->check(CLI::IsMember({"all", "scrupulous", "not-scrupulous", "fastidious", "not-fastidious", "regular",
            "not-regular"}));
    auto * oracle = app.add_subcommand("oracle", "exhaustive search for an implementation by sets");
    oracle->add_option("FILE", file)->required();
    oracle->add_option("--max-ground", max_ground)->required();
    auto * exp = app.add_subcommand("export", "write a graph as DOT");
    exp->add_option("FILE", file)->required();
    exp->add_option("--dot", out_path)->required();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e) {
        int rc = app.exit(e);
        return rc == 0 ? ok : bad_input;
    }

    try {
        if (*validate)
            return cmd_validate(file);
        if (*check)
            return cmd_check(file);
        if (*implement)
            return cmd_implement(file, mode, verify);
        if (*orientations)
            return cmd_orientations(file);
        if (*oracle)
            return cmd_oracle(file, max_ground);
        if (*exp)
            return cmd_export(file, out_path);
        if (*enumerate)
            return cmd_enumerate(max, filter);
        if (*gen) {
            if (*g_tree) {
                std::cout << write_tree(random_tree(tree, seed));
                return ok;
            }
            if (*g_random) {
                if (! universe) {
                    std::cout << write_system(random_system(random, seed));
                    return ok;
                }
                auto m = universe_mode == "lattice" ? UniverseMode::lattice
                    : universe_mode == "pentagon"   ? UniverseMode::lattice_with_pentagon
                    : universe_mode == "square"     ? UniverseMode::square
                                                    : UniverseMode::sub_universe;
                std::cout << write_system(random_universe(random, seed, m).base(), true);
                return ok;
            }
            if (example.empty())
                throw SepError(ErrorKind::malformed_input, "gen needs --example, --tree or --random");
            Instance inst = gen_example(example);
            std::cout << write_system(inst.system, inst.universe.has_value());
            return ok;
        }
    }
    catch (const SepError & e) {
        std::cerr << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
        return bad_input;
    }
    catch (const InternalAssertionFailed & e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return internal;
    }
    return ok;
}
