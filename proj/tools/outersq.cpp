// Command-line front end. Data goes to stdout, diagnostics to stderr.
// Exit codes: 0 ok, 1 invalid input or failed check, 2 usage, 3 oracle budget exceeded,
// 4 internal error.

#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "outersq/chordal.hpp"
#include "outersq/error.hpp"
#include "outersq/families.hpp"
#include "outersq/io.hpp"
#include "outersq/outerplanar.hpp"
#include "outersq/power.hpp"
#include "outersq/reduction.hpp"
#include "outersq/report.hpp"

using namespace outersq;

namespace {

struct Globals {
    std::string format = "edgelist";
    std::uint64_t seed = 7;
    std::uint64_t budget = kDefaultBudget;
    bool json = false;
};

Graph load(const std::string& path, const Globals& g) {
    Format f = parse_format(g.format);
    if (path == "-") return read_graph(std::cin, f);
    return read_graph_file(path, f);
}

void print_coloring(const Graph& target, const Coloring& c) {
    auto check = validate_coloring(target, c);
    if (!check.valid()) {
        std::ostringstream os;
        if (check.status == ColoringStatus::Conflict)
            os << "coloring conflict on edge " << check.conflict.first << "-" << check.conflict.second;
        else
            os << "vertex " << check.uncolored << " left uncolored";
        throw InternalError(os.str());
    }
    std::cout << "colors\t" << c.palette_size << '\n';
    for (int v = 0; v < target.n(); ++v) std::cout << v << '\t' << c.colors[v] << '\n';
}

int cmd_square(const std::string& file, const Globals& gl) {
    write_graph(std::cout, square(load(file, gl)), parse_format(gl.format));
    return 0;
}

int cmd_color(const std::string& file, bool exact, bool on_square, const Globals& gl) {
    Graph g = load(file, gl);
    Graph target = on_square ? square(g) : g;
    Coloring c = exact ? exact_chromatic(target, gl.budget).witness : simplicial_greedy(target);
    print_coloring(target, c);
    return 0;
}

int cmd_params(const std::string& file, const Globals& gl) {
    auto p = square_params(load(file, gl), gl.budget);
    if (gl.json) {
        nlohmann::json j{{"n", p.n},   {"m", p.m},     {"delta", p.delta},          {"omega", p.omega},
                         {"ind", p.ind}, {"chi", p.chi}, {"ch", ch_interval(p.ch)}};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << to_tsv(p) << '\n';
    }
    return 0;
}

int cmd_order(const std::string& file, const Globals& gl) {
    Graph g = load(file, gl);
    auto r = inductive_ordering_square(g);
    if (!ordering_is_valid(square(g), r.ordering)) throw InternalError("ordering failed re-validation");
    std::cout << "k\t" << r.ordering.k << "\ttarget\t" << r.target_k << '\n';
    for (std::size_t i = 0; i < r.ordering.order.size(); ++i)
        std::cout << r.ordering.order[i] << '\t' << r.ordering.back_degrees[i] << '\n';
    return 0;
}

int cmd_classify(const std::string& file, const Globals& gl) {
    Graph g = load(file, gl);
    auto r = inductive_ordering_square(g);
    std::cout << "step\tvertex\tmerged_into\tdelta\tlabel\tdist2\tpromised\trule\n";
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        const auto& s = r.trace[i];
        std::cout << i << '\t' << s.vertex << '\t' << s.merged_into << '\t' << s.delta << '\t'
                  << (s.label ? to_string(*s.label) : std::string("-")) << '\t' << s.dist2_degree << '\t'
                  << s.promised_k << '\t' << s.rule << '\n';
    }
    std::cout << "k\t" << r.ordering.k << "\ttarget\t" << r.target_k << '\n';
    return 0;
}

void print_face(const Face& f) {
    std::cout << "face " << f.id << " [";
    for (std::size_t i = 0; i < f.boundary.size(); ++i) std::cout << (i ? " " : "") << f.boundary[i];
    std::cout << "]";
}

int cmd_dual(const std::string& file, const Globals& gl) {
    Graph g = load(file, gl);
    auto duals = weak_dual(g);
    for (const auto& bd : duals) {
        const DualTree& t = bd.tree;
        std::cout << "block " << bd.block << " faces " << t.size() << '\n';
        if (t.empty()) continue;
        std::function<void(int)> walk = [&](int node) {
            std::cout << std::string(static_cast<std::size_t>(2 * (t.depth[node] + 1)), ' ');
            print_face(t.faces[node]);
            if (t.parent[node] >= 0) {
                Edge e = t.separating_edge(node, t.parent[node]);
                std::cout << " via " << e.first << "-" << e.second;
            }
            std::cout << '\n';
            for (int c : t.children[node]) walk(c);
        };
        walk(t.root);
        std::cout << "parents";
        for (int i = 0; i < t.size(); ++i) std::cout << ' ' << t.parent[i];
        std::cout << '\n';
    }
    return 0;
}

int cmd_embed(const std::string& file, const Globals& gl) {
    Graph g = load(file, gl);
    auto r = is_outerplanar(g);
    if (!r.outerplanar) {
        std::cerr << "not outerplanar: " << r.reason << '\n';
        return 1;
    }
    for (std::size_t b = 0; b < r.embeddings.size(); ++b) {
        const auto& e = r.embeddings[b];
        std::cout << "block " << b << " cycle";
        for (int v : e.outer_cycle) std::cout << ' ' << v;
        std::cout << "\nblock " << b << " chords";
        for (auto [x, y] : e.chords) std::cout << ' ' << x << '-' << y;
        std::cout << '\n';
    }
    return 0;
}

int cmd_chordal(const std::string& file, bool check, const Globals& gl) {
    Graph g = load(file, gl);
    auto c = classify(g, check, 24, gl.budget);
    const char* oracle = c.oracle_checked ? "agrees" : "unchecked";
    if (gl.json) {
        nlohmann::json j{{"delta", c.delta},     {"omega", c.predicted_omega}, {"chi", c.predicted_chi},
                         {"ind", c.predicted_ind}, {"trigger", to_string(c.trigger)}, {"oracle", oracle}};
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "delta\tomega\tchi\tind\ttrigger\toracle\n"
                  << c.delta << '\t' << c.predicted_omega << '\t' << c.predicted_chi << '\t' << c.predicted_ind
                  << '\t' << to_string(c.trigger) << '\t' << oracle << '\n';
    }
    return 0;
}

Graph star(int d) {
    Graph s(d + 1);
    for (int i = 1; i <= d; ++i) s.add_edge(0, i);
    return s;
}

int cmd_gen(const std::string& family, int n, int delta, int copies, const Globals& gl) {
    auto need_n = [&](int lo) {
        if (n < lo) throw InvalidInput("family '" + family + "' needs n >= " + std::to_string(lo));
    };
    Graph g;
    if (family == "path") need_n(2), g = path(n);
    else if (family == "cycle") need_n(3), g = cycle(n);
    else if (family == "rl") need_n(2), g = rigid_ladder(n);
    else if (family == "hat-rl") need_n(3), g = hat(rigid_ladder(n));
    else if (family == "star") need_n(1), g = star(n);
    else if (family == "f4") g = f4();
    else if (family == "f5") g = f5();
    else if (family == "f6") g = f6();
    else if (family == "g10") g = find_g10().graph;
    else if (family == "fused-f5") g = fuse_copies(f5(), copies, 2, 4);
    else if (family == "fused-f6") g = fuse_copies(f6(), copies, 2, 4);
    else if (family == "fused-g10") g = fuse_copies(find_g10().graph, copies, 2, 3);
    else if (family == "random") g = random_outerplanar(n, delta, gl.seed);
    else if (family == "random-chordal") g = random_chordal_outerplanar(n, delta, gl.seed);
    else if (family == "block-tree") g = random_block_tree(n, delta, gl.seed);
    else if (family == "chordal-block-tree") g = random_chordal_block_tree(n, delta, gl.seed);
    else throw InvalidInput("unknown family '" + family + "'");
    write_graph(std::cout, g, parse_format(gl.format));
    return 0;
}

int cmd_enum(int n, bool biconnected, int cap, bool count_only, const Globals& gl) {
    std::optional<int> c;
    if (cap >= 0) c = cap;
    long long count = 0;
    Format f = parse_format(gl.format);
    enumerate_outerplanar(n, biconnected, c, [&](const Graph& g) {
        if (!count_only) {
            if (count > 0) std::cout << '\n';
            write_graph(std::cout, g, f);
        }
        ++count;
    });
    if (count_only) std::cout << count << '\n';
    return 0;
}

int cmd_verify(TableOptions o, const Globals& gl) {
    o.seed = gl.seed;
    o.budget = gl.budget;
    auto r = verify_table(o);
    std::cout << (gl.json ? to_json(r) + "\n" : to_text(r));
    return r.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distance-2 coloring tools for outerplanar graphs"};
    app.require_subcommand(1);
    app.fallthrough();
    Globals gl;
    app.add_option("--format", gl.format, "graph format: edgelist or dimacs")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
    app.add_option("--seed", gl.seed, "random seed");
    app.add_option("--budget", gl.budget, "search-node budget for exact oracles");
    app.add_flag("--json", gl.json, "machine-readable output where supported");

    std::string file;
    std::function<int()> action;

    auto* sq = app.add_subcommand("square", "print the square of a graph");
    sq->add_option("file", file, "graph file, - for stdin")->required();
    sq->callback([&] { action = [&] { return cmd_square(file, gl); }; });

    bool exact = false, greedy = false, on_square = false;
    auto* col = app.add_subcommand("color", "color a graph or its square");
    col->add_option("file", file)->required();
    auto* ex = col->add_flag("--exact", exact, "optimal coloring by exact search");
    col->add_flag("--greedy", greedy, "first-fit over the degeneracy ordering (default)")->excludes(ex);
    col->add_flag("--square", on_square, "color the square instead of the graph");
    col->callback([&] { action = [&] { return cmd_color(file, exact, on_square, gl); }; });

    auto* par = app.add_subcommand("params", "n m delta omega ind chi ch of the square");
    par->add_option("file", file)->required();
    par->callback([&] { action = [&] { return cmd_params(file, gl); }; });

    auto* ord = app.add_subcommand("order", "inductive ordering of the square by reduction");
    ord->add_option("file", file)->required();
    ord->callback([&] { action = [&] { return cmd_order(file, gl); }; });

    auto* cls = app.add_subcommand("classify", "configuration trace of a full reduction run");
    cls->add_option("file", file)->required();
    cls->callback([&] { action = [&] { return cmd_classify(file, gl); }; });

    auto* dual = app.add_subcommand("dual", "rooted weak dual per block");
    dual->add_option("file", file)->required();
    dual->callback([&] { action = [&] { return cmd_dual(file, gl); }; });

    auto* emb = app.add_subcommand("embed", "outer cycle and chords per block");
    emb->add_option("file", file)->required();
    emb->callback([&] { action = [&] { return cmd_embed(file, gl); }; });

    bool no_check = false;
    auto* ch = app.add_subcommand("chordal", "square parameters of a chordal outerplanar graph");
    ch->add_option("file", file)->required();
    ch->add_flag("--no-check", no_check, "skip the oracle cross-check");
    ch->callback([&] { action = [&] { return cmd_chordal(file, !no_check, gl); }; });

    std::string family;
    int n = 0, delta = 0, copies = 2;
    auto* gen = app.add_subcommand("gen", "write a named or random graph");
    gen->add_option("family", family,
                    "path cycle rl hat-rl star f4 f5 f6 g10 fused-f5 fused-f6 fused-g10 random random-chordal "
                    "block-tree chordal-block-tree")
        ->required();
    gen->add_option("n", n, "vertex count or family index");
    gen->add_option("--delta", delta, "max degree for random families");
    gen->add_option("--copies", copies, "copies for fused families");
    gen->callback([&] { action = [&] { return cmd_gen(family, n, delta, copies, gl); }; });

    bool biconnected = false, count_only = false;
    int cap = -1;
    auto* en = app.add_subcommand("enum", "every outerplanar graph on n vertices up to isomorphism");
    en->add_option("n", n)->required();
    en->add_flag("--biconnected", biconnected, "only biconnected graphs");
    en->add_option("--delta-cap", cap, "skip graphs with larger max degree");
    en->add_flag("--count", count_only, "print only the count");
    en->callback([&] { action = [&] { return cmd_enum(n, biconnected, cap, count_only, gl); }; });

    TableOptions topts;
    auto* vt = app.add_subcommand("verify-table", "check the bound table against exact oracles");
    vt->add_option("--n-max", topts.n_max, "general enumeration limit (<= 9)");
    vt->add_option("--bicon-n-max", topts.biconnected_n_max, "biconnected enumeration limit (<= 12)");
    vt->add_option("--samples", topts.samples, "random graphs per max degree");
    vt->callback([&] { action = [&] { return cmd_verify(topts, gl); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return action();
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return 3;
    } catch (const InvalidInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
