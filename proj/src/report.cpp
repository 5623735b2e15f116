#include "outersq/report.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <json.hpp>

#include "outersq/chordal.hpp"
#include "outersq/error.hpp"
#include "outersq/families.hpp"

namespace outersq {

SquareParams square_params(const Graph& g, std::uint64_t budget) {
    SquareParams p;
    p.n = g.n();
    p.m = g.edge_count();
    p.delta = g.max_degree();
    const Graph sq = square(g);
    p.omega = exact_clique(sq, budget).omega;
    p.ind = degeneracy(sq).k;
    p.chi = exact_chromatic(sq, budget).chi;
    p.ch = ChoosabilityBounds{p.chi, p.ind + 1};
    return p;
}

std::string ch_interval(const ChoosabilityBounds& b) {
    if (b.certified()) return std::to_string(b.lower);
    return std::to_string(b.lower) + ".." + std::to_string(b.upper);
}

std::string to_tsv(const SquareParams& p) {
    std::ostringstream os;
    os << p.n << '\t' << p.m << '\t' << p.delta << '\t' << p.omega << '\t' << p.ind << '\t' << p.chi << '\t'
       << ch_interval(p.ch);
    return os.str();
}

bool TableReport::ok() const {
    return std::all_of(rows.begin(), rows.end(), [](const TableRow& r) { return r.violations.empty() && r.tight(); });
}

const TableRow& TableReport::row(int delta, bool chordal) const {
    for (const auto& r : rows)
        if (r.delta == delta && r.chordal == chordal) return r;
    throw InvalidInput("no table row for max degree " + std::to_string(delta));
}

std::vector<NamedGraph> named_families() {
    std::vector<NamedGraph> out;
    auto add = [&](std::string id, Graph g) { out.push_back({std::move(id), std::move(g)}); };
    for (int k = 2; k <= 20; ++k) add("P" + std::to_string(k), path(k));
    for (int k = 3; k <= 20; ++k) add("C" + std::to_string(k), cycle(k));
    {
        Graph c5 = cycle(5);
        c5.add_edge(0, 2);
        add("C5+chord", c5);
    }
    for (int k = 2; k <= 12; ++k) add("RL" + std::to_string(k), rigid_ladder(k));
    for (int k = 3; k <= 10; ++k) add("hat(RL" + std::to_string(k) + ")", hat(rigid_ladder(k)));
    add("F4", f4());
    add("F5", f5());
    add("F6", f6());
    for (int c = 2; c <= 3; ++c) {
        add("F5x" + std::to_string(c), fuse_copies(f5(), c, 2, 4));
        add("F6x" + std::to_string(c), fuse_copies(f6(), c, 2, 4));
    }
    Graph g10 = find_g10().graph;
    add("G10", g10);
    add("G10x2", fuse_copies(g10, 2, 2, 3));
    // Stars are the closed-neighborhood witnesses for large max degree.
    for (int d = 1; d <= 9; ++d) {
        Graph s(d + 1);
        for (int i = 1; i <= d; ++i) s.add_edge(0, i);
        add("K1," + std::to_string(d), s);
    }
    return out;
}

namespace {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

Graph sample(int kind, int n, int d, std::uint64_t s) {
    try {
        switch (kind) {
            case 0: return random_outerplanar(n, d, s);
            case 1: return random_block_tree(n, d, s);
            case 2: return random_chordal_block_tree(n, d, s);
            default: return d >= 5 ? random_chordal_outerplanar(n, d, s) : random_block_tree(n, d, s);
        }
    } catch (const InvalidInput&) {
        return random_outerplanar(n, d, s);
    }
}

struct Sweep {
    TableReport report;

    TableRow* find(int delta, bool chordal) {
        for (auto& r : report.rows)
            if (r.delta == delta && r.chordal == chordal) return &r;
        return nullptr;
    }

    void add(const std::string& id, const Graph& g) {
        const int d = g.max_degree();
        const auto& o = report.options;
        if (d < o.delta_min || d > o.delta_max) return;
        SquareParams p = square_params(g, o.budget);
        const bool chordal = is_chordal_outerplanar(g);
        ++report.instances;
        record(*find(d, false), id, g, p);
        if (chordal) record(*find(d, true), id, g, p);
    }

    static void record(TableRow& r, const std::string& id, const Graph& g, const SquareParams& p) {
        ++r.instances;
        r.observed.omega = std::max(r.observed.omega, p.omega);
        r.observed.ind = std::max(r.observed.ind, p.ind);
        r.observed.chi = std::max(r.observed.chi, p.chi);
        if (r.omega_witness.empty() && p.omega == r.claimed.omega) r.omega_witness = id;
        if (r.ind_witness.empty() && p.ind == r.claimed.ind) r.ind_witness = id;
        if (r.chi_witness.empty() && p.chi == r.claimed.chi) r.chi_witness = id;
        if (p.omega > r.claimed.omega || p.ind > r.claimed.ind || p.chi > r.claimed.chi) {
            r.violations.push_back({id, {p.omega, p.ind, p.chi}, g.edges(), g.n()});
            std::stable_sort(r.violations.begin(), r.violations.end(),
                             [](const TableViolation& a, const TableViolation& b) { return a.n < b.n; });
            if (r.violations.size() > 5) r.violations.resize(5);
        }
    }
};

}  // namespace

TableReport verify_table(const TableOptions& opts) {
    if (opts.n_max < 1 || opts.n_max > 9) throw InvalidInput("n_max must lie in 1..9");
    if (opts.biconnected_n_max > 12) throw InvalidInput("biconnected_n_max must be at most 12");
    if (opts.samples < 0) throw InvalidInput("samples must be non-negative");
    Sweep s;
    s.report.options = opts;
    for (bool chordal : {false, true})
        for (int d = opts.delta_min; d <= opts.delta_max; ++d) {
            TableRow r;
            r.delta = d;
            r.chordal = chordal;
            r.claimed = table1_bounds(d, chordal);
            s.report.rows.push_back(r);
        }

    for (int n = 1; n <= opts.n_max; ++n) {
        int idx = 0;
        enumerate_outerplanar(n, false, std::nullopt, [&](const Graph& g) {
            s.add("enum:n=" + std::to_string(n) + "#" + std::to_string(idx++), g);
        });
    }
    for (int n = 3; n <= opts.biconnected_n_max; ++n) {
        int idx = 0;
        enumerate_outerplanar(n, true, std::nullopt, [&](const Graph& g) {
            s.add("bicon:n=" + std::to_string(n) + "#" + std::to_string(idx++), g);
        });
    }
    for (const auto& ng : named_families()) s.add(ng.id, ng.graph);
    for (int d = opts.delta_min; d <= opts.delta_max; ++d) {
        std::mt19937_64 rng(mix_seed(opts.seed, static_cast<std::uint64_t>(d), 0));
        for (int i = 0; i < opts.samples; ++i) {
            const int lo = std::max(d + 1, 6);
            const int n = std::uniform_int_distribution<int>(lo, std::max(lo, 24))(rng);
            const std::uint64_t gs = rng();
            const int kind = i % 4;
            s.add("random:d=" + std::to_string(d) + ":" + std::to_string(i) + ":kind=" + std::to_string(kind),
                  sample(kind, n, d, gs));
        }
    }
    return s.report;
}

std::string to_json(const TableReport& r) {
    nlohmann::json j;
    j["schema"] = "outersq-report/1";
    j["options"] = {{"n_max", r.options.n_max},
                    {"biconnected_n_max", r.options.biconnected_n_max},
                    {"samples", r.options.samples},
                    {"seed", r.options.seed},
                    {"budget", r.options.budget}};
    j["instances"] = r.instances;
    j["ok"] = r.ok();
    auto triple = [](const BoundTriple& t) { return nlohmann::json{{"omega", t.omega}, {"ind", t.ind}, {"chi", t.chi}}; };
    auto& rows = j["rows"] = nlohmann::json::array();
    for (const auto& row : r.rows) {
        nlohmann::json x;
        x["delta"] = row.delta;
        x["chordal"] = row.chordal;
        x["claimed"] = triple(row.claimed);
        x["observed"] = triple(row.observed);
        x["instances"] = row.instances;
        x["witnesses"] = {{"omega", row.omega_witness}, {"ind", row.ind_witness}, {"chi", row.chi_witness}};
        x["tight"] = row.tight();
        auto& v = x["violations"] = nlohmann::json::array();
        for (const auto& viol : row.violations) {
            nlohmann::json e = nlohmann::json::array();
            for (auto [a, b] : viol.edges) e.push_back({a, b});
            v.push_back({{"id", viol.id}, {"n", viol.n}, {"observed", triple(viol.observed)}, {"edges", e}});
        }
        rows.push_back(std::move(x));
    }
    return j.dump(2);
}

std::string to_text(const TableReport& r) {
    std::ostringstream os;
    os << "delta\tclass\tclaimed(w,ind,chi)\tobserved\tinstances\twitnesses(w|ind|chi)\tstatus\n";
    for (const auto& row : r.rows) {
        os << row.delta << '\t' << (row.chordal ? "chordal" : "general") << '\t' << row.claimed.omega << ','
           << row.claimed.ind << ',' << row.claimed.chi << '\t' << row.observed.omega << ',' << row.observed.ind
           << ',' << row.observed.chi << '\t' << row.instances << '\t' << row.omega_witness << '|'
           << row.ind_witness << '|' << row.chi_witness << '\t'
           << (!row.violations.empty() ? "VIOLATION" : row.tight() ? "ok" : "not-tight") << '\n';
        for (const auto& v : row.violations) {
            os << "  counterexample " << v.id << " n=" << v.n << " edges:";
            for (auto [a, b] : v.edges) os << ' ' << a << '-' << b;
            os << '\n';
        }
    }
    os << "instances " << r.instances << ", " << (r.ok() ? "all cells respected and witnessed" : "FAILED") << '\n';
    return os.str();
}

}  // namespace outersq
