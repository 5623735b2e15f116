#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "outersq/bounds.hpp"
#include "outersq/graph.hpp"
#include "outersq/power.hpp"

namespace outersq {

// n, m, max degree and the exact square parameters of one graph.
struct SquareParams {
    int n = 0, m = 0, delta = 0;
    int omega = 0, ind = 0, chi = 0;
    ChoosabilityBounds ch;
};

SquareParams square_params(const Graph& g, std::uint64_t budget = kDefaultBudget);

// "lo..hi", or "lo" when the bounds meet.
std::string ch_interval(const ChoosabilityBounds& b);

// Single tab-separated row: n m delta omega ind chi ch.
std::string to_tsv(const SquareParams& p);

struct TableViolation {
    std::string id;
    BoundTriple observed;
    std::vector<Edge> edges;
    int n = 0;
};

struct TableRow {
    int delta = 0;
    bool chordal = false;
    BoundTriple claimed;
    BoundTriple observed;  // maxima over the row's instances
    int instances = 0;
    // First instance reaching the claimed value, per parameter; empty when none does.
    std::string omega_witness, ind_witness, chi_witness;
    std::vector<TableViolation> violations;  // smallest counterexample first

    [[nodiscard]] bool tight() const {
        return !omega_witness.empty() && !ind_witness.empty() && !chi_witness.empty();
    }
};

struct TableOptions {
    int n_max = 9;              // general enumeration limit (at most 9)
    int biconnected_n_max = 11; // biconnected enumeration limit (at most 12)
    int samples = 100;          // random graphs per max degree
    std::uint64_t seed = 7;
    std::uint64_t budget = kDefaultBudget;
    int delta_min = 2, delta_max = 9;
};

struct TableReport {
    TableOptions options;
    std::vector<TableRow> rows;  // general then chordal, by increasing max degree
    int instances = 0;

    [[nodiscard]] bool ok() const;
    [[nodiscard]] const TableRow& row(int delta, bool chordal) const;
};

// Sweeps enumeration, named families and seeded random graphs, computes the
// square parameters of every instance by exact oracles and compares them with
// the table. Every instance counts toward the general row of its max degree;
// chordal instances also count toward the chordal row.
TableReport verify_table(const TableOptions& opts);

// Named instances used by the sweep, with ids.
struct NamedGraph {
    std::string id;
    Graph graph;
};
std::vector<NamedGraph> named_families();

std::string to_json(const TableReport& r);  // schema "outersq-report/1"
std::string to_text(const TableReport& r);

}  // namespace outersq
