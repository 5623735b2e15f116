#include <doctest.h>

#include <set>

#include <json.hpp>

#include "outersq/error.hpp"
#include "outersq/families.hpp"
#include "outersq/report.hpp"

using namespace outersq;

namespace {

TableOptions small_options() {
    TableOptions o;
    o.n_max = 6;
    o.biconnected_n_max = 8;
    o.samples = 10;
    return o;
}

}  // namespace

TEST_CASE("square_params and tsv row") {
    auto p = square_params(f6());
    CHECK(p.n == 12);
    CHECK(p.m == 21);
    CHECK(p.delta == 6);
    CHECK(p.omega == 7);
    CHECK(p.ind == 7);
    CHECK(p.chi == 7);
    CHECK(to_tsv(p) == "12\t21\t6\t7\t7\t7\t7..8");

    auto c5 = square_params(cycle(5));
    CHECK(to_tsv(c5) == "5\t5\t2\t5\t4\t5\t5");
}

TEST_CASE("ch_interval") {
    CHECK(ch_interval(ChoosabilityBounds{7, 8}) == "7..8");
    CHECK(ch_interval(ChoosabilityBounds{5, 5}) == "5");
}

TEST_CASE("named_families ids are unique and include the extremal graphs") {
    auto fams = named_families();
    std::set<std::string> ids;
    for (const auto& f : fams) CHECK(ids.insert(f.id).second);
    for (const char* id : {"P2", "C5", "C5+chord", "RL12", "hat(RL3)", "F4", "F5", "F6", "F5x2", "F6x3", "G10",
                           "G10x2", "K1,9"})
        CHECK(ids.count(id) == 1);
}

TEST_CASE("verify_table on a reduced sweep") {
    const auto o = small_options();
    auto r = verify_table(o);
    CHECK(r.ok());
    CHECK(r.rows.size() == 16);
    CHECK(r.instances > 0);
    for (const auto& row : r.rows) {
        CHECK(row.violations.empty());
        CHECK(row.tight());
        const auto claimed = table1_bounds(row.delta, row.chordal);
        CHECK(row.claimed.omega == claimed.omega);
        CHECK(row.observed.omega == claimed.omega);
        CHECK(row.observed.ind == claimed.ind);
        CHECK(row.observed.chi == claimed.chi);
    }
    CHECK(r.row(5, false).chi_witness.rfind("G10", 0) == 0);
    CHECK_THROWS_AS((void)r.row(12, false), InvalidInput);

    // Same options give the same report.
    auto again = verify_table(o);
    CHECK(to_json(again) == to_json(r));
    CHECK(to_text(again) == to_text(r));

    auto j = nlohmann::json::parse(to_json(r));
    CHECK(j["schema"] == "outersq-report/1");
    CHECK(j["ok"] == true);
    CHECK(j["rows"].size() == 16);
    CHECK(j["options"]["n_max"] == 6);
    CHECK(to_text(r).find("all cells respected and witnessed") != std::string::npos);
}

TEST_CASE("verify_table rejects bad options") {
    TableOptions o = small_options();
    o.n_max = 10;
    CHECK_THROWS_AS(verify_table(o), InvalidInput);
    o = small_options();
    o.n_max = 0;
    CHECK_THROWS_AS(verify_table(o), InvalidInput);
    o = small_options();
    o.biconnected_n_max = 13;
    CHECK_THROWS_AS(verify_table(o), InvalidInput);
    o = small_options();
    o.samples = -1;
    CHECK_THROWS_AS(verify_table(o), InvalidInput);
}

TEST_CASE("a violated cell is reported with its instance") {
    TableReport r;
    TableRow row;
    row.delta = 3;
    row.claimed = table1_bounds(3, false);
    row.omega_witness = row.ind_witness = row.chi_witness = "x";
    row.violations.push_back({"bad", {9, 9, 9}, {{0, 1}}, 2});
    r.rows.push_back(row);
    CHECK_FALSE(r.ok());
    CHECK(to_text(r).find("counterexample bad n=2 edges: 0-1") != std::string::npos);
    CHECK(nlohmann::json::parse(to_json(r))["ok"] == false);
}
