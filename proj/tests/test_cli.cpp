#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "outersq/families.hpp"
#include "outersq/io.hpp"
#include "outersq/power.hpp"

using namespace outersq;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

// Runs the CLI with the given arguments, capturing stdout and discarding stderr.
Run cli(const std::string& args) {
    const std::string cmd = std::string(OUTERSQ_CLI) + " " + args + " 2>/dev/null";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), got);
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_graph(const std::string& name, const Graph& g, Format f = Format::EdgeList) {
    fs::path dir = fs::temp_directory_path() / "outersq_cli_test";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream os(p);
    write_graph(os, g, f);
    return p.string();
}

std::string temp_text(const std::string& name, const std::string& text) {
    fs::path dir = fs::temp_directory_path() / "outersq_cli_test";
    fs::create_directories(dir);
    fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

Graph parse(const std::string& text) {
    std::istringstream is(text);
    return read_graph(is, Format::EdgeList);
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
    CHECK(cli("").code == 2);
    CHECK(cli("no-such-command").code == 2);
    CHECK(cli("color").code == 2);
    CHECK(cli("--format xml square x").code == 2);
}

TEST_CASE("invalid input exits with 1") {
    CHECK(cli("square /nonexistent/graph.txt").code == 1);
    CHECK(cli("params " + temp_text("bad.txt", "3 2\n0 1\n")).code == 1);
    CHECK(cli("gen nosuchfamily 5").code == 1);
    Graph k4(4);
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) k4.add_edge(i, j);
    CHECK(cli("embed " + temp_graph("k4.txt", k4)).code == 1);
    CHECK(cli("order " + temp_graph("k4.txt", k4)).code == 1);
    CHECK(cli("chordal " + temp_graph("c5.txt", cycle(5))).code == 1);
}

TEST_CASE("budget exhaustion exits with 3") {
    CHECK(cli("--budget 5 params " + temp_graph("g10.txt", find_g10().graph)).code == 3);
}

TEST_CASE("params") {
    auto r = cli("params " + temp_graph("f6.txt", f6()));
    CHECK(r.code == 0);
    CHECK(r.out == "12\t21\t6\t7\t7\t7\t7..8\n");
    auto j = cli("--json params " + temp_graph("f6.txt", f6()));
    CHECK(j.code == 0);
    auto js = nlohmann::json::parse(j.out);
    CHECK(js["chi"] == 7);
    CHECK(js["ch"] == "7..8");
}

TEST_CASE("color") {
    const std::string c5 = temp_graph("c5.txt", cycle(5));
    auto r = cli("color --square --exact " + c5);
    CHECK(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 6);
    CHECK(ls[0] == "colors\t5");
    auto g = cli("color " + c5);
    CHECK(lines(g.out)[0] == "colors\t3");
    CHECK(cli("color --exact --greedy " + c5).code == 2);
}

TEST_CASE("square writes a parseable graph, also from stdin and in DIMACS") {
    const std::string p = temp_graph("p4.txt", path(4));
    auto r = cli("square " + p);
    REQUIRE(r.code == 0);
    CHECK(parse(r.out) == square(path(4)));
    auto s = cli("square - < " + p);
    CHECK(s.out == r.out);
    const std::string d = temp_graph("p4.dimacs", path(4), Format::Dimacs);
    auto dm = cli("--format dimacs square " + d);
    REQUIRE(dm.code == 0);
    std::istringstream is(dm.out);
    CHECK(read_graph(is, Format::Dimacs) == square(path(4)));
}

TEST_CASE("gen and enum") {
    auto r = cli("gen f6");
    REQUIRE(r.code == 0);
    CHECK(parse(r.out) == f6());
    CHECK(parse(cli("gen hat-rl 6").out) == hat(rigid_ladder(6)));
    CHECK(parse(cli("--seed 3 gen random 15 --delta 5").out) == random_outerplanar(15, 5, 3));
    CHECK(cli("gen cycle 2").code == 1);
    CHECK(parse(cli("gen fused-g10 --copies 2").out).n() == 18);

    CHECK(cli("enum 6 --count").out == std::to_string(enumerate_outerplanar(6, false).size()) + "\n");
    CHECK(cli("enum 9 --biconnected --count").out == "262\n");
    auto st = cli("enum 4");
    REQUIRE(st.code == 0);
    int stanzas = 1;
    for (const auto& l : lines(st.out))
        if (l.empty()) ++stanzas;
    CHECK(stanzas == static_cast<int>(enumerate_outerplanar(4, false).size()));
}

TEST_CASE("embed and dual") {
    const std::string f = temp_graph("f4.txt", f4());
    auto e = cli("embed " + f);
    REQUIRE(e.code == 0);
    auto el = lines(e.out);
    REQUIRE(el.size() == 2);
    CHECK(el[0].rfind("block 0 cycle", 0) == 0);
    CHECK(el[1] == "block 0 chords 0-1 0-2 1-2");

    auto d = cli("dual " + f);
    REQUIRE(d.code == 0);
    auto dl = lines(d.out);
    REQUIRE(dl.size() == 6);
    CHECK(dl[0] == "block 0 faces 4");
    CHECK(dl[5].rfind("parents", 0) == 0);
    int via = 0;
    for (const auto& l : dl)
        if (l.find(" via ") != std::string::npos) ++via;
    CHECK(via == 3);
}

TEST_CASE("order and classify") {
    const std::string f = temp_graph("f6.txt", f6());
    auto o = cli("order " + f);
    REQUIRE(o.code == 0);
    auto ol = lines(o.out);
    CHECK(ol[0] == "k\t7\ttarget\t7");
    CHECK(ol.size() == 13);

    auto c = cli("classify " + temp_graph("d7.txt", random_outerplanar(20, 7, 2)));
    REQUIRE(c.code == 0);
    auto cl = lines(c.out);
    CHECK(cl[0] == "step\tvertex\tmerged_into\tdelta\tlabel\tdist2\tpromised\trule");
    CHECK(cl.size() == 22);
    CHECK(cl.back() == "k\t7\ttarget\t7");
}

TEST_CASE("chordal") {
    auto r = cli("chordal " + temp_graph("f5.txt", f5()));
    REQUIRE(r.code == 0);
    auto ls = lines(r.out);
    REQUIRE(ls.size() == 2);
    CHECK(ls[0] == "delta\tomega\tchi\tind\ttrigger\toracle");
    CHECK(ls[1].rfind("5\t6\t6\t6\t", 0) == 0);
    CHECK(ls[1].find("agrees") != std::string::npos);
    auto nc = cli("chordal --no-check " + temp_graph("f5.txt", f5()));
    CHECK(nc.out.find("unchecked") != std::string::npos);
}

TEST_CASE("verify-table") {
    auto r = cli("verify-table --n-max 6 --bicon-n-max 8 --samples 10");
    CHECK(r.code == 0);
    CHECK(r.out.find("all cells respected and witnessed") != std::string::npos);
    auto j = cli("--json verify-table --n-max 6 --bicon-n-max 8 --samples 10");
    CHECK(nlohmann::json::parse(j.out)["schema"] == "outersq-report/1");
    CHECK(cli("verify-table --n-max 11").code == 1);
}

TEST_CASE("stored G10 certificate loads through the CLI") {
    auto r = cli("params " + std::string(OUTERSQ_DATA_DIR) + "/g10.txt");
    REQUIRE(r.code == 0);
    auto f = lines(r.out)[0];
    CHECK(f.rfind("10\t15\t5\t6\t6\t7\t", 0) == 0);
}
