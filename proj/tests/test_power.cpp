#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "outersq/families.hpp"
#include "outersq/power.hpp"

using namespace outersq;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

// Removal order that makes first-fit color F6's outer hat vertices 6..11 first.
InductiveOrdering f6_adversarial(const Graph& sq) {
    return make_ordering(sq, {0, 1, 2, 3, 4, 5, 11, 10, 9, 8, 7, 6});
}

}  // namespace

TEST_CASE("square examples") {
    CHECK(square(cycle(5)) == complete(5));
    CHECK(square(f4()) == complete(6));
    Graph p4 = square(path(4));
    CHECK(p4.edge_count() == 5);
    CHECK(p4.has_edge(0, 2));
    CHECK(p4.has_edge(1, 3));
    CHECK_FALSE(p4.has_edge(0, 3));
}

TEST_CASE("square matches the distance oracle on all graphs up to 7 vertices") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : oracle::all_graphs(n)) {
            Graph sq = square(g);
            CHECK(sq == oracle::square(g));
            for (auto [u, v] : g.edges()) CHECK(sq.has_edge(u, v));
        }
}

TEST_CASE("distance2_degree examples and agreement with the square") {
    for (int v = 0; v < 5; ++v) CHECK(distance2_degree(cycle(5), v) == 4);
    Graph g6 = f6();
    for (int v = 6; v < 12; ++v) {
        CHECK(g6.degree(v) == 2);
        CHECK(distance2_degree(g6, v) == 7);
        CHECK(oracle::distance2_degree(g6, v) == 7);
    }
    CHECK(distance2_degree(path(3), 0) == 2);
    for (std::uint64_t s = 0; s < 30; ++s) {
        Graph g = random_outerplanar(15, 3 + static_cast<int>(s % 6), s);
        Graph sq = square(g);
        for (int v = 0; v < g.n(); ++v) {
            CHECK(distance2_degree(g, v) == sq.degree(v));
            auto nb = distance2_neighbors(g, v);
            CHECK(nb == sq.neighbors(v));
        }
    }
}

TEST_CASE("degeneracy examples") {
    CHECK(degeneracy(complete(6)).k == 5);
    CHECK(degeneracy(square(cycle(4))).k == 3);
    CHECK(degeneracy(square(rigid_ladder(8))).k == 4);
}

TEST_CASE("degeneracy agrees with the subset oracle and its ordering is a witness") {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : oracle::all_graphs(n)) {
            auto d = degeneracy(g);
            CHECK(d.k == oracle::degeneracy(g));
            CHECK(ordering_is_valid(g, d.ordering));
            CHECK(d.ordering.k == d.k);
        }
}

TEST_CASE("make_ordering back-degrees") {
    Graph p = path(4);
    auto o = make_ordering(p, {1, 0, 2, 3});
    CHECK(o.back_degrees == std::vector<int>{2, 0, 1, 0});
    CHECK(o.k == 2);
    CHECK(ordering_is_valid(p, o));
    CHECK_FALSE(ordering_is_valid(p, make_ordering(p, {0, 1, 1, 3})));
}

TEST_CASE("greedy_color examples") {
    Graph k5 = complete(5);
    CHECK(greedy_color(k5, make_ordering(k5, {4, 2, 0, 1, 3})).palette_size == 5);

    Graph sq4 = square(f4());
    CHECK(greedy_color(sq4, degeneracy(sq4).ordering).palette_size == 6);

    Graph sq6 = square(f6());
    auto c = greedy_color(sq6, f6_adversarial(sq6));
    CHECK(validate_coloring(sq6, c).valid());
    CHECK(c.palette_size == 8);
}

TEST_CASE("greedy_color stays within k + 1 on random orderings") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        Graph g = square(random_outerplanar(12, 3 + it % 6, rng()));
        std::vector<int> order(g.n());
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        auto o = make_ordering(g, order);
        auto c = greedy_color(g, o);
        CHECK(validate_coloring(g, c).valid());
        CHECK(c.palette_size <= o.k + 1);
    }
}

TEST_CASE("simplicial_greedy examples") {
    CHECK(simplicial_greedy(square(cycle(6))).palette_size == 3);
    CHECK(simplicial_greedy(complete(6)).palette_size == 6);
    CHECK(simplicial_greedy(square(rigid_ladder(6))).palette_size == 5);
}

TEST_CASE("simplicial_greedy is greedy over the degeneracy ordering") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        Graph g = square(random_block_tree(14, 3 + static_cast<int>(s % 5), s));
        auto a = simplicial_greedy(g);
        auto b = greedy_color(g, degeneracy(g).ordering);
        CHECK(a.colors == b.colors);
    }
}

TEST_CASE("exact_chromatic examples") {
    CHECK(exact_chromatic(square(cycle(5))).chi == 5);
    CHECK(exact_chromatic(square(f5())).chi == 6);
    auto r = exact_chromatic(square(f6()));
    CHECK(r.chi == 7);
    CHECK(validate_coloring(square(f6()), r.witness).valid());
    CHECK(r.witness.palette_size == 7);
}

TEST_CASE("exact_chromatic reports budget exhaustion") {
    CHECK_THROWS_AS(exact_chromatic(square(find_g10().graph), 5), BudgetExceeded);
}

TEST_CASE("exact_clique examples") {
    CHECK(exact_clique(square(cycle(5))).omega == 5);
    CHECK(exact_clique(square(cycle(4))).omega == 4);
    auto r = exact_clique(square(f4()));
    CHECK(r.omega == 6);
    CHECK(r.vertices.size() == 6);
}

TEST_CASE("exact oracles agree with brute force on all graphs up to 6 vertices") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : oracle::all_graphs(n)) {
            auto c = exact_chromatic(g);
            CHECK(c.chi == oracle::chromatic(g));
            CHECK(validate_coloring(g, c.witness).valid());
            auto q = exact_clique(g);
            CHECK(q.omega == oracle::clique(g));
            for (std::size_t i = 0; i < q.vertices.size(); ++i)
                for (std::size_t j = i + 1; j < q.vertices.size(); ++j) CHECK(g.has_edge(q.vertices[i], q.vertices[j]));
        }
}

TEST_CASE("square oracles: chi >= omega, ind + 1 >= chi, equality on chordal families") {
    for (std::uint64_t s = 0; s < 60; ++s) {
        Graph g = random_block_tree(14, 2 + static_cast<int>(s % 7), s);
        Graph sq = square(g);
        int chi = exact_chromatic(sq).chi, omega = exact_clique(sq).omega;
        CHECK(chi >= omega);
        CHECK(degeneracy(sq).k + 1 >= chi);
    }
    for (std::uint64_t s = 0; s < 60; ++s) {
        Graph g = random_chordal_block_tree(14, 2 + static_cast<int>(s % 7), s);
        Graph sq = square(g);
        CHECK(exact_chromatic(sq).chi == exact_clique(sq).omega);
    }
}

TEST_CASE("random outerplanar squares with max degree at least 7 have degeneracy equal to it") {
    for (std::uint64_t s = 0; s < 60; ++s) {
        const int d = 7 + static_cast<int>(s % 3);
        Graph g = random_outerplanar(20, d, s);
        CHECK(degeneracy(square(g)).k == d);
    }
}

TEST_CASE("clique_outerplanar_square") {
    Graph hrl = hat(rigid_ladder(6));
    CHECK(hrl.max_degree() == 6);
    auto r = clique_outerplanar_square(hrl);
    CHECK(r.omega == 7);
    CHECK(r.omega == exact_clique(square(hrl)).omega);

    auto d7 = random_outerplanar(18, 7, 1);
    CHECK(clique_outerplanar_square(d7).omega == 8);

    // Below max degree 6 it defers to the exact solver.
    CHECK(clique_outerplanar_square(cycle(5)).omega == 5);

    for (std::uint64_t s = 0; s < 200; ++s) {
        const int d = 6 + static_cast<int>(s % 4);
        Graph g = s % 2 ? random_outerplanar(16, d, s) : random_block_tree(18, d, s);
        auto c = clique_outerplanar_square(g);
        CHECK(c.omega == exact_clique(square(g)).omega);
        Graph sq = square(g);
        for (std::size_t i = 0; i < c.vertices.size(); ++i)
            for (std::size_t j = i + 1; j < c.vertices.size(); ++j) CHECK(sq.has_edge(c.vertices[i], c.vertices[j]));
    }
}

TEST_CASE("validate_coloring") {
    Graph k3 = complete(3);
    CHECK(validate_coloring(k3, Coloring{{1, 2, 3}, 3}).valid());
    auto bad = validate_coloring(k3, Coloring{{1, 1, 2}, 2});
    CHECK(bad.status == ColoringStatus::Conflict);
    CHECK(bad.conflict == Edge{0, 1});
    auto un = validate_coloring(k3, Coloring{{1, 0, 2}, 2});
    CHECK(un.status == ColoringStatus::Uncolored);
    CHECK(un.uncolored == 1);
}

TEST_CASE("choosability_bounds") {
    auto k6 = choosability_bounds(complete(6));
    CHECK(k6.lower == 6);
    CHECK(k6.upper == 6);
    CHECK(k6.certified());
    auto c5 = choosability_bounds(square(cycle(5)));
    CHECK(c5.lower == 5);
    CHECK(c5.upper == 5);
    // Hatting a max-degree-6 chordal block gives max degree 8.
    Graph g = hat(random_chordal_outerplanar(12, 6, 4));
    REQUIRE(g.max_degree() == 8);
    auto b = choosability_bounds(square(g));
    CHECK(b.lower == 9);
    CHECK(b.upper == 9);
}

TEST_CASE("random graph oracles sanity") {
    for (std::uint64_t s = 0; s < 40; ++s) {
        Graph g = random_graph(8, 0.45, s);
        CHECK(exact_chromatic(g).chi == oracle::chromatic(g));
        CHECK(exact_clique(g).omega == oracle::clique(g));
    }
}
