#include "outersq/families.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <random>

#include "outersq/io.hpp"
#include "outersq/isomorphism.hpp"
#include "outersq/power.hpp"

namespace outersq {

Graph path(int k) {
    if (k < 2) throw InvalidInput("path needs at least 2 vertices");
    Graph g(k);
    for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle(int k) {
    if (k < 3) throw InvalidInput("cycle needs at least 3 vertices");
    Graph g(k);
    for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
    return g;
}

Graph rigid_ladder(int n) {
    if (n < 2) throw InvalidInput("rigid ladder needs at least 2 vertices");
    if (n % 2 == 1) {
        Graph even = rigid_ladder(n + 1);
        const int drop = n - 1;  // u_k for k = (n+1)/2
        std::vector<int> keep;
        for (int v = 0; v <= n; ++v)
            if (v != drop) keep.push_back(v);
        return induced_subgraph(even, keep).graph;
    }
    const int k = n / 2;
    auto u = [](int i) { return 2 * (i - 1); };
    auto v = [](int i) { return 2 * (i - 1) + 1; };
    Graph g(n);
    for (int i = 1; i < k; ++i) {
        g.add_edge(u(i), v(i));
        g.add_edge(u(i), u(i + 1));
        g.add_edge(u(i), v(i + 1));
        g.add_edge(v(i), v(i + 1));
    }
    g.add_edge(u(k), v(k));
    return g;
}

Graph hat(const Graph& g, const OuterEmbedding& emb) {
    const auto& cyc = emb.outer_cycle;
    const int k = static_cast<int>(cyc.size());
    if (k < 3 || k != g.n()) throw InvalidInput("hat needs a biconnected graph on at least 3 vertices");
    Graph out(2 * g.n());
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    for (int i = 0; i < k; ++i) {
        out.add_edge(g.n() + i, cyc[i]);
        out.add_edge(g.n() + i, cyc[(i + 1) % k]);
    }
    return out;
}

Graph hat(const Graph& g) {
    auto bd = blocks(g);
    if (g.n() < 3 || bd.blocks.size() != 1) throw InvalidInput("hat needs a biconnected graph");
    return hat(g, outer_embedding(g));
}

Graph f4() { return hat(cycle(3)); }
Graph f5() { return hat(rigid_ladder(4)); }
Graph f6() { return hat(f4()); }

Graph fuse(const Graph& g1, Edge e1, const Graph& g2, Edge e2, FuseOrientation orientation,
           std::optional<int> delta_cap) {
    if (!g1.has_edge(e1.first, e1.second)) throw InvalidInput("fuse: e1 is not an edge of the first graph");
    if (!g2.has_edge(e2.first, e2.second)) throw InvalidInput("fuse: e2 is not an edge of the second graph");
    std::vector<int> map(static_cast<std::size_t>(g2.n()), -1);
    if (orientation == FuseOrientation::Direct) {
        map[e2.first] = e1.first;
        map[e2.second] = e1.second;
    } else {
        map[e2.first] = e1.second;
        map[e2.second] = e1.first;
    }
    int next = g1.n();
    for (int v = 0; v < g2.n(); ++v)
        if (map[v] < 0) map[v] = next++;
    if (delta_cap) {
        for (int v : {e2.first, e2.second}) {
            int merged = g1.degree(map[v]) + g2.degree(v) - 1;
            if (merged > *delta_cap)
                throw InvalidInput("fuse: merged vertex " + std::to_string(map[v]) + " would have degree " +
                                   std::to_string(merged) + " > " + std::to_string(*delta_cap));
        }
    }
    Graph out(next);
    for (auto [a, b] : g1.edges()) out.add_edge(a, b);
    for (auto [a, b] : g2.edges()) out.add_edge(map[a], map[b]);
    return out;
}

// ── Dissections of the n-gon ──

namespace {

bool crosses(Edge a, Edge b) {
    return (a.first < b.first && b.first < a.second && a.second < b.second) ||
           (b.first < a.first && a.first < b.second && b.second < a.second);
}

// Visits every non-crossing chord set of the n-gon on positions 0..n-1.
void for_each_dissection(int n, const std::function<void(const std::vector<Edge>&)>& visit) {
    std::vector<Edge> all;
    for (int a = 0; a < n; ++a)
        for (int b = a + 2; b < n; ++b)
            if (!(a == 0 && b == n - 1)) all.emplace_back(a, b);
    std::vector<Edge> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == all.size()) {
            visit(chosen);
            return;
        }
        rec(i + 1);
        for (const auto& c : chosen)
            if (crosses(c, all[i])) return;
        chosen.push_back(all[i]);
        rec(i + 1);
        chosen.pop_back();
    };
    rec(0);
}

Graph polygon_graph(int n, const std::vector<Edge>& chords) {
    Graph g = n >= 3 ? cycle(n) : (n == 2 ? path(2) : Graph(n));
    for (auto [a, b] : chords) g.add_edge(a, b);
    return g;
}

}  // namespace

std::vector<Edge> canonical_chords(int n, const std::vector<Edge>& chords) {
    std::vector<Edge> best;
    bool first = true;
    std::vector<Edge> img;
    for (int refl = 0; refl < 2; ++refl)
        for (int r = 0; r < n; ++r) {
            img.clear();
            for (auto [a, b] : chords) {
                int x = refl ? (r - a + n) % n : (a + r) % n;
                int y = refl ? (r - b + n) % n : (b + r) % n;
                img.emplace_back(std::min(x, y), std::max(x, y));
            }
            std::sort(img.begin(), img.end());
            if (first || img < best) {
                best = img;
                first = false;
            }
        }
    return best;
}

namespace {

std::optional<Edge> edge_with_degrees(const Graph& g, int low, int high) {
    for (auto [a, b] : g.edges()) {
        if (g.degree(a) == low && g.degree(b) == high) return Edge{a, b};
        if (g.degree(b) == low && g.degree(a) == high) return Edge{b, a};
    }
    return std::nullopt;
}

}  // namespace

Graph fuse_copies(const Graph& base, int copies, int low, int high) {
    if (copies < 1) throw InvalidInput("fuse_copies needs at least one copy");
    auto e2 = edge_with_degrees(base, low, high);
    if (!e2) throw InvalidInput("base graph has no edge with the requested endpoint degrees");
    Graph g = base;
    for (int c = 1; c < copies; ++c) {
        auto e1 = edge_with_degrees(g, low, high);
        if (!e1) throw InvalidInput("fused graph has no edge with the requested endpoint degrees left");
        g = fuse(g, *e1, base, *e2, FuseOrientation::Crossed);
    }
    return g;
}

G10Search find_g10() {
    G10Search out;
    std::vector<Edge> best;
    bool have = false;
    for_each_dissection(10, [&](const std::vector<Edge>& chords) {
        ++out.chord_sets_tried;
        Graph g = polygon_graph(10, chords);
        if (g.max_degree() != 5) return;
        auto canon = canonical_chords(10, chords);
        if (canon != chords) return;
        if (exact_chromatic(square(g)).chi != 7) return;
        int low_edges = 0;
        for (int i = 0; i < 10; ++i) {
            int a = g.degree(i), b = g.degree((i + 1) % 10);
            if (std::min(a, b) == 2 && std::max(a, b) == 3) ++low_edges;
        }
        if (low_edges < 4) return;
        ++out.hits;
        if (!have || canon < best) {
            best = canon;
            have = true;
        }
    });
    if (!have) throw InternalError("no 10-vertex graph with max degree 5 and square chromatic number 7");
    out.graph = polygon_graph(10, best);
    return out;
}

std::optional<Graph> load_g10(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Graph g = read_edge_list(in);
    if (g.n() != 10 || g.max_degree() != 5 || blocks(g).blocks.size() != 1 || !is_outerplanar(g).outerplanar)
        return std::nullopt;
    if (exact_chromatic(square(g)).chi != 7) return std::nullopt;
    return g;
}

// ── Enumeration ──

namespace {

std::vector<std::vector<Graph>> general_levels(int n, std::optional<int> cap) {
    std::vector<std::vector<Graph>> levels(static_cast<std::size_t>(n) + 1);
    levels[1].push_back(Graph(1));
    for (int m = 2; m <= n; ++m) {
        std::map<std::uint64_t, std::vector<int>> buckets;
        auto& out = levels[m];
        auto offer = [&](Graph g) {
            if (cap && g.max_degree() > *cap) return;
            if (!is_outerplanar(g).outerplanar) return;
            auto& bucket = buckets[invariant_hash(g)];
            for (int idx : bucket)
                if (isomorphic(out[idx], g)) return;
            bucket.push_back(static_cast<int>(out.size()));
            out.push_back(std::move(g));
        };
        // Every outerplanar graph has a vertex of degree at most 2 whose removal
        // leaves an outerplanar graph, so these extensions reach all of them.
        for (const auto& h : levels[m - 1]) {
            const int k = h.n();
            auto extend = [&](std::initializer_list<int> nbrs) {
                Graph g(k + 1);
                for (auto [a, b] : h.edges()) g.add_edge(a, b);
                for (int w : nbrs) g.add_edge(k, w);
                offer(std::move(g));
            };
            extend({});
            for (int a = 0; a < k; ++a) extend({a});
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b) extend({a, b});
        }
    }
    return levels;
}

}  // namespace

void enumerate_outerplanar(int n, bool biconnected, std::optional<int> delta_cap,
                           const std::function<void(const Graph&)>& visit) {
    if (n < 1) throw InvalidInput("enumeration needs n >= 1");
    if (biconnected) {
        if (n > 12) throw InvalidInput("biconnected enumeration supports n <= 12");
        if (n <= 2) {
            Graph g = polygon_graph(n, {});
            if (!delta_cap || g.max_degree() <= *delta_cap) visit(g);
            return;
        }
        for_each_dissection(n, [&](const std::vector<Edge>& chords) {
            if (delta_cap) {
                std::vector<int> deg(static_cast<std::size_t>(n), 2);
                for (auto [a, b] : chords) {
                    ++deg[a];
                    ++deg[b];
                }
                if (*std::max_element(deg.begin(), deg.end()) > *delta_cap) return;
            }
            if (canonical_chords(n, chords) != chords) return;
            visit(polygon_graph(n, chords));
        });
        return;
    }
    if (n > 9) throw InvalidInput("general enumeration supports n <= 9");
    auto levels = general_levels(n, delta_cap);
    for (const auto& g : levels[n]) visit(g);
}

std::vector<Graph> enumerate_outerplanar(int n, bool biconnected, std::optional<int> delta_cap) {
    std::vector<Graph> out;
    enumerate_outerplanar(n, biconnected, delta_cap, [&](const Graph& g) { out.push_back(g); });
    return out;
}

// ── Random generators ──

namespace {

constexpr int kAttempts = 2000;

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<std::size_t>(g.n()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return relabel(g, perm);
}

int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

}  // namespace

Graph random_outerplanar(int n, int delta, std::uint64_t seed) {
    if (n < 3) throw InvalidInput("random outerplanar graph needs n >= 3");
    if (delta < 2 || delta > n - 1) throw InvalidInput("infeasible max degree for n");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        std::vector<int> deg(static_cast<std::size_t>(n), 2);
        std::vector<Edge> chords;
        auto try_add = [&](int a, int b) {
            if (a > b) std::swap(a, b);
            if (b - a < 2 || (a == 0 && b == n - 1)) return false;
            if (deg[a] >= delta || deg[b] >= delta) return false;
            Edge c{a, b};
            for (const auto& x : chords)
                if (x == c || crosses(x, c)) return false;
            chords.push_back(c);
            ++deg[a];
            ++deg[b];
            return true;
        };
        if (delta > 2 && uniform(rng, 0, 1) == 1) {
            // Fan out of one hub so large degrees are reachable.
            int hub = uniform(rng, 0, n - 1);
            std::vector<int> others;
            for (int v = 0; v < n; ++v)
                if (v != hub) others.push_back(v);
            std::shuffle(others.begin(), others.end(), rng);
            for (int v : others) {
                if (deg[hub] >= delta) break;
                try_add(hub, v);
            }
        }
        int target = uniform(rng, 0, n - 3);
        std::vector<Edge> pool;
        for (int a = 0; a < n; ++a)
            for (int b = a + 2; b < n; ++b) pool.emplace_back(a, b);
        std::shuffle(pool.begin(), pool.end(), rng);
        for (auto [a, b] : pool) {
            if (static_cast<int>(chords.size()) >= target) break;
            try_add(a, b);
        }
        if (*std::max_element(deg.begin(), deg.end()) != delta) continue;
        return shuffled(polygon_graph(n, chords), rng);
    }
    throw InvalidInput("no biconnected outerplanar graph found for n=" + std::to_string(n) +
                       " and max degree " + std::to_string(delta));
}

Graph random_chordal_outerplanar(int n, int delta, std::uint64_t seed) {
    if (n < 3) throw InvalidInput("random chordal outerplanar graph needs n >= 3");
    if (delta < 2 || delta > n - 1) throw InvalidInput("infeasible max degree for n");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        Graph g(n);
        std::vector<int> cyc{0, 1, 2};
        g.add_edge(0, 1);
        g.add_edge(1, 2);
        g.add_edge(0, 2);
        bool stuck = false;
        for (int v = 3; v < n && !stuck; ++v) {
            std::vector<int> slots;
            int hub = 0;
            for (int x = 0; x < v; ++x)
                if (g.degree(x) > g.degree(hub) && g.degree(x) < delta) hub = x;
            std::vector<int> hub_slots;
            const int k = static_cast<int>(cyc.size());
            for (int i = 0; i < k; ++i) {
                int a = cyc[i], b = cyc[(i + 1) % k];
                if (g.degree(a) < delta && g.degree(b) < delta) {
                    slots.push_back(i);
                    if (a == hub || b == hub) hub_slots.push_back(i);
                }
            }
            if (slots.empty()) {
                stuck = true;
                break;
            }
            const auto& pick_from = (!hub_slots.empty() && uniform(rng, 0, 2) == 0) ? hub_slots : slots;
            int i = pick_from[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(pick_from.size()) - 1))];
            int a = cyc[i], b = cyc[(i + 1) % k];
            g.add_edge(v, a);
            g.add_edge(v, b);
            cyc.insert(cyc.begin() + i + 1, v);
        }
        if (stuck || g.max_degree() != delta) continue;
        return shuffled(g, rng);
    }
    throw InvalidInput("no chordal outerplanar graph found for n=" + std::to_string(n) +
                       " and max degree " + std::to_string(delta));
}

namespace {

Graph block_tree(int n, int delta, std::uint64_t seed, bool chordal) {
    if (n < 2) throw InvalidInput("random block tree needs n >= 2");
    if (delta < 1 || delta > n - 1) throw InvalidInput("infeasible max degree for n");
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        Graph g(n);
        int used = 1;
        bool stuck = false;
        while (used < n && !stuck) {
            // Keep enough vertices in reserve to reach the max degree; once the reserve
            // is exhausted, pendants go to a vertex of current max degree.
            const int need = delta - g.max_degree();
            const int slack = n - used - need;
            if (need > 0 && slack <= 0) {
                int top = 0;
                for (int v = 1; v < used; ++v)
                    if (g.degree(v) > g.degree(top)) top = v;
                g.add_edge(top, used++);
                continue;
            }
            // Block on s vertices; vertex 0 of the block is glued to an existing vertex.
            int s = std::min(n - used + 1, uniform(rng, 2, 7));
            if (need > 0) s = std::min(s, slack + 1);
            Graph b;
            if (s == 2) {
                b = path(2);
            } else if (chordal) {
                // Large chordal blocks need a high enough cap; fall back to a triangle.
                const int cap = std::min(delta, s - 1);
                if (s == 3 || cap < 5) {
                    s = 3;
                    b = cycle(3);
                } else {
                    b = random_chordal_outerplanar(s, uniform(rng, 5, cap), rng());
                }
            } else if (uniform(rng, 0, 2) == 0 || delta < 3) {
                b = cycle(s);
            } else {
                b = random_outerplanar(s, uniform(rng, 2, std::min(delta, s - 1)), rng());
            }
            std::vector<int> hosts;
            auto find_hosts = [&] {
                hosts.clear();
                for (int v = 0; v < used; ++v)
                    if (g.degree(v) + b.degree(0) <= delta) hosts.push_back(v);
            };
            find_hosts();
            if (hosts.empty() && s > 2) {
                // Fall back to a pendant edge, which fits wherever a degree is below the cap.
                s = 2;
                b = path(2);
                find_hosts();
            }
            if (hosts.empty() || b.max_degree() > delta) {
                stuck = true;
                break;
            }
            int host = hosts[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(hosts.size()) - 1))];
            auto id = [&](int x) { return x == 0 ? host : used + x - 1; };
            for (auto [x, y] : b.edges()) g.add_edge(id(x), id(y));
            used += s - 1;
        }
        if (stuck || g.max_degree() != delta) continue;
        return shuffled(g, rng);
    }
    throw InvalidInput("no block tree found for n=" + std::to_string(n) + " and max degree " +
                       std::to_string(delta));
}

}  // namespace

Graph random_block_tree(int n, int delta, std::uint64_t seed) { return block_tree(n, delta, seed, false); }

Graph random_chordal_block_tree(int n, int delta, std::uint64_t seed) {
    return block_tree(n, delta, seed, true);
}

}  // namespace outersq
