#include "outersq/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace outersq {

namespace {

std::string pair_text(int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n) {
    if (n < 0) throw InvalidInput("negative vertex count " + std::to_string(n));
    adj_.resize(static_cast<std::size_t>(n));
}

int Graph::max_degree() const {
    int d = 0;
    for (const auto& a : adj_) d = std::max(d, static_cast<int>(a.size()));
    return d;
}

int Graph::min_degree() const {
    if (adj_.empty()) return 0;
    int d = static_cast<int>(adj_[0].size());
    for (const auto& a : adj_) d = std::min(d, static_cast<int>(a.size()));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), target);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n() || v >= n())
        throw InvalidInput("vertex id out of range in pair " + pair_text(u, v));
    if (u == v) throw InvalidInput("self-loop in pair " + pair_text(u, v));
    auto& au = adj_[u];
    auto it = std::lower_bound(au.begin(), au.end(), v);
    if (it != au.end() && *it == v) return false;
    au.insert(it, v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
    return true;
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw InvalidInput("no edge " + pair_text(u, v));
    auto& au = adj_[u];
    au.erase(std::lower_bound(au.begin(), au.end(), v));
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --m_;
}

Graph from_edge_list(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    InducedSubgraph out{Graph(static_cast<int>(vertices.size())), vertices};
    std::vector<int> to_new(static_cast<std::size_t>(g.n()), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) to_new[vertices[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (int w : g.neighbors(vertices[i]))
            if (to_new[w] > static_cast<int>(i)) out.graph.add_edge(static_cast<int>(i), to_new[w]);
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<int> comp(static_cast<std::size_t>(g.n()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n(); ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int w : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    stack.push_back(w);
                }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<std::size_t>(g.n()), -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : g.neighbors(v))
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

int BlockDecomposition::cut_count_in(int block) const {
    int c = 0;
    for (int v : blocks[block])
        if (is_cut[v]) ++c;
    return c;
}

// Iterative Hopcroft-Tarjan with an edge stack.
BlockDecomposition blocks(const Graph& g) {
    const int n = g.n();
    BlockDecomposition bd;
    bd.is_cut.assign(static_cast<std::size_t>(n), false);
    bd.blocks_of.assign(static_cast<std::size_t>(n), {});

    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<std::size_t> next(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<Edge> estack;
    int timer = 0;

    auto emit_block = [&](int u, int v) {
        std::vector<Edge> es;
        std::vector<int> vs;
        while (true) {
            Edge e = estack.back();
            estack.pop_back();
            es.emplace_back(std::min(e.first, e.second), std::max(e.first, e.second));
            vs.push_back(e.first);
            vs.push_back(e.second);
            if (e == Edge{u, v}) break;
        }
        std::sort(vs.begin(), vs.end());
        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        std::sort(es.begin(), es.end());
        bd.blocks.push_back(std::move(vs));
        bd.block_edges.push_back(std::move(es));
    };

    for (int root = 0; root < n; ++root) {
        if (disc[root] >= 0) continue;
        if (g.degree(root) == 0) {
            disc[root] = timer++;
            bd.blocks.push_back({root});
            bd.block_edges.emplace_back();
            continue;
        }
        int root_children = 0;
        disc[root] = low[root] = timer++;
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int u = stack.back();
            if (next[u] < g.neighbors(u).size()) {
                int w = g.neighbors(u)[next[u]++];
                if (disc[w] < 0) {
                    parent[w] = u;
                    disc[w] = low[w] = timer++;
                    estack.emplace_back(u, w);
                    if (u == root) ++root_children;
                    stack.push_back(w);
                } else if (w != parent[u] && disc[w] < disc[u]) {
                    estack.emplace_back(u, w);
                    low[u] = std::min(low[u], disc[w]);
                }
            } else {
                stack.pop_back();
                int p = parent[u];
                if (p < 0) continue;
                low[p] = std::min(low[p], low[u]);
                if (low[u] >= disc[p]) {
                    if (p != root) bd.is_cut[p] = true;
                    emit_block(p, u);
                }
            }
        }
        if (root_children >= 2) bd.is_cut[root] = true;
    }

    // Blocks sorted by smallest vertex then size, for deterministic ids.
    std::vector<int> order(bd.blocks.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return bd.blocks[a] < bd.blocks[b]; });
    std::vector<std::vector<int>> bs;
    std::vector<std::vector<Edge>> es;
    for (int i : order) {
        bs.push_back(std::move(bd.blocks[i]));
        es.push_back(std::move(bd.block_edges[i]));
    }
    bd.blocks = std::move(bs);
    bd.block_edges = std::move(es);

    for (int b = 0; b < static_cast<int>(bd.blocks.size()); ++b)
        for (int v : bd.blocks[b]) {
            bd.blocks_of[v].push_back(b);
            if (bd.is_cut[v]) bd.block_tree.emplace_back(b, v);
        }
    for (int v = 0; v < n; ++v)
        if (bd.is_cut[v]) bd.cutvertices.push_back(v);
    return bd;
}

Contraction contract_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw InvalidInput("cannot contract non-edge " + pair_text(u, v));
    const int n = g.n();
    Contraction c;
    c.to_new.assign(static_cast<std::size_t>(n), -1);
    for (int w = 0, k = 0; w < n; ++w) {
        if (w == u) continue;
        c.to_new[w] = k++;
        c.to_old.push_back(w);
    }
    c.merged = c.to_new[v];
    c.to_new[u] = c.merged;
    c.graph = Graph(n - 1);
    for (auto [a, b] : g.edges()) {
        int x = c.to_new[a], y = c.to_new[b];
        if (x != y) c.graph.add_edge(x, y);
    }
    return c;
}

namespace {

struct Matcher {
    const Graph& g;
    const Graph& h;
    std::vector<int> order;        // pattern vertices in search order
    std::vector<int> anchor;       // an earlier-placed neighbor of order[i], or -1
    std::vector<int> map;          // pattern -> target
    std::vector<bool> used;
    std::vector<std::vector<int>> nbr_degs_g;  // neighbor degrees, sorted descending

    bool degree_dominates(int hv, int gv) const {
        if (g.degree(gv) < h.degree(hv)) return false;
        // The i-th largest neighbor degree in G must cover that of H.
        std::vector<int> hd;
        for (int w : h.neighbors(hv)) hd.push_back(h.degree(w));
        std::sort(hd.rbegin(), hd.rend());
        const auto& gd = nbr_degs_g[gv];
        for (std::size_t i = 0; i < hd.size(); ++i)
            if (gd[i] < hd[i]) return false;
        return true;
    }

    bool consistent(int hv, int gv) const {
        for (int w : h.neighbors(hv))
            if (map[w] >= 0 && !g.has_edge(gv, map[w])) return false;
        return true;
    }

    bool extend(std::size_t i) {
        if (i == order.size()) return true;
        int hv = order[i];
        auto try_candidate = [&](int gv) {
            if (used[gv] || !degree_dominates(hv, gv) || !consistent(hv, gv)) return false;
            map[hv] = gv;
            used[gv] = true;
            if (extend(i + 1)) return true;
            map[hv] = -1;
            used[gv] = false;
            return false;
        };
        if (anchor[i] >= 0) {
            for (int gv : g.neighbors(map[anchor[i]]))
                if (try_candidate(gv)) return true;
        } else {
            for (int gv = 0; gv < g.n(); ++gv)
                if (try_candidate(gv)) return true;
        }
        return false;
    }
};

}  // namespace

SubgraphMatch contains_subgraph(const Graph& g, const Graph& pattern) {
    SubgraphMatch result;
    const int hn = pattern.n();
    if (hn > g.n() || pattern.edge_count() > g.edge_count()) return result;

    Matcher m{g, pattern, {}, {}, {}, {}, {}};
    m.map.assign(static_cast<std::size_t>(hn), -1);
    m.used.assign(static_cast<std::size_t>(g.n()), false);
    m.nbr_degs_g.resize(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        for (int w : g.neighbors(v)) m.nbr_degs_g[v].push_back(g.degree(w));
        std::sort(m.nbr_degs_g[v].rbegin(), m.nbr_degs_g[v].rend());
    }

    // Search order: BFS per component, starting at the highest-degree vertex.
    std::vector<bool> seen(static_cast<std::size_t>(hn), false);
    while (static_cast<int>(m.order.size()) < hn) {
        int start = -1;
        for (int v = 0; v < hn; ++v)
            if (!seen[v] && (start < 0 || pattern.degree(v) > pattern.degree(start))) start = v;
        std::queue<int> q;
        q.push(start);
        seen[start] = true;
        m.order.push_back(start);
        m.anchor.push_back(-1);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            std::vector<int> nb(pattern.neighbors(v).begin(), pattern.neighbors(v).end());
            std::stable_sort(nb.begin(), nb.end(),
                             [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
            for (int w : nb)
                if (!seen[w]) {
                    seen[w] = true;
                    m.order.push_back(w);
                    m.anchor.push_back(v);
                    q.push(w);
                }
        }
    }

    if (m.extend(0)) {
        result.found = true;
        result.witness = m.map;
    }
    return result;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g(a.n() + b.n());
    for (auto [u, v] : a.edges()) g.add_edge(u, v);
    for (auto [u, v] : b.edges()) g.add_edge(u + a.n(), v + a.n());
    return g;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    Graph out(g.n());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace outersq
