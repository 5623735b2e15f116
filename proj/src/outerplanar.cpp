#include "outersq/outerplanar.hpp"

#include <algorithm>
#include <list>
#include <map>
#include <queue>
#include <set>

namespace outersq {

bool OuterEmbedding::is_outer_edge(int u, int v) const {
    const int k = static_cast<int>(outer_cycle.size());
    if (k == 2) return (outer_cycle[0] == u && outer_cycle[1] == v) ||
                       (outer_cycle[0] == v && outer_cycle[1] == u);
    for (int i = 0; i < k; ++i) {
        int a = outer_cycle[i], b = outer_cycle[(i + 1) % k];
        if ((a == u && b == v) || (a == v && b == u)) return true;
    }
    return false;
}

std::vector<Edge> OuterEmbedding::outer_edges() const {
    std::vector<Edge> out;
    const int k = static_cast<int>(outer_cycle.size());
    if (k == 2) out.emplace_back(std::min(outer_cycle[0], outer_cycle[1]),
                                 std::max(outer_cycle[0], outer_cycle[1]));
    if (k < 3) return out;
    for (int i = 0; i < k; ++i) {
        int a = outer_cycle[i], b = outer_cycle[(i + 1) % k];
        out.emplace_back(std::min(a, b), std::max(a, b));
    }
    return out;
}

bool Face::contains(int v) const {
    return std::find(boundary.begin(), boundary.end(), v) != boundary.end();
}

namespace {

// Rotates and orients a cycle to start at its smallest vertex, heading to the
// smaller of that vertex's two cycle neighbors.
std::vector<int> canonical_cycle(std::vector<int> cyc) {
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
    if (cyc.size() > 2 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
    return cyc;
}

// Stack-based interval nesting: chords must close in the reverse order they open.
bool chords_nest(const std::vector<int>& pos, const std::vector<Edge>& chords, int k) {
    std::vector<std::vector<int>> opening(static_cast<std::size_t>(k));
    for (auto [u, v] : chords) {
        int a = std::min(pos[u], pos[v]), b = std::max(pos[u], pos[v]);
        opening[a].push_back(b);
    }
    // Right endpoints on the stack are non-increasing from bottom to top.
    std::vector<int> stack;
    for (int i = 0; i < k; ++i) {
        while (!stack.empty() && stack.back() == i) stack.pop_back();
        if (!stack.empty() && stack.back() < i) return false;
        auto& ends = opening[i];
        std::sort(ends.rbegin(), ends.rend());
        for (int b : ends) {
            if (!stack.empty() && stack.back() < b) return false;
            stack.push_back(b);
        }
    }
    return true;
}

// Degree-2 reduction with virtual edges, then unwinding into the outer cycle.
std::optional<OuterEmbedding> try_embed(const Graph& b, std::string& reason) {
    const int n = b.n();
    if (n <= 2) {
        OuterEmbedding e;
        for (int v = 0; v < n; ++v) e.outer_cycle.push_back(v);
        return e;
    }
    if (b.edge_count() > 2 * n - 3) {
        reason = "edge-count";
        return std::nullopt;
    }
    std::vector<std::set<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : b.edges()) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    struct Removal { int v, a, c; };
    std::vector<Removal> trace;
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    std::set<int> deg2;
    for (int v = 0; v < n; ++v)
        if (adj[v].size() == 2) deg2.insert(v);
    int alive = n;
    while (alive > 3) {
        if (deg2.empty()) {
            reason = "reduction-stuck";
            return std::nullopt;
        }
        int v = *deg2.begin();
        deg2.erase(deg2.begin());
        if (gone[v] || adj[v].size() != 2) continue;
        int a = *adj[v].begin(), c = *adj[v].rbegin();
        trace.push_back({v, a, c});
        gone[v] = true;
        --alive;
        adj[a].erase(v);
        adj[c].erase(v);
        adj[v].clear();
        adj[a].insert(c);
        adj[c].insert(a);
        for (int w : {a, c}) {
            if (adj[w].size() == 2)
                deg2.insert(w);
            else
                deg2.erase(w);
        }
    }
    std::list<int> cycle;
    for (int v = 0; v < n; ++v)
        if (!gone[v]) cycle.push_back(v);
    if (cycle.size() != 3) {
        reason = "reduction-stuck";
        return std::nullopt;
    }
    std::vector<std::list<int>::iterator> where(static_cast<std::size_t>(n));
    for (auto it = cycle.begin(); it != cycle.end(); ++it) where[*it] = it;
    for (auto r = trace.rbegin(); r != trace.rend(); ++r) {
        auto ia = where[r->a], ic = where[r->c];
        auto next = [&](std::list<int>::iterator it) {
            ++it;
            return it == cycle.end() ? cycle.begin() : it;
        };
        if (next(ia) == ic)
            where[r->v] = cycle.insert(ic, r->v);
        else if (next(ic) == ia)
            where[r->v] = cycle.insert(ia, r->v);
        else {
            reason = "cycle-inconsistent";
            return std::nullopt;
        }
    }
    OuterEmbedding e;
    e.outer_cycle = canonical_cycle(std::vector<int>(cycle.begin(), cycle.end()));
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[e.outer_cycle[i]] = i;
    for (int i = 0; i < n; ++i)
        if (!b.has_edge(e.outer_cycle[i], e.outer_cycle[(i + 1) % n])) {
            reason = "cycle-inconsistent";
            return std::nullopt;
        }
    for (auto [u, v] : b.edges()) {
        int d = std::abs(pos[u] - pos[v]);
        if (d != 1 && d != n - 1) e.chords.emplace_back(u, v);
    }
    if (!chords_nest(pos, e.chords, n)) {
        reason = "chord-crossing";
        return std::nullopt;
    }
    return e;
}

}  // namespace

OuterEmbedding outer_embedding(const Graph& block) {
    if (block.n() < 3) throw InvalidInput("outer embedding needs at least 3 vertices");
    std::string reason;
    auto e = try_embed(block, reason);
    if (!e) throw InvalidInput("not outerplanar: " + reason);
    return *e;
}

bool embedding_is_valid(const Graph& g, const std::vector<int>& block_vertices,
                        const OuterEmbedding& emb) {
    const auto& cyc = emb.outer_cycle;
    std::vector<int> sorted_cycle(cyc);
    std::sort(sorted_cycle.begin(), sorted_cycle.end());
    if (sorted_cycle != block_vertices) return false;
    const int k = static_cast<int>(cyc.size());
    if (k < 3) return emb.chords.empty();
    std::set<Edge> rebuilt;
    for (int i = 0; i < k; ++i) {
        int a = cyc[i], b = cyc[(i + 1) % k];
        if (!g.has_edge(a, b)) return false;
        rebuilt.emplace(std::min(a, b), std::max(a, b));
    }
    for (auto [u, v] : emb.chords) {
        if (!g.has_edge(u, v)) return false;
        if (!rebuilt.emplace(std::min(u, v), std::max(u, v)).second) return false;
    }
    // The rebuilt set must be exactly the induced edge set of the block.
    std::size_t induced = 0;
    for (int v : block_vertices)
        for (int w : g.neighbors(v))
            if (v < w && std::binary_search(block_vertices.begin(), block_vertices.end(), w)) ++induced;
    if (induced != rebuilt.size()) return false;
    std::map<int, int> pos;
    for (int i = 0; i < k; ++i) pos[cyc[i]] = i;
    std::vector<int> posv(static_cast<std::size_t>(g.n()), 0);
    for (auto [v, p] : pos) posv[v] = p;
    return chords_nest(posv, emb.chords, k);
}

OuterplanarityResult is_outerplanar(const Graph& g) {
    OuterplanarityResult r;
    r.decomposition = blocks(g);
    if (g.n() >= 2 && g.edge_count() > 2 * g.n() - 3) {
        r.reason = "edge-count";
        return r;
    }
    for (std::size_t b = 0; b < r.decomposition.blocks.size(); ++b) {
        const auto& vs = r.decomposition.blocks[b];
        auto sub = induced_subgraph(g, vs);
        std::string reason;
        auto e = try_embed(sub.graph, reason);
        if (!e) {
            r.reason = reason;
            r.embeddings.clear();
            return r;
        }
        for (int& v : e->outer_cycle) v = sub.to_old[v];
        for (auto& [u, v] : e->chords) {
            u = sub.to_old[u];
            v = sub.to_old[v];
            if (u > v) std::swap(u, v);
        }
        std::sort(e->chords.begin(), e->chords.end());
        e->outer_cycle = canonical_cycle(e->outer_cycle);
        r.embeddings.push_back(std::move(*e));
    }
    r.outerplanar = true;
    return r;
}

std::vector<Face> faces(const OuterEmbedding& emb) {
    const auto& cyc = emb.outer_cycle;
    const int k = static_cast<int>(cyc.size());
    std::vector<Face> out;
    if (k < 3) return out;
    std::map<int, int> pos;
    for (int i = 0; i < k; ++i) pos[cyc[i]] = i;
    // Chords grouped by their later endpoint position.
    std::vector<std::vector<int>> closing(static_cast<std::size_t>(k));
    for (auto [u, v] : emb.chords) {
        int a = std::min(pos[u], pos[v]), b = std::max(pos[u], pos[v]);
        closing[b].push_back(a);
    }
    auto make_face = [&](const std::vector<int>& positions) {
        Face f;
        f.id = static_cast<int>(out.size());
        for (int p : positions) f.boundary.push_back(cyc[p]);
        const int s = f.size();
        for (int i = 0; i < s; ++i) {
            int a = f.boundary[i], b = f.boundary[(i + 1) % s];
            f.edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        out.push_back(std::move(f));
    };
    std::vector<int> stack;
    for (int i = 0; i < k; ++i) {
        stack.push_back(i);
        auto& starts = closing[i];
        std::sort(starts.rbegin(), starts.rend());
        for (int j : starts) {
            auto it = std::find(stack.begin(), stack.end(), j);
            if (it == stack.end()) throw InternalError("chord endpoint missing from face stack");
            make_face(std::vector<int>(it, stack.end()));
            stack.erase(it + 1, stack.end() - 1);
        }
    }
    make_face(stack);
    return out;
}

Edge DualTree::separating_edge(int a, int b) const {
    if (a > b) std::swap(a, b);
    for (std::size_t k = 0; k < edges.size(); ++k)
        if (edges[k] == std::pair<int, int>{a, b}) return shared[k];
    throw InvalidInput("dual nodes are not adjacent");
}

int DualTree::node_of(int face_id) const {
    for (int i = 0; i < size(); ++i)
        if (faces[i].id == face_id) return i;
    return -1;
}

void DualTree::set_root(int r) {
    const int s = size();
    root = r;
    parent.assign(static_cast<std::size_t>(s), -1);
    depth.assign(static_cast<std::size_t>(s), 0);
    height.assign(static_cast<std::size_t>(s), 0);
    children.assign(static_cast<std::size_t>(s), {});
    if (s == 0) return;
    std::vector<int> order{r};
    std::vector<bool> seen(static_cast<std::size_t>(s), false);
    seen[r] = true;
    for (std::size_t i = 0; i < order.size(); ++i) {
        int v = order[i];
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                parent[w] = v;
                depth[w] = depth[v] + 1;
                children[v].push_back(w);
                order.push_back(w);
            }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (parent[*it] >= 0) height[parent[*it]] = std::max(height[parent[*it]], height[*it] + 1);
}

DualTree dual_tree(const OuterEmbedding& emb) {
    DualTree t;
    t.faces = faces(emb);
    const int s = t.size();
    t.adj.assign(static_cast<std::size_t>(s), {});
    std::map<Edge, std::vector<int>> owners;
    for (const auto& f : t.faces)
        for (const auto& e : f.edges) owners[e].push_back(f.id);
    for (auto chord : emb.chords) {
        Edge key{std::min(chord.first, chord.second), std::max(chord.first, chord.second)};
        const auto& o = owners[key];
        if (o.size() != 2) throw InternalError("chord does not border exactly two faces");
        t.adj[o[0]].push_back(o[1]);
        t.adj[o[1]].push_back(o[0]);
        t.edges.emplace_back(std::min(o[0], o[1]), std::max(o[0], o[1]));
        t.shared.push_back(key);
    }
    for (auto& a : t.adj) std::sort(a.begin(), a.end());
    if (s > 0) t.set_root(0);
    return t;
}

namespace {

std::vector<int> bfs_tree(const DualTree& t, int src) {
    std::vector<int> dist(static_cast<std::size_t>(t.size()), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.adj[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

int farthest(const std::vector<int>& dist) {
    int best = 0;
    for (int i = 0; i < static_cast<int>(dist.size()); ++i)
        if (dist[i] > dist[best]) best = i;
    return best;
}

}  // namespace

int root_for_block(const DualTree& t, const OuterEmbedding& emb, std::optional<int> cutvertex) {
    if (t.empty()) return -1;
    if (cutvertex) {
        for (int i = 0; i < t.size(); ++i) {
            const Face& f = t.faces[i];
            if (!f.contains(*cutvertex)) continue;
            for (auto [a, b] : f.edges)
                if ((a == *cutvertex || b == *cutvertex) && emb.is_outer_edge(a, b)) return i;
        }
        throw InternalError("no face holds the cutvertex on an outer edge");
    }
    return farthest(bfs_tree(t, 0));
}

std::vector<BlockDual> weak_dual(const Graph& g) {
    auto r = is_outerplanar(g);
    if (!r.outerplanar) throw InvalidInput("not outerplanar: " + r.reason);
    std::vector<BlockDual> out;
    const auto& bd = r.decomposition;
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        BlockDual d;
        d.block = static_cast<int>(b);
        d.embedding = r.embeddings[b];
        d.tree = dual_tree(d.embedding);
        std::optional<int> cut;
        for (int v : bd.blocks[b])
            if (bd.is_cut[v]) {
                cut = v;
                break;
            }
        if (!d.tree.empty()) d.tree.set_root(root_for_block(d.tree, d.embedding, cut));
        out.push_back(std::move(d));
    }
    return out;
}

DualTree prune(const DualTree& t) {
    DualTree out;
    if (t.size() < 3) return out;
    std::vector<int> keep, new_id(static_cast<std::size_t>(t.size()), -1);
    for (int i = 0; i < t.size(); ++i)
        if (t.degree(i) >= 2) {
            new_id[i] = static_cast<int>(keep.size());
            keep.push_back(i);
        }
    for (int i : keep) out.faces.push_back(t.faces[i]);
    out.adj.assign(keep.size(), {});
    for (std::size_t k = 0; k < t.edges.size(); ++k) {
        auto [a, b] = t.edges[k];
        if (new_id[a] < 0 || new_id[b] < 0) continue;
        out.adj[new_id[a]].push_back(new_id[b]);
        out.adj[new_id[b]].push_back(new_id[a]);
        out.edges.emplace_back(new_id[a], new_id[b]);
        out.shared.push_back(t.shared[k]);
    }
    for (auto& a : out.adj) std::sort(a.begin(), a.end());
    int r = (t.root >= 0 && new_id[t.root] >= 0) ? new_id[t.root] : 0;
    out.set_root(r);
    return out;
}

int diameter(const DualTree& t) {
    if (t.empty()) return 0;
    int a = farthest(bfs_tree(t, 0));
    auto d = bfs_tree(t, a);
    return d[farthest(d)];
}

std::vector<int> center(const DualTree& t) {
    if (t.empty()) return {};
    int a = farthest(bfs_tree(t, 0));
    auto da = bfs_tree(t, a);
    int b = farthest(da);
    // Walk back from b along decreasing distance to a.
    std::vector<int> path{b};
    while (path.back() != a) {
        int v = path.back();
        for (int w : t.adj[v])
            if (da[w] == da[v] - 1) {
                path.push_back(w);
                break;
            }
    }
    const int len = static_cast<int>(path.size()) - 1;
    std::vector<int> c{path[len / 2]};
    if (len % 2 == 1) c.push_back(path[len / 2 + 1]);
    std::sort(c.begin(), c.end());
    return c;
}

SsLevel ss_level(const DualTree& t, int node) {
    SsLevel out;
    if (t.root >= 0 && node != t.root) {
        out.parent = t.parent[node];
        if (out.parent >= 0) out.grandparent = t.parent[out.parent];
    }
    const int s = t.size();
    std::vector<bool> alive(static_cast<std::size_t>(s), true);
    std::vector<int> live_children(static_cast<std::size_t>(s), 0);
    for (int v = 0; v < s; ++v)
        if (t.parent[v] >= 0) ++live_children[t.parent[v]];
    int alive_count = s;
    int cur = node;
    for (int i = 0;; ++i) {
        if (alive_count == 1) {
            out.level = kAllLevels;
            return out;
        }
        if (cur == t.root || live_children[cur] > 0) {
            out.level = i - 1;
            return out;
        }
        std::vector<int> leaves;
        for (int v = 0; v < s; ++v)
            if (alive[v] && v != t.root && live_children[v] == 0) leaves.push_back(v);
        for (int v : leaves) {
            alive[v] = false;
            --alive_count;
            --live_children[t.parent[v]];
        }
        cur = t.parent[cur];
    }
}

}  // namespace outersq
