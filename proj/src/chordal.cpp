#include "outersq/chordal.hpp"

#include <algorithm>

#include "outersq/error.hpp"
#include "outersq/families.hpp"
#include "outersq/outerplanar.hpp"

namespace outersq {

bool is_chordal_outerplanar(const Graph& g) {
    auto r = is_outerplanar(g);
    if (!r.outerplanar) throw InvalidInput("not outerplanar: " + r.reason);
    const auto& bd = r.decomposition;
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        const auto nb = static_cast<int>(bd.blocks[b].size());
        if (nb >= 3 && static_cast<int>(bd.block_edges[b].size()) != 2 * nb - 3) return false;
    }
    return true;
}

std::optional<std::vector<int>> perfect_elimination_ordering(const Graph& g) {
    const int n = g.n();
    std::vector<int> weight(static_cast<std::size_t>(n), 0), visit;
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!done[v] && (best < 0 || weight[v] > weight[best])) best = v;
        done[best] = true;
        visit.push_back(best);
        for (int w : g.neighbors(best))
            if (!done[w]) ++weight[w];
    }
    // Reverse visit order is a perfect elimination ordering iff g is chordal.
    std::vector<int> peo(visit.rbegin(), visit.rend());
    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[peo[i]] = i;
    for (int i = 0; i < n; ++i) {
        int v = peo[i];
        int first = -1;
        for (int w : g.neighbors(v))
            if (pos[w] > i && (first < 0 || pos[w] < pos[first])) first = w;
        if (first < 0) continue;
        for (int w : g.neighbors(v))
            if (pos[w] > i && w != first && !g.has_edge(first, w)) return std::nullopt;
    }
    return peo;
}

bool is_chordal(const Graph& g) { return perfect_elimination_ordering(g).has_value(); }

std::string to_string(Trigger t) {
    switch (t) {
        case Trigger::F4Subgraph: return "F4_SUBGRAPH";
        case Trigger::F5Subgraph: return "F5_SUBGRAPH";
        case Trigger::F6Subgraph: return "F6_OR_RLn_SUBGRAPH";
        case Trigger::Base: return "BASE";
    }
    return "?";
}

ChordalClassification classify(const Graph& g, bool validate, int validate_limit, std::uint64_t budget) {
    if (!is_chordal_outerplanar(g)) throw InvalidInput("classify needs a chordal outerplanar graph");
    ChordalClassification c;
    const int d = g.max_degree();
    c.delta = d;
    c.predicted_omega = d + 1;
    c.predicted_ind = d;
    auto bump = [&](Trigger t, const std::vector<int>& w) {
        c.trigger = t;
        c.trigger_witness = w;
        c.predicted_ind = d + 1;
        if (d == 4) c.predicted_omega = d + 2;
    };
    if (d == 4) {
        static const Graph p = f4();
        if (auto m = contains_subgraph(g, p); m.found) bump(Trigger::F4Subgraph, m.witness);
    } else if (d == 5) {
        static const Graph p = f5();
        if (auto m = contains_subgraph(g, p); m.found) bump(Trigger::F5Subgraph, m.witness);
    } else if (d == 6) {
        static const Graph p = f6();
        if (auto m = contains_subgraph(g, p); m.found) bump(Trigger::F6Subgraph, m.witness);
    }
    if (d == 5 || d == 6) c.predicted_omega = d + 1;
    c.predicted_chi = c.predicted_omega;

    if (validate && g.n() <= validate_limit) {
        Graph sq = square(g);
        int omega = clique_outerplanar_square(g, budget).omega;
        int chi = exact_chromatic(sq, budget).chi;
        int ind = degeneracy(sq).k;
        c.oracle_checked = true;
        if (omega != c.predicted_omega || chi != c.predicted_chi || ind != c.predicted_ind) {
            auto triple = [](int a, int b, int x) {
                return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(x) + ")";
            };
            throw InternalError("chordal classification " +
                                triple(c.predicted_omega, c.predicted_chi, c.predicted_ind) +
                                " disagrees with oracle " + triple(omega, chi, ind) + " at max degree " +
                                std::to_string(d));
        }
    }
    return c;
}

// ── Separators ──

namespace {

// Components of G^2 - removed, as lists of vertices.
std::vector<std::vector<int>> components_without(const Graph& sq, const std::vector<bool>& removed) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(removed);
    for (int s = 0; s < sq.n(); ++s) {
        if (seen[s]) continue;
        std::vector<int> comp{s};
        seen[s] = true;
        for (std::size_t i = 0; i < comp.size(); ++i)
            for (int w : sq.neighbors(comp[i]))
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool valid_in_square(const Graph& sq, const std::vector<int>& vs) {
    if (vs.empty()) return false;
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!sq.has_edge(vs[i], vs[j])) return false;
    std::vector<bool> removed(static_cast<std::size_t>(sq.n()), false);
    for (int v : vs) removed[v] = true;
    return components_without(sq, removed).size() >= 2;
}

std::vector<int> closed_nbhd(const Graph& g, int w) {
    std::vector<int> out(g.neighbors(w).begin(), g.neighbors(w).end());
    out.push_back(w);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_clique(const Graph& g) {
    return g.edge_count() == g.n() * (g.n() - 1) / 2;
}

}  // namespace

bool separator_is_valid(const Graph& g, const std::vector<int>& vertices) {
    for (int v : vertices)
        if (v < 0 || v >= g.n()) return false;
    return valid_in_square(square(g), vertices);
}

std::optional<Separator> find_separator(const Graph& g) {
    if (g.n() < 3 || blocks(g).blocks.size() != 1) throw InvalidInput("find_separator needs a biconnected graph");
    if (!is_chordal_outerplanar(g)) throw InvalidInput("find_separator needs a chordal outerplanar graph");
    const int d = g.max_degree();
    if (d != 5 && d != 6) throw InvalidInput("find_separator needs max degree 5 or 6");
    const Graph sq = square(g);
    const DualTree t = dual_tree(outer_embedding(g));
    int deg3 = 0, deg2 = 0;
    for (int i = 0; i < t.size(); ++i) {
        if (t.degree(i) == 3) ++deg3;
        if (t.degree(i) == 2) ++deg2;
    }
    if (deg2 == 0 || is_clique(sq)) return std::nullopt;

    auto done = [&](std::vector<int> vs, const std::string& rule) {
        std::sort(vs.begin(), vs.end());
        if (!valid_in_square(sq, vs)) throw InternalError("separator from rule '" + rule + "' is invalid");
        Separator s;
        s.h = static_cast<int>(vs.size());
        s.vertices = std::move(vs);
        s.rule = rule;
        return s;
    };

    if (deg3 == 0) {
        // Path dual: G^2 is chordal, so some forward neighborhood of its perfect
        // elimination ordering is a separating clique.
        auto peo = perfect_elimination_ordering(sq);
        if (!peo) throw InternalError("square of a dual-path graph is not chordal");
        std::vector<int> pos(static_cast<std::size_t>(sq.n()));
        for (int i = 0; i < sq.n(); ++i) pos[(*peo)[i]] = i;
        std::optional<std::vector<int>> best;
        for (int i = 0; i < sq.n(); ++i) {
            std::vector<int> fwd;
            for (int w : sq.neighbors((*peo)[i]))
                if (pos[w] > i) fwd.push_back(w);
            std::sort(fwd.begin(), fwd.end());
            if (valid_in_square(sq, fwd) && (!best || fwd.size() < best->size())) best = fwd;
        }
        if (!best) throw InternalError("no clique separator in a chordal non-clique square");
        return done(*best, "path dual");
    }

    // Dual nodes on both sides of which a degree-3 node remains.
    auto splits_deg3 = [&](int node) {
        for (int start : t.adj[node]) {
            std::vector<bool> seen(static_cast<std::size_t>(t.size()), false);
            seen[node] = seen[start] = true;
            std::vector<int> q{start};
            bool found = false;
            for (std::size_t i = 0; i < q.size(); ++i) {
                if (t.degree(q[i]) == 3) found = true;
                for (int x : t.adj[q[i]])
                    if (!seen[x]) {
                        seen[x] = true;
                        q.push_back(x);
                    }
            }
            if (!found) return false;
        }
        return true;
    };
    for (int i = 0; i < t.size(); ++i) {
        if (t.degree(i) != 2 || !splits_deg3(i)) continue;
        const Face& f = t.faces[i];
        // The one outer edge of the triangle, and the vertex opposite it.
        for (auto [a, b] : f.edges) {
            bool chord = false;
            for (int j : t.adj[i])
                if (t.separating_edge(i, j) == Edge{a, b}) chord = true;
            if (chord) continue;
            for (int w : f.boundary)
                if (w != a && w != b) return done(closed_nbhd(g, w), "degree-2 dual node between branchings");
        }
    }
    for (int i = 0; i < t.size(); ++i) {
        if (t.degree(i) != 2) continue;
        for (int leaf : t.adj[i]) {
            if (t.degree(leaf) != 1) continue;
            Edge vw = t.separating_edge(leaf, i);
            int u = -1;
            for (int x : t.faces[leaf].boundary)
                if (x != vw.first && x != vw.second) u = x;
            for (int w : {vw.first, vw.second}) {
                auto s = closed_nbhd(g, w);
                s.erase(std::find(s.begin(), s.end(), u));
                std::sort(s.begin(), s.end());
                if (valid_in_square(sq, s)) return done(s, "degree-2 dual node next to a leaf");
            }
        }
    }
    throw InternalError("no separator rule applies to a non-full dual");
}

Split split_at_separator(const Graph& g, const Separator& sep) {
    const Graph sq = square(g);
    std::vector<int> hs = sep.vertices;
    std::sort(hs.begin(), hs.end());
    if (!valid_in_square(sq, hs)) throw InvalidInput("split_at_separator: invalid separator");
    std::vector<bool> removed(static_cast<std::size_t>(g.n()), false);
    for (int v : hs) removed[v] = true;
    auto comps = components_without(sq, removed);
    // components_without scans from the lowest vertex, so comps[0] holds it.
    std::vector<int> a = comps[0], b;
    for (std::size_t i = 1; i < comps.size(); ++i) b.insert(b.end(), comps[i].begin(), comps[i].end());
    a.insert(a.end(), hs.begin(), hs.end());
    b.insert(b.end(), hs.begin(), hs.end());
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    Split s;
    s.separator = hs;
    s.first.part = induced_subgraph(g, a);
    s.first.square = induced_subgraph(sq, a).graph;
    s.second.part = induced_subgraph(g, b);
    s.second.square = induced_subgraph(sq, b).graph;
    return s;
}

Coloring recombine(const Graph& g, const Split& s, const Coloring& first, const Coloring& second) {
    Coloring out;
    out.colors.assign(static_cast<std::size_t>(g.n()), 0);
    const auto& m1 = s.first.part.to_old;
    const auto& m2 = s.second.part.to_old;
    if (first.colors.size() != m1.size() || second.colors.size() != m2.size())
        throw InvalidInput("recombine: coloring sizes do not match the split");
    for (std::size_t i = 0; i < m1.size(); ++i) out.colors[m1[i]] = first.colors[i];
    // Map each separator color of the second part to the first part's color, then
    // send the remaining colors of the second part to unused values.
    int top = std::max(first.palette_size, second.palette_size);
    for (int c : first.colors) top = std::max(top, c);
    for (int c : second.colors) top = std::max(top, c);
    std::vector<int> perm(static_cast<std::size_t>(top) + 1, 0);
    std::vector<bool> taken(static_cast<std::size_t>(top) + 1, false);
    for (std::size_t i = 0; i < m2.size(); ++i) {
        int v = m2[i];
        if (!std::binary_search(s.separator.begin(), s.separator.end(), v)) continue;
        int c2 = second.colors[i], c1 = out.colors[v];
        if (perm[c2] != 0 && perm[c2] != c1)
            throw InvalidInput("recombine: second coloring repeats a color on the separator");
        perm[c2] = c1;
        taken[c1] = true;
    }
    int next = 1;
    for (int c = 1; c <= top; ++c) {
        if (perm[c] != 0) continue;
        while (taken[next]) ++next;
        perm[c] = next;
        taken[next] = true;
    }
    for (std::size_t i = 0; i < m2.size(); ++i) out.colors[m2[i]] = perm[second.colors[i]];
    for (int c : out.colors) out.palette_size = std::max(out.palette_size, c);
    return out;
}

}  // namespace outersq
