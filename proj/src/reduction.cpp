#include "outersq/reduction.hpp"

#include <algorithm>

#include "outersq/bounds.hpp"
#include "outersq/chordal.hpp"
#include "outersq/error.hpp"

namespace outersq {

bool witness_holds(const Graph& g, const KVertexWitness& w) {
    if (w.vertex < 0 || w.vertex >= g.n()) return false;
    if (g.degree(w.vertex) > 2 || g.degree(w.vertex) != w.degree) return false;
    const int d2 = distance2_degree(g, w.vertex);
    return d2 == w.dist2_degree && d2 <= w.k;
}

std::string to_string(Config c) {
    switch (c) {
        case Config::A: return "A";
        case Config::B: return "B";
        case Config::C: return "C";
        case Config::D: return "D";
        case Config::E: return "E";
        case Config::F: return "F";
        case Config::G: return "G";
        case Config::H: return "H";
        case Config::I: return "I";
        case Config::J: return "J";
        case Config::SimpleBlock: return "simple";
    }
    return "?";
}

int promised_k(Config c, int delta) {
    switch (c) {
        case Config::A: return 4;
        case Config::B: return 5;
        case Config::C: return 6;
        case Config::D: return delta + 1;
        case Config::E: return 7;
        case Config::F: return 7;
        case Config::G: return 6;
        case Config::H: return delta + 1;
        case Config::I: return delta;
        case Config::J: return 7;
        case Config::SimpleBlock: return delta == 5 ? delta + 1 : delta;
    }
    return 0;
}

std::optional<KVertexWitness> find_k_vertex(const Graph& g, int k) {
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) > 2) continue;
        int d2 = distance2_degree(g, v);
        if (d2 <= k) return KVertexWitness{v, g.degree(v), d2, k};
    }
    return std::nullopt;
}

namespace {

// Candidate with the smallest distance-2 degree, lowest id on ties.
std::optional<KVertexWitness> best_of(const Graph& g, const std::vector<int>& cands, int k) {
    std::optional<KVertexWitness> best;
    for (int v : cands) {
        if (g.degree(v) > 2) continue;
        int d2 = distance2_degree(g, v);
        if (!best || d2 < best->dist2_degree || (d2 == best->dist2_degree && v < best->vertex))
            best = KVertexWitness{v, g.degree(v), d2, k};
    }
    return best;
}

// Boundary vertices of `node` other than the endpoints of `chord`.
std::vector<int> ears(const DualTree& t, int node, Edge chord) {
    std::vector<int> out;
    for (int v : t.faces[node].boundary)
        if (v != chord.first && v != chord.second) out.push_back(v);
    return out;
}

bool touches(const Face& f, int v) { return f.contains(v); }

// Children of `p` ordered with `first` in front, then along p's boundary.
std::vector<int> children_in_order(const DualTree& t, int p, int first) {
    std::vector<int> kids = t.children[p];
    const Face& fp = t.faces[p];
    auto pos = [&](int c) {
        Edge e = t.separating_edge(c, p);
        for (std::size_t i = 0; i < fp.edges.size(); ++i)
            if (fp.edges[i] == e) return static_cast<int>(i);
        return static_cast<int>(fp.edges.size());
    };
    std::sort(kids.begin(), kids.end(), [&](int x, int y) {
        if ((x == first) != (y == first)) return x == first;
        return pos(x) < pos(y);
    });
    return kids;
}

ConfigurationLabel finish(const Graph& g, Config c, int delta, int face, int parent,
                          std::optional<KVertexWitness> w, const std::string& rule) {
    if (!w) throw InternalError("configuration " + to_string(c) + " has no candidate vertex");
    ConfigurationLabel out;
    out.label = c;
    out.face = face;
    out.parent_face = parent;
    out.promised_k = promised_k(c, delta);
    out.witness = *w;
    out.witness.k = out.promised_k;
    out.rule = rule;
    if (!witness_holds(g, out.witness))
        throw InternalError("configuration " + to_string(c) + " promised " +
                            std::to_string(out.promised_k) + " but vertex " +
                            std::to_string(w->vertex) + " has distance-2 degree " +
                            std::to_string(w->dist2_degree));
    return out;
}

// Labels A and B, shared by both flowcharts: a child of the parent face with at
// least five (A) or exactly four (B) sides.
std::optional<ConfigurationLabel> large_child(const Graph& g, const DualTree& t, const GoodFace& gf,
                                              int delta) {
    const int p = gf.parent;
    auto kids = children_in_order(t, p, gf.f);
    for (int want : {5, 4}) {
        for (int s : kids) {
            int sz = t.faces[s].size();
            if (want == 5 ? sz < 5 : sz != 4) continue;
            Edge xy = t.separating_edge(s, p);
            std::vector<int> cands;
            for (int v : ears(t, s, xy)) {
                if (want == 5 && (g.has_edge(v, xy.first) || g.has_edge(v, xy.second))) continue;
                cands.push_back(v);
            }
            Config c = want == 5 ? Config::A : Config::B;
            return finish(g, c, delta, t.faces[s].id, t.faces[p].id, best_of(g, cands, promised_k(c, delta)),
                          want == 5 ? "leaf face with at least five sides" : "leaf face with four sides");
        }
    }
    return std::nullopt;
}

// Among triangle children, the one whose ear has the smallest distance-2 degree.
struct EarPick {
    int child = -1;
    std::optional<KVertexWitness> w;
};

EarPick best_ear(const Graph& g, const DualTree& t, int p, const std::vector<int>& kids, int k) {
    EarPick out;
    for (int s : kids) {
        auto w = best_of(g, ears(t, s, t.separating_edge(s, p)), k);
        if (w && (!out.w || w->dist2_degree < out.w->dist2_degree)) {
            out.child = s;
            out.w = w;
        }
    }
    return out;
}

int block_max_degree(const Graph& g) { return g.max_degree(); }

}  // namespace

std::vector<LeafBlock> leaf_blocks(const Graph& g) {
    auto r = is_outerplanar(g);
    if (!r.outerplanar) throw InvalidInput("not outerplanar: " + r.reason);
    const auto& bd = r.decomposition;
    std::vector<LeafBlock> out;
    for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
        if (bd.blocks[b].size() < 2 || !bd.is_leaf_block(static_cast<int>(b))) continue;
        LeafBlock lb;
        lb.block = static_cast<int>(b);
        for (int v : bd.blocks[b])
            if (bd.is_cut[v]) lb.cutvertex = v;
        lb.dual.block = lb.block;
        lb.dual.embedding = r.embeddings[b];
        lb.dual.tree = dual_tree(lb.dual.embedding);
        if (!lb.dual.tree.empty())
            lb.dual.tree.set_root(root_for_block(lb.dual.tree, lb.dual.embedding, lb.cutvertex));
        out.push_back(std::move(lb));
    }
    return out;
}

bool is_simple_block(const DualTree& t) { return t.empty() || diameter(t) <= 2; }

GoodFace good_face(const Graph& g, const LeafBlock& lb) {
    (void)g;
    GoodFace gf;
    const DualTree& t = lb.dual.tree;
    if (is_simple_block(t)) {
        gf.simple = true;
        return gf;
    }
    int f = 0;
    for (int i = 1; i < t.size(); ++i)
        if (t.depth[i] > t.depth[f]) f = i;
    gf.f = f;
    gf.parent = t.parent[f];
    gf.grandparent = gf.parent >= 0 ? t.parent[gf.parent] : -1;
    if (gf.grandparent < 0) throw InternalError("deepest face lies above depth 2 in a non-simple block");
    gf.ab = t.separating_edge(gf.parent, gf.grandparent);
    int g3 = t.parent[gf.grandparent];
    if (g3 >= 0) {
        gf.separator = t.separating_edge(gf.grandparent, g3);
    } else if (lb.cutvertex) {
        int c = *lb.cutvertex;
        for (auto [a, b] : t.faces[gf.grandparent].edges)
            if ((a == c || b == c) && lb.dual.embedding.is_outer_edge(a, b)) {
                gf.separator = Edge{a, b};
                break;
            }
    }
    return gf;
}

ConfigurationLabel simple_leaf_block_vertex(const Graph& g, const LeafBlock& lb, int delta) {
    if (delta < 5) throw InvalidInput("simple leaf block rule needs max degree at least 5");
    const auto& emb = lb.dual.embedding;
    const DualTree& t = lb.dual.tree;
    const std::optional<int> cut = lb.cutvertex;
    const int promised = promised_k(Config::SimpleBlock, delta);
    auto out = [&](std::optional<KVertexWitness> w, int case_k, const std::string& rule) {
        if (!w) throw InternalError("simple leaf block has no candidate for rule: " + rule);
        ConfigurationLabel l;
        l.label = Config::SimpleBlock;
        l.promised_k = promised;
        l.witness = *w;
        l.witness.k = case_k;
        l.rule = rule;
        if (!t.empty()) {
            for (const Face& f : t.faces)
                if (f.contains(w->vertex)) {
                    l.face = f.id;
                    break;
                }
        }
        if (!witness_holds(g, l.witness))
            throw InternalError("simple leaf block rule '" + rule + "' failed at vertex " +
                                std::to_string(w->vertex));
        return l;
    };
    std::vector<int> verts = emb.outer_cycle;
    std::vector<int> noncut, far;
    for (int v : verts) {
        if (cut && v == *cut) continue;
        noncut.push_back(v);
        if (!cut || !g.has_edge(v, *cut)) far.push_back(v);
    }
    if (t.empty()) return out(best_of(g, noncut, delta), delta, "single edge");
    if (t.size() == 1) {
        if (verts.size() == 3) return out(best_of(g, noncut, delta), delta, "triangle");
        return out(best_of(g, far, 4), 4, "cycle");
    }
    // Dual tree is an edge or a star.
    std::vector<int> far2, deg2;
    for (int v : noncut)
        if (g.degree(v) == 2) deg2.push_back(v);
    for (int v : far)
        if (g.degree(v) == 2) far2.push_back(v);
    if (!far2.empty()) return out(best_of(g, far2, 6), 6, "degree-2 vertex away from the cutvertex");
    return out(best_of(g, deg2, delta), delta, "degree-2 vertex of a small block");
}

ConfigurationLabel classify_delta5(const Graph& g, const LeafBlock& lb, const GoodFace& gf) {
    const int delta = block_max_degree(g);
    if (delta < 5) throw InvalidInput("classify_delta5 needs max degree at least 5");
    if (gf.simple) throw InvalidInput("classify_delta5 needs a non-simple leaf block");
    const DualTree& t = lb.dual.tree;
    if (auto l = large_child(g, t, gf, delta)) return *l;
    const int p = gf.parent;
    const int pid = t.faces[p].id;
    auto kids = children_in_order(t, p, gf.f);
    if (t.faces[p].size() == 3) {
        auto e = best_ear(g, t, p, kids, promised_k(Config::H, delta));
        return finish(g, Config::H, delta, t.faces[e.child].id, pid, e.w, "triangle parent of triangles");
    }
    for (int s : kids) {
        const Face& fs = t.faces[s];
        if (!touches(fs, gf.ab.first) && !touches(fs, gf.ab.second)) {
            auto w = best_of(g, ears(t, s, t.separating_edge(s, p)), promised_k(Config::C, delta));
            return finish(g, Config::C, delta, fs.id, pid, w, "triangle away from the parent chord");
        }
    }
    auto e = best_ear(g, t, p, kids, promised_k(Config::D, delta));
    return finish(g, Config::D, delta, t.faces[e.child].id, pid, e.w, "triangles on the parent chord");
}

ConfigurationLabel classify_delta7(const Graph& g, const LeafBlock& lb, const GoodFace& gf) {
    const int delta = block_max_degree(g);
    if (delta < 7) throw InvalidInput("classify_delta7 needs max degree at least 7");
    if (gf.simple) throw InvalidInput("classify_delta7 needs a non-simple leaf block");
    const DualTree& t = lb.dual.tree;
    if (auto l = large_child(g, t, gf, delta)) return *l;
    const int p = gf.parent;
    const Face& fp = t.faces[p];
    auto kids = children_in_order(t, p, gf.f);
    if (fp.size() == 3) {
        if (kids.size() == 1) {
            auto w = best_of(g, ears(t, kids[0], t.separating_edge(kids[0], p)),
                             promised_k(Config::I, delta));
            return finish(g, Config::I, delta, t.faces[kids[0]].id, fp.id, w, "lone triangle child");
        }
        auto e = best_ear(g, t, p, kids, promised_k(Config::J, delta));
        return finish(g, Config::J, delta, t.faces[e.child].id, fp.id, e.w, "two triangle children");
    }
    for (int s : kids) {
        const Face& fs = t.faces[s];
        if (!touches(fs, gf.ab.first) && !touches(fs, gf.ab.second)) {
            auto w = best_of(g, ears(t, s, t.separating_edge(s, p)), promised_k(Config::C, delta));
            return finish(g, Config::C, delta, fs.id, fp.id, w, "triangle away from the parent chord");
        }
    }
    std::vector<int> parent_deg2;
    for (int v : fp.boundary)
        if (g.degree(v) == 2) parent_deg2.push_back(v);
    if (fp.size() >= 5)
        return finish(g, Config::G, delta, fp.id, fp.id, best_of(g, parent_deg2, promised_k(Config::G, delta)),
                      "degree-2 vertex of a large parent");
    // Four-sided parent, every child on the chord: try both endpoints of ab.
    std::vector<int> low_side;
    for (int s : kids) {
        const Face& fs = t.faces[s];
        for (int x : {gf.ab.first, gf.ab.second})
            if (touches(fs, x) && g.degree(x) <= 6) {
                low_side.push_back(s);
                break;
            }
    }
    if (!low_side.empty()) {
        auto e = best_ear(g, t, p, low_side, promised_k(Config::E, delta));
        return finish(g, Config::E, delta, t.faces[e.child].id, fp.id, e.w,
                      "triangle on a chord endpoint of degree at most 6");
    }
    return finish(g, Config::F, delta, fp.id, fp.id, best_of(g, parent_deg2, promised_k(Config::F, delta)),
                  "degree-2 vertex of a four-sided parent");
}

ConfigurationLabel low_degree_vertex(const Graph& g) {
    const int delta = g.max_degree();
    if (delta > 4) throw InvalidInput("low-degree scan needs max degree at most 4");
    auto make = [&](std::optional<KVertexWitness> w, int k, const std::string& rule) {
        if (!w) throw InternalError("low-degree scan found no candidate for rule: " + rule);
        ConfigurationLabel l;
        l.label = Config::SimpleBlock;
        l.promised_k = k;
        l.witness = *w;
        l.witness.k = k;
        l.rule = rule;
        if (!witness_holds(g, l.witness))
            throw InternalError("low-degree rule '" + rule + "' failed at vertex " + std::to_string(w->vertex));
        return l;
    };
    std::vector<int> low;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) <= 1) low.push_back(v);
    if (!low.empty()) return make(best_of(g, low, delta), delta, "vertex of degree at most 1");
    if (delta <= 2) {
        std::vector<int> all(static_cast<std::size_t>(g.n()));
        for (int v = 0; v < g.n(); ++v) all[v] = v;
        return make(best_of(g, all, 4), 4, "cycle vertex");
    }
    // Leaf faces of leaf blocks whose ears are not cutvertices.
    struct Cand {
        KVertexWitness w;
        int k;
        int face;
        std::string rule;
    };
    std::optional<Cand> best;
    auto offer = [&](const std::vector<int>& cands, int k, int face, const char* rule) {
        auto w = best_of(g, cands, k);
        if (w && (!best || w->dist2_degree < best->w.dist2_degree)) best = Cand{*w, k, face, rule};
    };
    for (const LeafBlock& lb : leaf_blocks(g)) {
        const DualTree& t = lb.dual.tree;
        for (int s = 0; s < t.size(); ++s) {
            if (t.size() > 1 && t.degree(s) != 1) continue;
            std::optional<Edge> chord;
            if (t.size() > 1) chord = t.separating_edge(s, t.adj[s][0]);
            std::vector<int> ear;
            for (int v : t.faces[s].boundary) {
                if (chord && (v == chord->first || v == chord->second)) continue;
                if (!chord && lb.cutvertex && v == *lb.cutvertex) continue;
                ear.push_back(v);
            }
            bool clean = std::all_of(ear.begin(), ear.end(), [&](int v) { return g.degree(v) == 2; });
            if (!clean) continue;
            // Anchors are the chord endpoints, or the cutvertex for a lone cycle.
            std::vector<int> anchors;
            if (chord) anchors = {chord->first, chord->second};
            else if (lb.cutvertex) anchors = {*lb.cutvertex};
            const int sz = t.faces[s].size();
            if (sz >= 5) {
                std::vector<int> inner;
                for (int v : ear)
                    if (std::none_of(anchors.begin(), anchors.end(), [&](int a) { return g.has_edge(v, a); }))
                        inner.push_back(v);
                offer(inner, 4, t.faces[s].id, "leaf face with at least five sides");
            } else if (sz == 4) {
                offer(ear, delta + 1, t.faces[s].id, "leaf face with four sides");
            } else {
                offer(ear, 2 * delta - 2, t.faces[s].id, "leaf triangle");
            }
        }
    }
    if (!best) throw InternalError("low-degree scan found no clean leaf face");
    auto l = make(best->w, best->k, best->rule);
    l.face = best->face;
    return l;
}

int target_inductiveness(int delta, bool chordal) { return table1_bounds(delta, chordal).ind; }

ReductionResult inductive_ordering_square(const Graph& g, ReductionOptions opts) {
    auto op = is_outerplanar(g);
    if (!op.outerplanar) throw InvalidInput("not outerplanar: " + op.reason);
    ReductionResult res;
    res.chordal = is_chordal_outerplanar(g);
    res.target_k = target_inductiveness(g.max_degree(), res.chordal);

    Graph h = g;
    std::vector<int> orig(static_cast<std::size_t>(g.n()));
    for (int v = 0; v < g.n(); ++v) orig[v] = v;
    std::vector<int> order;
    while (h.n() > 0) {
        ReductionStep step;
        step.delta = h.max_degree();
        int u = -1;
        for (int v = 0; v < h.n(); ++v)
            if (h.degree(v) == 0) {
                u = v;
                break;
            }
        if (u >= 0) {
            step.rule = "isolated vertex";
        } else {
            ConfigurationLabel lab;
            if (step.delta >= 5) {
                auto lbs = leaf_blocks(h);
                const LeafBlock& lb = lbs.front();
                GoodFace gf = good_face(h, lb);
                if (gf.simple) {
                    lab = simple_leaf_block_vertex(h, lb, step.delta);
                } else if (step.delta >= 7) {
                    lab = classify_delta7(h, lb, gf);
                    if (opts.cross_check) classify_delta5(h, lb, gf);
                } else {
                    lab = classify_delta5(h, lb, gf);
                }
                step.label = lab.label;
            } else {
                lab = low_degree_vertex(h);
            }
            u = lab.witness.vertex;
            step.rule = lab.rule;
            step.promised_k = lab.witness.k;
        }
        step.dist2_degree = distance2_degree(h, u);
        step.vertex = orig[u];
        if (step.dist2_degree > res.target_k)
            throw InternalError("step removes vertex " + std::to_string(step.vertex) + " with distance-2 degree " +
                                std::to_string(step.dist2_degree) + " above the target " +
                                std::to_string(res.target_k));
        order.push_back(orig[u]);
        if (h.degree(u) == 0) {
            std::vector<int> keep;
            for (int v = 0; v < h.n(); ++v)
                if (v != u) keep.push_back(v);
            auto sub = induced_subgraph(h, keep);
            std::vector<int> next;
            for (int v : sub.to_old) next.push_back(orig[v]);
            h = std::move(sub.graph);
            orig = std::move(next);
        } else {
            int v = h.neighbors(u).front();
            step.merged_into = orig[v];
            const int before = h.max_degree();
            auto c = contract_edge(h, u, v);
            if (c.graph.max_degree() > before)
                throw InternalError("contraction raised the max degree");
            std::vector<int> next;
            for (int w : c.to_old) next.push_back(orig[w]);
            h = std::move(c.graph);
            orig = std::move(next);
        }
        res.trace.push_back(std::move(step));
    }
    res.ordering = make_ordering(square(g), order);
    if (res.ordering.k > res.target_k)
        throw InternalError("ordering of the square has back-degree " + std::to_string(res.ordering.k) +
                            " above the target " + std::to_string(res.target_k));
    return res;
}

}  // namespace outersq
