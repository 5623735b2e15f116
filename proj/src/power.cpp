#include "outersq/power.hpp"

#include <algorithm>
#include <numeric>

namespace outersq {

Graph square(const Graph& g) {
    Graph sq(g.n());
    for (int v = 0; v < g.n(); ++v) {
        const auto& nb = g.neighbors(v);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            sq.add_edge(v, nb[i]);
            for (std::size_t j = i + 1; j < nb.size(); ++j) sq.add_edge(nb[i], nb[j]);
        }
    }
    return sq;
}

std::vector<int> distance2_neighbors(const Graph& g, int v) {
    std::vector<int> out;
    for (int w : g.neighbors(v)) {
        out.push_back(w);
        for (int x : g.neighbors(w))
            if (x != v) out.push_back(x);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

int distance2_degree(const Graph& g, int v) {
    return static_cast<int>(distance2_neighbors(g, v).size());
}

InductiveOrdering make_ordering(const Graph& g, std::vector<int> order) {
    InductiveOrdering ord;
    ord.order = std::move(order);
    const int n = g.n();
    std::vector<int> pos(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < static_cast<int>(ord.order.size()); ++i) pos[ord.order[i]] = i;
    ord.back_degrees.assign(ord.order.size(), 0);
    for (int i = 0; i < static_cast<int>(ord.order.size()); ++i) {
        for (int w : g.neighbors(ord.order[i]))
            if (pos[w] > i) ++ord.back_degrees[i];
        ord.k = std::max(ord.k, ord.back_degrees[i]);
    }
    return ord;
}

bool ordering_is_valid(const Graph& g, const InductiveOrdering& ord) {
    const int n = g.n();
    if (static_cast<int>(ord.order.size()) != n || static_cast<int>(ord.back_degrees.size()) != n)
        return false;
    std::vector<int> sorted(ord.order);
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i)
        if (sorted[i] != i) return false;
    auto fresh = make_ordering(g, ord.order);
    return fresh.back_degrees == ord.back_degrees && ord.k >= fresh.k;
}

Degeneracy degeneracy(const Graph& g) {
    const int n = g.n();
    std::vector<int> deg(static_cast<std::size_t>(n));
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
        gone[best] = true;
        order.push_back(best);
        for (int w : g.neighbors(best))
            if (!gone[w]) --deg[w];
    }
    Degeneracy d;
    d.ordering = make_ordering(g, std::move(order));
    d.k = d.ordering.k;
    return d;
}

Coloring greedy_color(const Graph& g, const InductiveOrdering& ord) {
    Coloring c;
    c.colors.assign(static_cast<std::size_t>(g.n()), 0);
    std::vector<char> taken;
    for (auto it = ord.order.rbegin(); it != ord.order.rend(); ++it) {
        int v = *it;
        taken.assign(static_cast<std::size_t>(g.degree(v)) + 2, 0);
        for (int w : g.neighbors(v))
            if (c.colors[w] > 0 && c.colors[w] < static_cast<int>(taken.size())) taken[c.colors[w]] = 1;
        int col = 1;
        while (taken[col]) ++col;
        c.colors[v] = col;
        c.palette_size = std::max(c.palette_size, col);
    }
    return c;
}

Coloring simplicial_greedy(const Graph& g) { return greedy_color(g, degeneracy(g).ordering); }

namespace {

struct AdjMatrix {
    int n;
    std::vector<char> bits;
    explicit AdjMatrix(const Graph& g) : n(g.n()), bits(static_cast<std::size_t>(n) * n, 0) {
        for (auto [u, v] : g.edges()) {
            bits[static_cast<std::size_t>(u) * n + v] = 1;
            bits[static_cast<std::size_t>(v) * n + u] = 1;
        }
    }
    [[nodiscard]] bool operator()(int u, int v) const { return bits[static_cast<std::size_t>(u) * n + v]; }
};

class CliqueSearch {
public:
    CliqueSearch(const Graph& g, std::uint64_t budget) : g_(g), adj_(g), budget_(budget) {}

    CliqueResult run() {
        std::vector<int> p(static_cast<std::size_t>(g_.n()));
        std::iota(p.begin(), p.end(), 0);
        // Initial candidate order: high degree last, so it is expanded first.
        std::stable_sort(p.begin(), p.end(), [&](int a, int b) { return g_.degree(a) < g_.degree(b); });
        std::vector<int> r;
        expand(r, p);
        CliqueResult out;
        out.omega = static_cast<int>(best_.size());
        out.vertices = best_;
        std::sort(out.vertices.begin(), out.vertices.end());
        out.nodes = nodes_;
        return out;
    }

private:
    void expand(std::vector<int>& r, std::vector<int> p) {
        if (++nodes_ > budget_) throw BudgetExceeded("clique search exceeded node budget");
        // Sequential greedy coloring of P gives an upper bound per prefix.
        std::vector<int> order, bound;
        std::vector<std::vector<int>> classes;
        for (int v : p) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                bool clash = false;
                for (int w : classes[c])
                    if (adj_(v, w)) {
                        clash = true;
                        break;
                    }
                if (!clash) break;
            }
            if (c == classes.size()) classes.emplace_back();
            classes[c].push_back(v);
        }
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                order.push_back(v);
                bound.push_back(static_cast<int>(c) + 1);
            }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (static_cast<int>(r.size()) + bound[i] <= static_cast<int>(best_.size())) return;
            int v = order[i];
            r.push_back(v);
            std::vector<int> np;
            for (int j = 0; j < i; ++j)
                if (adj_(v, order[j])) np.push_back(order[j]);
            if (np.empty()) {
                if (r.size() > best_.size()) best_ = r;
            } else {
                expand(r, std::move(np));
            }
            r.pop_back();
        }
    }

    const Graph& g_;
    AdjMatrix adj_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    std::vector<int> best_;
};

class ColorSearch {
public:
    ColorSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    // Finds a coloring with fewer than `best.palette_size` colors if one exists,
    // starting from the precolored clique.
    void run(const std::vector<int>& clique, Coloring& best, int lower) {
        const int n = g_.n();
        best_ = &best;
        lower_ = lower;
        colors_.assign(static_cast<std::size_t>(n), 0);
        width_ = best.palette_size + 2;
        count_.assign(static_cast<std::size_t>(n) * width_, 0);
        sat_.assign(static_cast<std::size_t>(n), 0);
        int used = 0;
        for (std::size_t i = 0; i < clique.size(); ++i) {
            assign(clique[i], static_cast<int>(i) + 1);
            used = static_cast<int>(i) + 1;
        }
        remaining_ = n - static_cast<int>(clique.size());
        search(used);
    }

    [[nodiscard]] std::uint64_t nodes() const { return nodes_; }

private:
    void assign(int v, int c) {
        colors_[v] = c;
        for (int w : g_.neighbors(v))
            if (count_[static_cast<std::size_t>(w) * width_ + c]++ == 0) ++sat_[w];
    }
    void unassign(int v) {
        int c = colors_[v];
        colors_[v] = 0;
        for (int w : g_.neighbors(v))
            if (--count_[static_cast<std::size_t>(w) * width_ + c] == 0) --sat_[w];
    }

    bool search(int used) {
        if (remaining_ == 0) {
            best_->colors = colors_;
            best_->palette_size = used;
            return used <= lower_;
        }
        // Highest saturation, then most uncolored neighbors, then lowest id.
        int v = -1, vs = -1, vd = -1;
        for (int x = 0; x < g_.n(); ++x) {
            if (colors_[x]) continue;
            int d = 0;
            for (int w : g_.neighbors(x))
                if (!colors_[w]) ++d;
            if (sat_[x] > vs || (sat_[x] == vs && d > vd)) {
                v = x;
                vs = sat_[x];
                vd = d;
            }
        }
        int limit = std::min(used + 1, best_->palette_size - 1);
        for (int c = 1; c <= limit; ++c) {
            if (count_[static_cast<std::size_t>(v) * width_ + c]) continue;
            if (++nodes_ > budget_) throw BudgetExceeded("coloring search exceeded node budget");
            assign(v, c);
            --remaining_;
            bool done = search(std::max(used, c));
            ++remaining_;
            unassign(v);
            if (done) return true;
            limit = std::min(limit, best_->palette_size - 1);
        }
        return false;
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    Coloring* best_ = nullptr;
    int lower_ = 0;
    int width_ = 0;
    int remaining_ = 0;
    std::vector<int> colors_;
    std::vector<int> count_;
    std::vector<int> sat_;
};

}  // namespace

CliqueResult exact_clique(const Graph& g, std::uint64_t budget) {
    if (g.n() == 0) return {};
    return CliqueSearch(g, budget).run();
}

ChromaticResult exact_chromatic(const Graph& g, std::uint64_t budget) {
    ChromaticResult out;
    if (g.n() == 0) return out;
    auto clique = exact_clique(g, budget);
    out.witness = simplicial_greedy(g);
    out.nodes = clique.nodes;
    if (out.witness.palette_size > clique.omega) {
        ColorSearch s(g, budget > clique.nodes ? budget - clique.nodes : 0);
        s.run(clique.vertices, out.witness, clique.omega);
        out.nodes += s.nodes();
    }
    out.chi = out.witness.palette_size;
    return out;
}

CliqueResult clique_outerplanar_square(const Graph& g, std::uint64_t budget) {
    if (g.max_degree() < 6) return exact_clique(square(g), budget);
    int best = 0;
    for (int v = 1; v < g.n(); ++v)
        if (g.degree(v) > g.degree(best)) best = v;
    CliqueResult out;
    out.vertices = g.neighbors(best);
    out.vertices.push_back(best);
    std::sort(out.vertices.begin(), out.vertices.end());
    out.omega = static_cast<int>(out.vertices.size());
    return out;
}

ColoringCheck validate_coloring(const Graph& g, const Coloring& c) {
    ColoringCheck out;
    for (int v = 0; v < g.n(); ++v)
        if (v >= static_cast<int>(c.colors.size()) || c.colors[v] <= 0) {
            out.status = ColoringStatus::Uncolored;
            out.uncolored = v;
            return out;
        }
    for (auto [u, v] : g.edges())
        if (c.colors[u] == c.colors[v]) {
            out.status = ColoringStatus::Conflict;
            out.conflict = {u, v};
            return out;
        }
    return out;
}

ChoosabilityBounds choosability_bounds(const Graph& g, std::uint64_t budget) {
    return {exact_chromatic(g, budget).chi, degeneracy(g).k + 1};
}

}  // namespace outersq
