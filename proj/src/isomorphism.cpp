#include "outersq/isomorphism.hpp"

#include <algorithm>
#include <numeric>

namespace outersq {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
    // splitmix64 finalizer over the combined value
    std::uint64_t z = h ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

std::vector<std::uint64_t> refined_colors(const Graph& g) {
    const int n = g.n();
    std::vector<std::uint64_t> col(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) col[v] = mix(0x51ed270b27a3f1ULL, static_cast<std::uint64_t>(g.degree(v)));
    std::vector<std::uint64_t> next(col.size()), nb;
    for (int round = 0; round < n; ++round) {
        for (int v = 0; v < n; ++v) {
            nb.clear();
            for (int w : g.neighbors(v)) nb.push_back(col[w]);
            std::sort(nb.begin(), nb.end());
            std::uint64_t h = col[v];
            for (auto x : nb) h = mix(h, x);
            next[v] = h;
        }
        // Stop once the partition no longer splits.
        auto classes = [](const std::vector<std::uint64_t>& c) {
            std::vector<std::uint64_t> s(c);
            std::sort(s.begin(), s.end());
            return std::unique(s.begin(), s.end()) - s.begin();
        };
        bool stable = classes(next) == classes(col);
        col.swap(next);
        if (stable) break;
    }
    return col;
}

std::uint64_t invariant_hash(const Graph& g) {
    auto c = refined_colors(g);
    std::sort(c.begin(), c.end());
    std::uint64_t h = mix(static_cast<std::uint64_t>(g.n()), static_cast<std::uint64_t>(g.edge_count()));
    for (auto x : c) h = mix(h, x);
    return h;
}

namespace {

struct IsoSearch {
    const Graph& a;
    const Graph& b;
    std::vector<std::uint64_t> ca, cb;
    std::vector<int> order;  // vertices of a in search order
    std::vector<int> map, inv;

    bool extend(std::size_t i) {
        if (i == order.size()) return true;
        int v = order[i];
        for (int w = 0; w < b.n(); ++w) {
            if (inv[w] >= 0 || cb[w] != ca[v]) continue;
            bool ok = true;
            for (int x : a.neighbors(v))
                if (map[x] >= 0 && !b.has_edge(w, map[x])) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            // Mapped non-neighbors must stay non-adjacent; degrees already match.
            int mapped_nb = 0, mapped_nb_b = 0;
            for (int x : a.neighbors(v))
                if (map[x] >= 0) ++mapped_nb;
            for (int y : b.neighbors(w))
                if (inv[y] >= 0) ++mapped_nb_b;
            if (mapped_nb != mapped_nb_b) continue;
            map[v] = w;
            inv[w] = v;
            if (extend(i + 1)) return true;
            map[v] = -1;
            inv[w] = -1;
        }
        return false;
    }
};

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.n() != b.n() || a.edge_count() != b.edge_count()) return false;
    IsoSearch s{a, b, refined_colors(a), refined_colors(b), {}, {}, {}};
    {
        auto x = s.ca, y = s.cb;
        std::sort(x.begin(), x.end());
        std::sort(y.begin(), y.end());
        if (x != y) return false;
    }
    // Connected order, rarest color class first.
    const int n = a.n();
    std::vector<int> freq_rank(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v)
        freq_rank[v] = static_cast<int>(std::count(s.ca.begin(), s.ca.end(), s.ca[v]));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    while (static_cast<int>(s.order.size()) < n) {
        int start = -1;
        for (int v = 0; v < n; ++v)
            if (!seen[v] && (start < 0 || freq_rank[v] < freq_rank[start])) start = v;
        seen[start] = true;
        s.order.push_back(start);
        for (std::size_t i = s.order.size() - 1; i < s.order.size(); ++i)
            for (int w : a.neighbors(s.order[i]))
                if (!seen[w]) {
                    seen[w] = true;
                    s.order.push_back(w);
                }
    }
    s.map.assign(static_cast<std::size_t>(n), -1);
    s.inv.assign(static_cast<std::size_t>(n), -1);
    return s.extend(0);
}

}  // namespace outersq
