#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "anq/ar_metric.hpp"
#include "anq/error.hpp"
#include "anq/extended.hpp"

namespace anq {

template <class T>
struct Matching {
    Ext value;
    std::vector<std::pair<T, T>> pairs;
    std::vector<T> unmatched1;
    std::vector<T> unmatched2;
};

namespace detail {

// Kuhn's augmenting paths; left side size L, adjacency over right side size R.
class BipartiteMatcher {
public:
    explicit BipartiteMatcher(const std::vector<std::vector<int>>& adj, int R)
        : adj_(adj), match_r_(R, -1), match_l_(adj.size(), -1) {}

    int run() {
        int size = 0;
        for (int u = 0; u < static_cast<int>(adj_.size()); ++u) {
            seen_.assign(match_r_.size(), 0);
            if (augment(u)) ++size;
        }
        return size;
    }
    const std::vector<int>& match_l() const { return match_l_; }

private:
    bool augment(int u) {
        for (int v : adj_[u]) {
            if (seen_[v]) continue;
            seen_[v] = 1;
            if (match_r_[v] < 0 || augment(match_r_[v])) {
                match_r_[v] = u;
                match_l_[u] = v;
                return true;
            }
        }
        return false;
    }

    const std::vector<std::vector<int>>& adj_;
    std::vector<int> match_r_, match_l_;
    std::vector<char> seen_;
};

// Cached generator values for a pair of barcodes.
struct CostTable {
    std::vector<std::vector<Ext>> d;  // d[i][j]
    std::vector<Ext> w1, w2;
};

// Augmented graph at threshold t: left = bars of B1 then phantoms of B2,
// right = bars of B2 then phantoms of B1.  forced[i] pins left bar i to a
// right vertex (-1 = free).
inline bool perfect_at(const CostTable& c, const Ext& t, const std::vector<int>& forced) {
    const int n1 = static_cast<int>(c.w1.size()), n2 = static_cast<int>(c.w2.size());
    const int N = n1 + n2;
    std::vector<char> taken(N, 0);
    for (int i = 0; i < n1; ++i)
        if (forced[i] >= 0) taken[forced[i]] = 1;
    std::vector<std::vector<int>> adj(N);
    for (int i = 0; i < n1; ++i) {
        auto ok = [&](int v) {
            if (v < n2) return c.d[i][v] <= t;
            return v - n2 == i && c.w1[i] <= t;
        };
        if (forced[i] >= 0) {
            if (!ok(forced[i])) return false;
            continue;
        }
        for (int v = 0; v < N; ++v)
            if (!taken[v] && ok(v)) adj[i].push_back(v);
    }
    for (int p = 0; p < n2; ++p) {
        if (!taken[p] && c.w2[p] <= t) adj[n1 + p].push_back(p);
        for (int q = 0; q < n1; ++q)
            if (!taken[n2 + q]) adj[n1 + p].push_back(n2 + q);
    }
    int need = N;
    for (int i = 0; i < n1; ++i)
        if (forced[i] >= 0) --need;
    BipartiteMatcher m(adj, N);
    return m.run() == need;
}

}  // namespace detail

template <class T>
Matching<T> bottleneck(std::vector<T> b1, std::vector<T> b2, const Generators<T>& g) {
    std::sort(b1.begin(), b1.end());
    std::sort(b2.begin(), b2.end());
    const int n1 = static_cast<int>(b1.size()), n2 = static_cast<int>(b2.size());
    detail::CostTable c;
    c.d.assign(n1, std::vector<Ext>(n2));
    std::vector<Ext> cand{Ext(0)};
    for (int i = 0; i < n1; ++i) {
        c.w1.push_back(g.W(b1[i]));
        cand.push_back(c.w1.back());
        for (int j = 0; j < n2; ++j) {
            c.d[i][j] = g.d(b1[i], b2[j]);
            cand.push_back(c.d[i][j]);
        }
    }
    for (int j = 0; j < n2; ++j) {
        c.w2.push_back(g.W(b2[j]));
        cand.push_back(c.w2.back());
    }
    cand.push_back(kInf);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    std::vector<int> free(n1, -1);
    std::size_t lo = 0, hi = cand.size() - 1;  // cand[hi] = inf is always feasible
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        if (detail::perfect_at(c, cand[mid], free)) hi = mid;
        else lo = mid + 1;
    }
    const Ext t = cand[lo];

    // Lexicographically smallest realizing assignment: each bar of B1 in order
    // takes the first partner (B2 bars in order, then "unmatched") that still
    // admits a perfect augmented matching.
    std::vector<int> forced(n1, -1);
    std::vector<char> used(n2, 0);
    for (int i = 0; i < n1; ++i) {
        for (int v = 0; v <= n2; ++v) {
            if (v < n2 && used[v]) continue;
            forced[i] = v < n2 ? v : n2 + i;
            if (detail::perfect_at(c, t, forced)) break;
            forced[i] = -1;
        }
        if (forced[i] < n2 && forced[i] >= 0) used[forced[i]] = 1;
    }
    Matching<T> out;
    out.value = t;
    for (int i = 0; i < n1; ++i) {
        if (forced[i] >= 0 && forced[i] < n2) out.pairs.push_back({b1[i], b2[forced[i]]});
        else out.unmatched1.push_back(b1[i]);
    }
    for (int j = 0; j < n2; ++j)
        if (!used[j]) out.unmatched2.push_back(b2[j]);
    return out;
}

inline Matching<Interval> bottleneck(const Barcode& b1, const Barcode& b2, const MetricGenerators& g) {
    if (!(b1.orientation == b2.orientation))
        throw Error(Errc::UniverseMismatch, "barcodes live over different orientations");
    return bottleneck(b1.bars, b2.bars, g);
}

// Direct enumeration of partial bijections.
template <class T>
Ext brute_force_bottleneck(const std::vector<T>& b1, const std::vector<T>& b2, const Generators<T>& g) {
    if (b1.size() + b2.size() > 12) throw Error(Errc::TooLarge, "brute force is limited to 12 bars");
    const int n1 = static_cast<int>(b1.size()), n2 = static_cast<int>(b2.size());
    std::vector<Ext> w1, w2;
    std::vector<std::vector<Ext>> d(n1, std::vector<Ext>(n2));
    for (int i = 0; i < n1; ++i) {
        w1.push_back(g.W(b1[i]));
        for (int j = 0; j < n2; ++j) d[i][j] = g.d(b1[i], b2[j]);
    }
    for (int j = 0; j < n2; ++j) w2.push_back(g.W(b2[j]));
    Ext best = kInf;
    std::vector<char> used(n2, 0);
    auto rec = [&](auto&& self, int i, Ext height) -> void {
        if (height >= best) return;
        if (i == n1) {
            for (int j = 0; j < n2; ++j)
                if (!used[j]) height = std::max(height, w2[j]);
            best = std::min(best, height);
            return;
        }
        self(self, i + 1, std::max(height, w1[i]));
        for (int j = 0; j < n2; ++j) {
            if (used[j]) continue;
            used[j] = 1;
            self(self, i + 1, std::max(height, d[i][j]));
            used[j] = 0;
        }
    };
    rec(rec, 0, Ext(0));
    return best;
}

// d'(s,t) = min{d(s,t), max(W(s), W(t))}; same bottleneck distance.
template <class T>
Generators<T> minimal_generators(const Generators<T>& g) {
    return {g.name + "-min",
            [g](const T& s, const T& t) { return std::min(g.d(s, t), std::max(g.W(s), g.W(t))); }, g.W};
}

template <class T>
struct DeltaViolation {
    T f;
    T g;
    Ext width_gap;
    Ext d;
};

// Pairs with |W(f) - W(g)| > d(f, g).  Infinite widths compare as equal to each
// other; a finite/infinite mix is a violation unless d is infinite.
template <class T>
std::vector<DeltaViolation<T>> check_delta_ineq(const Generators<T>& g, const std::vector<T>& universe) {
    std::vector<DeltaViolation<T>> out;
    std::vector<Ext> w;
    for (const auto& f : universe) w.push_back(g.W(f));
    for (std::size_t a = 0; a < universe.size(); ++a)
        for (std::size_t b = a + 1; b < universe.size(); ++b) {
            Ext d = g.d(universe[a], universe[b]);
            Ext gap;
            if (w[a].is_inf() && w[b].is_inf()) gap = 0;
            else if (w[a].is_inf() || w[b].is_inf()) gap = kInf;
            else gap = w[a] > w[b] ? w[a] - w[b] : w[b] - w[a];
            if (gap > d) out.push_back({universe[a], universe[b], gap, d});
        }
    return out;
}

}  // namespace anq
