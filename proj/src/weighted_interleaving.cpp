#include "anq/weighted_interleaving.hpp"

#include <algorithm>
#include <numeric>

#include "anq/error.hpp"

namespace anq {

bool suspended_leq(const Orientation& o, int x, int y) {
    if (y == kTop) return true;
    if (x == kTop) return false;
    return o.leq(x, y);
}

std::vector<Translation> enumerate_translations(const Orientation& o) {
    const int n = o.n();
    std::vector<std::vector<int>> up(n + 1);
    for (int v = 1; v <= n; ++v) {
        for (int u = 1; u <= n; ++u)
            if (o.leq(v, u)) up[v].push_back(u);
        up[v].push_back(kTop);
    }
    std::vector<Translation> out;
    Translation cur{std::vector<int>(n + 1, kTop)};
    auto rec = [&](auto&& self, int v) -> void {
        if (v > n) {
            out.push_back(cur);
            return;
        }
        for (int u : up[v]) {
            // the only Hasse arrow to an earlier vertex joins v-1 and v
            if (v > 1) {
                bool ok = o.rises_after(v - 1) ? suspended_leq(o, cur.map[v - 1], u)
                                               : suspended_leq(o, u, cur.map[v - 1]);
                if (!ok) continue;
            }
            cur.map[v] = u;
            self(self, v + 1);
        }
        cur.map[v] = kTop;
    };
    rec(rec, 1);
    return out;
}

Ext translation_height(const std::vector<std::vector<Ext>>& dist, const Translation& t) {
    Ext h = 0;
    for (std::size_t x = 1; x < t.map.size(); ++x) h = std::max(h, dist[x][t.map[x]]);
    return h;
}

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int u) {
        while (p[u] != u) u = p[u] = p[p[u]];
        return u;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

bool member(const std::optional<Interval>& I, int v) { return v != kTop && I && I->contains(v); }

}  // namespace

// Components of the two morphisms are scalars; a thin-module interleaving exists
// iff one exists with every scalar in {0,1} (rescale any nonzero value to 1).
// Naturality along Hasse arrows glues scalars into classes or forces them to 0;
// the two triangle identities demand products equal to 1 or to 0.
bool interleaved(const Orientation& o, const Translation& t, const std::optional<Interval>& I,
                 const std::optional<Interval>& J) {
    const int n = o.n();
    // node 0 is the constant zero; phi_x -> x, psi_x -> n + x
    UnionFind uf(2 * n + 1);
    auto var = [&](bool is_phi, int x) -> int {
        const auto& A = is_phi ? I : J;
        const auto& B = is_phi ? J : I;
        if (x == kTop || !member(A, x) || !member(B, t(x))) return 0;
        return is_phi ? x : n + x;
    };
    for (bool is_phi : {true, false}) {
        const auto& A = is_phi ? I : J;
        const auto& B = is_phi ? J : I;
        for (int k = 1; k < n; ++k) {
            int lo = o.rises_after(k) ? k : k + 1;
            int hi = o.rises_after(k) ? k + 1 : k;
            // B(t lo <= t hi) * m_lo == m_hi * A(lo <= hi)
            bool c1 = member(B, t(lo)) && member(B, t(hi));
            bool c2 = member(A, lo) && member(A, hi);
            uf.unite(c1 ? var(is_phi, lo) : 0, c2 ? var(is_phi, hi) : 0);
        }
    }
    std::vector<char> one(2 * n + 1, 0);
    std::vector<std::pair<int, int>> zero_products;
    for (bool is_phi : {true, false}) {
        const auto& A = is_phi ? I : J;
        for (int x = 1; x <= n; ++x) {
            int p = var(is_phi, x);
            int y = t(x);
            int q = y == kTop ? 0 : var(!is_phi, y);
            bool want = member(A, x) && member(A, y == kTop ? kTop : t(y));
            if (want) {
                one[uf.find(p)] = 1;
                one[uf.find(q)] = 1;
            } else {
                zero_products.push_back({p, q});
            }
        }
    }
    if (one[uf.find(0)]) return false;
    for (auto [p, q] : zero_products)
        if (one[uf.find(p)] && one[uf.find(q)]) return false;
    return true;
}

EscapePair escapes(const Valley& v, const WeightConfig& w) {
    if (w.a != 2) throw Error(Errc::WeightANotTwo, "closed-form escapes assume a = 2");
    if (!v.left_sink || !v.right_sink || v.t_short < 1)
        throw Error(Errc::EquiorientedValley, "escapes need a valley with two sides");
    const int T = v.t_short, S = v.s_long, b = w.b;
    EscapePair e;
    e.eps = 2 * (T - 1) + b;
    const int m = 2 * S + b;
    if (b >= 2 * S) e.cap_e = b;
    else if (m % 4 == 0) e.cap_e = m / 2;
    else if (m % 4 == 2) e.cap_e = m / 2 + 1;
    else e.cap_e = (m + 1) / 2;
    return e;
}

namespace {

void check_weight(const WeightConfig& w) {
    if (w.a < 1 || w.b < 1) throw Error(Errc::InvalidWeight, "weights must be positive");
}

}  // namespace

TranslationOracle::TranslationOracle(const Orientation& o, const WeightConfig& w) : o_(o) {
    check_weight(w);
    if (o.n() > 8) throw Error(Errc::TooLarge, "translation enumeration is limited to n <= 8");
    auto dist = weighted_dist_table(o, w);
    for (auto& t : enumerate_translations(o)) sorted_.push_back({translation_height(dist, t), std::move(t)});
    std::stable_sort(sorted_.begin(), sorted_.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
}

Ext TranslationOracle::d(const std::optional<Interval>& I, const std::optional<Interval>& J) const {
    if (I) validate(o_, *I);
    if (J) validate(o_, *J);
    for (const auto& [h, t] : sorted_)
        if (interleaved(o_, t, I, J)) return h;
    return kInf;
}

Ext d_i_oracle(const Orientation& o, const WeightConfig& w, const std::optional<Interval>& s,
               const std::optional<Interval>& t) {
    return TranslationOracle(o, w).d(s, t);
}

namespace {

bool dominated(const Translation& a, const Translation& b, const Orientation& o) {
    for (std::size_t x = 1; x < a.map.size(); ++x)
        if (!suspended_leq(o, a.map[x], b.map[x])) return false;
    return true;
}

}  // namespace

WeightedInterleaving::WeightedInterleaving(const Orientation& o, const WeightConfig& w)
    : o_(o), w_(w), wd_(wedge_decompose(o)) {
    check_weight(w);
    for (const auto& v : wd_.valleys) {
        Local L{v, Orientation(o.word().substr(v.lo - 1, v.hi - v.lo)), {}};
        auto dist = weighted_dist_table(L.sub, w);
        std::vector<std::pair<Ext, Translation>> all;
        for (auto& t : enumerate_translations(L.sub)) all.push_back({translation_height(dist, t), std::move(t)});
        std::stable_sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Translation> frontier;
        for (std::size_t k = 0; k < all.size();) {
            std::size_t e = k;
            while (e < all.size() && all[e].first == all[k].first) ++e;
            std::vector<Translation> merged = frontier;
            for (std::size_t q = k; q < e; ++q) merged.push_back(all[q].second);
            frontier.clear();
            for (std::size_t a = 0; a < merged.size(); ++a) {
                bool keep = true;
                for (std::size_t b = 0; b < merged.size() && keep; ++b) {
                    if (a == b) continue;
                    if (dominated(merged[a], merged[b], L.sub) &&
                        (!(merged[a] == merged[b]) || b < a))
                        keep = false;
                }
                if (keep) frontier.push_back(merged[a]);
            }
            L.levels.push_back({all[k].first, frontier});
            k = e;
        }
        locals_.push_back(std::move(L));
    }
}

Ext WeightedInterleaving::valley_d(std::size_t k, const std::optional<Interval>& s,
                                   const std::optional<Interval>& t) const {
    const Local& L = locals_[k];
    auto local = [&](const std::optional<Interval>& m) -> std::optional<Interval> {
        if (!m) return std::nullopt;
        auto r = restrict(*m, L.valley);
        if (!r) return std::nullopt;
        return Interval{r->x - L.valley.lo + 1, r->y - L.valley.lo + 1};
    };
    auto a = local(s), b = local(t);
    if (a == b) return 0;
    // whole valley against zero: the escape formula
    if (w_.a == 2 && L.valley.left_sink && L.valley.right_sink && L.valley.t_short >= 1) {
        const Interval full{1, L.sub.n()};
        if ((a == full && !b) || (b == full && !a)) return escapes(L.valley, w_).height();
    }
    for (const auto& lvl : L.levels)
        for (const auto& tr : lvl.maximal)
            if (interleaved(L.sub, tr, a, b)) return lvl.height;
    return kInf;
}

Ext WeightedInterleaving::d_opt(const std::optional<Interval>& s, const std::optional<Interval>& t) const {
    if (s) validate(o_, *s);
    if (t) validate(o_, *t);
    Ext best = 0;
    for (std::size_t k = 0; k < locals_.size(); ++k) best = std::max(best, valley_d(k, s, t));
    return best;
}

Ext WeightedInterleaving::d(const Interval& s, const Interval& t) const { return d_opt(s, t); }
Ext WeightedInterleaving::w(const Interval& s) const { return d_opt(s, std::nullopt); }

Ext w_i(const Orientation& o, const WeightConfig& w, const Interval& s) {
    return WeightedInterleaving(o, w).w(s);
}

Ext d_i(const Orientation& o, const WeightConfig& w, const Interval& s, const Interval& t) {
    return WeightedInterleaving(o, w).d(s, t);
}

MetricGenerators wil_generators(std::shared_ptr<const WeightedInterleaving> wil) {
    const auto& w = wil->weight();
    return {"wil(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")",
            [wil](const Interval& s, const Interval& t) { return wil->d(s, t); },
            [wil](const Interval& s) { return wil->w(s); }};
}

MetricGenerators wil_generators(const Orientation& o, const WeightConfig& w) {
    return wil_generators(std::make_shared<const WeightedInterleaving>(o, w));
}

}  // namespace anq
