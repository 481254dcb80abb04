#include "anq/stability.hpp"

#include <algorithm>

#include "anq/block_metric.hpp"
#include "anq/error.hpp"
#include "anq/weighted_interleaving.hpp"

namespace anq {

Ext singleton_distance(const MetricGenerators& g, const SingletonCase& c) {
    if (!c.t) return g.W(c.s);
    return std::min(g.d(c.s, *c.t), std::max(g.W(c.s), g.W(*c.t)));
}

namespace {

std::vector<SingletonCase> singleton_cases(int n) {
    auto bars = all_intervals(n);
    // singleton-vs-empty cases first, so ties report the simpler witness
    std::vector<SingletonCase> out;
    for (const auto& s : bars) out.push_back({s, std::nullopt});
    for (std::size_t a = 0; a < bars.size(); ++a)
        for (std::size_t b = a + 1; b < bars.size(); ++b) out.push_back({bars[a], bars[b]});
    return out;
}

// Cases with both sides zero or both infinite carry no ratio.
void fold(AuditReport& rep, const SingletonCase& c, const Ext& lhs, const Ext& rhs) {
    if (lhs == Ext(0) && rhs == Ext(0)) return;
    if (lhs.is_inf() && rhs.is_inf()) return;
    ++rep.cases;
    Ext ratio = lhs / rhs;
    if (!rep.witness || ratio > rep.max_ratio) {
        rep.max_ratio = ratio;
        rep.witness = c;
        rep.lhs_at_witness = lhs;
        rep.rhs_at_witness = rhs;
    }
}

void finish(AuditReport& rep) {
    if (!rep.witness) rep.max_ratio = 0;
    rep.holds = rep.max_ratio <= rep.constant_tested;
}

}  // namespace

AuditReport audit(const Orientation& o, const MetricGenerators& lhs, const MetricGenerators& rhs, const Ext& c,
                  const CaseFilter& filter) {
    AuditReport rep;
    rep.constant_tested = c;
    for (const auto& sc : singleton_cases(o.n())) {
        Ext l = singleton_distance(lhs, sc), r = singleton_distance(rhs, sc);
        if (filter && !filter(sc, l, r)) continue;
        fold(rep, sc, l, r);
    }
    finish(rep);
    return rep;
}

std::array<KindReport, 4> verify_blar_limit(int n, int r) {
    std::array<KindReport, 4> out;
    const std::array<ZZKind, 4> kinds{ZZKind::OO, ZZKind::CC, ZZKind::CO, ZZKind::OC};
    for (int k = 0; k < 4; ++k) {
        out[k].kind = kinds[k];
        out[k].lower.constant_tested = Ext(1, r);
        out[k].upper.constant_tested = kinds[k] == ZZKind::OO ? Ext(8 * r) : kinds[k] == ZZKind::CC ? Ext(2 * r)
                                                                                                  : Ext(4 * r);
    }
    for (const auto& o : zigzags(n)) {
        auto bl = block_generators(o);
        auto lim = ar_generators(o, ARVariant::rlimit(r));
        for (const auto& sc : singleton_cases(n)) {
            ZZKind ks = to_zz(o, sc.s).kind;
            if (sc.t && to_zz(o, *sc.t).kind != ks) continue;
            Ext b = singleton_distance(bl, sc), a = singleton_distance(lim, sc);
            if (ks == ZZKind::CC && b.is_inf()) continue;
            auto& rep = out[static_cast<int>(ks)];
            fold(rep.lower, sc, b, a);
            fold(rep.upper, sc, a, b);
        }
    }
    for (auto& k : out) {
        finish(k.lower);
        finish(k.upper);
    }
    return out;
}

std::optional<StabilityWitness> stability_violation(const Orientation& o, const WeightConfig& w) {
    WeightedInterleaving wil(o, w);
    auto ar = ar_generators(o, ARVariant::plain());
    auto bars = all_intervals(o.n());
    std::vector<Ext> war, wi;
    for (const auto& s : bars) {
        war.push_back(ar.W(s));
        wi.push_back(wil.w(s));
    }
    for (std::size_t a = 0; a < bars.size(); ++a)
        if (war[a] > wi[a]) return StabilityWitness{{bars[a], std::nullopt}, war[a], wi[a]};
    for (std::size_t a = 0; a < bars.size(); ++a)
        for (std::size_t b = a + 1; b < bars.size(); ++b) {
            Ext dar = std::min(ar.d(bars[a], bars[b]), std::max(war[a], war[b]));
            if (dar == Ext(0)) continue;
            Ext cap = std::max(wi[a], wi[b]);
            // the width cap alone settles it when it is already below the AR side
            Ext rhs = cap < dar ? cap : std::min(wil.d(bars[a], bars[b]), cap);
            if (rhs < dar) return StabilityWitness{{bars[a], bars[b]}, dar, rhs};
        }
    return std::nullopt;
}

const char* weight_kind_name(WeightKind k) {
    switch (k) {
        case WeightKind::Equioriented: return "Equioriented";
        case WeightKind::SmallS: return "SmallS";
        case WeightKind::ShallowCentral: return "ShallowCentral";
        case WeightKind::ShallowNonCentral: return "ShallowNonCentral";
        case WeightKind::Unclassified: return "Unclassified";
    }
    return "?";
}

int predicted_a(const Orientation& o) {
    auto st = stats(o);
    if (st.S <= 1) return 1;
    if (st.S == 2) {
        int doubles = 0;
        const auto& w = o.word();
        for (std::size_t k = 0; k < w.size();) {
            std::size_t e = k;
            while (e < w.size() && w[e] == w[k]) ++e;
            if (e - k == 2) ++doubles;
            k = e;
        }
        return doubles == 1 ? 1 : 2;
    }
    return 2;
}

std::optional<WeightConfig> sweep_min_weight(const Orientation& o, int b_max) {
    for (int a = 1; a <= 2; ++a)
        for (int b = 1; b <= b_max; ++b)
            if (!stability_violation(o, {a, b})) return WeightConfig{a, b};
    return std::nullopt;
}

WeightClass minimal_stable_weight(const Orientation& o) {
    auto st = stats(o);
    const int n = o.n();
    WeightClass wc;
    // A_2 is both; the zigzag rule is the one the sweep confirms there
    if (st.equioriented && !st.pure_zigzag) {
        wc.kind = WeightKind::Equioriented;
        wc.predicted = WeightConfig{2, 1};
    } else if (st.S < 3 || st.T == 1) {
        wc.kind = WeightKind::SmallS;
        wc.predicted = WeightConfig{predicted_a(o), n};
    } else if (st.shallow && st.central) {
        wc.kind = WeightKind::ShallowCentral;
        wc.predicted = WeightConfig{2, n - st.T};
    } else if (st.shallow) {
        wc.kind = WeightKind::ShallowNonCentral;
        wc.b_upper_bound = (2 * n - st.T - 2) / 2;
    } else {
        wc.kind = WeightKind::Unclassified;
        return wc;
    }
    wc.weight = sweep_min_weight(o, 2 * n);
    return wc;
}

namespace {

Interval mirror(const Interval& m, int n) { return {n + 1 - m.y, n + 1 - m.x}; }

// index of a deep valley whose left sink sits left of T, if any
std::optional<std::size_t> deep_left_valley(const WedgeDecomposition& wd) {
    for (std::size_t k = 0; k < wd.valleys.size(); ++k) {
        const auto& v = wd.valleys[k];
        if (v.t_short == wd.T && v.left_sink && v.right_sink && *v.left_sink < wd.T) return k;
    }
    return std::nullopt;
}

}  // namespace

AntiStableSearch antistable_search(const Orientation& o_in, const WeightConfig& w) {
    auto st = stats(o_in);
    if (!st.shallow) throw Error(Errc::NotShallow, "anti-stable pairs are defined for shallow orientations");
    AntiStableSearch res;
    Orientation o = o_in;
    auto wd = wedge_decompose(o);
    auto t = deep_left_valley(wd);
    if (!t) {
        o = o_in.mirrored();
        wd = wedge_decompose(o);
        t = deep_left_valley(wd);
        res.mirrored = true;
    }
    if (!t) return res;  // central: no candidate construction applies
    res.deep_valley = static_cast<int>(*t);
    const int n = o.n();
    const Valley& V = wd.valleys[*t];
    const int one_t = *V.left_sink, m_t = V.source, n_t = *V.right_sink;

    res.k_of_y.assign(n + 1, 0);
    for (int y = n_t + 1; y <= n; ++y) {
        // y lies in [m_i, m_{i+1})
        std::size_t i = 0;
        for (std::size_t k = 0; k < wd.valleys.size(); ++k)
            if (wd.valleys[k].source <= y) i = k;
        int k = 0;
        for (std::size_t j = *t + 1; j <= i; ++j) k = std::max(k, wd.valleys[j].t_short);
        res.k_of_y[y] = k;
    }
    auto theta = [&](int y) { return y > 2 * res.k_of_y[y] - 2 + w.b + one_t; };
    for (int y = n_t + 1; y <= n; ++y) {
        if (!theta(y)) continue;
        // the last vertex counts as both orientations
        bool up = y == n || o.rises_after(y);
        bool down = y == n || !o.rises_after(y);
        if (up && !res.y_u) res.y_u = y;
        if (down && !res.y_d) res.y_d = y;
    }

    auto ar = ar_generators(o, ARVariant::plain());
    WeightedInterleaving wil(o, w);
    auto wilg = wil_generators(std::make_shared<const WeightedInterleaving>(wil));
    auto make = [&](Interval s, Interval tau) {
        AntiStableCandidate c{s, tau, singleton_distance(ar, {s, tau}), singleton_distance(wilg, {s, tau})};
        if (res.mirrored) {
            c.sigma = mirror(c.sigma, n);
            c.tau = mirror(c.tau, n);
        }
        return c;
    };
    if (res.y_u) res.u_pair = make({one_t + 1, *res.y_u}, {m_t, n_t});
    if (res.y_d) {
        int right = n_t - res.k_of_y[*res.y_d];
        if (right >= m_t) res.d_pair = make({one_t + 1, *res.y_d}, {m_t, right});
    }
    for (const auto& c : {res.u_pair, res.d_pair}) {
        if (!c || c->gap() <= Ext(0)) continue;
        if (!res.best || c->gap() > res.best->gap()) res.best = c;
    }
    return res;
}

std::optional<AntiStableCandidate> maximal_antistable_pair(const Orientation& o, const WeightConfig& w) {
    return antistable_search(o, w).best;
}

std::vector<AntiStableCandidate> all_antistable_pairs(const Orientation& o, const WeightConfig& w) {
    auto ar = ar_generators(o, ARVariant::plain());
    auto wilg = wil_generators(o, w);
    auto bars = all_intervals(o.n());
    std::vector<AntiStableCandidate> out;
    for (std::size_t a = 0; a < bars.size(); ++a)
        for (std::size_t b = a + 1; b < bars.size(); ++b) {
            SingletonCase sc{bars[a], bars[b]};
            Ext x = singleton_distance(ar, sc), y = singleton_distance(wilg, sc);
            if (x > y) out.push_back({bars[a], bars[b], x, y});
        }
    std::stable_sort(out.begin(), out.end(), [](const auto& p, const auto& q) { return p.gap() > q.gap(); });
    return out;
}

}  // namespace anq
