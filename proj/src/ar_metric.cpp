#include "anq/ar_metric.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <queue>
#include <sstream>
#include <tuple>

#include "anq/error.hpp"

namespace anq {

ARQuiver build_ar_quiver(const Orientation& o) {
    ARQuiver q;
    q.orientation = o;
    q.axes = ar_axes(o);
    const int n = o.n();
    std::map<std::pair<int, int>, int> at;
    for (const auto& m : all_intervals(n)) q.nodes.push_back({m, q.axes.x_pos[m.x], q.axes.y_pos[m.y]});
    std::sort(q.nodes.begin(), q.nodes.end(),
              [](const auto& a, const auto& b) { return std::tie(a.gx, a.gy) < std::tie(b.gx, b.gy); });
    for (int k = 0; k < static_cast<int>(q.nodes.size()); ++k) at[{q.nodes[k].gx, q.nodes[k].gy}] = k;
    for (int k = 0; k < static_cast<int>(q.nodes.size()); ++k) {
        const auto& a = q.nodes[k];
        for (auto [dx, dy] : {std::pair{1, 0}, std::pair{0, 1}}) {
            auto it = at.find({a.gx + dx, a.gy + dy});
            if (it == at.end()) continue;
            int w = std::abs(a.bar.dim() - q.nodes[it->second].bar.dim());
            q.edges.push_back({std::min(k, it->second), std::max(k, it->second), w});
        }
    }
    std::sort(q.edges.begin(), q.edges.end(),
              [](const auto& a, const auto& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    return q;
}

int ARQuiver::node_index(const Interval& m) const {
    validate(orientation, m);
    for (int k = 0; k < static_cast<int>(nodes.size()); ++k)
        if (nodes[k].bar == m) return k;
    return -1;
}

std::string ARQuiver::to_dot() const {
    std::ostringstream os;
    os << "graph AR_" << orientation.word() << " {\n";
    for (int k = 0; k < static_cast<int>(nodes.size()); ++k) {
        const auto& nd = nodes[k];
        os << "  n" << k << " [label=\"[" << nd.bar.x << "," << nd.bar.y << "]\", dim=" << nd.bar.dim()
           << ", pos=\"" << nd.gx << "," << nd.gy << "!\"];\n";
    }
    for (const auto& e : edges) os << "  n" << e.u << " -- n" << e.v << " [weight=" << e.weight << "];\n";
    os << "}\n";
    return os.str();
}

int delta_ar(const Orientation& o, const Interval& s, const Interval& t) {
    validate(o, s);
    validate(o, t);
    const int n = o.n();
    // Left endpoint x > 1 is "rising" when x-1 < x; x = 1 is compatible with both kinds.
    auto x_compatible = [&](int a, int b) {
        return a == 1 || b == 1 || o.rises_after(a - 1) == o.rises_after(b - 1);
    };
    auto y_compatible = [&](int a, int b) {
        return a == n || b == n || o.rises_after(a) == o.rises_after(b);
    };
    int dx = x_compatible(s.x, t.x) ? std::abs(s.x - t.x) : s.x - 1 + t.x - 1;
    int dy = y_compatible(s.y, t.y) ? std::abs(s.y - t.y) : 2 * n - s.y - t.y;
    return dx + dy;
}

std::vector<int> ar_distances_from(const ARQuiver& q, const Interval& s) {
    const int N = static_cast<int>(q.nodes.size());
    std::vector<std::vector<std::pair<int, int>>> adj(N);
    for (const auto& e : q.edges) {
        adj[e.u].push_back({e.v, e.weight});
        adj[e.v].push_back({e.u, e.weight});
    }
    std::vector<int> dist(N, std::numeric_limits<int>::max());
    int src = q.node_index(s);
    using Item = std::pair<int, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[src] = 0;
    pq.push({0, src});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (d > dist[u]) continue;
        for (auto [v, w] : adj[u]) {
            if (d + w < dist[v]) {
                dist[v] = d + w;
                pq.push({dist[v], v});
            }
        }
    }
    return dist;
}

int delta_ar_oracle(const ARQuiver& q, const Interval& s, const Interval& t) {
    return ar_distances_from(q, s)[q.node_index(t)];
}

HullContext hull_context(const Orientation& o, const Interval& m) {
    HullSide side = hull_side(o, m);
    if (side == HullSide::None) throw Error(Errc::InvalidInterval, "hull context requested off the hull");
    HullContext h{m.x, m.y, 0, 0};
    for (int a = 2; a <= m.x; ++a)
        for (int b = m.y; b <= o.n() - 1; ++b)
            if (b - a > h.y_bullet - h.x_bullet && hull_side(o, {a, b}) == side) {
                h.x_bullet = a;
                h.y_bullet = b;
            }
    h.e = h.x_bullet - 1;
    h.E = h.y_bullet + 1;
    return h;
}

int w_ar(const Orientation& o, const Interval& s) {
    HullSide side = hull_side(o, s);
    if (side == HullSide::None) return s.dim();
    const int n = o.n();
    HullContext h = hull_context(o, s);
    const int sum = s.x + s.y;
    // Escaping through [e] or [E]; the extreme sink/source on each side short-cuts
    // around the corner of the grid.
    int leftmost = side == HullSide::North ? o.sinks().front() : o.sources().front();
    int rightmost = side == HullSide::North ? o.sources().back() : o.sinks().back();
    int via_e = (h.e > 1 && h.e == leftmost) ? sum - 2 : sum - 2 * h.e;
    int via_E = (h.E < n && h.E == rightmost) ? 2 * n - sum : 2 * h.E - sum;
    return std::min(via_e, via_E) + 1;
}

int w_ar_oracle(const ARQuiver& q, const Interval& s) {
    auto dist = ar_distances_from(q, s);
    int best = std::numeric_limits<int>::max();
    for (int v = 1; v <= q.orientation.n(); ++v) best = std::min(best, dist[q.node_index({v, v})]);
    return best + 1;
}

namespace {

Interval lift(const Refinement& R, const Interval& m) { return {R.map(m.x), R.map(m.y)}; }

}  // namespace

MetricGenerators ar_generators(const Orientation& o, ARVariant variant) {
    if (variant.kind == ARVariant::Plain) {
        return {"ar",
                [o](const Interval& s, const Interval& t) { return Ext(delta_ar(o, s, t)); },
                [o](const Interval& s) { return Ext(w_ar(o, s)); }};
    }
    auto R = std::make_shared<Refinement>(refine(o, variant.r));
    auto W = [o, R](const Interval& s) {
        validate(o, s);
        return Ext(w_ar(R->refined, lift(*R, s)));
    };
    if (variant.kind == ARVariant::RZig) {
        return {"ar-r" + std::to_string(variant.r),
                [o, R](const Interval& s, const Interval& t) {
                    validate(o, s);
                    validate(o, t);
                    return Ext(delta_ar(R->refined, lift(*R, s), lift(*R, t)));
                },
                W};
    }
    const int r = variant.r;
    return {"ar-rinf" + std::to_string(r),
            [o, r](const Interval& s, const Interval& t) {
                if (to_zz(o, s).kind != to_zz(o, t).kind) return kInf;
                return Ext(static_cast<std::int64_t>(r) * (std::abs(s.x - t.x) + std::abs(s.y - t.y)));
            },
            W};
}

}  // namespace anq
