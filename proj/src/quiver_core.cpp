#include "anq/quiver_core.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <queue>

#include "anq/error.hpp"

namespace anq {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::InvalidCharacter: return "InvalidCharacter";
        case Errc::NotPureZigzag: return "NotPureZigzag";
        case Errc::RNotAtLeastTwo: return "RNotAtLeastTwo";
        case Errc::UniverseMismatch: return "UniverseMismatch";
        case Errc::TooLarge: return "TooLarge";
        case Errc::WeightANotTwo: return "WeightANotTwo";
        case Errc::EquiorientedValley: return "EquiorientedValley";
        case Errc::InvalidWeight: return "InvalidWeight";
        case Errc::NotShallow: return "NotShallow";
        case Errc::InvalidInterval: return "InvalidInterval";
        case Errc::TooFewVertices: return "TooFewVertices";
    }
    return "Unknown";
}

Orientation::Orientation(std::string word) : word_(std::move(word)), n_(static_cast<int>(word_.size()) + 1) {
    source_.assign(n_ + 1, 0);
    sink_.assign(n_ + 1, 0);
    for (int v = 1; v <= n_; ++v) {
        // a neighbour above v rules out "sink", one below rules out "source"
        bool up = false, down = false;
        if (v > 1) (rises_after(v - 1) ? down : up) = true;
        if (v < n_) (rises_after(v) ? up : down) = true;
        source_[v] = !down;
        sink_[v] = !up;
        if (source_[v]) sources_.push_back(v);
        if (sink_[v]) sinks_.push_back(v);
    }
}

bool Orientation::is_pure_zigzag() const {
    for (std::size_t k = 1; k < word_.size(); ++k)
        if (word_[k] == word_[k - 1]) return false;
    return true;
}

bool Orientation::is_equioriented() const {
    return std::all_of(word_.begin(), word_.end(), [&](char c) { return c == word_.front(); });
}

std::string Orientation::endpoint_type() const {
    std::string t;
    t += is_sink(1) ? 'u' : 'd';
    t += is_sink(n_) ? 'u' : 'd';
    return t;
}

bool Orientation::leq(int x, int y) const {
    if (x == y) return true;
    // the path x..y must be monotone upward toward y
    if (x < y) {
        for (int k = x; k < y; ++k)
            if (!rises_after(k)) return false;
    } else {
        for (int k = y; k < x; ++k)
            if (rises_after(k)) return false;
    }
    return true;
}

Orientation Orientation::mirrored() const {
    std::string w(word_.rbegin(), word_.rend());
    for (char& c : w) c = (c == 'F') ? 'B' : 'F';
    return Orientation(std::move(w));
}

Orientation parse_orientation(std::string_view text) {
    std::string w;
    w.reserve(text.size());
    for (char c : text) {
        char u = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
        if (u != 'F' && u != 'B')
            throw Error(Errc::InvalidCharacter, std::string("unexpected '") + c + "' in orientation");
        w += u;
    }
    return Orientation(std::move(w));
}

WedgeDecomposition wedge_decompose(const Orientation& o) {
    if (o.n() < 2) throw Error(Errc::TooFewVertices, "wedge decomposition needs n >= 2");
    WedgeDecomposition wd;
    const auto& sinks = o.sinks();
    for (int m : o.sources()) {
        Valley v;
        v.source = m;
        auto it = std::lower_bound(sinks.begin(), sinks.end(), m);
        // sinks strictly left / right of m (m itself is never both)
        if (it != sinks.begin()) v.left_sink = *std::prev(it);
        auto jt = std::upper_bound(sinks.begin(), sinks.end(), m);
        if (jt != sinks.end()) v.right_sink = *jt;
        v.lo = v.left_sink.value_or(1);
        v.hi = v.right_sink.value_or(o.n());
        if (v.left_sink && v.right_sink) {
            v.t_short = std::min(v.left_len(), v.right_len());
            v.s_long = std::max(v.left_len(), v.right_len());
        } else {
            v.t_short = 0;
            v.s_long = std::max(v.left_len(), v.right_len());
        }
        wd.T = std::max(wd.T, v.t_short);
        wd.S = std::max(wd.S, v.s_long);
        wd.valleys.push_back(v);
    }
    return wd;
}

Refinement refine(const Orientation& o, int r) {
    if (!o.is_pure_zigzag()) throw Error(Errc::NotPureZigzag, "refinement needs a pure zigzag");
    if (r < 2) throw Error(Errc::RNotAtLeastTwo, "refinement factor must be >= 2");
    std::string w;
    for (char c : o.word()) w.append(static_cast<std::size_t>(r), c);
    return Refinement{Orientation(std::move(w)), r};
}

OrientationStats stats(const Orientation& o) {
    auto wd = wedge_decompose(o);
    OrientationStats s;
    s.T = wd.T;
    s.S = wd.S;
    s.pure_zigzag = o.is_pure_zigzag();
    s.equioriented = o.is_equioriented();
    if (s.pure_zigzag) s.endpoint_type = o.endpoint_type();
    const int n = o.n();
    s.shallow = s.S >= 3 && s.T >= 2 && 2 * s.S <= n;
    for (const auto& v : wd.valleys) {
        if (v.t_short == s.T && v.left_sink && v.right_sink && *v.left_sink >= s.T &&
            *v.right_sink <= n - s.T + 1)
            s.central = true;
    }
    return s;
}

namespace {

std::vector<Ext> dist_from(const Orientation& o, const WeightConfig& w, int x) {
    const int n = o.n();
    std::vector<Ext> dist(n + 1, kInf);
    using Item = std::pair<std::int64_t, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[x] = 0;
    pq.push({0, x});
    while (!pq.empty()) {
        auto [d, u] = pq.top();
        pq.pop();
        if (Ext(d) > dist[u] || u == kTop) continue;
        auto relax = [&](int v, int wt) {
            if (Ext(d + wt) < dist[v]) {
                dist[v] = d + wt;
                pq.push({d + wt, v});
            }
        };
        if (u > 1 && !o.rises_after(u - 1)) relax(u - 1, w.a);
        if (u < n && o.rises_after(u)) relax(u + 1, w.a);
        if (o.is_sink(u)) relax(kTop, w.b);
    }
    return dist;
}

}  // namespace

Ext weighted_dist(const Orientation& o, const WeightConfig& w, int x, int y) {
    if (x == kTop) return y == kTop ? Ext(0) : kInf;
    return dist_from(o, w, x)[y];
}

std::vector<std::vector<Ext>> weighted_dist_table(const Orientation& o, const WeightConfig& w) {
    std::vector<std::vector<Ext>> t(o.n() + 1);
    t[kTop].assign(o.n() + 1, kInf);
    t[kTop][kTop] = 0;
    for (int x = 1; x <= o.n(); ++x) t[x] = dist_from(o, w, x);
    return t;
}

std::vector<Orientation> all_orientations(int n) {
    std::vector<Orientation> out;
    const int m = n - 1;
    for (long mask = 0; mask < (1L << m); ++mask) {
        std::string w(m, 'B');
        for (int k = 0; k < m; ++k)
            if (mask & (1L << (m - 1 - k))) w[k] = 'F';
        out.emplace_back(std::move(w));
    }
    return out;
}

std::vector<Orientation> zigzags(int n) {
    std::vector<Orientation> out;
    for (char first : {'B', 'F'}) {
        std::string w;
        char c = first;
        for (int k = 0; k < n - 1; ++k) {
            w += c;
            c = (c == 'F') ? 'B' : 'F';
        }
        out.emplace_back(std::move(w));
    }
    return out;
}

}  // namespace anq
