#include "anq/intervals.hpp"

#include <algorithm>

#include "anq/error.hpp"

namespace anq {

void validate(const Orientation& o, const Interval& m) {
    if (m.x < 1 || m.y > o.n() || m.x > m.y)
        throw Error(Errc::InvalidInterval, "[" + std::to_string(m.x) + "," + std::to_string(m.y) +
                                               "] is not an interval of A_" + std::to_string(o.n()));
}

std::vector<Interval> all_intervals(int n) {
    std::vector<Interval> out;
    out.reserve(static_cast<std::size_t>(n) * (n + 1) / 2);
    for (int x = 1; x <= n; ++x)
        for (int y = x; y <= n; ++y) out.push_back({x, y});
    return out;
}

const char* region_name(Region r) {
    switch (r) {
        case Region::E: return "E";
        case Region::W: return "W";
        case Region::S: return "S";
        case Region::N: return "N";
        case Region::Dnw: return "Dnw";
        case Region::Dne: return "Dne";
        case Region::Dse: return "Dse";
        case Region::Dsw: return "Dsw";
        case Region::Full: return "Full";
    }
    return "?";
}

const char* zz_kind_name(ZZKind k) {
    switch (k) {
        case ZZKind::OO: return "OO";
        case ZZKind::CC: return "CC";
        case ZZKind::CO: return "CO";
        case ZZKind::OC: return "OC";
    }
    return "?";
}

int ZZInterval::point_count() const {
    switch (kind) {
        case ZZKind::CC: return 2 * (j - i) + 1;
        case ZZKind::OO: return 2 * (j - i) - 1;
        default: return 2 * (j - i);
    }
}

std::string ZZInterval::str() const {
    const char* l = (kind == ZZKind::CC || kind == ZZKind::CO) ? "[" : "(";
    const char* r = (kind == ZZKind::CC || kind == ZZKind::OC) ? "]" : ")";
    return l + std::to_string(i) + "," + std::to_string(j) + r;
}

ARAxes ar_axes(const Orientation& o) {
    const int n = o.n();
    std::vector<char> in_x(n + 1, 0), in_y(n + 1, 0);
    const auto& src = o.sources();
    const auto& snk = o.sinks();
    // (min, next max] feeds the reversed head of the x-axis
    for (int m : src) {
        auto it = std::upper_bound(snk.begin(), snk.end(), m);
        if (it != snk.end())
            for (int v = m + 1; v <= *it; ++v) in_x[v] = 1;
    }
    // [max, next min) feeds the forward head of the y-axis
    for (int M : snk) {
        auto it = std::upper_bound(src.begin(), src.end(), M);
        if (it != src.end())
            for (int v = M; v < *it; ++v) in_y[v] = 1;
    }
    ARAxes ax;
    for (int v = n; v >= 1; --v)
        if (in_x[v]) ax.x_axis.push_back(v);
    for (int v = 1; v <= n; ++v)
        if (!in_x[v]) ax.x_axis.push_back(v);
    for (int v = 1; v <= n; ++v)
        if (in_y[v]) ax.y_axis.push_back(v);
    for (int v = n; v >= 1; --v)
        if (!in_y[v]) ax.y_axis.push_back(v);
    ax.x_pos.assign(n + 1, -1);
    ax.y_pos.assign(n + 1, -1);
    for (int k = 0; k < n; ++k) {
        ax.x_pos[ax.x_axis[k]] = k;
        ax.y_pos[ax.y_axis[k]] = k;
    }
    return ax;
}

Region classify_region(const Orientation& o, const Interval& m) {
    validate(o, m);
    const int n = o.n();
    if (n < 2) throw Error(Errc::TooFewVertices, "regions need n >= 2");
    if (m.x == 1 && m.y == n) return Region::Full;
    if (m.x == 1 || m.y == n) {
        auto ax = ar_axes(o);
        if (m.x == 1) return ax.y_pos[m.y] < ax.y_pos[n] ? Region::Dnw : Region::Dse;
        return ax.x_pos[m.x] < ax.x_pos[1] ? Region::Dsw : Region::Dne;
    }
    // left end rising into x puts it west/south, right end rising out of y east/south
    const bool west_south = o.rises_after(m.x - 1);
    const bool east_south = o.rises_after(m.y);
    if (west_south) return east_south ? Region::S : Region::W;
    return east_south ? Region::E : Region::N;
}

namespace {

// every maximal run of letter c strictly inside [x,y] has length one
bool runs_of_length_one(const Orientation& o, const Interval& m, char c) {
    int k = m.x;
    while (k < m.y) {
        char cur = o.word()[k - 1];
        int j = k;
        while (j < m.y && o.word()[j - 1] == cur) ++j;
        if (cur == c && j - k != 1) return false;
        k = j;
    }
    return true;
}

}  // namespace

HullSide hull_side(const Orientation& o, const Interval& m) {
    validate(o, m);
    const int n = o.n();
    if (m.x < 2 || m.y > n - 1 || m.x >= m.y) return HullSide::None;
    if (o.is_source(m.x) && o.is_sink(m.y) && runs_of_length_one(o, m, 'B')) return HullSide::North;
    if (o.is_sink(m.x) && o.is_source(m.y) && runs_of_length_one(o, m, 'F')) return HullSide::South;
    return HullSide::None;
}

bool in_hull(const Orientation& o, const Interval& m) { return hull_side(o, m) != HullSide::None; }

ZZInterval to_zz(const Orientation& o, const Interval& m) {
    if (!o.is_pure_zigzag()) throw Error(Errc::NotPureZigzag, "ZZ conversion needs a pure zigzag");
    validate(o, m);
    // sinks sit on consecutive integer indices, the first sink at 1
    const int first_sink = o.is_sink(1) ? 1 : 2;
    auto idx = [&](int s) { return (s - first_sink) / 2 + 1; };
    bool left_closed = o.is_sink(m.x);
    bool right_closed = o.is_sink(m.y);
    ZZInterval z;
    z.i = left_closed ? idx(m.x) : idx(m.x - 1);
    z.j = right_closed ? idx(m.y) : idx(m.y + 1);
    if (left_closed) z.kind = right_closed ? ZZKind::CC : ZZKind::CO;
    else z.kind = right_closed ? ZZKind::OC : ZZKind::OO;
    return z;
}

std::optional<Interval> restrict(const Interval& m, const Valley& v) {
    int x = std::max(m.x, v.lo), y = std::min(m.y, v.hi);
    if (x > y) return std::nullopt;
    return Interval{x, y};
}

}  // namespace anq
