#include "anq/block_metric.hpp"

#include <algorithm>
#include <cstdlib>

#include "anq/error.hpp"

namespace anq {

Ext w_bl(const ZZInterval& z) {
    switch (z.kind) {
        case ZZKind::OO: return Ext(z.j - z.i, 4);
        case ZZKind::CC: return kInf;
        default: return Ext(z.j - z.i, 2);
    }
}

Ext d_bl(const ZZInterval& a, const ZZInterval& b) {
    if (a.kind == b.kind) return Ext(std::max(std::abs(a.i - b.i), std::abs(a.j - b.j)));
    return std::max(w_bl(a), w_bl(b));
}

Generators<ZZInterval> block_generators_zz() {
    return {"block", [](const ZZInterval& a, const ZZInterval& b) { return d_bl(a, b); },
            [](const ZZInterval& z) { return w_bl(z); }};
}

MetricGenerators block_generators(const Orientation& o) {
    if (!o.is_pure_zigzag()) throw Error(Errc::NotPureZigzag, "block distance needs a pure zigzag");
    return {"block",
            [o](const Interval& s, const Interval& t) { return d_bl(to_zz(o, s), to_zz(o, t)); },
            [o](const Interval& s) { return w_bl(to_zz(o, s)); }};
}

std::vector<ZZInterval> all_zz_intervals(int lo, int hi) {
    std::vector<ZZInterval> out;
    for (ZZKind k : {ZZKind::OO, ZZKind::CC, ZZKind::CO, ZZKind::OC})
        for (int i = lo; i <= hi; ++i)
            for (int j = i; j <= hi; ++j) {
                if (k == ZZKind::OO && j == i) continue;
                // half-open bars with i == j are empty as well
                if ((k == ZZKind::CO || k == ZZKind::OC) && j == i) continue;
                out.push_back({k, i, j});
            }
    return out;
}

}  // namespace anq
