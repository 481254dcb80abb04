// Acceptance run: one PASS/FAIL line per criterion, with the measured values.
// Exit status is nonzero if any criterion fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "anq/block_metric.hpp"
#include "anq/bottleneck.hpp"
#include "anq/stability.hpp"
#include "anq/weighted_interleaving.hpp"

using namespace anq;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string bar(const Interval& m) { return "[" + std::to_string(m.x) + "," + std::to_string(m.y) + "]"; }

std::string case_str(const SingletonCase& c) { return bar(c.s) + " vs " + (c.t ? bar(*c.t) : "0"); }

std::vector<Interval> random_barcode(std::mt19937& rng, const std::vector<Interval>& bars, int len) {
    std::uniform_int_distribution<std::size_t> pick(0, bars.size() - 1);
    std::vector<Interval> out;
    for (int k = 0; k < len; ++k) out.push_back(bars[pick(rng)]);
    return out;
}

Outcome figure_values() {
    Outcome out;
    std::ostringstream os;
    auto eq = parse_orientation("fffffff");
    auto ge = ar_generators(eq, ARVariant::plain());
    int d_eq = delta_ar(eq, {2, 3}, {3, 6});
    Ext D_eq = bottleneck<Interval>({{2, 3}}, {{3, 6}}, ge).value;
    out.pass = d_eq == 4 && D_eq == Ext(4);
    os << "equioriented delta=" << d_eq << " D=" << D_eq;
    for (const char* w : {"bfbfbfb", "fbfbfbf"}) {
        auto o = parse_orientation(w);
        int d = delta_ar(o, {2, 3}, {3, 6});
        Ext D = bottleneck<Interval>({{2, 3}}, {{3, 6}}, ar_generators(o, ARVariant::plain())).value;
        out.pass = out.pass && d == 10 && D == Ext(8);
        os << "; " << o.endpoint_type() << " delta=" << d << " D=" << D;
    }
    out.detail = os.str();
    return out;
}

Outcome formula_oracle() {
    std::size_t pairs = 0, bars_checked = 0, bad = 0;
    for (int n = 2; n <= 8; ++n)
        for (const auto& o : all_orientations(n)) {
            auto q = build_ar_quiver(o);
            for (const auto& s : all_intervals(n)) {
                auto dist = ar_distances_from(q, s);
                int to_simple = std::numeric_limits<int>::max();
                for (int v = 1; v <= n; ++v) to_simple = std::min(to_simple, dist[q.node_index({v, v})]);
                ++bars_checked;
                if (w_ar(o, s) != to_simple + 1) ++bad;
                for (const auto& t : all_intervals(n)) {
                    ++pairs;
                    if (delta_ar(o, s, t) != dist[q.node_index(t)]) ++bad;
                }
            }
        }
    return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bars_checked) + " widths, " +
                          std::to_string(bad) + " mismatches"};
}

Outcome structural() {
    std::size_t bad = 0, bars = 0;
    for (int n = 2; n <= 8; ++n)
        for (const auto& o : all_orientations(n)) {
            auto q = build_ar_quiver(o);
            if (q.nodes.size() != static_cast<std::size_t>(n * (n + 1) / 2)) ++bad;
            auto d = ar_distances_from(q, q.nodes.front().bar);
            for (int x : d)
                if (x >= std::numeric_limits<int>::max() / 2) ++bad;
            if (w_ar(o, {1, n}) != n) ++bad;
            for (const auto& m : all_intervals(n)) {
                ++bars;
                int w = w_ar(o, m);
                if (w < m.dim() || w > n || (w == m.dim()) == in_hull(o, m)) ++bad;
            }
        }
    return {bad == 0, std::to_string(bars) + " bars over n <= 8, " + std::to_string(bad) + " violations"};
}

Outcome engine_vs_brute() {
    std::mt19937 rng(1234567);
    auto zz = parse_orientation("fbfbfbf");
    auto mixed = parse_orientation("bbffbfb");
    std::vector<MetricGenerators> gens{ar_generators(mixed, ARVariant::plain()), ar_generators(zz, ARVariant::rzig(2)),
                                       ar_generators(zz, ARVariant::rlimit(2)), block_generators(zz),
                                       wil_generators(mixed, {2, 3})};
    auto bars = all_intervals(8);
    std::uniform_int_distribution<int> total(0, 10);
    std::size_t bad = 0;
    std::ostringstream os;
    for (const auto& g : gens) {
        for (int it = 0; it < 200; ++it) {
            int t = total(rng);
            std::uniform_int_distribution<int> split(0, t);
            int k = split(rng);
            auto a = random_barcode(rng, bars, k), b = random_barcode(rng, bars, t - k);
            if (bottleneck(a, b, g).value != brute_force_bottleneck(a, b, g)) ++bad;
        }
        os << (os.tellp() > 0 ? ", " : "") << g.name;
    }
    return {bad == 0, "200 instances each for " + os.str() + ": " + std::to_string(bad) + " mismatches"};
}

Outcome delta_ineq() {
    std::size_t bad = 0;
    for (int n = 2; n <= 8; ++n) {
        for (const auto& o : all_orientations(n))
            bad += check_delta_ineq(ar_generators(o, ARVariant::plain()), all_intervals(n)).size();
        for (const auto& o : zigzags(n))
            for (int r : {2, 3}) {
                bad += check_delta_ineq(ar_generators(o, ARVariant::rzig(r)), all_intervals(n)).size();
                bad += check_delta_ineq(ar_generators(o, ARVariant::rlimit(r)), all_intervals(n)).size();
            }
    }
    bad += check_delta_ineq(block_generators_zz(), all_zz_intervals(1, 9)).size();
    return {bad == 0, "AR plain/r/r-limit over n <= 8, block over span 8: " + std::to_string(bad) + " violations"};
}

Outcome partition_table() {
    using R = Region;
    using K = ZZKind;
    const std::map<std::string, std::map<K, std::set<R>>> table{
        {"uu",
         {{K::OO, {R::E}}, {K::CC, {R::W, R::Dnw, R::Dsw, R::Full}}, {K::CO, {R::S, R::Dse}},
          {K::OC, {R::N, R::Dne}}}},
        {"ud",
         {{K::OO, {R::E, R::Dne}}, {K::CC, {R::W, R::Dnw}}, {K::CO, {R::S, R::Dse, R::Dsw, R::Full}},
          {K::OC, {R::N}}}},
        {"du",
         {{K::OO, {R::E, R::Dse}}, {K::CC, {R::W, R::Dsw}}, {K::CO, {R::S}},
          {K::OC, {R::N, R::Dnw, R::Dne, R::Full}}}},
        {"dd",
         {{K::OO, {R::E, R::Dne, R::Dse, R::Full}}, {K::CC, {R::W}}, {K::CO, {R::S, R::Dsw}},
          {K::OC, {R::N, R::Dnw}}}},
    };
    std::size_t bad = 0, bars = 0;
    std::set<std::string> types;
    for (int n = 3; n <= 9; ++n)
        for (const auto& o : zigzags(n)) {
            types.insert(o.endpoint_type());
            const auto& row = table.at(o.endpoint_type());
            for (const auto& m : all_intervals(n)) {
                ++bars;
                if (!row.at(to_zz(o, m).kind).count(classify_region(o, m))) ++bad;
            }
        }
    return {bad == 0 && types.size() == 4,
            std::to_string(types.size()) + " types, " + std::to_string(bars) + " bars, " + std::to_string(bad) +
                " mismatches"};
}

Outcome sharp_constants() {
    Outcome out;
    std::ostringstream os;
    // per (r, kind): worst ratio over n = 4..9
    for (int r : {2, 3}) {
        std::array<AuditReport, 4> lo, hi;
        std::array<int, 4> lo_n{}, hi_n{};
        for (int n = 4; n <= 9; ++n) {
            auto reps = verify_blar_limit(n, r);
            for (int k = 0; k < 4; ++k) {
                if (n == 4 || reps[k].lower.max_ratio > lo[k].max_ratio) {
                    lo[k] = reps[k].lower;
                    lo_n[k] = n;
                }
                if (n == 4 || reps[k].upper.max_ratio > hi[k].max_ratio) {
                    hi[k] = reps[k].upper;
                    hi_n[k] = n;
                }
            }
        }
        for (int k = 0; k < 4; ++k) {
            bool ok = lo[k].holds && hi[k].holds;
            out.pass = out.pass && ok;
            os << "\n      r=" << r << " " << zz_kind_name(static_cast<ZZKind>(k)) << ": BL/lim max " << lo[k].max_ratio
               << " (bound " << lo[k].constant_tested << ", n=" << lo_n[k];
            if (!lo[k].holds) os << ", at " << case_str(*lo[k].witness);
            os << "), lim/BL max " << hi[k].max_ratio << " (bound " << hi[k].constant_tested << ", n=" << hi_n[k];
            if (!hi[k].holds) os << ", at " << case_str(*hi[k].witness);
            os << ")" << (ok ? "" : " VIOLATED");
        }
    }
    out.detail = os.str();
    return out;
}

Outcome unmodified_stability() {
    Outcome out;
    std::ostringstream os;
    bool upper = true, witness = true, lower = true, diag = true;
    std::string lower_fail;
    for (int n = 2; n <= 9; ++n)
        for (const auto& o : zigzags(n)) {
            auto ar = ar_generators(o, ARVariant::plain());
            auto bl = block_generators(o);
            auto up = audit(o, ar, bl, Ext(2 * n));
            upper = upper && up.holds;
            if (n % 2 == 0 && n >= 4) {
                SingletonCase w{{n / 2, n / 2 + 1}, std::nullopt};
                Ext ratio = singleton_distance(ar, w) / singleton_distance(bl, w);
                witness = witness && ratio == Ext(2 * n) && up.max_ratio == Ext(2 * n);
            }
            auto finite = [](const SingletonCase&, const Ext& l, const Ext&) { return l.is_finite(); };
            auto down = audit(o, bl, ar, Ext(n, 4), finite);
            if (!down.holds && lower) {
                lower_fail = o.word() + " " + case_str(*down.witness) + " BL=" + down.lhs_at_witness.str() +
                             " AR=" + down.rhs_at_witness.str();
            }
            lower = lower && down.holds;
            if (n >= 4) {
                SingletonCase d{{1, n}, Interval{2, n}};
                diag = diag && singleton_distance(ar, d) == Ext(1) && singleton_distance(bl, d) >= Ext(n - 2, 4);
            }
        }
    out.pass = upper && witness && lower && diag;
    os << "AR <= 2n BL " << (upper ? "holds" : "fails") << ", [n/2,n/2+1] ratio 2n " << (witness ? "attained" : "missed")
       << "; BL <= (n/4) AR on finite pairs " << (lower ? "holds" : "fails (first: " + lower_fail + ")")
       << ", diagonal witness " << (diag ? "ok" : "missed");
    out.detail = os.str();
    return out;
}

Outcome wil_oracle() {
    std::size_t bad = 0, checked = 0;
    for (int n = 2; n <= 6; ++n)
        for (const auto& o : all_orientations(n))
            for (int a = 1; a <= 2; ++a)
                for (int b = a; b <= 5; ++b) {
                    TranslationOracle oracle(o, {a, b});
                    WeightedInterleaving wil(o, {a, b});
                    for (const auto& s : all_intervals(n)) {
                        ++checked;
                        if (wil.w(s) != oracle.w(s)) ++bad;
                        for (const auto& t : all_intervals(n)) {
                            ++checked;
                            if (wil.d(s, t) != oracle.d(s, t)) ++bad;
                        }
                    }
                }
    return {bad == 0, std::to_string(checked) + " values, " + std::to_string(bad) + " mismatches"};
}

Outcome escape_kill() {
    std::size_t bad = 0, cases = 0;
    std::string first;
    for (int T = 1; T <= 4; ++T)
        for (int S = T; S <= 4; ++S)
            for (bool short_left : {true, false}) {
                std::string word = short_left ? std::string(T, 'B') + std::string(S, 'F')
                                              : std::string(S, 'B') + std::string(T, 'F');
                auto o = parse_orientation(word);
                auto valley = wedge_decompose(o).valleys.at(0);
                auto ts = enumerate_translations(o);
                const Interval full{1, o.n()};
                for (int b = 1; b <= 12; ++b) {
                    WeightConfig w{2, b};
                    auto dist = weighted_dist_table(o, w);
                    Ext best = kInf;
                    for (const auto& t : ts) {
                        Ext h = translation_height(dist, t);
                        if (h < best && interleaved(o, t, full, std::nullopt)) best = h;
                    }
                    ++cases;
                    Ext expect = escapes(valley, w).height();
                    if (best != expect) {
                        if (bad == 0) first = word + " b=" + std::to_string(b);
                        ++bad;
                    }
                }
            }
    return {bad == 0, std::to_string(cases) + " (valley, b) cases, " + std::to_string(bad) + " mismatches" +
                          (bad ? " (first " + first + ")" : "")};
}

Outcome weight_classification() {
    Outcome out;
    std::ostringstream os;
    bool eq_ok = true;
    for (int n = 3; n <= 8; ++n)
        for (const auto& o : {parse_orientation(std::string(n - 1, 'F')), parse_orientation(std::string(n - 1, 'B'))}) {
            bool stable = !stability_violation(o, {2, 1});
            bool a1_bad = true;
            for (int b = 1; b <= 2 * n; ++b) a1_bad = a1_bad && stability_violation(o, {1, b}).has_value();
            eq_ok = eq_ok && stable && a1_bad && minimal_stable_weight(o).weight == WeightConfig{2, 1};
        }
    os << "equioriented n=3..8 " << (eq_ok ? "ok" : "fails");

    bool zz_ok = true;
    std::string zz_fail;
    for (int n = 3; n <= 9; ++n)
        for (const auto& o : zigzags(n)) {
            int a = predicted_a(o);
            bool stable = !stability_violation(o, {a, n});
            bool below = stability_violation(o, {a, n - 1}).has_value();
            if (!(stable && below) && zz_ok)
                zz_fail = o.word() + " (" + o.endpoint_type() + ") at (" + std::to_string(a) + "," +
                          std::to_string(n) + ")" + (stable ? " not sharp" : " unstable");
            zz_ok = zz_ok && stable && below;
        }
    os << "; zigzag n=3..9 " << (zz_ok ? "ok" : "fails, first " + zz_fail);

    auto o = parse_orientation("bbffbfff");
    auto wc = minimal_stable_weight(o);
    bool b_ok = wc.kind == WeightKind::ShallowNonCentral && wc.weight == WeightConfig{2, 7} && wc.b_upper_bound == 7;
    auto cand = antistable_search(o, {2, 6});
    bool canon = cand.best.has_value();
    auto v6 = stability_violation(o, {2, 6});
    os << "; bbffbfff minimal b=" << (wc.weight ? std::to_string(wc.weight->b) : "none") << " (bound "
       << (wc.b_upper_bound ? std::to_string(*wc.b_upper_bound) : "-") << ")";
    if (v6) os << ", b=6 violated at " << case_str(v6->pair) << " AR=" << v6->ar << " IL=" << v6->wil;
    os << ", canonical pair at b=6 ";
    for (const auto& c : {cand.u_pair, cand.d_pair})
        if (c) os << bar(c->sigma) << "/" << bar(c->tau) << " R=" << c->gap() << " ";
    os << (canon ? "anti-stable" : "not anti-stable");
    auto all = all_antistable_pairs(o, {2, 6});
    os << " (exhaustive: " << all.size() << " anti-stable pair" << (all.size() == 1 ? "" : "s");
    if (!all.empty()) os << ", max " << bar(all.front().sigma) << "/" << bar(all.front().tau) << " R=" << all.front().gap();
    os << ")";
    out.pass = eq_ok && zz_ok && b_ok && canon;
    out.detail = os.str();
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "figure values", figure_values},
        {2, "closed forms match graph oracle", formula_oracle},
        {3, "structural invariants", structural},
        {4, "bottleneck engine matches brute force", engine_vs_brute},
        {5, "delta inequality", delta_ineq},
        {6, "partition table", partition_table},
        {7, "sharp constants for the r-limit metric", sharp_constants},
        {8, "unmodified stability constants", unmodified_stability},
        {9, "weighted interleaving matches translation oracle", wil_oracle},
        {10, "escape heights kill the full valley", escape_kill},
        {11, "minimal stable weights", weight_classification},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = c.run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.name << ": " << o.detail << " ["
                  << secs << " s]" << std::endl;
        if (!o.pass) ++failed;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass" << std::endl;
    return failed == 0 ? 0 : 1;
}
