#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "anq/ar_metric.hpp"
#include "anq/bottleneck.hpp"
#include "anq/extended.hpp"
#include "anq/intervals.hpp"
#include "anq/quiver_core.hpp"

namespace anq {

// A singleton pair ({s}, {t}) or, with t empty, ({s}, {}).
struct SingletonCase {
    Interval s;
    std::optional<Interval> t;
};

struct AuditReport {
    bool holds = true;
    Ext max_ratio = 0;  // max of lhs / rhs over the scanned cases
    std::optional<SingletonCase> witness;
    Ext lhs_at_witness = 0;
    Ext rhs_at_witness = 0;
    Ext constant_tested = 0;
    std::size_t cases = 0;
};

// Bottleneck value of two singleton barcodes (or one and the empty barcode).
Ext singleton_distance(const MetricGenerators& g, const SingletonCase& c);

using CaseFilter = std::function<bool(const SingletonCase&, const Ext& lhs, const Ext& rhs)>;

// Scans every singleton pair and singleton-vs-empty case over o.  Cases with
// both sides zero, both infinite, or rejected by the filter are skipped.
AuditReport audit(const Orientation& o, const MetricGenerators& lhs, const MetricGenerators& rhs, const Ext& c,
                  const CaseFilter& filter = {});

struct KindReport {
    ZZKind kind;
    AuditReport lower;  // block distance <= (1/r) * limit distance
    AuditReport upper;  // limit distance <= c * block distance
};

// Both inequalities between the r-limit AR distance and the block distance,
// per ZZ kind, over the four pure zigzags with n vertices.  The constants per
// kind are 8r (OO), 2r (CC, finite block distance only), 4r (CO), 4r (OC).
std::array<KindReport, 4> verify_blar_limit(int n, int r);

struct StabilityWitness {
    SingletonCase pair;
    Ext ar = 0;
    Ext wil = 0;
};

// D_AR <= D_I at the given weight, checked on widths and on all pairs via the
// minimal generators.  Returns the first violation in (x, y) order, if any.
std::optional<StabilityWitness> stability_violation(const Orientation& o, const WeightConfig& w);

enum class WeightKind { Equioriented, SmallS, ShallowCentral, ShallowNonCentral, Unclassified };
const char* weight_kind_name(WeightKind k);

struct WeightClass {
    WeightKind kind = WeightKind::Unclassified;
    std::optional<WeightConfig> weight;     // minimal stable weight, audited
    std::optional<WeightConfig> predicted;  // closed-form value for this class
    std::optional<int> b_upper_bound;       // shallow non-central only: floor(n - T/2 - 1)
};

// The a-rule: 1 for S = 1, or S = 2 with a single two-edge equioriented run; else 2.
int predicted_a(const Orientation& o);

// Lexicographically smallest (a, b), a in {1,2}, 1 <= b <= b_max, with D_AR <= D_I.
std::optional<WeightConfig> sweep_min_weight(const Orientation& o, int b_max);

WeightClass minimal_stable_weight(const Orientation& o);

struct AntiStableCandidate {
    Interval sigma;
    Interval tau;
    Ext ar = 0;
    Ext wil = 0;
    Ext gap() const { return ar - wil; }
};

struct AntiStableSearch {
    bool mirrored = false;      // computed on the mirror image; intervals mapped back
    int deep_valley = 0;        // index into the wedge decomposition (of the searched orientation)
    std::vector<int> k_of_y;    // indexed by vertex, 0 where undefined
    std::optional<int> y_u, y_d;
    std::optional<AntiStableCandidate> u_pair, d_pair;
    std::optional<AntiStableCandidate> best;  // positive gap, u wins ties
};

AntiStableSearch antistable_search(const Orientation& o, const WeightConfig& w);
std::optional<AntiStableCandidate> maximal_antistable_pair(const Orientation& o, const WeightConfig& w);

// Every pair with D_AR > D_I, largest gap first.
std::vector<AntiStableCandidate> all_antistable_pairs(const Orientation& o, const WeightConfig& w);

}  // namespace anq
