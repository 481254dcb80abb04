#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "anq/ar_metric.hpp"
#include "anq/extended.hpp"
#include "anq/intervals.hpp"
#include "anq/quiver_core.hpp"

namespace anq {

// Self-map of the suspended poset; map[kTop] == kTop, map[v] for v = 1..n.
struct Translation {
    std::vector<int> map;
    int operator()(int v) const { return map[v]; }
    friend bool operator==(const Translation&, const Translation&) = default;
};

// Order of the suspended poset.
bool suspended_leq(const Orientation& o, int x, int y);

// Every inflationary monotone self-map of the suspended poset, by depth-first
// assignment along 1..n.
std::vector<Translation> enumerate_translations(const Orientation& o);

Ext translation_height(const std::vector<std::vector<Ext>>& dist, const Translation& t);

// Interleaving test for two thin modules (an empty optional is the zero module)
// along a single translation.
bool interleaved(const Orientation& o, const Translation& t, const std::optional<Interval>& I,
                 const std::optional<Interval>& J);

struct EscapePair {
    int eps = 0;    // short escape
    int cap_e = 0;  // long escape
    int height() const { return eps > cap_e ? eps : cap_e; }
};

EscapePair escapes(const Valley& v, const WeightConfig& w);

// Brute force over all translations of the whole suspended poset.
class TranslationOracle {
public:
    TranslationOracle(const Orientation& o, const WeightConfig& w);
    Ext d(const std::optional<Interval>& I, const std::optional<Interval>& J) const;
    Ext w(const Interval& I) const { return d(I, std::nullopt); }
    std::size_t size() const { return sorted_.size(); }
    const std::vector<std::pair<Ext, Translation>>& translations() const { return sorted_; }

private:
    Orientation o_;
    std::vector<std::pair<Ext, Translation>> sorted_;  // ascending height
};

Ext d_i_oracle(const Orientation& o, const WeightConfig& w, const std::optional<Interval>& s,
               const std::optional<Interval>& t);

// Per-valley evaluation: the distance splits over the wedge decomposition, and
// inside each valley only maximal translations of each height are tried.
class WeightedInterleaving {
public:
    WeightedInterleaving(const Orientation& o, const WeightConfig& w);

    Ext d(const Interval& s, const Interval& t) const;
    Ext w(const Interval& s) const;
    Ext d_opt(const std::optional<Interval>& s, const std::optional<Interval>& t) const;

    const Orientation& orientation() const { return o_; }
    const WeightConfig& weight() const { return w_; }
    const WedgeDecomposition& wedges() const { return wd_; }

    // per-valley value; restrictions given in global coordinates
    Ext valley_d(std::size_t k, const std::optional<Interval>& s, const std::optional<Interval>& t) const;

private:
    struct Level {
        Ext height;
        std::vector<Translation> maximal;
    };
    struct Local {
        Valley valley;
        Orientation sub;
        std::vector<Level> levels;
    };
    Orientation o_;
    WeightConfig w_;
    WedgeDecomposition wd_;
    std::vector<Local> locals_;
};

Ext w_i(const Orientation& o, const WeightConfig& w, const Interval& s);
Ext d_i(const Orientation& o, const WeightConfig& w, const Interval& s, const Interval& t);

MetricGenerators wil_generators(const Orientation& o, const WeightConfig& w);
MetricGenerators wil_generators(std::shared_ptr<const WeightedInterleaving> wil);

}  // namespace anq
