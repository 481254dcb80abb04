#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "anq/extended.hpp"
#include "anq/intervals.hpp"

namespace anq {

struct ARQuiver {
    Orientation orientation;
    ARAxes axes;
    struct Node {
        Interval bar;
        int gx = 0;  // index on the x-axis
        int gy = 0;  // index on the y-axis
    };
    struct Edge {
        int u = 0;  // node indices
        int v = 0;
        int weight = 0;
    };
    std::vector<Node> nodes;  // sorted by (gx, gy)
    std::vector<Edge> edges;  // sorted by (u, v)

    int node_index(const Interval& m) const;
    std::string to_dot() const;
};

ARQuiver build_ar_quiver(const Orientation& o);

// Closed form.
int delta_ar(const Orientation& o, const Interval& s, const Interval& t);

// Shortest dimension-weighted path between nodes.
int delta_ar_oracle(const ARQuiver& q, const Interval& s, const Interval& t);
// Single-source variant: distances from s to every node (indexed as q.nodes).
std::vector<int> ar_distances_from(const ARQuiver& q, const Interval& s);

struct HullContext {
    int x_bullet = 0;
    int y_bullet = 0;
    int e = 0;
    int E = 0;
};
// Largest same-side hull interval containing m; m must lie in the hull.
HullContext hull_context(const Orientation& o, const Interval& m);

int w_ar(const Orientation& o, const Interval& s);
// 1 + min over simples of the graph distance.
int w_ar_oracle(const ARQuiver& q, const Interval& s);

// Named generator pair (d, W) for a bottleneck distance over elements of T.
template <class T>
struct Generators {
    std::string name;
    std::function<Ext(const T&, const T&)> d;
    std::function<Ext(const T&)> W;
};
using MetricGenerators = Generators<Interval>;

struct ARVariant {
    enum Kind { Plain, RZig, RLimit } kind = Plain;
    int r = 1;
    static ARVariant plain() { return {Plain, 1}; }
    static ARVariant rzig(int r) { return {RZig, r}; }
    static ARVariant rlimit(int r) { return {RLimit, r}; }
};

MetricGenerators ar_generators(const Orientation& o, ARVariant variant);

}  // namespace anq
