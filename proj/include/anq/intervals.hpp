#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "anq/quiver_core.hpp"

namespace anq {

struct Interval {
    int x = 1;
    int y = 1;
    int dim() const { return y - x + 1; }
    bool contains(int v) const { return x <= v && v <= y; }
    friend auto operator<=>(const Interval&, const Interval&) = default;
};

// Multiset of bars; multiplicity is repetition.
struct Barcode {
    Orientation orientation;
    std::vector<Interval> bars;
};

void validate(const Orientation& o, const Interval& m);
// All n(n+1)/2 intervals ordered by (x, y).
std::vector<Interval> all_intervals(int n);

enum class Region { E, W, S, N, Dnw, Dne, Dse, Dsw, Full };
const char* region_name(Region r);

enum class ZZKind { OO, CC, CO, OC };
const char* zz_kind_name(ZZKind k);

struct ZZInterval {
    ZZKind kind = ZZKind::CC;
    int i = 1;
    int j = 1;
    friend auto operator<=>(const ZZInterval&, const ZZInterval&) = default;
    // number of integer (sink) points plus half-integer (source) points covered
    int point_count() const;
    std::string str() const;
};

// Position of each vertex along the two axes of the AR grid (0-based).
struct ARAxes {
    std::vector<int> x_axis;  // vertices in axis order
    std::vector<int> y_axis;
    std::vector<int> x_pos;   // x_pos[v] = index of v in x_axis
    std::vector<int> y_pos;
};
ARAxes ar_axes(const Orientation& o);

Region classify_region(const Orientation& o, const Interval& m);

enum class HullSide { None, North, South };
HullSide hull_side(const Orientation& o, const Interval& m);
bool in_hull(const Orientation& o, const Interval& m);

ZZInterval to_zz(const Orientation& o, const Interval& m);

std::optional<Interval> restrict(const Interval& m, const Valley& v);

}  // namespace anq
