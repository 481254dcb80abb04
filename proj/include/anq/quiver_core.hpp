#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anq/extended.hpp"

namespace anq {

// Orientation of A_n as an edge word.  Letter k (1-indexed) describes the
// edge between k and k+1: 'F' means k < k+1 in the poset, 'B' means k > k+1.
// Sources are poset minima, sinks are poset maxima.
class Orientation {
public:
    Orientation() : Orientation(std::string{}) {}
    explicit Orientation(std::string word);

    int n() const { return n_; }
    const std::string& word() const { return word_; }

    // true iff v < v+1 (edge v is 'F'); 1 <= v < n
    bool rises_after(int v) const { return word_[v - 1] == 'F'; }

    bool is_source(int v) const { return source_[v]; }
    bool is_sink(int v) const { return sink_[v]; }
    const std::vector<int>& sources() const { return sources_; }
    const std::vector<int>& sinks() const { return sinks_; }

    bool is_pure_zigzag() const;
    bool is_equioriented() const;
    // "uu", "ud", "du" or "dd"; 'u' marks an endpoint that is a sink.
    std::string endpoint_type() const;

    // Poset order on vertices 1..n.
    bool leq(int x, int y) const;

    // Vertex v <-> n+1-v.
    Orientation mirrored() const;

    friend bool operator==(const Orientation& a, const Orientation& b) { return a.word_ == b.word_; }

private:
    std::string word_;
    int n_ = 1;
    std::vector<char> source_, sink_;
    std::vector<int> sources_, sinks_;
};

Orientation parse_orientation(std::string_view text);

// One wedge component around a source.  left_sink / right_sink are absent for
// equioriented end segments.
struct Valley {
    int lo = 1;  // first vertex of the component
    int hi = 1;  // last vertex
    int source = 1;
    std::optional<int> left_sink;
    std::optional<int> right_sink;
    int t_short = 0;
    int s_long = 0;

    int left_len() const { return source - lo; }
    int right_len() const { return hi - source; }
    bool contains(int v) const { return lo <= v && v <= hi; }
};

struct WedgeDecomposition {
    std::vector<Valley> valleys;
    int T = 0;
    int S = 0;
};

WedgeDecomposition wedge_decompose(const Orientation& o);

struct Refinement {
    Orientation refined;
    int r = 2;
    int map(int v) const { return 1 + (v - 1) * r; }
};

Refinement refine(const Orientation& o, int r);

struct WeightConfig {
    int a = 1;
    int b = 1;
    friend bool operator==(const WeightConfig&, const WeightConfig&) = default;
};

struct OrientationStats {
    int T = 0;
    int S = 0;
    bool pure_zigzag = false;
    bool equioriented = false;
    std::optional<std::string> endpoint_type;
    bool shallow = false;
    bool central = false;
};

OrientationStats stats(const Orientation& o);

// Vertex of the suspended poset: 1..n, or kTop for the added maximum.
inline constexpr int kTop = 0;

// Directed distance in the suspended Hasse digraph; poset edges weigh a,
// edges into the top weigh b.  Infinite when x is not below y.
Ext weighted_dist(const Orientation& o, const WeightConfig& w, int x, int y);

// All-pairs table of weighted_dist, indexed [x][y] with x,y in {kTop,1..n}.
std::vector<std::vector<Ext>> weighted_dist_table(const Orientation& o, const WeightConfig& w);

// All 2^(n-1) orientations of A_n, in lexicographic word order ('B' < 'F').
std::vector<Orientation> all_orientations(int n);
// The two pure zigzag orientations of A_n (n >= 2): starting with 'B' then 'F'.
std::vector<Orientation> zigzags(int n);

}  // namespace anq
