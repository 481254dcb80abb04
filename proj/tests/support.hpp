#pragma once

#include <doctest.h>

#include <sstream>

#include "anq/intervals.hpp"
#include "anq/quiver_core.hpp"

namespace doctest {
template <>
struct StringMaker<anq::Interval> {
    static String convert(const anq::Interval& m) {
        return ("[" + std::to_string(m.x) + "," + std::to_string(m.y) + "]").c_str();
    }
};
template <>
struct StringMaker<anq::ZZInterval> {
    static String convert(const anq::ZZInterval& z) { return z.str().c_str(); }
};
template <>
struct StringMaker<anq::WeightConfig> {
    static String convert(const anq::WeightConfig& w) {
        return ("(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")").c_str();
    }
};
}  // namespace doctest

namespace anq::test {
inline Orientation O(const char* w) { return parse_orientation(w); }
}  // namespace anq::test
