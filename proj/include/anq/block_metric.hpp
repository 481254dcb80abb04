#pragma once

#include "anq/ar_metric.hpp"
#include "anq/extended.hpp"
#include "anq/intervals.hpp"

namespace anq {

// Width of a block bar: OO -> (j-i)/4, CO and OC -> (j-i)/2, CC -> inf.
Ext w_bl(const ZZInterval& z);
// Same kind: max of the endpoint shifts; different kinds: max of the widths.
Ext d_bl(const ZZInterval& a, const ZZInterval& b);

Generators<ZZInterval> block_generators_zz();
// Block generators pulled back along the ZZ conversion of a pure zigzag.
MetricGenerators block_generators(const Orientation& o);

// Every ZZ interval with indices in [lo, hi] (OO needs j > i).
std::vector<ZZInterval> all_zz_intervals(int lo, int hi);

}  // namespace anq
