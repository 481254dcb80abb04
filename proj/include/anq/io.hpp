#pragma once

#include <string>

#include <json.hpp>

#include "anq/ar_metric.hpp"
#include "anq/bottleneck.hpp"
#include "anq/intervals.hpp"
#include "anq/stability.hpp"

namespace anq {

using Json = nlohmann::ordered_json;

// {"orientation": "<word>", "bars": [[x,y], ...]}; throws Error on bad input.
Barcode parse_barcode(const Json& j);
Barcode parse_barcode(const std::string& text);
Json to_json(const Barcode& b);

Json to_json(const Interval& m);
Json to_json(const Matching<Interval>& m);
Json to_json(const SingletonCase& c);
Json to_json(const AuditReport& r);
Json to_json(const ARQuiver& q);
Json to_json(const WeightClass& wc);
Json to_json(const AntiStableCandidate& c);

}  // namespace anq
