#include "anq/io.hpp"

#include "anq/error.hpp"

namespace anq {

Barcode parse_barcode(const Json& j) {
    if (!j.is_object() || !j.contains("orientation") || !j.contains("bars"))
        throw Error(Errc::InvalidInterval, "barcode needs \"orientation\" and \"bars\"");
    if (!j["orientation"].is_string()) throw Error(Errc::InvalidCharacter, "orientation must be a string");
    Barcode b{parse_orientation(j["orientation"].get<std::string>()), {}};
    if (!j["bars"].is_array()) throw Error(Errc::InvalidInterval, "bars must be an array");
    for (const auto& e : j["bars"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw Error(Errc::InvalidInterval, "each bar is [x, y] with integer endpoints");
        Interval m{e[0].get<int>(), e[1].get<int>()};
        validate(b.orientation, m);
        b.bars.push_back(m);
    }
    return b;
}

Barcode parse_barcode(const std::string& text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw Error(Errc::InvalidInterval, "barcode is not valid JSON");
    return parse_barcode(j);
}

Json to_json(const Interval& m) { return Json::array({m.x, m.y}); }

Json to_json(const Barcode& b) {
    Json bars = Json::array();
    for (const auto& m : b.bars) bars.push_back(to_json(m));
    return Json{{"orientation", b.orientation.word()}, {"bars", bars}};
}

Json to_json(const Matching<Interval>& m) {
    Json pairs = Json::array(), unmatched = Json::array();
    for (const auto& [s, t] : m.pairs) pairs.push_back(Json::array({to_json(s), to_json(t)}));
    for (const auto& s : m.unmatched1) unmatched.push_back(Json{{"barcode", 1}, {"bar", to_json(s)}});
    for (const auto& t : m.unmatched2) unmatched.push_back(Json{{"barcode", 2}, {"bar", to_json(t)}});
    return Json{{"value", m.value.str()}, {"pairs", pairs}, {"unmatched", unmatched}};
}

Json to_json(const SingletonCase& c) {
    return Json{{"s", to_json(c.s)}, {"t", c.t ? to_json(*c.t) : Json(nullptr)}};
}

Json to_json(const AuditReport& r) {
    Json j{{"holds", r.holds},
           {"constant", r.constant_tested.str()},
           {"max_ratio", r.max_ratio.str()},
           {"witness", nullptr},
           {"cases", r.cases}};
    if (r.witness) {
        j["witness"] = to_json(*r.witness);
        j["witness"]["lhs"] = r.lhs_at_witness.str();
        j["witness"]["rhs"] = r.rhs_at_witness.str();
    }
    return j;
}

Json to_json(const ARQuiver& q) {
    Json nodes = Json::array(), edges = Json::array();
    for (const auto& v : q.nodes)
        nodes.push_back(Json{{"bar", to_json(v.bar)}, {"dim", v.bar.dim()}, {"gx", v.gx}, {"gy", v.gy}});
    for (const auto& e : q.edges) edges.push_back(Json{{"u", e.u}, {"v", e.v}, {"weight", e.weight}});
    return Json{{"orientation", q.orientation.word()}, {"nodes", nodes}, {"edges", edges}};
}

namespace {
Json weight_json(const std::optional<WeightConfig>& w) {
    return w ? Json::array({w->a, w->b}) : Json(nullptr);
}
}  // namespace

Json to_json(const WeightClass& wc) {
    Json j{{"kind", weight_kind_name(wc.kind)}, {"weight", weight_json(wc.weight)},
           {"predicted", weight_json(wc.predicted)}};
    if (wc.b_upper_bound) j["b_upper_bound"] = *wc.b_upper_bound;
    return j;
}

Json to_json(const AntiStableCandidate& c) {
    return Json{{"sigma", to_json(c.sigma)}, {"tau", to_json(c.tau)}, {"ar", c.ar.str()}, {"wil", c.wil.str()},
                {"gap", c.gap().str()}};
}

}  // namespace anq
