// Command-line front end: distances between barcode files, AR atlas export,
// audits, minimal stable weights and formula-vs-oracle checks.
#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

#include "anq/block_metric.hpp"
#include "anq/error.hpp"
#include "anq/io.hpp"
#include "anq/stability.hpp"
#include "anq/weighted_interleaving.hpp"

using namespace anq;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct MetricFlags {
    std::string metric = "ar";
    int r = 0;
    int a = 0;
    int b = 0;
};

MetricGenerators make_generators(const std::string& metric, const Orientation& o, const MetricFlags& f) {
    if (metric == "ar") return ar_generators(o, ARVariant::plain());
    if (metric == "ar-r" || metric == "ar-rinf") {
        if (f.r < 2) throw UsageError("--r >= 2 is required for " + metric);
        return ar_generators(o, metric == "ar-r" ? ARVariant::rzig(f.r) : ARVariant::rlimit(f.r));
    }
    if (metric == "block") return block_generators(o);
    if (metric == "wil") {
        if (f.a < 1 || f.b < 1) throw UsageError("--weight-a and --weight-b are required for wil");
        return wil_generators(o, {f.a, f.b});
    }
    throw UsageError("unknown metric " + metric);
}

// Constants such as "2n", "8r", "n/4", "1/2": factors are integers, n or r;
// juxtaposition multiplies, '/' divides by the next factor.
Ext parse_constant(const std::string& text, int n, int r) {
    Ext acc(1);
    bool divide = false, any = false;
    for (std::size_t k = 0; k < text.size();) {
        char c = text[k];
        if (c == '*' || c == ' ') {
            ++k;
            continue;
        }
        if (c == '/') {
            if (divide || !any) throw UsageError("bad constant " + text);
            divide = true;
            ++k;
            continue;
        }
        Ext f;
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t e = k;
            while (e < text.size() && std::isdigit(static_cast<unsigned char>(text[e]))) ++e;
            f = Ext(std::stoll(text.substr(k, e - k)));
            k = e;
        } else if (c == 'n' || c == 'r') {
            f = Ext(c == 'n' ? n : r);
            ++k;
        } else if (text.compare(k, 3, "inf") == 0) {
            f = kInf;
            k += 3;
        } else {
            throw UsageError("bad constant " + text);
        }
        acc = divide ? acc / f : acc * f;
        divide = false;
        any = true;
    }
    if (!any || divide) throw UsageError("bad constant " + text);
    return acc;
}

void emit(const Json& j, bool pretty) { std::cout << (pretty ? j.dump(2) : j.dump()) << "\n"; }

int cmd_dist(const MetricFlags& f, const std::vector<std::string>& files, bool pretty) {
    if (files.size() != 2) throw UsageError("dist needs exactly two barcode files");
    Barcode b1 = parse_barcode(read_file(files[0]));
    Barcode b2 = parse_barcode(read_file(files[1]));
    if (!(b1.orientation == b2.orientation)) throw UsageError("barcodes have different orientations");
    auto m = bottleneck(b1.bars, b2.bars, make_generators(f.metric, b1.orientation, f));
    if (!pretty) {
        emit(to_json(m), false);
        return kExitOk;
    }
    auto bar = [](const Interval& s) { return "[" + std::to_string(s.x) + "," + std::to_string(s.y) + "]"; };
    std::cout << "distance " << m.value.str() << "\n";
    for (const auto& [s, t] : m.pairs) std::cout << "  " << bar(s) << " <-> " << bar(t) << "\n";
    for (const auto& s : m.unmatched1) std::cout << "  " << bar(s) << " unmatched (first)\n";
    for (const auto& t : m.unmatched2) std::cout << "  " << bar(t) << " unmatched (second)\n";
    return kExitOk;
}

int cmd_ar_quiver(const std::string& word, const std::string& format, bool pretty) {
    auto q = build_ar_quiver(parse_orientation(word));
    if (format == "dot") std::cout << q.to_dot();
    else emit(to_json(q), pretty);
    return kExitOk;
}

std::vector<Orientation> scope(const std::string& word, int n, int n_max, bool zigzag_only) {
    if (!word.empty()) return {parse_orientation(word)};
    int lo = n > 0 ? n : 2, hi = n > 0 ? n : n_max;
    if (hi < 2) throw UsageError("give --orientation, --n or --n-max");
    std::vector<Orientation> out;
    for (int k = lo; k <= hi; ++k)
        for (auto& o : zigzag_only ? zigzags(k) : all_orientations(k)) out.push_back(o);
    return out;
}

struct AuditFlags {
    std::string lhs, rhs, constant, orientation, family = "auto";
    int n = 0, n_max = 0;
    bool finite_only = false;
};

int cmd_audit(const AuditFlags& af, const MetricFlags& f, bool pretty) {
    bool block = af.lhs == "block" || af.rhs == "block";
    bool zz = af.family == "zigzag" || (af.family == "auto" && block);
    Json runs = Json::array();
    bool holds = true;
    for (const auto& o : scope(af.orientation, af.n, af.n_max, zz)) {
        Ext c = parse_constant(af.constant, o.n(), f.r);
        auto lhs = make_generators(af.lhs, o, f), rhs = make_generators(af.rhs, o, f);
        CaseFilter filter;
        if (af.finite_only) filter = [](const SingletonCase&, const Ext& l, const Ext& r) {
            return !l.is_inf() && !r.is_inf();
        };
        auto rep = audit(o, lhs, rhs, c, filter);
        holds = holds && rep.holds;
        Json j = to_json(rep);
        j["orientation"] = o.word();
        runs.push_back(j);
    }
    emit(Json{{"lhs", af.lhs}, {"rhs", af.rhs}, {"holds", holds}, {"runs", runs}}, pretty);
    return holds ? kExitOk : kExitViolation;
}

int cmd_min_weight(const std::string& word, bool pretty) {
    auto o = parse_orientation(word);
    auto wc = minimal_stable_weight(o);
    Json j = to_json(wc);
    j["orientation"] = o.word();
    emit(j, pretty);
    return kExitOk;
}

struct OracleFlags {
    std::string suite;
    int n_max = 6;
};

int cmd_oracle_check(const OracleFlags& of, const MetricFlags& f, bool pretty) {
    std::size_t checked = 0;
    Json witness = nullptr;
    auto fail = [&](const Orientation& o, Json detail) {
        if (witness.is_null()) {
            witness = std::move(detail);
            witness["orientation"] = o.word();
        }
    };
    if (of.suite == "delta-ar" || of.suite == "w-ar") {
        for (int n = 2; n <= of.n_max && witness.is_null(); ++n)
            for (const auto& o : all_orientations(n)) {
                auto q = build_ar_quiver(o);
                auto bars = all_intervals(n);
                for (const auto& s : bars) {
                    if (of.suite == "w-ar") {
                        ++checked;
                        int a = w_ar(o, s), b = w_ar_oracle(q, s);
                        if (a != b) fail(o, Json{{"s", to_json(s)}, {"formula", a}, {"oracle", b}});
                        continue;
                    }
                    auto dist = ar_distances_from(q, s);
                    for (const auto& t : bars) {
                        ++checked;
                        int a = delta_ar(o, s, t), b = dist[q.node_index(t)];
                        if (a != b)
                            fail(o, Json{{"s", to_json(s)}, {"t", to_json(t)}, {"formula", a}, {"oracle", b}});
                    }
                }
            }
    } else if (of.suite == "wil") {
        if (of.n_max > 8) throw UsageError("the translation oracle is limited to n <= 8");
        std::vector<WeightConfig> weights;
        if (f.a > 0 && f.b > 0) weights.push_back({f.a, f.b});
        else
            for (int a = 1; a <= 2; ++a)
                for (int b = a; b <= 5; ++b) weights.push_back({a, b});
        for (int n = 2; n <= of.n_max && witness.is_null(); ++n)
            for (const auto& o : all_orientations(n))
                for (const auto& w : weights) {
                    TranslationOracle oracle(o, w);
                    WeightedInterleaving wil(o, w);
                    auto bars = all_intervals(n);
                    for (std::size_t i = 0; i < bars.size(); ++i) {
                        ++checked;
                        Ext x = wil.w(bars[i]), y = oracle.w(bars[i]);
                        if (x != y) fail(o, Json{{"s", to_json(bars[i])}, {"engine", x.str()}, {"oracle", y.str()}});
                        for (std::size_t k = i + 1; k < bars.size(); ++k) {
                            ++checked;
                            Ext d1 = wil.d(bars[i], bars[k]), d2 = oracle.d(bars[i], bars[k]);
                            if (d1 != d2)
                                fail(o, Json{{"s", to_json(bars[i])}, {"t", to_json(bars[k])},
                                             {"engine", d1.str()}, {"oracle", d2.str()}});
                        }
                    }
                }
    } else {
        throw UsageError("unknown suite " + of.suite + " (delta-ar, w-ar, wil)");
    }
    bool holds = witness.is_null();
    emit(Json{{"suite", of.suite}, {"n_max", of.n_max}, {"checked", checked}, {"holds", holds}, {"witness", witness}},
         pretty);
    return holds ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Distances on A_n barcodes"};
    app.require_subcommand(1);
    bool pretty = false;
    app.add_flag("--pretty", pretty, "Human-readable output");

    MetricFlags mf;
    auto add_weight = [&](CLI::App* c) {
        c->add_option("--weight-a", mf.a, "Poset edge weight")->check(CLI::PositiveNumber);
        c->add_option("--weight-b", mf.b, "Edge-to-top weight")->check(CLI::PositiveNumber);
    };

    std::vector<std::string> files;
    auto* dist = app.add_subcommand("dist", "Bottleneck distance between two barcode files");
    dist->add_option("--metric", mf.metric)->check(CLI::IsMember({"ar", "ar-r", "ar-rinf", "block", "wil"}));
    dist->add_option("--r", mf.r, "Refinement factor");
    dist->add_option("barcodes", files, "Two barcode JSON files")->required()->expected(2);
    add_weight(dist);

    std::string word, format = "dot";
    auto* quiver = app.add_subcommand("ar-quiver", "Emit the AR quiver");
    quiver->add_option("--orientation", word)->required();
    quiver->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

    AuditFlags af;
    auto* aud = app.add_subcommand("audit", "Check lhs <= c * rhs on every singleton case");
    aud->add_option("--lhs", af.lhs)->required();
    aud->add_option("--rhs", af.rhs)->required();
    aud->add_option("--constant", af.constant, "e.g. 2n, 8r, n/4, 1/2")->required();
    aud->add_option("--orientation", af.orientation);
    aud->add_option("--n", af.n);
    aud->add_option("--n-max", af.n_max);
    aud->add_option("--family", af.family)->check(CLI::IsMember({"auto", "zigzag", "all"}));
    aud->add_option("--r", mf.r);
    aud->add_flag("--finite-only", af.finite_only, "Skip cases where either side is infinite");
    add_weight(aud);

    std::string mw_word;
    auto* mw = app.add_subcommand("min-weight", "Minimal stable weight of an orientation");
    mw->add_option("--orientation", mw_word)->required();

    OracleFlags of;
    auto* oc = app.add_subcommand("oracle-check", "Closed forms against brute-force oracles");
    oc->add_option("--suite", of.suite)->required();
    oc->add_option("--n-max", of.n_max);
    add_weight(oc);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }
    try {
        if (*dist) return cmd_dist(mf, files, pretty);
        if (*quiver) return cmd_ar_quiver(word, format, pretty);
        if (*aud) return cmd_audit(af, mf, pretty);
        if (*mw) return cmd_min_weight(mw_word, pretty);
        if (*oc) return cmd_oracle_check(of, mf, pretty);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
