#include "tentlim/cli.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tentlim/arcs.hpp"
#include "tentlim/chains.hpp"
#include "tentlim/errors.hpp"
#include "tentlim/folding.hpp"
#include "tentlim/invariants.hpp"
#include "tentlim/symmetry.hpp"
#include "tentlim/tentmap.hpp"

namespace tentlim {
namespace {

using json = nlohmann::ordered_json;
using Map = TentMap<BigRational>;
using Rat = BigRational;

std::string dstr(const Rat& v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", to_double(v));
    return buf;
}

// options shared by every subcommand
struct Common {
    std::string slope;
    std::string format = "json";
    std::string outputPath;
    long precisionBits = 0;
};

void add_common(CLI::App* sub, Common& c) {
    sub->fallthrough(); // lets app-level flags like --config follow the subcommand
    sub->add_option("--slope", c.slope, "tent-map slope, a rational like 3/2")->required();
    sub->add_option("--format", c.format, "json | csv | plotdata")
        ->check(CLI::IsMember({"json", "csv", "plotdata"}))
        ->capture_default_str();
    sub->add_option("--output", c.outputPath, "write the artifact here instead of stdout");
    sub->add_option("--precision-bits", c.precisionBits,
                    "default certified-interval precision")
        ->envname("TENTLIM_PRECISION_BITS");
}

Map make_map(const Common& c) {
    if (c.precisionBits > 0)
        setenv("TENTLIM_PRECISION_BITS", std::to_string(c.precisionBits).c_str(), 1);
    return Map(rat_parse(c.slope));
}

int emit(const Common& c, const std::string& body, std::ostream& out) {
    if (c.outputPath.empty()) {
        out << body;
        return 0;
    }
    std::ofstream f(c.outputPath, std::ios::binary);
    if (!f) throw Error("cannot open output file: " + c.outputPath);
    f << body;
    return 0;
}

std::string no_plot(const std::string& name) {
    throw Error(name + " has no plotdata view; use --format json or csv");
}

json pattern_json(const Pattern& p) {
    json a = json::array();
    for (int v : p) a.push_back(v);
    return a;
}

std::string pattern_csv(const Pattern& p) {
    std::string s;
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(p[i]);
    }
    return s;
}

// ---------------------------------------------------------------- subcommands

struct OrbitOpts {
    Common c;
    int maxN = 10;
};

int run_orbit(const OrbitOpts& o, std::ostream& out) {
    Map m = make_map(o.c);
    CriticalOrbit<Rat> orb(m, o.maxN);
    if (o.c.format == "json") {
        json j;
        j["slope"] = rat_str(m.s);
        j["kappa"] = orb.kappa();
        auto pp = orb.preperiodic_at(o.maxN);
        j["preperiodic"] =
            pp ? json{{"index", pp->first}, {"period", pp->second}} : json(nullptr);
        json pts = json::array();
        for (int i = 1; i <= o.maxN; ++i)
            pts.push_back(json{{"i", i},
                               {"value", rat_str(orb.value(i))},
                               {"side", orb.side(i)}});
        j["points"] = pts;
        return emit(o.c, j.dump() + "\n", out);
    }
    if (o.c.format == "csv") {
        std::string s = "i,value,side\n";
        for (int i = 1; i <= o.maxN; ++i)
            s += std::to_string(i) + "," + rat_str(orb.value(i)) + "," +
                 (orb.side(i) ? "true" : "false") + "\n";
        return emit(o.c, s, out);
    }
    std::string s;
    for (int i = 1; i <= o.maxN; ++i)
        s += std::to_string(i) + " " + dstr(orb.value(i)) + "\n";
    return emit(o.c, s, out);
}

struct KappaOpts {
    Common c;
};

int run_kappa(const KappaOpts& o, std::ostream& out) {
    Map m = make_map(o.c);
    CriticalOrbit<Rat> orb(m);
    if (o.c.format == "json") {
        json j;
        j["kappa"] = orb.kappa();
        return emit(o.c, j.dump() + "\n", out);
    }
    if (o.c.format == "csv")
        return emit(o.c, "kappa\n" + std::to_string(orb.kappa()) + "\n", out);
    no_plot("kappa");
    return 2;
}

struct DeltaOpts {
    Common c;
    int maxN = 20;
};

const char* delta_kind_name(DeltaKind k) {
    switch (k) {
        case DeltaKind::OrbitGap: return "orbit-gap";
        case DeltaKind::FixedGap: return "fixed-gap";
        default: return "image-gap";
    }
}

int run_delta(const DeltaOpts& o, std::ostream& out) {
    Map m = make_map(o.c);
    auto cert = delta_bound(m, o.maxN);
    if (o.c.format == "json") {
        json j;
        j["delta"] = rat_str(cert.delta);
        j["kind"] = delta_kind_name(cert.kind);
        j["index"] = cert.index;
        if (cert.kind == DeltaKind::ImageGap) j["pair"] = cert.pair;
        return emit(o.c, j.dump() + "\n", out);
    }
    if (o.c.format == "csv") {
        std::string s = "delta,kind,index,pair\n";
        s += rat_str(cert.delta);
        s += std::string(",") + delta_kind_name(cert.kind) + "," +
             std::to_string(cert.index) + ",";
        if (cert.kind == DeltaKind::ImageGap) s += std::to_string(cert.pair);
        s += "\n";
        return emit(o.c, s, out);
    }
    no_plot("delta");
    return 2;
}

struct PatternOpts {
    Common c;
    int depth = 1;
    std::string lo, hi; // default: the core
};

int run_pattern(const PatternOpts& o, std::ostream& out) {
    Map m = make_map(o.c);
    if (o.lo.empty() != o.hi.empty())
        throw Error("pattern needs both --lo and --hi, or neither");
    Rat lo = o.lo.empty() ? m.c2 : rat_parse(o.lo);
    Rat hi = o.hi.empty() ? m.c1 : rat_parse(o.hi);
    Pattern p = k_pattern(m, o.depth, lo, hi);
    if (o.c.format == "json") {
        json j;
        j["n"] = o.depth;
        j["lo"] = rat_str(lo);
        j["hi"] = rat_str(hi);
        j["pattern"] = pattern_json(p);
        return emit(o.c, j.dump() + "\n", out);
    }
    if (o.c.format == "csv") {
        std::string s = "index,level\n";
        for (size_t i = 0; i < p.size(); ++i)
            s += std::to_string(i) + "," + std::to_string(p[i]) + "\n";
        return emit(o.c, s, out);
    }
    auto f = pl_restrict(m, o.depth, lo, hi);
    std::string s;
    for (size_t i = 0; i < f.x.size(); ++i)
        s += dstr(f.x[i]) + " " + dstr(f.y[i]) + "\n";
    return emit(o.c, s, out);
}

struct RealizeOpts {
    Common c;
    std::vector<int> pattern;
    int maxN = 12;
};

int run_realize(const RealizeOpts& o, std::ostream& out) {
    Map m = make_map(o.c);
    auto res = realize_pattern(m, o.pattern, o.maxN);
    if (o.c.format == "json") {
        json j;
        j["pattern"] = pattern_json(o.pattern);
        j["result"] = res ? json{{"n", res->n},
                                 {"lo", rat_str(res->lo)},
                                 {"hi", rat_str(res->hi)}}
                          : json(nullptr);
        return emit(o.c, j.dump() + "\n", out);
    }
    if (o.c.format == "csv") {
        std::string s = "n,lo,hi\n";
        if (res)
            s += std::to_string(res->n) + "," + rat_str(res->lo) + "," +
                 rat_str(res->hi) + "\n";
        return emit(o.c, s, out);
    }
    no_plot("realize");
    return 2;
}

struct ArcsOpts {
    Common c;
    int maxI = 6;
    int depth = 0; // 0: each arc at its own depth
};

int run_arcs(const ArcsOpts& o, std::ostream& out) {
    Map m = make_map(o.c);
    if (o.maxI < 1) throw Error("arcs needs --max-i >= 1");
    if (o.depth > 0 && o.depth < o.maxI)
        throw Error("arcs needs --depth >= --max-i to transport every arc");
    int salientDepth = o.depth > 0 ? o.depth : o.maxI;
    std::vector<Arc<Rat>> arcs;
    for (int i = 1; i <= o.maxI; ++i) {
        Arc<Rat> a = arc_A(m, i);
        if (o.depth > 0) a = arc_at_depth(m, a, o.depth);
        arcs.push_back(a);
    }
    if (o.c.format == "json") {
        json j;
        j["slope"] = rat_str(m.s);
        json ja = json::array();
        for (int i = 1; i <= o.maxI; ++i) {
            const auto& a = arcs[static_cast<size_t>(i - 1)];
            ja.push_back(json{{"i", i},
                              {"depth", a.depth},
                              {"lo", rat_str(a.lo)},
                              {"hi", rat_str(a.hi)},
                              {"anchor", rat_str(a.anchor)}});
        }
        j["arcs"] = ja;
        json js = json::array();
        for (int i = 1; i <= o.maxI; ++i)
            js.push_back(json{
                {"i", i},
                {"position", rat_str(salient_position(m, i, salientDepth))}});
        j["salient-depth"] = salientDepth;
        j["salient"] = js;
        return emit(o.c, j.dump() + "\n", out);
    }
    if (o.c.format == "csv") {
        std::string s = "i,depth,lo,hi,anchor\n";
        for (int i = 1; i <= o.maxI; ++i) {
            const auto& a = arcs[static_cast<size_t>(i - 1)];
            s += std::to_string(i) + "," + std::to_string(a.depth) + "," +
                 rat_str(a.lo) + "," + rat_str(a.hi) + "," + rat_str(a.anchor) + "\n";
        }
        return emit(o.c, s, out);
    }
    // plot view: salient positions at the common depth
    std::string s;
    for (int i = 1; i <= o.maxI; ++i)
        s += std::to_string(i) + " " +
             dstr(salient_position(m, i, salientDepth)) + "\n";
    return emit(o.c, s, out);
}

struct ChainOpts {
    Common c;
    int k = 0;
};

int run_chain(const ChainOpts& o, std::ostream& out) {
    Map m = make_map(o.c);
    auto ch = natural_chain(m, o.k);
    if (o.c.format == "json") {
        json j;
        j["k"] = ch.k;
        j["links"] = ch.links();
        j["mesh"] = rat_str(ch.mesh);
        json b = json::array();
        for (const auto& x : ch.boundaries) b.push_back(rat_str(x));
        j["boundaries"] = b;
        return emit(o.c, j.dump() + "\n", out);
    }
    if (o.c.format == "csv") {
        std::string s = "index,boundary\n";
        for (size_t i = 0; i < ch.boundaries.size(); ++i)
            s += std::to_string(i) + "," + rat_str(ch.boundaries[i]) + "\n";
        return emit(o.c, s, out);
    }
    std::string s;
    for (size_t i = 0; i < ch.boundaries.size(); ++i)
        s += std::to_string(i) + " " + dstr(ch.boundaries[i]) + "\n";
    return emit(o.c, s, out);
}

struct SymmetryOpts {
    Common c;
    int depth = 1;
    std::string lo, hi, center, eps;
};

int run_symmetry(const SymmetryOpts& o, std::ostream& out) {
    Map m = make_map(o.c);
    if (o.lo.empty() != o.hi.empty())
        throw Error("symmetry needs both --lo and --hi, or neither");
    Rat lo = o.lo.empty() ? m.c2 : rat_parse(o.lo);
    Rat hi = o.hi.empty() ? m.c1 : rat_parse(o.hi);
    Rat eps = rat_parse(o.eps);
    auto f = pl_restrict(m, o.depth, lo, hi);
    std::optional<Rat> center;
    if (!o.center.empty()) center = rat_parse(o.center);
    auto res = is_eps_symmetric(f, eps, center);
    if (o.c.format == "json") {
        json j;
        j["n"] = o.depth;
        j["lo"] = rat_str(lo);
        j["hi"] = rat_str(hi);
        j["center"] = center ? json(rat_str(*center)) : json(nullptr);
        j["eps"] = rat_str(eps);
        j["close"] = res.close;
        j["margin"] = rat_str(res.margin);
        if (res.matching) {
            json w = json::array();
            for (size_t i = 0; i < res.matching->x.size(); ++i)
                w.push_back(json::array(
                    {rat_str(res.matching->x[i]), rat_str(res.matching->y[i])}));
            j["witness"] = w;
        } else {
            j["witness"] = nullptr;
        }
        return emit(o.c, j.dump() + "\n", out);
    }
    if (o.c.format == "csv") {
        std::string s = "close,margin\n";
        s += std::string(res.close ? "true" : "false") + "," + rat_str(res.margin) + "\n";
        return emit(o.c, s, out);
    }
    std::string s;
    if (res.matching)
        for (size_t i = 0; i < res.matching->x.size(); ++i)
            s += dstr(res.matching->x[i]) + " " + dstr(res.matching->y[i]) + "\n";
    return emit(o.c, s, out);
}

struct InvariantOpts {
    Common c;
    int maxDepth = 12;
};

int run_invariant(const InvariantOpts& o, std::ostream& out) {
    Map m = make_map(o.c);
    auto seq = invariant_sequence(m, o.maxDepth);
    if (o.c.format == "json") {
        json j = json::array();
        for (const auto& e : seq.entries)
            j.push_back(json{{"n", e.n},
                             {"pattern", pattern_json(e.pattern)},
                             {"side", e.side}});
        return emit(o.c, j.dump() + "\n", out);
    }
    if (o.c.format == "csv") {
        std::string s = "n,side,pattern\n";
        for (const auto& e : seq.entries)
            s += std::to_string(e.n) + "," + (e.side ? "true" : "false") + "," +
                 pattern_csv(e.pattern) + "\n";
        return emit(o.c, s, out);
    }
    no_plot("invariant");
    return 2;
}

struct DistinguishOpts {
    Common c;
    std::string slope2;
    int maxDepth = 40;
};

int run_distinguish(const DistinguishOpts& o, std::ostream& out) {
    Map a = make_map(o.c);
    Map b(rat_parse(o.slope2));
    auto d = distinguish(a, b, o.maxDepth);
    if (o.c.format == "json") {
        json j;
        j["result"] =
            d ? json{{"n", d->n}, {"reason", d->reason}} : json(nullptr);
        return emit(o.c, j.dump() + "\n", out);
    }
    if (o.c.format == "csv") {
        std::string s = "n,reason\n";
        if (d) s += std::to_string(d->n) + "," + d->reason + "\n";
        return emit(o.c, s, out);
    }
    no_plot("distinguish");
    return 2;
}

struct CountOpts {
    Common c;
    int k = 1;
    int level = 1;
};

int run_count(const CountOpts& o, std::ostream& out) {
    Map m = make_map(o.c);
    int n = count_levels(m, o.k, o.level);
    if (o.c.format == "json") {
        json j;
        j["k"] = o.k;
        j["level"] = o.level;
        j["count"] = n;
        return emit(o.c, j.dump() + "\n", out);
    }
    if (o.c.format == "csv") {
        return emit(o.c,
                    "k,level,count\n" + std::to_string(o.k) + "," +
                        std::to_string(o.level) + "," + std::to_string(n) + "\n",
                    out);
    }
    no_plot("count");
    return 2;
}

// ------------------------------------------------------------------- verify

struct VerifyOpts {
    Common c;
    std::string suite;
    int maxN = 12;       // lemmas: adjacent-image depth; symmetry: window depth
    int maxI = 20;       // lemmas: arc-lattice reach
    int k = -1;          // completeness: chain level
    int maxDepth = 0;    // completeness: arc depth (default k+10)
    int midpointCap = 0; // completeness: negative-control truncation
    int grid = 200;      // symmetry: hypothesis grid
    int maxJ = 6;        // lemma12: largest j
    std::string delta;   // symmetry override; default delta_bound(slope, 20)
    std::string eps;     // lemma12 override; default delta/16
};

int verify_lemmas(const VerifyOpts& o, const Map& m, std::ostream& out) {
    std::vector<std::string> adjacent;
    for (int n = 1; n <= o.maxN; ++n)
        for (const auto& v : verify_adjacent_images(m, n))
            adjacent.push_back("n=" + std::to_string(v.n) +
                               " pair=" + std::to_string(v.pair));
    LatticeReport lat = verify_arc_lattice(m, o.maxI);
    bool ok = adjacent.empty() && lat.ok();
    json j;
    j["suite"] = "lemmas";
    j["slope"] = rat_str(m.s);
    j["max-n"] = o.maxN;
    j["max-i"] = o.maxI;
    j["adjacent-violations"] = adjacent;
    j["lattice-checks"] = lat.checks;
    j["lattice-failures"] = lat.failures;
    j["ok"] = ok;
    if (o.c.format == "csv") {
        std::string s = "key,value\n";
        s += "suite,lemmas\n";
        s += "slope," + rat_str(m.s) + "\n";
        s += "adjacent-violations," + std::to_string(adjacent.size()) + "\n";
        s += "lattice-checks," + std::to_string(lat.checks) + "\n";
        s += "lattice-failures," + std::to_string(lat.failures.size()) + "\n";
        s += std::string("ok,") + (ok ? "true" : "false") + "\n";
        emit(o.c, s, out);
    } else {
        emit(o.c, j.dump() + "\n", out);
    }
    return ok ? 0 : 1;
}

int verify_completeness_suite(const VerifyOpts& o, const Map& m, std::ostream& out) {
    if (o.k < 0) throw Error("verify --suite completeness needs --k");
    int depth = o.maxDepth > 0 ? o.maxDepth : o.k + 10;
    CompletenessReport rep = verify_completeness(m, o.k, depth, o.midpointCap);
    bool ok = rep.ok();
    json j;
    j["suite"] = "completeness";
    j["slope"] = rat_str(m.s);
    j["k"] = rep.k;
    j["depth"] = rep.depth;
    j["candidates"] = rep.candidates;
    j["flagged"] = rep.flagged;
    j["checks"] = rep.checks;
    j["failures"] = rep.failures;
    j["ok"] = ok;
    if (o.c.format == "csv") {
        std::string s = "key,value\n";
        s += "suite,completeness\n";
        s += "slope," + rat_str(m.s) + "\n";
        s += "k," + std::to_string(rep.k) + "\n";
        s += "depth," + std::to_string(rep.depth) + "\n";
        s += "candidates," + std::to_string(rep.candidates) + "\n";
        s += "flagged," + std::to_string(rep.flagged) + "\n";
        s += "checks," + std::to_string(rep.checks) + "\n";
        s += "failures," + std::to_string(rep.failures.size()) + "\n";
        s += std::string("ok,") + (ok ? "true" : "false") + "\n";
        emit(o.c, s, out);
    } else {
        emit(o.c, j.dump() + "\n", out);
    }
    return ok ? 0 : 1;
}

int verify_symmetry_suite(const VerifyOpts& o, const Map& m, std::ostream& out) {
    Rat delta = o.delta.empty() ? delta_bound(m, 20).delta : rat_parse(o.delta);
    json j;
    j["suite"] = "symmetry";
    j["slope"] = rat_str(m.s);
    bool ok = true;
    std::string csvTail;
    try {
        auto [eps, rep] = verify_no_symmetry(m, delta, o.maxN, o.grid);
        ok = rep.violations.empty();
        j["delta"] = rat_str(rep.delta);
        j["eps"] = rat_str(eps);
        j["rung"] = rep.rung;
        j["max-n"] = rep.maxN;
        j["grid"] = rep.grid;
        j["configs"] = json{{"a", rep.configsA}, {"b", rep.configsB}, {"c", rep.configsC}};
        j["exemptions"] = rep.exemptions;
        j["ladder"] = rep.ladder;
        j["violations"] = rep.violations;
        csvTail = "eps," + rat_str(eps) + "\nrung," + std::to_string(rep.rung) +
                  "\nviolations," + std::to_string(rep.violations.size()) + "\n";
    } catch (const NoEpsilonFound& e) {
        ok = false;
        j["delta"] = rat_str(delta);
        j["error"] = e.what();
        csvTail = std::string("error,no epsilon found\n");
    }
    j["ok"] = ok;
    if (o.c.format == "csv") {
        std::string s = "key,value\n";
        s += "suite,symmetry\n";
        s += "slope," + rat_str(m.s) + "\n";
        s += csvTail;
        s += std::string("ok,") + (ok ? "true" : "false") + "\n";
        emit(o.c, s, out);
    } else {
        emit(o.c, j.dump() + "\n", out);
    }
    return ok ? 0 : 1;
}

int verify_lemma12_suite(const VerifyOpts& o, const Map& m, std::ostream& out) {
    Rat eps;
    if (!o.eps.empty()) {
        eps = rat_parse(o.eps);
    } else {
        Rat d = delta_bound(m, 20).delta;
        Rat sixteen = scalar_like(m.s, 16);
        eps = d / sixteen;
    }
    int instances = 0, skipped = 0, notFound = 0;
    std::vector<std::string> found;
    for (int j2 = 1; j2 <= o.maxJ; ++j2) {
        auto tps = turning_points(m, j2, m.c2, m.c1);
        std::vector<Rat> cuts{m.c2};
        for (const auto& t : tps) cuts.push_back(t.pos);
        cuts.push_back(m.c1);
        for (int i = 0; i < j2; ++i)
            for (size_t g = 0; g + 1 < cuts.size(); ++g) {
                if (compare(cuts[g], cuts[g + 1]) >= 0) continue;
                try {
                    auto br = verify_lemma12(m, eps, i, j2, cuts[g], cuts[g + 1]);
                    ++instances;
                    found.push_back("i=" + std::to_string(i) + " j=" +
                                    std::to_string(j2) + " k=" + std::to_string(br.k) +
                                    " J'=[" + rat_str(br.lo) + ", " + rat_str(br.hi) +
                                    "]");
                } catch (const HypothesisNotMet&) {
                    ++skipped;
                } catch (const NotFound&) {
                    ++notFound;
                }
            }
    }
    bool ok = notFound == 0 && instances > 0;
    json j;
    j["suite"] = "lemma12";
    j["slope"] = rat_str(m.s);
    j["eps"] = rat_str(eps);
    j["max-j"] = o.maxJ;
    j["instances"] = instances;
    j["skipped"] = skipped;
    j["not-found"] = notFound;
    j["branches"] = found;
    j["ok"] = ok;
    if (o.c.format == "csv") {
        std::string s = "key,value\n";
        s += "suite,lemma12\n";
        s += "slope," + rat_str(m.s) + "\n";
        s += "eps," + rat_str(eps) + "\n";
        s += "instances," + std::to_string(instances) + "\n";
        s += "skipped," + std::to_string(skipped) + "\n";
        s += "not-found," + std::to_string(notFound) + "\n";
        s += std::string("ok,") + (ok ? "true" : "false") + "\n";
        emit(o.c, s, out);
    } else {
        emit(o.c, j.dump() + "\n", out);
    }
    return ok ? 0 : 1;
}

int run_verify(const VerifyOpts& o, std::ostream& out) {
    Map m = make_map(o.c);
    if (o.c.format == "plotdata") no_plot("verify");
    if (o.suite == "lemmas") return verify_lemmas(o, m, out);
    if (o.suite == "completeness") return verify_completeness_suite(o, m, out);
    if (o.suite == "symmetry") return verify_symmetry_suite(o, m, out);
    return verify_lemma12_suite(o, m, out);
}

} // namespace

int tentlim_run(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"combinatorial invariants of tent-map inverse limits"};
    app.name("tentlim");
    app.require_subcommand(1);
    app.set_config("--config", "", "key=value config file ([subcommand] sections)");

    OrbitOpts orbitOpts;
    auto* orbitCmd = app.add_subcommand("orbit", "critical orbit points and sides");
    add_common(orbitCmd, orbitOpts.c);
    orbitCmd->add_option("--max-n", orbitOpts.maxN, "orbit length")
        ->capture_default_str();

    KappaOpts kappaOpts;
    auto* kappaCmd = app.add_subcommand("kappa", "first return index of the orbit");
    add_common(kappaCmd, kappaOpts.c);

    DeltaOpts deltaOpts;
    auto* deltaCmd = app.add_subcommand("delta", "uniform clearance certificate");
    add_common(deltaCmd, deltaOpts.c);
    deltaCmd->add_option("--max-n", deltaOpts.maxN, "orbit/iterate reach")
        ->capture_default_str();

    PatternOpts patternOpts;
    auto* patternCmd = app.add_subcommand("pattern", "fold levels of an iterate window");
    add_common(patternCmd, patternOpts.c);
    patternCmd->add_option("--depth", patternOpts.depth, "iterate")->required();
    patternCmd->add_option("--lo", patternOpts.lo, "window start (default core)");
    patternCmd->add_option("--hi", patternOpts.hi, "window end (default core)");

    RealizeOpts realizeOpts;
    auto* realizeCmd = app.add_subcommand("realize", "find a window with a given pattern");
    add_common(realizeCmd, realizeOpts.c);
    realizeCmd->add_option("--pattern", realizeOpts.pattern, "comma-separated levels")
        ->required()
        ->delimiter(',');
    realizeCmd->add_option("--max-n", realizeOpts.maxN, "iterate search cap")
        ->capture_default_str();

    ArcsOpts arcsOpts;
    auto* arcsCmd = app.add_subcommand("arcs", "arc windows and salient points");
    add_common(arcsCmd, arcsOpts.c);
    arcsCmd->add_option("--max-i", arcsOpts.maxI, "largest arc index")
        ->capture_default_str();
    arcsCmd->add_option("--depth", arcsOpts.depth,
                        "transport every arc to this depth (0: own depth)")
        ->capture_default_str();

    ChainOpts chainOpts;
    auto* chainCmd = app.add_subcommand("chain", "natural chain cuts and mesh");
    add_common(chainCmd, chainOpts.c);
    chainCmd->add_option("--k", chainOpts.k, "preimage depth")->required();

    SymmetryOpts symOpts;
    auto* symCmd = app.add_subcommand("symmetry", "eps-symmetry of an iterate window");
    add_common(symCmd, symOpts.c);
    symCmd->add_option("--depth", symOpts.depth, "iterate")->required();
    symCmd->add_option("--lo", symOpts.lo, "window start (default core)");
    symCmd->add_option("--hi", symOpts.hi, "window end (default core)");
    symCmd->add_option("--center", symOpts.center, "pin the symmetry center");
    symCmd->add_option("--eps", symOpts.eps, "closeness bound")->required();

    VerifyOpts verifyOpts;
    auto* verifyCmd = app.add_subcommand("verify", "run a verification suite");
    add_common(verifyCmd, verifyOpts.c);
    verifyCmd->add_option("--suite", verifyOpts.suite, "lemmas | completeness | symmetry | lemma12")
        ->required()
        ->check(CLI::IsMember({"lemmas", "completeness", "symmetry", "lemma12"}));
    verifyCmd->add_option("--max-n", verifyOpts.maxN, "depth budget")
        ->capture_default_str();
    verifyCmd->add_option("--max-i", verifyOpts.maxI, "arc budget")
        ->capture_default_str();
    verifyCmd->add_option("--k", verifyOpts.k, "chain level (completeness)");
    verifyCmd->add_option("--max-depth", verifyOpts.maxDepth,
                          "arc depth (completeness; default k+10)");
    verifyCmd->add_option("--midpoint-cap", verifyOpts.midpointCap,
                          "truncate allowed centers (negative control)")
        ->capture_default_str();
    verifyCmd->add_option("--grid", verifyOpts.grid, "hypothesis grid (symmetry)")
        ->capture_default_str();
    verifyCmd->add_option("--max-j", verifyOpts.maxJ, "largest iterate (lemma12)")
        ->capture_default_str();
    verifyCmd->add_option("--delta", verifyOpts.delta, "clearance override (symmetry)");
    verifyCmd->add_option("--eps", verifyOpts.eps, "closeness bound (lemma12)");

    InvariantOpts invOpts;
    auto* invCmd = app.add_subcommand("invariant", "slope-distinguishing sequence");
    add_common(invCmd, invOpts.c);
    invCmd->add_option("--max-depth", invOpts.maxDepth, "deepest entry")
        ->capture_default_str();

    DistinguishOpts disOpts;
    auto* disCmd = app.add_subcommand("distinguish", "first differing entry of two slopes");
    add_common(disCmd, disOpts.c);
    disCmd->add_option("--slope2", disOpts.slope2, "second slope")->required();
    disCmd->add_option("--max-depth", disOpts.maxDepth, "comparison depth")
        ->capture_default_str();

    CountOpts countOpts;
    auto* countCmd = app.add_subcommand("count", "level tally in a salient window");
    add_common(countCmd, countOpts.c);
    countCmd->add_option("--k", countOpts.k, "window index")->required();
    countCmd->add_option("--level", countOpts.level, "fold level to count")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(std::move(rev));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err); // 0 for --help, CLI11 codes otherwise
        return code == 0 ? 0 : 2;
    }

    try {
        if (orbitCmd->parsed()) return run_orbit(orbitOpts, out);
        if (kappaCmd->parsed()) return run_kappa(kappaOpts, out);
        if (deltaCmd->parsed()) return run_delta(deltaOpts, out);
        if (patternCmd->parsed()) return run_pattern(patternOpts, out);
        if (realizeCmd->parsed()) return run_realize(realizeOpts, out);
        if (arcsCmd->parsed()) return run_arcs(arcsOpts, out);
        if (chainCmd->parsed()) return run_chain(chainOpts, out);
        if (symCmd->parsed()) return run_symmetry(symOpts, out);
        if (verifyCmd->parsed()) return run_verify(verifyOpts, out);
        if (invCmd->parsed()) return run_invariant(invOpts, out);
        if (disCmd->parsed()) return run_distinguish(disOpts, out);
        if (countCmd->parsed()) return run_count(countOpts, out);
        err << "tentlim: no subcommand given\n";
        return 2;
    } catch (const PrecisionExhausted& e) {
        err << "tentlim: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "tentlim: " << e.what() << "\n";
        return 2;
    }
}

} // namespace tentlim
