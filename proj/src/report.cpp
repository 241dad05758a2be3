#include "gridgenus/report.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

#include "gridgenus/constructions.hpp"
#include "gridgenus/formulas.hpp"
#include "gridgenus/oracle.hpp"

namespace gridgenus {

std::uint64_t default_budget() {
    if (const char* env = std::getenv("GRIDGENUS_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 10000000ULL;
}

Json build_report(const GridSpec& spec, const ReportOptions& opts) {
    GridSpec norm = spec.normalized();
    Json r;
    r["spec"] = spec.to_string();
    r["normalized"] = norm.to_string();
    auto c = counts(norm);
    r["vertices"] = c.vertices;
    r["edges"] = c.edges;
    r["betti"] = betti(norm);
    auto pp = parity_profile(norm);
    r["odd_parameters"] = pp.odd;
    r["even_parameters"] = pp.even;

    GenusBounds b = best_bounds(norm);
    Json jb;
    jb["lower"] = b.lower;
    jb["lower_source"] = b.lower_source;
    jb["upper"] = b.upper;
    jb["upper_source"] = b.upper_source;
    jb["exact"] = b.exact;
    r["genus"] = jb;

    ExactGenus eg = exact_genus(norm);
    if (eg.genus) {
        r["exact_genus"] = *eg.genus;
        r["exact_genus_source"] = eg.certificate;
        if (norm.dimension() > 1)
            r["quadrilateral_distance"] =
                rational_to_string(quadrilateral_distance(norm, *eg.genus));
    }

    Classification pl = classify_planar(norm);
    Classification to = classify_toroidal(norm);
    Json jc;
    jc["planar"] = pl.planar;
    jc["planar_reason"] = pl.reasons.empty() ? "" : pl.reasons.front();
    jc["toroidal_2cell"] = to.toroidal_2cell;
    jc["toroidal_reason"] = to.reasons.empty() ? "" : to.reasons.front();
    jc["embeds_on_torus"] = to.embeds_on_torus;
    r["classification"] = jc;

    r["max_genus"] = max_genus(norm);
    GenusRange gr = genus_range(norm);
    Json jr;
    jr["low"] = gr.low;
    jr["high"] = gr.high;
    jr["partial"] = gr.partial;
    r["genus_range"] = jr;

    if (opts.construct && norm.dimension() == 3) {
        ConstructionReport cr = pp.even == 0 ? quad_embedding_all_odd(norm) : even_case_embedding(norm);
        Json jx;
        jx["case"] = cr.construction_case;
        jx["traced_genus"] = cr.traced_genus;
        jx["claimed_bound"] = cr.claimed_bound;
        Json hist = Json::object();
        std::map<int, int> lengths;
        for (int l : cr.face_profile) ++lengths[l];
        for (auto [len, cnt] : lengths) hist[std::to_string(len)] = cnt;
        jx["face_lengths"] = hist;
        r["construction"] = jx;
    }

    if (opts.oracle_budget) {
        SimpleGraph g = grid_graph(norm);
        OracleResult orc = exhaustive_genus(g, *opts.oracle_budget);
        Json jo;
        jo["enumerated"] = orc.enumerated;
        jo["exhausted"] = orc.exhausted;
        jo["min_genus"] = orc.min_genus;
        jo["max_genus"] = orc.max_genus;
        std::ostringstream sp;
        for (long long v : orc.spectrum) sp << (sp.tellp() > 0 ? " " : "") << v;
        jo["spectrum"] = sp.str();
        r["oracle"] = jo;
    }
    return r;
}

bool report_consistent(const Json& r) {
    const auto& b = r["genus"];
    long long lo = b["lower"], hi = b["upper"];
    if (lo > hi) return false;
    if (b["exact"].get<bool>() && lo != hi) return false;
    if (r.contains("exact_genus")) {
        long long ex = r["exact_genus"];
        if (ex != lo || ex != hi) return false;
        if (r["classification"]["planar"].get<bool>() != (ex == 0)) return false;
        if (ex > r["max_genus"].get<long long>()) return false;
    }
    if (r.contains("construction")) {
        if (r["construction"]["traced_genus"] != r["construction"]["claimed_bound"]) return false;
        long long traced = r["construction"]["traced_genus"];
        if (traced < lo || traced > hi) return false;
    }
    if (r.contains("oracle") && r["oracle"]["exhausted"].get<bool>()) {
        long long omin = r["oracle"]["min_genus"];
        if (omin < lo || omin > hi) return false;
        if (r["oracle"]["max_genus"].get<long long>() != r["max_genus"].get<long long>())
            return false;
    }
    return true;
}

namespace {

void render_node(std::ostringstream& os, const Json& j, int depth) {
    std::string pad(2 * depth, ' ');
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (it->is_object()) {
            os << pad << it.key() << ":\n";
            render_node(os, *it, depth + 1);
        } else if (it->is_string()) {
            os << pad << it.key() << ": " << it->get<std::string>() << "\n";
        } else {
            os << pad << it.key() << ": " << it->dump() << "\n";
        }
    }
}

}  // namespace

std::string render_text(const Json& j) {
    std::ostringstream os;
    render_node(os, j, 0);
    return os.str();
}

}  // namespace gridgenus
