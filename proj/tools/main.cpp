#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gridgenus/constructions.hpp"
#include "gridgenus/cubical.hpp"
#include "gridgenus/formulas.hpp"
#include "gridgenus/oracle.hpp"
#include "gridgenus/report.hpp"
#include "gridgenus/rotation.hpp"

using namespace gridgenus;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInconsistent = 2;
constexpr int kExitBudget = 3;

GridSpec spec_from(const std::vector<std::string>& params) { return parse_spec(params); }

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << content;
}

int run_report(const std::vector<std::string>& params, bool construct, std::uint64_t oracle_budget,
               bool use_oracle, bool as_json) {
    GridSpec spec = spec_from(params);
    ReportOptions opts;
    opts.construct = construct;
    if (use_oracle) opts.oracle_budget = oracle_budget;
    Json rep = build_report(spec, opts);
    if (as_json)
        std::cout << rep.dump(2) << "\n";
    else
        std::cout << render_text(rep);
    if (!report_consistent(rep)) {
        std::cerr << "internal consistency check failed\n";
        return kExitInconsistent;
    }
    if (use_oracle && !rep["oracle"]["exhausted"].get<bool>()) return kExitBudget;
    return kExitOk;
}

int run_embed(const std::vector<std::string>& params, const std::string& out_path, bool as_json) {
    GridSpec spec = spec_from(params);
    GridSpec norm = spec.normalized();
    if (norm.dimension() != 3) {
        std::cerr << "embed: only 3-parameter grids have explicit constructions here; "
                     "higher dimensions get numeric bounds only (see the recursive bound "
                     "in `report`)\n";
        return kExitUsage;
    }
    auto pp = parity_profile(norm);
    ConstructionReport cr;
    if (norm.params[1] == 1 && norm.params[2] == 1)
        cr = prism_embedding(norm.params[0]);
    else if (pp.even == 0)
        cr = quad_embedding_all_odd(spec);
    else
        cr = even_case_embedding(spec);

    std::string serialized = serialize_rotation(cr.embedding);
    RotationSystem reloaded = parse_rotation(serialized);
    if (!same_rotation(reloaded, cr.embedding)) {
        std::cerr << "embed: serialized system failed to round-trip\n";
        return kExitInconsistent;
    }
    if (!out_path.empty()) write_file(out_path, serialized);

    Json j;
    j["spec"] = cr.spec.to_string();
    j["case"] = cr.construction_case;
    j["traced_genus"] = cr.traced_genus;
    j["claimed_bound"] = cr.claimed_bound;
    j["faces"] = static_cast<long long>(cr.face_profile.size());
    if (!out_path.empty()) j["written"] = out_path;
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << render_text(j);
    return cr.traced_genus == cr.claimed_bound ? kExitOk : kExitInconsistent;
}

int run_mesh(const std::vector<std::string>& params, const std::string& format,
             const std::string& out_path, bool allow_subgraph) {
    GridSpec spec = spec_from(params);
    GridSpec norm = spec.normalized();
    if (norm.dimension() != 3) {
        std::cerr << "mesh: exactly 3 nonzero parameters required\n";
        return kExitUsage;
    }
    auto pp = parity_profile(norm);
    if (pp.even > 0 && !allow_subgraph) {
        std::cerr << "mesh: an even parameter makes the surface skeleton a proper subgraph of "
                     "the grid graph; pass --allow-subgraph to export it anyway\n";
        return kExitUsage;
    }
    BoundarySurface s =
        boundary_surface(cube_set(norm.params[0], norm.params[1], norm.params[2]));
    std::string payload = format == "obj" ? export_obj(s) : export_off(s);
    if (!out_path.empty())
        write_file(out_path, payload);
    else
        std::cout << payload;
    long long chi = 2 - 2 * s.genus;
    std::cerr << "euler_characteristic: " << chi << "\n";
    std::cerr << "genus: " << s.genus << "\n";
    if (pp.even > 0)
        std::cerr << "warning: skeleton is a proper subgraph of G(" << norm.to_string() << ")\n";
    return kExitOk;
}

int run_verify(long long max_vertices, std::uint64_t budget) {
    SuiteReport rep = verify_construction_suite(max_vertices, budget);
    for (const auto& line : rep.lines) std::cout << line << "\n";
    std::cout << "checks: " << rep.lines.size() << "\n";
    std::cout << "discrepancies: " << rep.discrepancies.size() << "\n";
    return rep.ok() ? kExitOk : kExitInconsistent;
}

int run_oracle(const std::vector<std::string>& params, std::uint64_t budget, bool as_json) {
    GridSpec spec = spec_from(params);
    SimpleGraph g = grid_graph(spec.normalized());
    OracleResult orc = exhaustive_genus(g, budget);
    Json j;
    j["spec"] = spec.to_string();
    j["systems"] = rotation_system_count(g);
    j["enumerated"] = orc.enumerated;
    j["exhausted"] = orc.exhausted;
    j["min_genus"] = orc.min_genus;
    j["max_genus"] = orc.max_genus;
    std::ostringstream sp;
    for (long long v : orc.spectrum) sp << (sp.tellp() > 0 ? " " : "") << v;
    j["spectrum"] = sp.str();
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << render_text(j);
    return orc.exhausted ? kExitOk : kExitBudget;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"genus bounds, embeddings and surfaces of grid graphs"};
    app.require_subcommand(1);

    std::vector<std::string> params;
    bool construct = false, as_json = false, allow_subgraph = false;
    std::uint64_t budget = default_budget();
    std::uint64_t oracle_budget = 0;
    std::string out_path, format = "off";
    long long max_vertices = 30;

    auto* rep = app.add_subcommand("report", "formulas, bounds and classifications");
    rep->add_option("params", params, "grid parameters")->required()->expected(-1);
    rep->add_flag("--construct", construct, "build and trace the explicit embedding");
    rep->add_option("--oracle", oracle_budget, "exhaustively enumerate rotation systems");
    rep->add_flag("--json", as_json, "emit JSON");

    auto* emb = app.add_subcommand("embed", "write an explicit rotation-system embedding");
    emb->add_option("params", params, "grid parameters")->required()->expected(-1);
    emb->add_option("--out", out_path, "output file for the rotation system");
    emb->add_flag("--json", as_json, "emit JSON");

    auto* mesh = app.add_subcommand("mesh", "export the cubical boundary surface");
    mesh->add_option("params", params, "grid parameters")->required()->expected(-1);
    mesh->add_option("--format", format, "off or obj")
        ->check(CLI::IsMember({"off", "obj"}));
    mesh->add_option("--out", out_path, "output file (stdout when omitted)");
    mesh->add_flag("--allow-subgraph", allow_subgraph, "permit even parameters");

    auto* ver = app.add_subcommand("verify", "cross-validate constructions and formulas");
    ver->add_option("--max-vertices", max_vertices, "largest grid to test");
    ver->add_option("--budget", budget, "rotation-system budget for the oracle");

    auto* orc = app.add_subcommand("oracle", "exhaustive rotation-system enumeration");
    orc->add_option("params", params, "grid parameters")->required()->expected(-1);
    orc->add_option("--budget", budget, "rotation-system budget");
    orc->add_flag("--json", as_json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (rep->parsed())
            return run_report(params, construct, oracle_budget ? oracle_budget : budget,
                              rep->count("--oracle") > 0, as_json);
        if (emb->parsed()) return run_embed(params, out_path, as_json);
        if (mesh->parsed()) return run_mesh(params, format, out_path, allow_subgraph);
        if (ver->parsed()) return run_verify(max_vertices, budget);
        if (orc->parsed()) return run_oracle(params, budget, as_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInconsistent;
    }
    return kExitUsage;
}
