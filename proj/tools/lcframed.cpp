// Command-line front end: analyze / classify / focal / mesh / probe / verify.
//
// Exit codes: 0 success, 1 configuration or usage problem, 2 numeric failure,
// 3 partial result (per-point errors present and --allow-partial given).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "lcframed/config.hpp"
#include "lcframed/curvature.hpp"
#include "lcframed/errors.hpp"
#include "lcframed/focal.hpp"
#include "lcframed/lightlike.hpp"
#include "lcframed/mesh.hpp"
#include "lcframed/report.hpp"
#include "lcframed/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitPartial = 3;

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out += '\\';
        if (static_cast<unsigned char>(ch) < 0x20) {
            out += ' ';
            continue;
        }
        out += ch;
    }
    return out;
}

struct CliOverrides {
    std::string config_path;
    std::string grid;   // "NUxNV"
    std::string branch; // plus | minus
    double tol = -1.0;  // <= 0: not set
    std::string out;
    bool allow_partial = false;
};

lcf::RunConfig make_config(const CliOverrides& o) {
    if (o.config_path.empty())
        throw lcf::ConfigError(0, "--config", "this subcommand needs a config file");
    lcf::RunConfig cfg = lcf::load_config_file(o.config_path);
    if (!o.grid.empty()) {
        const auto x = o.grid.find('x');
        bool ok = x != std::string::npos;
        int nu = 0, nv = 0;
        if (ok) {
            try {
                std::size_t p1 = 0, p2 = 0;
                nu = std::stoi(o.grid.substr(0, x), &p1);
                nv = std::stoi(o.grid.substr(x + 1), &p2);
                ok = p1 == x && p2 == o.grid.size() - x - 1;
            } catch (const std::exception&) {
                ok = false;
            }
        }
        if (!ok || nu < 2 || nv < 2)
            throw lcf::ConfigError(0, "--grid",
                                   "expected NUxNV with both at least 2, got '" +
                                       o.grid + "'");
        cfg.nu = nu;
        cfg.nv = nv;
    }
    if (!o.branch.empty()) {
        if (o.branch != "plus" && o.branch != "minus")
            throw lcf::ConfigError(0, "--branch", "must be 'plus' or 'minus'");
        cfg.branch = o.branch;
    }
    if (o.tol > 0.0) cfg.tol_base = o.tol;
    if (!o.out.empty()) cfg.out_path = o.out;
    return cfg;
}

int write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return kExitOk;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open output file '" << path << "'\n";
        return kExitConfig;
    }
    out << text;
    if (!out.good()) {
        std::cerr << "error: write to '" << path << "' failed\n";
        return kExitConfig;
    }
    return kExitOk;
}

int run_analyze_cmd(const CliOverrides& o) {
    const lcf::RunConfig cfg = make_config(o);
    const lcf::AnalyzeReport rep = lcf::run_analyze(cfg);
    int hard_errors = 0;
    for (const lcf::ReportRow& row : rep.rows)
        if (!row.error.empty()) ++hard_errors;
    const int wr = write_output(lcf::report_to_json(rep), cfg.out_path);
    if (wr != kExitOk) return wr;
    if (hard_errors > 0) {
        std::cerr << "warning: " << hard_errors << " of " << rep.rows.size()
                  << " grid points failed to evaluate\n";
        return o.allow_partial ? kExitPartial : kExitNumeric;
    }
    return kExitOk;
}

// Scans grid edges for sign changes of the area density, traces each distinct
// locus component once, and classifies the points along it.
int run_classify_cmd(const CliOverrides& o) {
    const lcf::RunConfig cfg = make_config(o);
    const lcf::SurfaceDef s = lcf::surface_from_config(cfg);
    const lcf::SurfaceDomain dom = cfg.range ? *cfg.range : s.domain;

    const auto us = lcf::linspace(dom.u_min, dom.u_max, cfg.nu);
    const auto vs = lcf::linspace(dom.v_min, dom.v_max, cfg.nv);
    const double step = std::min((dom.u_max - dom.u_min) / (cfg.nu - 1),
                                 (dom.v_max - dom.v_min) / (cfg.nv - 1));

    std::vector<std::vector<double>> lam(static_cast<std::size_t>(cfg.nu));
    for (int i = 0; i < cfg.nu; ++i) {
        auto& rowv = lam[static_cast<std::size_t>(i)];
        rowv.resize(static_cast<std::size_t>(cfg.nv));
        for (int j = 0; j < cfg.nv; ++j)
            rowv[static_cast<std::size_t>(j)] =
                lcf::stratify(s, us[static_cast<std::size_t>(i)],
                              vs[static_cast<std::size_t>(j)], cfg.tol_base)
                    .lambda_tilde;
    }

    std::vector<lcf::LocusTrace> traces;
    std::vector<std::string> trace_errors;
    auto near_existing = [&](double u, double v) {
        for (const lcf::LocusTrace& tr : traces)
            for (const lcf::LocusPoint& p : tr.points)
                if (std::hypot(p.u - u, p.v - v) < 2.0 * step) return true;
        return false;
    };
    auto consider_seed = [&](double u, double v) {
        if (near_existing(u, v)) return;
        try {
            traces.push_back(lcf::trace_lightlike_locus(s, u, v, 0.5 * step,
                                                        8 * (cfg.nu + cfg.nv),
                                                        cfg.tol_base));
        } catch (const lcf::Error& e) {
            trace_errors.push_back(e.what());
        }
    };
    for (int i = 0; i < cfg.nu; ++i)
        for (int j = 0; j + 1 < cfg.nv; ++j) {
            const double a = lam[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const double b = lam[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) + 1];
            if ((a < 0 && b > 0) || (a > 0 && b < 0))
                consider_seed(us[static_cast<std::size_t>(i)],
                              0.5 * (vs[static_cast<std::size_t>(j)] +
                                     vs[static_cast<std::size_t>(j) + 1]));
        }
    for (int j = 0; j < cfg.nv; ++j)
        for (int i = 0; i + 1 < cfg.nu; ++i) {
            const double a = lam[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const double b = lam[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(j)];
            if ((a < 0 && b > 0) || (a > 0 && b < 0))
                consider_seed(0.5 * (us[static_cast<std::size_t>(i)] +
                                     us[static_cast<std::size_t>(i) + 1]),
                              vs[static_cast<std::size_t>(j)]);
        }

    std::string out = "{\n  \"surface\": \"" + json_escape(s.name) + "\",\n  \"loci\": [";
    int point_errors = 0;
    bool first = true;
    for (const lcf::LocusTrace& tr : traces) {
        out += first ? "\n    {" : ",\n    {";
        first = false;
        out += "\"stop_reason\": \"" + tr.stop_reason + "\", \"closed\": ";
        out += tr.closed ? "true" : "false";
        out += ", \"points\": [";
        bool first_pt = true;
        for (const lcf::LocusPoint& p : tr.points) {
            out += first_pt ? "\n      {" : ",\n      {";
            first_pt = false;
            out += "\"u\": " + lcf::format_number(p.u);
            out += ", \"v\": " + lcf::format_number(p.v);
            try {
                const lcf::LightlikeKind kind = lcf::classify_lightlike(s, p.u, p.v,
                                                                        cfg.tol_base);
                out += ", \"kind\": \"" + std::string(lcf::to_string(kind.tag)) + "\"";
                out += ", \"degenerate\": ";
                out += kind.degenerate ? "true" : "false";
                out += ", \"eta_lambda\": " + lcf::format_number(kind.eta_lambda);
            } catch (const lcf::Error& e) {
                ++point_errors;
                out += ", \"kind\": null, \"error\": \"" + json_escape(e.what()) + "\"";
            }
            out += "}";
        }
        out += "\n    ]}";
    }
    out += "\n  ],\n  \"trace_errors\": " + std::to_string(trace_errors.size()) +
           ",\n  \"point_errors\": " + std::to_string(point_errors) + "\n}\n";

    const int wr = write_output(out, cfg.out_path);
    if (wr != kExitOk) return wr;
    if (!trace_errors.empty() || point_errors > 0) {
        for (const std::string& msg : trace_errors)
            std::cerr << "warning: trace failed: " << msg << "\n";
        return o.allow_partial ? kExitPartial : kExitNumeric;
    }
    return kExitOk;
}

int run_focal_cmd(const CliOverrides& o) {
    const lcf::RunConfig cfg = make_config(o);
    const lcf::SurfaceDef s = lcf::surface_from_config(cfg);
    const lcf::SurfaceDomain* range = cfg.range ? &*cfg.range : nullptr;
    const lcf::BranchGrid grid =
        lcf::continue_branches(s, cfg.nu, cfg.nv, range, cfg.tol_base);

    int unavailable = 0;
    std::string out = "{\n  \"surface\": \"" + json_escape(s.name) + "\",\n  \"us\": [";
    for (std::size_t i = 0; i < grid.us.size(); ++i) {
        if (i) out += ", ";
        out += lcf::format_number(grid.us[i]);
    }
    out += "],\n  \"vs\": [";
    for (std::size_t j = 0; j < grid.vs.size(); ++j) {
        if (j) out += ", ";
        out += lcf::format_number(grid.vs[j]);
    }
    out += "],\n  \"cells\": [";
    bool first = true;
    for (const lcf::BranchCell& c : grid.cells) {
        out += first ? "\n    {" : ",\n    {";
        first = false;
        out += "\"mu\": [";
        for (int k = 0; k < 2; ++k) {
            if (k) out += ", ";
            if (c.available[static_cast<std::size_t>(k)])
                out += lcf::format_number(c.mu[static_cast<std::size_t>(k)]);
            else {
                out += "null";
                ++unavailable;
            }
        }
        out += "], \"branch_cut\": ";
        out += c.branch_cut ? "true" : "false";
        out += "}";
    }
    out += "\n  ]\n}\n";

    const int wr = write_output(out, cfg.out_path);
    if (wr != kExitOk) return wr;
    if (unavailable == static_cast<int>(2 * grid.cells.size())) {
        std::cerr << "error: no focal branch available anywhere on the grid\n";
        return kExitNumeric;
    }
    return kExitOk;
}

int run_mesh_cmd(const CliOverrides& o, const std::string& kind_name) {
    const lcf::RunConfig cfg = make_config(o);
    lcf::MeshKind kind = lcf::MeshKind::base;
    if (kind_name == "base") kind = lcf::MeshKind::base;
    else if (kind_name == "focal_plus") kind = lcf::MeshKind::focal_plus;
    else if (kind_name == "focal_minus") kind = lcf::MeshKind::focal_minus;
    else
        throw lcf::ConfigError(0, "--kind",
                               "must be base, focal_plus, or focal_minus");
    return write_output(lcf::export_mesh(cfg, kind), cfg.out_path);
}

int run_probe_cmd(const CliOverrides& o) {
    const lcf::RunConfig cfg = make_config(o);
    if (!cfg.probe)
        throw lcf::ConfigError(0, "probe",
                               "the config has no [probe] section; probe needs "
                               "path_u, path_v, and t_target");
    const lcf::SurfaceDef s = lcf::surface_from_config(cfg);
    const lcf::ProbeSpec& p = *cfg.probe;
    const lcf::ExprAst path_u = lcf::parse_expr(p.path_u);
    const lcf::ExprAst path_v = lcf::parse_expr(p.path_v);
    const lcf::ProbeReport rep =
        lcf::curvature_limit_probe(s, path_u, path_v, *p.t_target, *p.t_start,
                                   p.samples, p.ratio, cfg.tol_base);
    const int wr = write_output(lcf::probe_to_csv(rep), cfg.out_path);
    if (wr != kExitOk) return wr;
    std::cerr << "verdicts: lambda_tilde=" << lcf::to_string(rep.lambda_tilde.verdict)
              << " K_hat=" << lcf::to_string(rep.K_hat.verdict)
              << " H_hat=" << lcf::to_string(rep.H_hat.verdict)
              << " K=" << lcf::to_string(rep.K.verdict)
              << " H=" << lcf::to_string(rep.H.verdict) << "\n";
    return kExitOk;
}

int run_verify_cmd(const CliOverrides& o) {
    (void)o;
    return lcf::print_acceptance(std::cout) ? kExitOk : kExitNumeric;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Differential geometry of lightcone framed surfaces: invariants, "
                 "extended curvatures, lightlike point classification, focal sheets"};
    app.require_subcommand(1);

    CliOverrides o;
    app.add_option("--config", o.config_path, "Path to a config file")
        ->envname("LCFRAMED_CONFIG");
    app.add_option("--grid", o.grid, "Grid override, e.g. 128x64");
    app.add_option("--branch", o.branch, "Focal branch selector: plus | minus");
    app.add_option("--tol", o.tol, "Zero tolerance override (positive)");
    app.add_option("--out", o.out, "Output path (default: config, else stdout)");
    app.add_flag("--allow-partial", o.allow_partial,
                 "Exit 3 instead of 2 when some grid points fail");

    // Global flags are accepted on either side of the subcommand name.
    CLI::App* analyze = app.add_subcommand("analyze", "Full per-gridpoint report (JSON)");
    CLI::App* classify =
        app.add_subcommand("classify", "Trace lightlike loci and classify their points");
    CLI::App* focal =
        app.add_subcommand("focal", "Branch-continued focal distance grid (JSON)");
    CLI::App* mesh = app.add_subcommand("mesh", "Export a surface or focal sheet mesh");
    std::string kind_name = "base";
    mesh->add_option("--kind", kind_name, "base | focal_plus | focal_minus")
        ->default_val("base");
    CLI::App* probe =
        app.add_subcommand("probe", "Curvature boundedness probe along a path (CSV)");
    CLI::App* verify =
        app.add_subcommand("verify", "Run the built-in acceptance suite");
    for (CLI::App* sub : {analyze, classify, focal, mesh, probe, verify})
        sub->fallthrough();

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed()) return run_analyze_cmd(o);
        if (classify->parsed()) return run_classify_cmd(o);
        if (focal->parsed()) return run_focal_cmd(o);
        if (mesh->parsed()) return run_mesh_cmd(o, kind_name);
        if (probe->parsed()) return run_probe_cmd(o);
        if (verify->parsed()) return run_verify_cmd(o);
    } catch (const lcf::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const lcf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const lcf::UnknownIdentifier& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const lcf::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const lcf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitConfig;
}
