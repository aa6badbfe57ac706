#include "lcframed/report.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include <json.hpp>

#include "lcframed/curvature.hpp"
#include "lcframed/errors.hpp"
#include "lcframed/focal.hpp"

namespace lcf {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// JSON string escaper (control characters, quote, backslash).
void append_escaped(std::string& out, const std::string& s) {
    out += '"';
    for (char ch : s) {
        unsigned char c = static_cast<unsigned char>(ch);
        switch (c) {
        case '"': out += "\\\""; break;
        case '\\': out += "\\\\"; break;
        case '\n': out += "\\n"; break;
        case '\r': out += "\\r"; break;
        case '\t': out += "\\t"; break;
        default:
            if (c < 0x20) {
                static const char* hex = "0123456789abcdef";
                out += "\\u00";
                out += hex[c >> 4];
                out += hex[c & 0xf];
            } else {
                out += ch;
            }
        }
    }
    out += '"';
}

// JSON number cell: null for anything that is not a finite value.
void append_json_number(std::string& out, double x) {
    if (!std::isfinite(x)) out += "null";
    else out += format_number(x);
}

void append_optional(std::string& out, const std::optional<double>& x) {
    if (!x) out += "null";
    else append_json_number(out, *x);
}

double json_number_or_nan(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return kNaN;
    return j.at(key).get<double>();
}

std::optional<double> json_optional(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return j.at(key).get<double>();
}

} // namespace

std::string format_number(double x) {
    if (x == 0.0) x = 0.0; // normalize -0 so serialized output round-trips
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                             std::chars_format::general, 9);
    return std::string(buf.data(), res.ptr);
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        out[static_cast<size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) /
                                               static_cast<double>(n - 1);
    out.back() = hi;
    return out;
}

AnalyzeReport run_analyze(const RunConfig& cfg) {
    SurfaceDef s = surface_from_config(cfg);

    AnalyzeReport rep;
    rep.surface = s.name;
    rep.nu = cfg.nu;
    rep.nv = cfg.nv;
    rep.domain = cfg.range ? *cfg.range : s.domain;
    rep.tol = cfg.tol_base;

    const std::vector<double> us = linspace(rep.domain.u_min, rep.domain.u_max, cfg.nu);
    const std::vector<double> vs = linspace(rep.domain.v_min, rep.domain.v_max, cfg.nv);
    rep.rows.reserve(static_cast<size_t>(cfg.nu) * static_cast<size_t>(cfg.nv));

    for (double u : us) {
        for (double v : vs) {
            ReportRow row;
            row.u = u;
            row.v = v;
            try {
                InvariantField f = invariants_at(s, u, v);
                FrameVectors fr = frame_at(s, u, v);
                PointStratum st = stratify(f, cfg.tol_base);
                row.stratum = std::string(to_string(st.tag));

                CurvatureBundle b = bundle_from_field(f, fr, cfg.tol_base);
                row.lambda_tilde = b.lambda_tilde;
                row.K_hat = b.K_hat;
                row.H_hat = b.H_hat;
                row.K = b.K;
                row.H = b.H;

                try {
                    PrincipalData pd = principal_from_field(f, cfg.tol_base);
                    row.kappa_hat_1 = pd.kappa_hat_1;
                    row.kappa_hat_2 = pd.kappa_hat_2;
                } catch (const Error&) {
                    // principal pair undefined here; stays null
                }

                if (st.tag == StratumTag::lightlike) {
                    try {
                        LightlikeKind kind = classify_lightlike(f, cfg.tol_base);
                        row.lightlike_kind = std::string(to_string(kind.tag));
                    } catch (const Error&) {
                        // unclassifiable lightlike point; stays null
                    }
                }

                try {
                    MuRoots mr = mu_roots(f, cfg.tol_base);
                    if (!mr.roots.empty()) {
                        std::vector<double> mus;
                        for (const MuRoot& r : mr.roots) mus.push_back(r.mu);
                        row.mu = std::move(mus);
                        for (const MuRoot& r : mr.roots) {
                            try {
                                FocalSheet sheet =
                                    focal_invariants(s, u, v, r.label, cfg.tol_base);
                                SheetSummary sum;
                                sum.branch = std::string(to_string(sheet.branch));
                                sum.F = {sheet.F.x1, sheet.F.x2, sheet.F.x3};
                                sum.lambda_bar = sheet.bundle.lambda_tilde;
                                sum.K_hat_bar = sheet.bundle.K_hat;
                                sum.H_hat_bar = sheet.bundle.H_hat;
                                row.sheets.push_back(std::move(sum));
                            } catch (const Error&) {
                                // sheet unavailable on this branch; skipped
                            }
                        }
                    }
                } catch (const Error&) {
                    // focal data unavailable; stays null
                }
            } catch (const Error& e) {
                row.stratum = "error";
                row.lambda_tilde = kNaN;
                row.K_hat = kNaN;
                row.H_hat = kNaN;
                row.error = e.what();
            }
            rep.rows.push_back(std::move(row));
        }
    }
    return rep;
}

std::string report_to_json(const AnalyzeReport& rep) {
    std::string out;
    out.reserve(rep.rows.size() * 256 + 512);
    out += "{\n  \"surface\": ";
    append_escaped(out, rep.surface);
    out += ",\n  \"nu\": ";
    out += std::to_string(rep.nu);
    out += ",\n  \"nv\": ";
    out += std::to_string(rep.nv);
    out += ",\n  \"domain\": {\"u_min\": ";
    append_json_number(out, rep.domain.u_min);
    out += ", \"u_max\": ";
    append_json_number(out, rep.domain.u_max);
    out += ", \"v_min\": ";
    append_json_number(out, rep.domain.v_min);
    out += ", \"v_max\": ";
    append_json_number(out, rep.domain.v_max);
    out += "},\n  \"tol\": ";
    append_json_number(out, rep.tol);
    out += ",\n  \"rows\": [";
    bool first_row = true;
    for (const ReportRow& r : rep.rows) {
        out += first_row ? "\n    {" : ",\n    {";
        first_row = false;
        out += "\"u\": ";
        append_json_number(out, r.u);
        out += ", \"v\": ";
        append_json_number(out, r.v);
        out += ", \"stratum\": ";
        append_escaped(out, r.stratum);
        out += ", \"lambda_tilde\": ";
        append_json_number(out, r.lambda_tilde);
        out += ", \"K_hat\": ";
        append_json_number(out, r.K_hat);
        out += ", \"H_hat\": ";
        append_json_number(out, r.H_hat);
        out += ", \"K\": ";
        append_optional(out, r.K);
        out += ", \"H\": ";
        append_optional(out, r.H);
        out += ", \"kappa_hat_1\": ";
        append_optional(out, r.kappa_hat_1);
        out += ", \"kappa_hat_2\": ";
        append_optional(out, r.kappa_hat_2);
        out += ", \"lightlike_kind\": ";
        if (r.lightlike_kind) append_escaped(out, *r.lightlike_kind);
        else out += "null";
        out += ", \"mu\": ";
        if (r.mu) {
            out += '[';
            for (size_t k = 0; k < r.mu->size(); ++k) {
                if (k) out += ", ";
                append_json_number(out, (*r.mu)[k]);
            }
            out += ']';
        } else {
            out += "null";
        }
        out += ", \"sheets\": [";
        for (size_t k = 0; k < r.sheets.size(); ++k) {
            const SheetSummary& sh = r.sheets[k];
            if (k) out += ", ";
            out += "{\"branch\": ";
            append_escaped(out, sh.branch);
            out += ", \"F\": [";
            append_json_number(out, sh.F[0]);
            out += ", ";
            append_json_number(out, sh.F[1]);
            out += ", ";
            append_json_number(out, sh.F[2]);
            out += "], \"lambda_bar\": ";
            append_json_number(out, sh.lambda_bar);
            out += ", \"K_hat_bar\": ";
            append_json_number(out, sh.K_hat_bar);
            out += ", \"H_hat_bar\": ";
            append_json_number(out, sh.H_hat_bar);
            out += '}';
        }
        out += "], \"error\": ";
        append_escaped(out, r.error);
        out += '}';
    }
    out += "\n  ]\n}\n";
    return out;
}

AnalyzeReport parse_report_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        throw ValidationError(std::string("report JSON does not parse: ") + e.what());
    }
    try {
        AnalyzeReport rep;
        rep.surface = j.at("surface").get<std::string>();
        rep.nu = j.at("nu").get<int>();
        rep.nv = j.at("nv").get<int>();
        const auto& d = j.at("domain");
        rep.domain.u_min = d.at("u_min").get<double>();
        rep.domain.u_max = d.at("u_max").get<double>();
        rep.domain.v_min = d.at("v_min").get<double>();
        rep.domain.v_max = d.at("v_max").get<double>();
        rep.tol = j.at("tol").get<double>();
        for (const auto& jr : j.at("rows")) {
            ReportRow row;
            row.u = jr.at("u").get<double>();
            row.v = jr.at("v").get<double>();
            row.stratum = jr.at("stratum").get<std::string>();
            row.lambda_tilde = json_number_or_nan(jr, "lambda_tilde");
            row.K_hat = json_number_or_nan(jr, "K_hat");
            row.H_hat = json_number_or_nan(jr, "H_hat");
            row.K = json_optional(jr, "K");
            row.H = json_optional(jr, "H");
            row.kappa_hat_1 = json_optional(jr, "kappa_hat_1");
            row.kappa_hat_2 = json_optional(jr, "kappa_hat_2");
            if (jr.contains("lightlike_kind") && !jr.at("lightlike_kind").is_null())
                row.lightlike_kind = jr.at("lightlike_kind").get<std::string>();
            if (jr.contains("mu") && !jr.at("mu").is_null())
                row.mu = jr.at("mu").get<std::vector<double>>();
            if (jr.contains("sheets")) {
                for (const auto& js : jr.at("sheets")) {
                    SheetSummary sh;
                    sh.branch = js.at("branch").get<std::string>();
                    auto F = js.at("F").get<std::vector<double>>();
                    if (F.size() != 3)
                        throw ValidationError("sheet F must have 3 coordinates");
                    sh.F = {F[0], F[1], F[2]};
                    sh.lambda_bar = js.at("lambda_bar").get<double>();
                    sh.K_hat_bar = js.at("K_hat_bar").get<double>();
                    sh.H_hat_bar = js.at("H_hat_bar").get<double>();
                    row.sheets.push_back(std::move(sh));
                }
            }
            if (jr.contains("error") && jr.at("error").is_string())
                row.error = jr.at("error").get<std::string>();
            rep.rows.push_back(std::move(row));
        }
        return rep;
    } catch (const ValidationError&) {
        throw;
    } catch (const std::exception& e) {
        throw ValidationError(std::string("report JSON has unexpected shape: ") +
                              e.what());
    }
}

std::string probe_to_csv(const ProbeReport& probe) {
    std::string out = "t,lambda_tilde,K_hat,H_hat,K,H\n";
    for (const ProbeSample& s : probe.samples) {
        out += format_number(s.t);
        out += ',';
        out += format_number(s.lambda_tilde);
        out += ',';
        out += format_number(s.K_hat);
        out += ',';
        out += format_number(s.H_hat);
        out += ',';
        if (s.K) out += format_number(*s.K);
        out += ',';
        if (s.H) out += format_number(*s.H);
        out += '\n';
    }
    return out;
}

} // namespace lcf
