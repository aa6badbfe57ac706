#pragma once

// Grid sweep driver and serialization: per-point analysis rows, a JSON
// report writer/parser pair that round-trips losslessly, and the probe CSV.
//
// Numbers serialize with 9 significant digits, locale independent, '.'
// decimal separator. Quantities that are undefined at a point are emitted
// as JSON null (never as 0): K and H near the lightlike locus, principal
// values where the computation degenerates, the lightlike kind away from
// the lightlike stratum, focal data where no branch is available.

#include <optional>
#include <string>
#include <vector>

#include "lcframed/config.hpp"
#include "lcframed/framed_surface.hpp"
#include "lcframed/lightlike.hpp"

namespace lcf {

struct SheetSummary {
    std::string branch;       // "plus", "minus", or "linear"
    std::array<double, 3> F{}; // focal point coordinates
    double lambda_bar = 0;    // lambda~ of the sheet
    double K_hat_bar = 0;
    double H_hat_bar = 0;
};

struct ReportRow {
    double u = 0, v = 0;
    std::string stratum;
    double lambda_tilde = 0;
    double K_hat = 0, H_hat = 0;
    std::optional<double> K, H;
    std::optional<double> kappa_hat_1, kappa_hat_2;
    std::optional<std::string> lightlike_kind;
    std::optional<std::vector<double>> mu;
    std::vector<SheetSummary> sheets;
    std::string error; // empty when the point evaluated cleanly
};

struct AnalyzeReport {
    std::string surface;
    int nu = 0, nv = 0;
    SurfaceDomain domain{}; // the range actually swept
    double tol = kDefaultZeroTol;
    std::vector<ReportRow> rows; // row-major: index i*nv + j for (u_i, v_j)
};

// Sequential row-major sweep. Per-point failures are recorded in the row's
// error field; the sweep itself never throws for point-local reasons.
AnalyzeReport run_analyze(const RunConfig& cfg);

// 9-significant-digit shortest-faithful rendering used by every writer.
std::string format_number(double x);

std::string report_to_json(const AnalyzeReport& rep);
AnalyzeReport parse_report_json(const std::string& text);

std::string probe_to_csv(const ProbeReport& probe);

// Evenly spaced closed grid: n values from lo to hi inclusive (n >= 2).
std::vector<double> linspace(double lo, double hi, int n);

} // namespace lcf
