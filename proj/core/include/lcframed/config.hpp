#pragma once

// Run configuration for the command-line tools.
//
// Config grammar (line oriented):
//   - `#` starts a comment (outside double quotes); blank lines are ignored.
//   - `[section]` opens one of: [surface], [grid], [tolerance], [output], [probe].
//   - `key = value` inside a section; expression and string values are
//     double-quoted, numbers are bare.
//   - A top-level `surface = "<builtin-name>"` before any section selects a
//     built-in fixture surface.
//
// Keys:
//   [surface]  surface = "name" (builtin)  OR inline:
//              name = "str"; X.x1..X.x3, v.x1..v.x3, w.x1..w.x3 = "expr";
//              u_min, u_max, v_min, v_max = numbers (default domain [0,1]^2)
//   [grid]     nu, nv = integers >= 2 (default 64);
//              u_min, u_max, v_min, v_max = numbers (optional sub-range)
//   [tolerance] tol = number (else the LCFRAMED_TOL environment variable,
//              else 1e-9)
//   [output]   path = "str"; branch = plus|minus
//   [probe]    path_u, path_v = "expr in t" (the expression variable `u` is
//              the path parameter); t_target, t_start = numbers;
//              samples = integer; ratio = number in (0,1)

#include <optional>
#include <string>
#include <vector>

#include "lcframed/framed_surface.hpp"

namespace lcf {

struct ProbeSpec {
    std::string path_u = "u";
    std::string path_v = "0";
    std::optional<double> t_target;
    std::optional<double> t_start; // default: t_target + 0.5
    int samples = 28;
    double ratio = 0.5;
};

struct RunConfig {
    SurfaceInput surface;
    bool surface_is_builtin = false;
    int nu = 64, nv = 64;
    std::optional<SurfaceDomain> range; // must lie inside surface.domain
    double tol_base = kDefaultZeroTol;
    std::string out_path;  // empty: stdout
    std::string branch = "plus";
    std::optional<ProbeSpec> probe;
};

RunConfig load_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

const SurfaceInput& builtin_surface(const std::string& name); // ConfigError if unknown
std::vector<std::string> builtin_names();

SurfaceDef surface_from_config(const RunConfig& cfg);

// Deterministic flat rendering of every semantically relevant field; input to
// the mesh header hash.
std::string canonical_config_string(const RunConfig& cfg);

} // namespace lcf
