#include "lcframed/config.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>

#include "lcframed/errors.hpp"

namespace lcf {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

const SurfaceInput kPaperExample = {
    "paper-example",
    {"sin(u)", "cos(u)*sin(v)", "cos(u)*cos(v)"},
    {"1", "sin(v)", "cos(v)"},
    {"1", "-sin(v)", "-cos(v)"},
    {0.0, kTwoPi, 0.0, kTwoPi},
};

const SurfaceInput kTwistedBand = {
    "twisted-band",
    {"0.8*u",
     "sin(u)*sin(v + 0.5*sin(u))",
     "sin(u)*cos(v + 0.5*sin(u))"},
    {"exp(0.2*sin(u)*cos(v))",
     "exp(0.2*sin(u)*cos(v))*sin(v + 0.5*sin(u))",
     "exp(0.2*sin(u)*cos(v))*cos(v + 0.5*sin(u))"},
    {"exp(-0.2*sin(u)*cos(v))",
     "-exp(-0.2*sin(u)*cos(v))*sin(v + 0.5*sin(u))",
     "-exp(-0.2*sin(u)*cos(v))*cos(v + 0.5*sin(u))"},
    {0.0, kTwoPi, 0.0, kTwoPi},
};

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

// Removes everything from the first '#' that is not inside double quotes.
std::string strip_comment(const std::string& line) {
    bool in_quote = false;
    for (size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') in_quote = !in_quote;
        else if (line[i] == '#' && !in_quote) return line.substr(0, i);
    }
    return line;
}

struct RawValue {
    std::string text;   // unquoted content for strings, raw text for bare values
    bool quoted = false;
};

double parse_number(int line, const std::string& key, const RawValue& rv) {
    if (rv.quoted)
        throw ConfigError(line, key, "expected a bare number, got a quoted string");
    const char* begin = rv.text.data();
    const char* end = begin + rv.text.size();
    double out = 0.0;
    auto res = std::from_chars(begin, end, out);
    if (res.ec != std::errc{} || res.ptr != end)
        throw ConfigError(line, key, "not a valid number: '" + rv.text + "'");
    return out;
}

int parse_int(int line, const std::string& key, const RawValue& rv) {
    if (rv.quoted)
        throw ConfigError(line, key, "expected a bare integer, got a quoted string");
    const char* begin = rv.text.data();
    const char* end = begin + rv.text.size();
    int out = 0;
    auto res = std::from_chars(begin, end, out);
    if (res.ec != std::errc{} || res.ptr != end)
        throw ConfigError(line, key, "not a valid integer: '" + rv.text + "'");
    return out;
}

std::string parse_string(int line, const std::string& key, const RawValue& rv) {
    if (!rv.quoted)
        throw ConfigError(line, key, "expected a double-quoted value");
    return rv.text;
}

// Accumulates [grid] range bounds so partial specification can be rejected.
struct RangeBuilder {
    std::optional<double> u_min, u_max, v_min, v_max;
    bool any() const { return u_min || u_max || v_min || v_max; }
    bool all() const { return u_min && u_max && v_min && v_max; }
};

void append_num(std::string& out, double x) {
    std::array<char, 64> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
    out.append(buf.data(), res.ptr);
}

const SurfaceInput* find_builtin(const std::string& name) {
    if (name == kPaperExample.name) return &kPaperExample;
    if (name == kTwistedBand.name) return &kTwistedBand;
    return nullptr;
}

std::string unknown_builtin_detail(const std::string& name) {
    std::string known;
    for (const auto& n : builtin_names()) {
        if (!known.empty()) known += ", ";
        known += n;
    }
    return "unknown builtin surface '" + name + "' (known: " + known + ")";
}

} // namespace

const SurfaceInput& builtin_surface(const std::string& name) {
    if (const SurfaceInput* s = find_builtin(name)) return *s;
    throw ConfigError(0, "surface", unknown_builtin_detail(name));
}

std::vector<std::string> builtin_names() {
    return {kPaperExample.name, kTwistedBand.name};
}

RunConfig load_config(const std::string& text) {
    RunConfig cfg;
    cfg.surface.domain = {0.0, 1.0, 0.0, 1.0};

    enum class Section { none, surface, grid, tolerance, output, probe };
    Section section = Section::none;

    // Tracks which inline surface components were given, to report the first
    // missing one by name.
    std::map<std::string, bool> comp_seen;
    static const char* kComponents[9] = {"X.x1", "X.x2", "X.x3", "v.x1", "v.x2",
                                         "v.x3", "w.x1", "w.x2", "w.x3"};
    for (const char* c : kComponents) comp_seen[c] = false;

    bool inline_surface = false;
    std::string builtin_name;
    int builtin_line = 0;
    RangeBuilder range;
    int range_line = 0;
    bool tol_given = false;
    bool probe_seen = false;
    ProbeSpec probe;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(strip_comment(raw));
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError(lineno, "", "section header missing closing ']'");
            std::string name = trim(line.substr(1, line.size() - 2));
            if (name == "surface") section = Section::surface;
            else if (name == "grid") section = Section::grid;
            else if (name == "tolerance") section = Section::tolerance;
            else if (name == "output") section = Section::output;
            else if (name == "probe") { section = Section::probe; probe_seen = true; }
            else
                throw ConfigError(lineno, name,
                                  "unknown section (expected surface, grid, "
                                  "tolerance, output, or probe)");
            continue;
        }

        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(lineno, "", "expected 'key = value' or '[section]'");
        std::string key = trim(line.substr(0, eq));
        std::string val_text = trim(line.substr(eq + 1));
        if (key.empty()) throw ConfigError(lineno, "", "empty key before '='");
        if (val_text.empty()) throw ConfigError(lineno, key, "empty value");

        RawValue rv;
        if (val_text.front() == '"') {
            if (val_text.size() < 2 || val_text.back() != '"')
                throw ConfigError(lineno, key, "unterminated quoted value");
            rv.text = val_text.substr(1, val_text.size() - 2);
            if (rv.text.find('"') != std::string::npos)
                throw ConfigError(lineno, key, "stray '\"' inside quoted value");
            rv.quoted = true;
        } else {
            rv.text = val_text;
        }

        auto set_component = [&](std::array<std::string, 3>& vec, int idx,
                                 const std::string& full_key) {
            vec[static_cast<size_t>(idx)] = parse_string(lineno, full_key, rv);
            comp_seen[full_key] = true;
            inline_surface = true;
        };

        switch (section) {
        case Section::none:
            if (key == "surface") {
                builtin_name = parse_string(lineno, key, rv);
                builtin_line = lineno;
            } else {
                throw ConfigError(lineno, key,
                                  "only 'surface = \"<builtin>\"' is allowed before "
                                  "the first section");
            }
            break;

        case Section::surface:
            if (key == "surface") {
                builtin_name = parse_string(lineno, key, rv);
                builtin_line = lineno;
            } else if (key == "name") {
                cfg.surface.name = parse_string(lineno, key, rv);
            } else if (key.size() == 4 && key[1] == '.' && key[2] == 'x' &&
                       key[3] >= '1' && key[3] <= '3' &&
                       (key[0] == 'X' || key[0] == 'v' || key[0] == 'w')) {
                int idx = key[3] - '1';
                if (key[0] == 'X') set_component(cfg.surface.X, idx, key);
                else if (key[0] == 'v') set_component(cfg.surface.v, idx, key);
                else set_component(cfg.surface.w, idx, key);
            } else if (key == "u_min") {
                cfg.surface.domain.u_min = parse_number(lineno, key, rv);
            } else if (key == "u_max") {
                cfg.surface.domain.u_max = parse_number(lineno, key, rv);
            } else if (key == "v_min") {
                cfg.surface.domain.v_min = parse_number(lineno, key, rv);
            } else if (key == "v_max") {
                cfg.surface.domain.v_max = parse_number(lineno, key, rv);
            } else {
                throw ConfigError(lineno, key, "unknown key in [surface]");
            }
            break;

        case Section::grid:
            if (key == "nu") cfg.nu = parse_int(lineno, key, rv);
            else if (key == "nv") cfg.nv = parse_int(lineno, key, rv);
            else if (key == "u_min") { range.u_min = parse_number(lineno, key, rv); range_line = lineno; }
            else if (key == "u_max") { range.u_max = parse_number(lineno, key, rv); range_line = lineno; }
            else if (key == "v_min") { range.v_min = parse_number(lineno, key, rv); range_line = lineno; }
            else if (key == "v_max") { range.v_max = parse_number(lineno, key, rv); range_line = lineno; }
            else throw ConfigError(lineno, key, "unknown key in [grid]");
            break;

        case Section::tolerance:
            if (key == "tol") {
                cfg.tol_base = parse_number(lineno, key, rv);
                if (!(cfg.tol_base > 0.0))
                    throw ConfigError(lineno, key, "tolerance must be positive");
                tol_given = true;
            } else {
                throw ConfigError(lineno, key, "unknown key in [tolerance]");
            }
            break;

        case Section::output:
            if (key == "path") cfg.out_path = parse_string(lineno, key, rv);
            else if (key == "branch") {
                cfg.branch = rv.text;
                if (cfg.branch != "plus" && cfg.branch != "minus")
                    throw ConfigError(lineno, key,
                                      "branch must be 'plus' or 'minus', got '" +
                                          cfg.branch + "'");
            } else {
                throw ConfigError(lineno, key, "unknown key in [output]");
            }
            break;

        case Section::probe:
            if (key == "path_u") probe.path_u = parse_string(lineno, key, rv);
            else if (key == "path_v") probe.path_v = parse_string(lineno, key, rv);
            else if (key == "t_target") probe.t_target = parse_number(lineno, key, rv);
            else if (key == "t_start") probe.t_start = parse_number(lineno, key, rv);
            else if (key == "samples") {
                probe.samples = parse_int(lineno, key, rv);
                if (probe.samples < 2)
                    throw ConfigError(lineno, key, "samples must be at least 2");
            } else if (key == "ratio") {
                probe.ratio = parse_number(lineno, key, rv);
                if (!(probe.ratio > 0.0 && probe.ratio < 1.0))
                    throw ConfigError(lineno, key,
                                      "ratio must lie strictly between 0 and 1");
            } else {
                throw ConfigError(lineno, key, "unknown key in [probe]");
            }
            break;
        }
    }

    // --- Surface resolution -------------------------------------------------
    if (!builtin_name.empty() && inline_surface)
        throw ConfigError(builtin_line, "surface",
                          "cannot mix a builtin surface with inline X/v/w components");
    if (!builtin_name.empty()) {
        const SurfaceInput* s = find_builtin(builtin_name);
        if (!s)
            throw ConfigError(builtin_line, "surface",
                              unknown_builtin_detail(builtin_name));
        cfg.surface = *s;
        cfg.surface_is_builtin = true;
    } else if (inline_surface) {
        for (const char* c : kComponents)
            if (!comp_seen[c])
                throw ConfigError(0, c, std::string("missing surface component '") +
                                            c + "'");
        if (cfg.surface.name.empty()) cfg.surface.name = "inline";
    } else {
        throw ConfigError(0, "surface",
                          "no surface given: set 'surface = \"<builtin>\"' or inline "
                          "X/v/w components");
    }

    const SurfaceDomain& dom = cfg.surface.domain;
    if (!(dom.u_min < dom.u_max) || !(dom.v_min < dom.v_max))
        throw ConfigError(0, "u_min", "surface domain is empty or inverted");

    // --- Grid ----------------------------------------------------------------
    if (cfg.nu < 2) throw ConfigError(0, "nu", "grid needs nu >= 2");
    if (cfg.nv < 2) throw ConfigError(0, "nv", "grid needs nv >= 2");
    if (range.any()) {
        if (!range.all())
            throw ConfigError(range_line, "u_min",
                              "a [grid] range needs all four of u_min, u_max, "
                              "v_min, v_max");
        SurfaceDomain r{*range.u_min, *range.u_max, *range.v_min, *range.v_max};
        if (!(r.u_min < r.u_max) || !(r.v_min < r.v_max))
            throw ConfigError(range_line, "u_min", "grid range is empty or inverted");
        if (r.u_min < dom.u_min || r.u_max > dom.u_max || r.v_min < dom.v_min ||
            r.v_max > dom.v_max)
            throw ConfigError(range_line, "u_min",
                              "grid range extends outside the surface domain");
        cfg.range = r;
    }

    // --- Tolerance precedence: [tolerance] > LCFRAMED_TOL > default ----------
    if (!tol_given) {
        if (const char* env = std::getenv("LCFRAMED_TOL")) {
            std::string s = trim(env);
            const char* b = s.data();
            double out = 0.0;
            auto res = std::from_chars(b, b + s.size(), out);
            if (res.ec != std::errc{} || res.ptr != b + s.size() || !(out > 0.0))
                throw ConfigError(0, "LCFRAMED_TOL",
                                  "environment tolerance is not a positive number: '" +
                                      s + "'");
            cfg.tol_base = out;
        }
    }

    // --- Probe ----------------------------------------------------------------
    if (probe_seen) {
        if (!probe.t_target)
            throw ConfigError(0, "t_target", "a [probe] section needs t_target");
        if (!probe.t_start) probe.t_start = *probe.t_target + 0.5;
        if (*probe.t_start == *probe.t_target)
            throw ConfigError(0, "t_start", "t_start must differ from t_target");
        cfg.probe = probe;
    }

    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ConfigError(0, "path", "cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_config(buf.str());
}

SurfaceDef surface_from_config(const RunConfig& cfg) {
    return build_surface(cfg.surface);
}

std::string canonical_config_string(const RunConfig& cfg) {
    std::string out;
    out += "surface=";
    out += cfg.surface.name;
    for (int k = 0; k < 3; ++k) { out += ";X="; out += cfg.surface.X[static_cast<size_t>(k)]; }
    for (int k = 0; k < 3; ++k) { out += ";v="; out += cfg.surface.v[static_cast<size_t>(k)]; }
    for (int k = 0; k < 3; ++k) { out += ";w="; out += cfg.surface.w[static_cast<size_t>(k)]; }
    out += ";domain=";
    append_num(out, cfg.surface.domain.u_min); out += ",";
    append_num(out, cfg.surface.domain.u_max); out += ",";
    append_num(out, cfg.surface.domain.v_min); out += ",";
    append_num(out, cfg.surface.domain.v_max);
    out += ";nu="; append_num(out, cfg.nu);
    out += ";nv="; append_num(out, cfg.nv);
    if (cfg.range) {
        out += ";range=";
        append_num(out, cfg.range->u_min); out += ",";
        append_num(out, cfg.range->u_max); out += ",";
        append_num(out, cfg.range->v_min); out += ",";
        append_num(out, cfg.range->v_max);
    }
    out += ";tol="; append_num(out, cfg.tol_base);
    out += ";branch="; out += cfg.branch;
    return out;
}

} // namespace lcf
