#include "lcframed/mesh.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "lcframed/errors.hpp"
#include "lcframed/focal.hpp"
#include "lcframed/report.hpp"

namespace lcf {

namespace {

void append_hex16(std::string& out, std::uint64_t h) {
    static const char* hex = "0123456789abcdef";
    for (int k = 15; k >= 0; --k) out += hex[(h >> (4 * k)) & 0xf];
}

bool finite3(const MVec3& p) {
    return std::isfinite(p.x1) && std::isfinite(p.x2) && std::isfinite(p.x3);
}

} // namespace

std::string_view to_string(MeshKind k) {
    switch (k) {
    case MeshKind::base: return "base";
    case MeshKind::focal_plus: return "focal_plus";
    case MeshKind::focal_minus: return "focal_minus";
    }
    return "?";
}

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (char c : bytes) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

std::string export_mesh(const RunConfig& cfg, MeshKind kind) {
    SurfaceDef s = surface_from_config(cfg);
    const SurfaceDomain dom = cfg.range ? *cfg.range : s.domain;
    const int nu = cfg.nu, nv = cfg.nv;

    // Focal meshes use branch-continued mu values so one sheet stays one
    // sheet across label flips of the pointwise quadratic.
    BranchGrid grid;
    int slot = 0;
    if (kind != MeshKind::base) {
        const SurfaceDomain* range = cfg.range ? &*cfg.range : nullptr;
        grid = continue_branches(s, nu, nv, range, cfg.tol_base);
        slot = (kind == MeshKind::focal_plus) ? 0 : 1;
    }

    const std::vector<double> us =
        (kind == MeshKind::base) ? linspace(dom.u_min, dom.u_max, nu) : grid.us;
    const std::vector<double> vs =
        (kind == MeshKind::base) ? linspace(dom.v_min, dom.v_max, nv) : grid.vs;

    // vertex_index[i*nv + j] = 1-based index in the v-line stream, 0 if skipped
    std::vector<int> vertex_index(static_cast<size_t>(nu) * static_cast<size_t>(nv), 0);
    std::string vlines;
    int next_index = 0;

    for (int i = 0; i < nu; ++i) {
        for (int j = 0; j < nv; ++j) {
            const double u = us[static_cast<size_t>(i)];
            const double v = vs[static_cast<size_t>(j)];
            MVec3 p;
            bool ok = true;
            try {
                FrameVectors fr = frame_at(s, u, v);
                if (kind == MeshKind::base) {
                    p = fr.X;
                } else {
                    const BranchCell& cell = grid.at(static_cast<size_t>(i),
                                                     static_cast<size_t>(j));
                    if (!cell.available[static_cast<size_t>(slot)]) {
                        ok = false;
                    } else {
                        InvariantField f = invariants_at(s, u, v);
                        MVec3 n_hat = -f.a1.value() * fr.v + f.b1.value() * fr.w;
                        p = fr.X - cell.mu[static_cast<size_t>(slot)] * n_hat;
                    }
                }
            } catch (const Error&) {
                ok = false;
            }
            if (ok && finite3(p)) {
                ++next_index;
                vertex_index[static_cast<size_t>(i) * static_cast<size_t>(nv) +
                             static_cast<size_t>(j)] = next_index;
                vlines += "v ";
                vlines += format_number(p.x1);
                vlines += ' ';
                vlines += format_number(p.x2);
                vlines += ' ';
                vlines += format_number(p.x3);
                vlines += '\n';
            }
        }
    }

    if (next_index == 0)
        throw MeshEmpty("mesh '" + std::string(to_string(kind)) +
                        "': every grid point failed to evaluate");

    std::string flines;
    auto idx = [&](int i, int j) {
        return vertex_index[static_cast<size_t>(i) * static_cast<size_t>(nv) +
                            static_cast<size_t>(j)];
    };
    for (int i = 0; i + 1 < nu; ++i) {
        for (int j = 0; j + 1 < nv; ++j) {
            int a = idx(i, j), b = idx(i, j + 1), c = idx(i + 1, j + 1), d = idx(i + 1, j);
            if (a && b && c && d) {
                flines += "f ";
                flines += std::to_string(a);
                flines += ' ';
                flines += std::to_string(b);
                flines += ' ';
                flines += std::to_string(c);
                flines += ' ';
                flines += std::to_string(d);
                flines += '\n';
            }
        }
    }

    std::string header;
    header += "# lcframed mesh\n# kind ";
    header += to_string(kind);
    header += "\n# surface ";
    header += s.name;
    header += "\n# grid ";
    header += std::to_string(nu);
    header += " x ";
    header += std::to_string(nv);
    header += "\n# config ";
    std::string canon = canonical_config_string(cfg);
    canon += ";kind=";
    canon += to_string(kind);
    append_hex16(header, fnv1a64(canon));
    header += '\n';

    return header + vlines + flines;
}

} // namespace lcf
