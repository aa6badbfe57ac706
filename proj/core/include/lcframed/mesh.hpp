#pragma once

// Wavefront-style mesh export for the base surface and the two
// branch-continued focal sheets.
//
// Output layout:
//   # comment header (kind, surface name, grid size, config hash)
//   v x y z          one line per surviving grid point, row-major
//   f a b c d        1-indexed quads, emitted only when all four corners exist
//
// Coordinates carry 9 significant digits. Grid points whose evaluation
// failed (or whose focal branch is unavailable) are skipped, and every face
// touching a skipped point is dropped.

#include <string>

#include "lcframed/config.hpp"

namespace lcf {

enum class MeshKind { base, focal_plus, focal_minus };

std::string_view to_string(MeshKind k);

// FNV-1a 64-bit hash, rendered as 16 hex digits in the mesh header.
std::uint64_t fnv1a64(std::string_view bytes);

// Throws MeshEmpty when not a single grid point produced a vertex.
std::string export_mesh(const RunConfig& cfg, MeshKind kind);

} // namespace lcf
