#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcf {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- expression layer -------------------------------------------------------

// Syntax error while parsing an expression.  `offset` is the byte offset into
// the source string; `expected` lists the token classes that would have been
// accepted there.
struct ParseError : Error {
    ParseError(std::size_t offset_, std::vector<std::string> expected_, const std::string& detail)
        : Error(format(offset_, expected_, detail)), offset(offset_), expected(std::move(expected_)) {}
    std::size_t offset;
    std::vector<std::string> expected;

  private:
    static std::string format(std::size_t off, const std::vector<std::string>& exp, const std::string& detail) {
        std::string m = "parse error at byte " + std::to_string(off) + ": " + detail;
        if (!exp.empty()) {
            m += " (expected ";
            for (std::size_t i = 0; i < exp.size(); ++i) m += (i ? ", " : "") + exp[i];
            m += ")";
        }
        return m;
    }
};

// An identifier that is neither a variable, a constant, nor a known function.
struct UnknownIdentifier : Error {
    UnknownIdentifier(std::size_t offset_, const std::string& name_)
        : Error("unknown identifier '" + name_ + "' at byte " + std::to_string(offset_)),
          offset(offset_), name(name_) {}
    std::size_t offset;
    std::string name;
};

// Evaluation walked outside the domain of some node (log of a non-positive
// value, division by (near-)zero, ...).  `offset` locates the offending node
// in the original source text.
struct DomainError : Error {
    DomainError(std::size_t offset_, const std::string& what_failed)
        : Error("domain error at byte " + std::to_string(offset_) + ": " + what_failed),
          offset(offset_) {}
    std::size_t offset;
};

// --- configuration / definition layer ---------------------------------------

// Bad run configuration.  Carries the 1-based line and the key when known.
struct ConfigError : Error {
    ConfigError(int line_, const std::string& key_, const std::string& detail)
        : Error(format(line_, key_, detail)), line(line_), key(key_) {}
    int line;        // 0 when not tied to a line
    std::string key; // empty when not tied to a key

  private:
    static std::string format(int line, const std::string& key, const std::string& detail) {
        std::string m = "config error";
        if (line > 0) m += " at line " + std::to_string(line);
        if (!key.empty()) m += " (key '" + key + "')";
        return m + ": " + detail;
    }
};

// A surface definition failed validation (frame not null with the right
// pairing, or the tangent normalization is violated on the probe grid).
struct ValidationError : Error {
    using Error::Error;
};

// A curve frame stopped satisfying the null-pairing constraints at some t.
struct FrameViolation : Error {
    using Error::Error;
};

// Bad quadrature grid (too few nodes or not strictly increasing).
struct QuadratureError : Error {
    using Error::Error;
};

// --- pointwise analysis layer ------------------------------------------------

// Asked a lightlike-only question at a point that is not lightlike.
struct NotLightlike : Error {
    using Error::Error;
};

// Asked a regular-point-only question (principal directions) at a point
// where the induced metric degenerates.
struct LightlikePoint : Error {
    using Error::Error;
};

// Asked a question that needs c2 != 0 (the full Weingarten problem) at a
// point of the S1 singular stratum.
struct SingularPoint : Error {
    using Error::Error;
};

// Principal-curvature limit undefined: metric degenerates and the mean
// curvature vanishes too, so the limit formula has no value.
struct DegeneratePrincipal : Error {
    using Error::Error;
};

// Requested focal branch does not exist at this point.
struct BranchUnavailable : Error {
    using Error::Error;
};

// Double root of the focal offset quadratic: implicit differentiation
// degenerates and no derivative payload exists.
struct DoubleRootNoJet : Error {
    using Error::Error;
};

// The finite-difference stencil for the focal oracle straddled a branch
// collision, so the sampled sheet is not a single smooth branch.
struct StencilCrossesBranchCut : Error {
    using Error::Error;
};

// Locus tracing: the seed is not within one step of the zero set.
struct SeedNotNearLocus : Error {
    using Error::Error;
};

// Locus tracing: the gradient vanished mid-trace (crossing / endpoint of
// the locus), so the tangent direction is undefined.
struct DegenerateLocusPoint : Error {
    using Error::Error;
};

// Limit probe: the path target is not a lightlike point.
struct PathNotLightlikeAtTarget : Error {
    using Error::Error;
};

// Mesh export: every grid point failed, nothing to write.
struct MeshEmpty : Error {
    using Error::Error;
};

} // namespace lcf
