#pragma once

#include "polymin/bivar.hpp"
#include "polymin/verdict.hpp"

#include <string>

namespace polymin {

/// Verdict as JSON: {status, certificate:{kind, x_t, y_t, sigma, sample_t,
/// value?, theta?}, trace:[{rule, ref, face?, data}], unresolved:[[a1,a2]...]}.
std::string verdict_to_json(const Verdict& v, int trace_verbosity = 2);

/// Inverse of the certificate part of verdict_to_json; used to re-verify an
/// emitted certificate from its serialized form.
Certificate certificate_from_json(const std::string& text);

/// Newton polyhedron model: support, hull vertices, Pareto set, omega, and
/// the southwestern faces with normals and groups.
std::string newton_to_json(const BivariatePoly& p);

/// Lattice plot of the same model (plain SVG text).
std::string newton_to_svg(const BivariatePoly& p);

}  // namespace polymin
