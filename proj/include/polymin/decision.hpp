#pragma once

#include "polymin/quasiform.hpp"
#include "polymin/verdict.hpp"

#include <optional>

namespace polymin {

struct DecideConfig {
    int depth = 4;             // forms considered per face before giving up
    int max_nu = 3;            // substitution search: largest nu with (nu1, nu2) = nu * A
    long long max_order = 0;   // substitution expansion order; 0 = auto (twice the largest level)
    int max_unknowns = 2;      // undetermined tail coefficients per variable
    long long search_nodes = 200000;  // branch budget for the substitution search
    int trace_verbosity = 1;
};

/// Root of the first characteristic polynomial with its multiplicities in the
/// first and second characteristic polynomials.
struct RootCase {
    AlgebraicNumber u0;
    int k = 0;  // multiplicity in g1 (even whenever the first form is nonnegative)
    int l = 0;  // multiplicity in g2
};

/// Solvability of the sign system at a root u0 of g1: does some off-axes
/// point with x^e1 y^e2 = u0 make the j-th form negative? Decided by the
/// parity of e1*eta1 - e2*chi1 and exact signs; requires g(u0) != 0 for the
/// queried characteristic polynomial.
bool joint_4_6(const NormalVector& A, const AlgebraicNumber& u0, const CharPoly& char2);

/// Axis conditions: the first form vanishes on an axis while the second form
/// restricted to that axis can go negative. Returns the witness axis curve.
struct AxisWitness {
    bool y_axis = true;  // witness (0, s*t) if true, else (s*t, 0)
    int sign = 1;
    UniPoly xt, yt;
};
std::optional<AxisWitness> condition_C1_axes(const BivariatePoly& p, const NormalVector& A,
                                             const Decomposition& dec);

/// The face-by-face engine for dim-2 Newton polyhedra satisfying the corner
/// condition: iterates group-3 faces, applying the nonnegativity test, the
/// axis conditions, per-root jointness, and the deeper-form extension up to
/// cfg.depth forms. Returns Unresolved with the set of directions needing
/// finer study when the bounded analysis is inconclusive.
Verdict algorithm1(const BivariatePoly& p, const DecideConfig& cfg = {});

/// Complete decision for p that is exactly the sum of two quasi-homogeneous
/// forms w.r.t. A (never returns Unresolved).
Verdict two_form_decide(const BivariatePoly& p, const NormalVector& A);

/// Case-4 descent construction: a verified curve x(t) = c0 t^A1,
/// y(t) = d0 t^A2 (1 +- t^kappa) with kappa iterated until the lowest-order
/// coefficient of the substitution is negative.
Certificate descent_case4(const BivariatePoly& p, const NormalVector& A, const AlgebraicNumber& u0,
                          const std::vector<std::pair<AlgValue, AlgValue>>& candidates);

/// Full pipeline: stationarity check, low-dimension branch, axis and corner
/// gates, the face engine, the two-form decision, and the substitution
/// search fallback.
Verdict decide(const BivariatePoly& p, const DecideConfig& cfg = {});

/// Descent certificate from a point on the level set x^e1 y^e2 = u0, with a
/// perturbation fallback for curves that a factored-out level annihilates.
std::optional<Certificate> point_ray_descent(const BivariatePoly& p, long long n1, long long n2,
                                             const AlgValue& x0, const AlgValue& y0,
                                             Certificate::Kind kind);

}  // namespace polymin
