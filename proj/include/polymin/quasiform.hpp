#pragma once

#include "polymin/geometry.hpp"
#include "polymin/realroots.hpp"
#include "polymin/verdict.hpp"

#include <vector>

namespace polymin {

/// A quasi-homogeneous form w.r.t. A: every term satisfies
/// A1*alpha + A2*beta == level. Terms are kept with strictly decreasing
/// alpha, so terms.front() is the main term and terms.back() the trailing one.
struct QuasiForm {
    NormalVector A;
    long long level = 0;
    std::vector<Monomial> terms;

    const Monomial& main_term() const { return terms.front(); }
    const Monomial& trailing_term() const { return terms.back(); }
    BivariatePoly poly() const;
    /// True for the degenerate constant left over by a full reduction
    /// (level 0; the enclosing decision treats it as vanishing nowhere).
    bool is_constant_form() const { return level == 0; }
};

/// One-variable image of a form: form = x^alpha1 y^beta1 g(u) with
/// u = x^e1 y^e2, e = (-A2, A1).
struct CharPoly {
    UniPoly g;
    ExpPair main{};
    ExpPair trailing{};
    long long e1 = 0, e2 = 0;
};

struct Decomposition {
    NormalVector A;
    std::vector<QuasiForm> forms;  // strictly increasing levels
};

/// Split p by the value of <A, (alpha, beta)>, ascending.
Decomposition decompose(const BivariatePoly& p, const NormalVector& A);

/// Rebuild a form from its characteristic data (inverse of characteristic).
QuasiForm form_from_char(const NormalVector& A, const UniPoly& g, const ExpPair& main);

CharPoly characteristic(const QuasiForm& form);

/// Condition 1 of the single-form nonnegativity test: positive corner
/// coefficients with even exponents.
bool form_corner_condition(const QuasiForm& form);

/// The form is nonnegative on the whole plane.
bool form_nonnegative(const QuasiForm& form);

/// The form vanishes nowhere off the coordinate axes (requires
/// form_corner_condition to hold; equivalent to g having no real roots).
bool form_weakly_nondegenerate(const QuasiForm& form);

/// A rational point with form(x, y) < 0, plus the scaled descent ray
/// (x* t^A1, y* t^A2). Requires !form_nonnegative(form).
struct NegativityWitness {
    Rational x, y;
    UniPoly xt, yt;
};
NegativityWitness negativity_witness(const QuasiForm& form);

/// Divide out (y^A1 - u0 x^A2)^m for a rational root u0 of the form's
/// characteristic polynomial of multiplicity >= m.
QuasiForm factor_out_root(const QuasiForm& form, const Rational& u0, int m);

/// Decision for polynomials whose Newton polyhedron has dimension <= 1
/// (p is a single quasi-homogeneous form).
Verdict main_form_nonNN_case(const BivariatePoly& p);

/// Rational solutions of x^e1 y^e2 = u with x = u^a k^A1, y = u^b k^A2
/// (A1 b - A2 a = 1); the four sign/shift variants cover every reachable
/// sign pattern of (x, y).
std::vector<std::pair<Rational, Rational>> rational_points_on_level(const NormalVector& A, const Rational& u);

/// Same construction in Q(u0) for an algebraic u0: returns (x, y) pairs as
/// values sharing u0's generator.
std::vector<std::pair<AlgValue, AlgValue>> points_on_level(const NormalVector& A,
                                                           const std::shared_ptr<const AlgebraicNumber>& u0);

}  // namespace polymin
