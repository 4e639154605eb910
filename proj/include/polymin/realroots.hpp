#pragma once

#include "polymin/unipoly.hpp"

#include <vector>

namespace polymin {

/// A real algebraic number: square-free defining polynomial with exactly one
/// real root in [lo, hi]. Rational numbers are stored with lo == hi.
/// Refinement returns new values instead of mutating.
class AlgebraicNumber {
public:
    AlgebraicNumber(UniPoly defining, Rational lo, Rational hi);
    static AlgebraicNumber from_rational(const Rational& v);

    const UniPoly& defining() const { return defining_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    bool is_rational() const { return lo_ == hi_; }
    const Rational& rational_value() const;

    /// Halve the interval width (no-op for rationals).
    AlgebraicNumber refined() const;
    /// Refine until the interval width is at most w.
    AlgebraicNumber refined_to_width(const Rational& w) const;
    /// Refine until 0 is outside the open interval (requires the number != 0).
    AlgebraicNumber separated_from_zero() const;

    int sign() const;
    int compare(const Rational& q) const;

    /// Midpoint, for display only.
    Rational approx() const { return (lo_ + hi_) / 2; }
    std::string str() const;

private:
    UniPoly defining_;  // square-free, primitive, positive leading coefficient
    Rational lo_, hi_;
};

struct RootRecord {
    AlgebraicNumber root;
    int multiplicity;
};

/// Real roots in increasing order with pairwise disjoint isolating intervals.
using RootList = std::vector<RootRecord>;

/// Yun square-free decomposition: g = unit * prod factor_i ^ mult_i with the
/// factors square-free, primitive, pairwise coprime. Constant g gives {}.
std::vector<std::pair<UniPoly, int>> squarefree(const UniPoly& g);

/// All real roots of g with multiplicities (Sturm isolation per square-free
/// factor, rational roots detected and pinned exactly).
RootList isolate_roots(const UniPoly& g);

/// g(u) >= 0 for all real u.
bool univariate_nonnegative(const UniPoly& g);

/// Exact sign of h at the algebraic number r: -1, 0, or +1.
int sign_at_root(const UniPoly& h, const AlgebraicNumber& r);

/// Largest m with (u - r)^m dividing g.
int multiplicity_in(const UniPoly& g, const AlgebraicNumber& r);

/// Some rational point where g is negative; requires such a point to exist.
Rational negative_sample(const UniPoly& g);

}  // namespace polymin
