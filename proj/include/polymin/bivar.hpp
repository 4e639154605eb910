#pragma once

#include "polymin/rational.hpp"
#include "polymin/unipoly.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace polymin {

/// Exponent pair (alpha, beta) of a monomial x^alpha y^beta.
struct ExpPair {
    long long alpha = 0;
    long long beta = 0;
    friend bool operator==(const ExpPair& a, const ExpPair& b) { return a.alpha == b.alpha && a.beta == b.beta; }
    friend bool operator<(const ExpPair& a, const ExpPair& b) {
        return a.alpha != b.alpha ? a.alpha < b.alpha : a.beta < b.beta;
    }
};

struct Monomial {
    Rational coef;  // nonzero
    ExpPair exps;
};

/// Bivariate polynomial in x, y with exact rational coefficients. The key
/// set of `terms()` is the support: no zero coefficients are ever stored.
class BivariatePoly {
public:
    BivariatePoly() = default;

    static BivariatePoly zero() { return BivariatePoly(); }
    static BivariatePoly constant(const Rational& c);
    static BivariatePoly term(const Rational& c, long long alpha, long long beta);

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpPair, Rational>& terms() const { return terms_; }
    Rational coefficient(long long alpha, long long beta) const;

    void add_term(const Rational& c, long long alpha, long long beta);

    BivariatePoly operator+(const BivariatePoly& o) const;
    BivariatePoly operator-(const BivariatePoly& o) const;
    BivariatePoly operator-() const;
    BivariatePoly operator*(const BivariatePoly& o) const;
    BivariatePoly operator*(const Rational& c) const;
    BivariatePoly pow(unsigned e) const;
    bool operator==(const BivariatePoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BivariatePoly& o) const { return !(*this == o); }

    Rational evaluate(const Rational& x, const Rational& y) const;
    std::set<ExpPair> support() const;
    /// Sum of the terms whose exponent pairs lie in N.
    BivariatePoly shortening(const std::set<ExpPair>& N) const;
    /// True iff p(0,0) = 0 and both first partials vanish at the origin,
    /// i.e. no term has alpha + beta <= 1.
    bool is_stationary_origin() const;
    /// p(x, 0) or p(0, y) as a univariate polynomial.
    UniPoly axis_restriction(bool along_x_axis) const;
    BivariatePoly swap_variables() const;
    long long max_exponent() const;

    /// Canonical printing: graded lexicographic, x before y, highest first.
    std::string str() const;

private:
    std::map<ExpPair, Rational> terms_;
};

/// Exact expansion of p(x(t), y(t)) for univariate curves with zero constant
/// term (the shape every descent certificate uses).
UniPoly substitute_curve(const BivariatePoly& p, const UniPoly& xt, const UniPoly& yt);

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, size_t position)
        : std::runtime_error(msg + " at position " + std::to_string(position)), pos(position) {}
    size_t pos;
};

/// Parse `c*x^a*y^b` terms joined by +/-, with decimal and fraction
/// coefficients, implicit `*`, and parenthesized subexpressions with integer
/// exponents. Decimal literals become exact rationals (0.01 -> 1/100).
BivariatePoly parse_poly(const std::string& text);

}  // namespace polymin
