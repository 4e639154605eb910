#pragma once

#include "polymin/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace polymin {

/// Univariate polynomial with exact rational coefficients, dense
/// representation without trailing zeros (so degree() == coeffs.size()-1).
/// The zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(Rational constant);
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return UniPoly(Rational(1)); }
    /// c * u^k
    static UniPoly monomial(Rational c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& coeff(int k) const;
    const Rational& leading() const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator-() const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Rational& c) const;
    bool operator==(const UniPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    Rational evaluate(const Rational& u) const;
    UniPoly derivative() const;
    /// this(g(u)) by Horner composition.
    UniPoly compose(const UniPoly& g) const;
    /// Multiply by u^k.
    UniPoly shift_up(int k) const;

    /// Quotient and remainder of division by d (d nonzero).
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    /// Division that must be exact; throws if a nonzero remainder appears.
    UniPoly exact_div(const UniPoly& d) const;

    /// Scale by a positive rational so the coefficients become coprime
    /// integers; the sign pattern is preserved.
    UniPoly primitive_same_sign() const;
    /// primitive_same_sign(), then negated if needed so the leading
    /// coefficient is positive.
    UniPoly primitive_positive_scale() const;

    /// Monic gcd (gcd(0,0) == 0).
    static UniPoly gcd(UniPoly a, UniPoly b);

    std::string str(const std::string& var = "u") const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

UniPoly operator*(const Rational& c, const UniPoly& p);

/// Interval [lo, hi] image of p under rational interval arithmetic.
std::pair<Rational, Rational> interval_evaluate(const UniPoly& p, const Rational& lo, const Rational& hi);

/// Cauchy bound: all real roots lie in (-bound, bound).
Rational cauchy_root_bound(const UniPoly& p);

/// Sturm chain of the square-free part; shared by root isolation and the
/// root-counting queries.
struct SturmChain {
    explicit SturmChain(const UniPoly& squarefree);
    /// Sign variations at u (endpoint roots are handled by the callers).
    int variations_at(const Rational& u) const;
    /// Number of distinct real roots in (lo, hi]; requires lo < hi.
    int count_roots(const Rational& lo, const Rational& hi) const;

    std::vector<UniPoly> chain;
};

}  // namespace polymin
