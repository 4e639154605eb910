#pragma once

#include "polymin/realroots.hpp"

#include <memory>
#include <vector>

namespace polymin {

/// An element of Q(theta) for a single shared real algebraic theta,
/// represented as a rational polynomial in theta reduced modulo the defining
/// polynomial. Rational values carry no theta. All arithmetic is exact; sign
/// queries go through interval refinement of theta.
class AlgValue {
public:
    AlgValue() : rep_(Rational(0)) {}
    explicit AlgValue(Rational v) : rep_(std::move(v)) {}
    AlgValue(std::shared_ptr<const AlgebraicNumber> theta, UniPoly rep);

    static AlgValue theta_of(std::shared_ptr<const AlgebraicNumber> theta);

    const std::shared_ptr<const AlgebraicNumber>& theta() const { return theta_; }
    const UniPoly& rep() const { return rep_; }

    bool is_rational() const { return theta_ == nullptr || rep_.is_constant(); }
    Rational rational_value() const;

    AlgValue operator+(const AlgValue& o) const;
    AlgValue operator-(const AlgValue& o) const;
    AlgValue operator-() const;
    AlgValue operator*(const AlgValue& o) const;
    AlgValue pow(unsigned e) const;

    int sign() const;
    bool is_zero() const { return sign() == 0; }

    std::string str() const;

private:
    static std::shared_ptr<const AlgebraicNumber> join(const AlgValue& a, const AlgValue& b);
    void reduce();
    std::shared_ptr<const AlgebraicNumber> theta_;  // null for rationals
    UniPoly rep_;
};

/// Polynomial in t with AlgValue coefficients; just enough arithmetic for
/// exact curve substitution.
struct AlgPoly {
    std::vector<AlgValue> coeffs;  // index = t-degree

    static AlgPoly zero() { return {}; }
    bool is_zero_rep() const;
    AlgPoly operator+(const AlgPoly& o) const;
    AlgPoly operator*(const AlgPoly& o) const;
    AlgPoly operator*(const AlgValue& c) const;
    /// First index with a provably nonzero coefficient, with its sign;
    /// returns {-1, 0} for the zero polynomial.
    std::pair<long long, int> lowest_nonzero() const;
    AlgValue evaluate(const Rational& t) const;
};

/// The real n-th root of a (n odd, or a >= 0), as an algebraic number.
AlgebraicNumber real_nth_root(const AlgebraicNumber& a, int n);

}  // namespace polymin
