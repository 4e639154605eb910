#pragma once

#include "polymin/algvalue.hpp"
#include "polymin/bivar.hpp"
#include "polymin/geometry.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace polymin {

enum class Status { LocalMin, NotLocalMin, Unresolved };

std::string status_name(Status s);

/// Parametric curve x(t), y(t): polynomials in t with coefficients in Q or in
/// Q(theta) for one shared real algebraic theta; zero constant terms.
struct AlgCurve {
    std::shared_ptr<const AlgebraicNumber> theta;  // null when rational
    std::map<long long, AlgValue> x_terms;         // t-exponent -> coefficient
    std::map<long long, AlgValue> y_terms;

    static AlgCurve rational(const UniPoly& xt, const UniPoly& yt);

    bool is_rational() const;
    UniPoly x_rational() const;
    UniPoly y_rational() const;
    std::string str() const;
};

struct Certificate {
    enum class Kind { AxisDescent, ScaledPointDescent, CurveDescent };
    Kind kind = Kind::CurveDescent;
    AlgCurve curve;
    long long sigma = 0;                    // order of the negative leading term of p(x(t), y(t))
    Rational sample_t;                      // rational t* with p(x(t*), y(t*)) < 0
    std::optional<Rational> sample_value;   // exact value at t* when the curve is rational
};

std::string certificate_kind_name(Certificate::Kind k);

struct TraceEntry {
    std::string rule;                        // descriptive rule name
    std::string ref;                         // compact rule code
    std::optional<NormalVector> face;        // the face direction, when face-specific
    std::vector<std::pair<std::string, std::string>> data;
};

struct Verdict {
    Status status = Status::Unresolved;
    std::optional<Certificate> certificate;  // present for NotLocalMin
    std::vector<TraceEntry> trace;
    std::vector<NormalVector> unresolved;    // the directions needing finer study, when Unresolved
};

/// Exact expansion of p along the curve, as a polynomial in t over Q(theta).
AlgPoly substitute_curve_alg(const BivariatePoly& p, const AlgCurve& curve);

/// Substitute the curve into p; if the lowest nonvanishing coefficient is
/// negative, package the verified certificate (with a rational sample point),
/// otherwise return nothing.
std::optional<Certificate> try_certificate(const BivariatePoly& p, const AlgCurve& curve,
                                           Certificate::Kind kind);

/// True iff exact substitution of the certificate curve into p has its lowest
/// nonvanishing term at order sigma with a negative coefficient.
bool verify_certificate(const BivariatePoly& p, const Certificate& c);

}  // namespace polymin
