#include "polymin/verdict.hpp"

#include <sstream>
#include <stdexcept>

namespace polymin {

std::string status_name(Status s) {
    switch (s) {
        case Status::LocalMin: return "LocalMin";
        case Status::NotLocalMin: return "NotLocalMin";
        case Status::Unresolved: return "Unresolved";
    }
    return "?";
}

std::string certificate_kind_name(Certificate::Kind k) {
    switch (k) {
        case Certificate::Kind::AxisDescent: return "axis-descent";
        case Certificate::Kind::ScaledPointDescent: return "scaled-point-descent";
        case Certificate::Kind::CurveDescent: return "curve-descent";
    }
    return "?";
}

AlgCurve AlgCurve::rational(const UniPoly& xt, const UniPoly& yt) {
    AlgCurve c;
    for (int i = 1; i <= xt.degree(); ++i)
        if (xt.coeff(i) != 0) c.x_terms.emplace(i, AlgValue(xt.coeff(i)));
    for (int i = 1; i <= yt.degree(); ++i)
        if (yt.coeff(i) != 0) c.y_terms.emplace(i, AlgValue(yt.coeff(i)));
    if (xt.coeff(0) != 0 || yt.coeff(0) != 0)
        throw std::invalid_argument("AlgCurve: nonzero constant term");
    return c;
}

bool AlgCurve::is_rational() const {
    if (theta == nullptr) return true;
    for (const auto& [e, c] : x_terms)
        if (!c.is_rational()) return false;
    for (const auto& [e, c] : y_terms)
        if (!c.is_rational()) return false;
    return true;
}

UniPoly AlgCurve::x_rational() const {
    UniPoly p;
    for (const auto& [e, c] : x_terms) p = p + UniPoly::monomial(c.rational_value(), static_cast<int>(e));
    return p;
}

UniPoly AlgCurve::y_rational() const {
    UniPoly p;
    for (const auto& [e, c] : y_terms) p = p + UniPoly::monomial(c.rational_value(), static_cast<int>(e));
    return p;
}

namespace {

std::string curve_side_str(const std::map<long long, AlgValue>& terms) {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms) {
        std::string cs = c.str();
        if (!first) os << " + ";
        if (cs == "1") {
            os << "t";
        } else if (cs == "-1") {
            os << "-t";
        } else {
            os << cs << "*t";
        }
        if (e > 1) os << "^" << e;
        first = false;
    }
    return os.str();
}

}  // namespace

std::string AlgCurve::str() const {
    return "x(t) = " + curve_side_str(x_terms) + ", y(t) = " + curve_side_str(y_terms);
}

AlgPoly substitute_curve_alg(const BivariatePoly& p, const AlgCurve& curve) {
    long long mx = 0, my = 0;
    for (const auto& [k, c] : p.terms()) {
        mx = std::max(mx, k.alpha);
        my = std::max(my, k.beta);
    }
    AlgPoly xt, yt;
    auto fill = [](const std::map<long long, AlgValue>& terms, AlgPoly& out) {
        long long deg = terms.empty() ? 0 : terms.rbegin()->first;
        out.coeffs.assign(static_cast<size_t>(deg) + 1, AlgValue());
        for (const auto& [e, c] : terms) out.coeffs[static_cast<size_t>(e)] = c;
    };
    fill(curve.x_terms, xt);
    fill(curve.y_terms, yt);
    std::vector<AlgPoly> px(static_cast<size_t>(mx) + 1), py(static_cast<size_t>(my) + 1);
    px[0].coeffs = {AlgValue(Rational(1))};
    for (long long i = 1; i <= mx; ++i) px[static_cast<size_t>(i)] = px[static_cast<size_t>(i - 1)] * xt;
    py[0].coeffs = {AlgValue(Rational(1))};
    for (long long i = 1; i <= my; ++i) py[static_cast<size_t>(i)] = py[static_cast<size_t>(i - 1)] * yt;
    AlgPoly acc;
    for (const auto& [k, c] : p.terms())
        acc = acc + px[static_cast<size_t>(k.alpha)] * py[static_cast<size_t>(k.beta)] * AlgValue(c);
    return acc;
}

std::optional<Certificate> try_certificate(const BivariatePoly& p, const AlgCurve& curve,
                                           Certificate::Kind kind) {
    if (curve.x_terms.empty() && curve.y_terms.empty()) return std::nullopt;
    long long sigma;
    int sgn;
    bool rational = curve.is_rational();
    UniPoly expansion_q;
    if (rational) {
        expansion_q = substitute_curve(p, curve.x_rational(), curve.y_rational());
        sigma = -1;
        sgn = 0;
        for (int i = 0; i <= expansion_q.degree(); ++i)
            if (expansion_q.coeff(i) != 0) {
                sigma = i;
                sgn = sign_of(expansion_q.coeff(i));
                break;
            }
    } else {
        auto [s, g] = substitute_curve_alg(p, curve).lowest_nonzero();
        sigma = s;
        sgn = g;
    }
    if (sigma < 0 || sgn >= 0) return std::nullopt;

    Certificate cert;
    cert.kind = kind;
    cert.curve = curve;
    cert.sigma = sigma;
    AlgPoly exp_alg;
    if (!rational) exp_alg = substitute_curve_alg(p, curve);
    // pick a dyadic sample point where the value is provably negative
    Rational t(1, 2);
    for (int i = 0; i < 256; ++i) {
        if (rational) {
            Rational v = expansion_q.evaluate(t);
            if (v < 0) {
                cert.sample_t = t;
                cert.sample_value = v;
                return cert;
            }
        } else if (exp_alg.evaluate(t).sign() < 0) {
            cert.sample_t = t;
            return cert;
        }
        t /= 2;
    }
    throw std::logic_error("try_certificate: negative leading term but no sample point found");
}

bool verify_certificate(const BivariatePoly& p, const Certificate& c) {
    long long sigma;
    int sgn;
    if (c.curve.is_rational()) {
        UniPoly q = substitute_curve(p, c.curve.x_rational(), c.curve.y_rational());
        sigma = -1;
        sgn = 0;
        for (int i = 0; i <= q.degree(); ++i)
            if (q.coeff(i) != 0) {
                sigma = i;
                sgn = sign_of(q.coeff(i));
                break;
            }
        if (c.sample_value && q.evaluate(c.sample_t) != *c.sample_value) return false;
    } else {
        auto [s, g] = substitute_curve_alg(p, c.curve).lowest_nonzero();
        sigma = s;
        sgn = g;
    }
    if (sigma != c.sigma || sgn >= 0) return false;
    // the sample point must evaluate negative as well
    if (c.curve.is_rational()) {
        UniPoly q = substitute_curve(p, c.curve.x_rational(), c.curve.y_rational());
        return q.evaluate(c.sample_t) < 0;
    }
    return substitute_curve_alg(p, c.curve).evaluate(c.sample_t).sign() < 0;
}

}  // namespace polymin
