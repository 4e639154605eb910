#include "polymin/quasiform.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polymin {

BivariatePoly QuasiForm::poly() const {
    BivariatePoly p;
    for (const auto& m : terms) p.add_term(m.coef, m.exps.alpha, m.exps.beta);
    return p;
}

Decomposition decompose(const BivariatePoly& p, const NormalVector& A) {
    if (p.is_zero()) throw std::invalid_argument("decompose: zero polynomial");
    std::map<long long, std::vector<Monomial>> by_level;
    for (const auto& [k, c] : p.terms()) by_level[A.a1 * k.alpha + A.a2 * k.beta].push_back(Monomial{c, k});
    Decomposition dec;
    dec.A = A;
    for (auto& [level, terms] : by_level) {
        std::sort(terms.begin(), terms.end(),
                  [](const Monomial& a, const Monomial& b) { return a.exps.alpha > b.exps.alpha; });
        dec.forms.push_back(QuasiForm{A, level, std::move(terms)});
    }
    return dec;
}

QuasiForm form_from_char(const NormalVector& A, const UniPoly& g, const ExpPair& main) {
    if (g.is_zero()) throw std::invalid_argument("form_from_char: zero characteristic polynomial");
    QuasiForm f;
    f.A = A;
    f.level = A.a1 * main.alpha + A.a2 * main.beta;
    for (int v = 0; v <= g.degree(); ++v) {
        if (g.coeff(v) == 0) continue;
        long long alpha = main.alpha - static_cast<long long>(v) * A.a2;
        long long beta = main.beta + static_cast<long long>(v) * A.a1;
        if (alpha < 0) throw std::logic_error("form_from_char: negative exponent");
        f.terms.push_back(Monomial{g.coeff(v), ExpPair{alpha, beta}});
    }
    std::sort(f.terms.begin(), f.terms.end(),
              [](const Monomial& a, const Monomial& b) { return a.exps.alpha > b.exps.alpha; });
    return f;
}

CharPoly characteristic(const QuasiForm& form) {
    if (form.terms.empty()) throw std::invalid_argument("characteristic: empty form");
    CharPoly cp;
    cp.main = form.main_term().exps;
    cp.trailing = form.trailing_term().exps;
    cp.e1 = -form.A.a2;
    cp.e2 = form.A.a1;
    std::vector<Rational> cs;
    for (const auto& m : form.terms) {
        long long diff = cp.main.alpha - m.exps.alpha;
        if (diff % form.A.a2 != 0) throw std::logic_error("characteristic: exponent step not divisible");
        long long v = diff / form.A.a2;
        if (static_cast<long long>(cs.size()) <= v) cs.resize(static_cast<size_t>(v) + 1, Rational(0));
        cs[static_cast<size_t>(v)] = m.coef;
    }
    cp.g = UniPoly(std::move(cs));
    return cp;
}

bool form_corner_condition(const QuasiForm& form) {
    const Monomial& hi = form.main_term();
    const Monomial& lo = form.trailing_term();
    return hi.coef > 0 && lo.coef > 0 && is_even(hi.exps.alpha) && is_even(hi.exps.beta) &&
           is_even(lo.exps.alpha) && is_even(lo.exps.beta);
}

bool form_nonnegative(const QuasiForm& form) {
    if (!form_corner_condition(form)) return false;
    return univariate_nonnegative(characteristic(form).g);
}

namespace {

bool has_real_roots(const UniPoly& g) {
    for (const auto& [factor, mult] : squarefree(g)) {
        SturmChain chain(factor);
        Rational bound = cauchy_root_bound(factor);
        if (chain.count_roots(-bound, bound) > 0) return true;
    }
    return false;
}

std::pair<int, int> signs_making_negative(const Rational& coef, const ExpPair& e) {
    for (int c1 : {1, -1})
        for (int c2 : {1, -1}) {
            Rational v = coef;
            if (c1 < 0 && is_odd(e.alpha)) v = -v;
            if (c2 < 0 && is_odd(e.beta)) v = -v;
            if (v < 0) return {c1, c2};
        }
    throw std::logic_error("signs_making_negative: term is nonnegative");
}

}  // namespace

bool form_weakly_nondegenerate(const QuasiForm& form) {
    if (!form_corner_condition(form))
        throw std::invalid_argument("form_weakly_nondegenerate: corner condition violated");
    return !has_real_roots(characteristic(form).g);
}

std::vector<std::pair<Rational, Rational>> rational_points_on_level(const NormalVector& A, const Rational& u) {
    if (u == 0) throw std::invalid_argument("rational_points_on_level: u must be nonzero");
    // A1*b - A2*a == 1 with a, b >= 0
    long long a = 0, b = 0;
    bool found = false;
    for (long long bb = 0; bb <= A.a2 + 1 && !found; ++bb) {
        long long rem = A.a1 * bb - 1;
        if (rem % A.a2 == 0 && rem / A.a2 >= 0) {
            b = bb;
            a = rem / A.a2;
            found = true;
        }
    }
    if (!found) throw std::logic_error("rational_points_on_level: no Bezout pair");
    std::vector<std::pair<Rational, Rational>> out;
    for (int m = 0; m <= 1; ++m)
        for (int k : {1, -1}) {
            Rational x = pow_rational(u, a + m * A.a1) * pow_rational(Rational(k), A.a1);
            Rational y = pow_rational(u, b + m * A.a2) * pow_rational(Rational(k), A.a2);
            out.push_back({x, y});
        }
    return out;
}

std::vector<std::pair<AlgValue, AlgValue>> points_on_level(const NormalVector& A,
                                                           const std::shared_ptr<const AlgebraicNumber>& u0) {
    if (u0->is_rational()) {
        std::vector<std::pair<AlgValue, AlgValue>> out;
        for (auto& [x, y] : rational_points_on_level(A, u0->rational_value()))
            out.push_back({AlgValue(x), AlgValue(y)});
        return out;
    }
    long long a = 0, b = 0;
    bool found = false;
    for (long long bb = 0; bb <= A.a2 + 1 && !found; ++bb) {
        long long rem = A.a1 * bb - 1;
        if (rem % A.a2 == 0 && rem / A.a2 >= 0) {
            b = bb;
            a = rem / A.a2;
            found = true;
        }
    }
    if (!found) throw std::logic_error("points_on_level: no Bezout pair");
    AlgValue u = AlgValue::theta_of(u0);
    std::vector<std::pair<AlgValue, AlgValue>> out;
    for (int m = 0; m <= 1; ++m)
        for (int k : {1, -1}) {
            AlgValue kx(pow_rational(Rational(k), A.a1));
            AlgValue ky(pow_rational(Rational(k), A.a2));
            out.push_back({u.pow(static_cast<unsigned>(a + m * A.a1)) * kx,
                           u.pow(static_cast<unsigned>(b + m * A.a2)) * ky});
        }
    return out;
}

NegativityWitness negativity_witness(const QuasiForm& form) {
    if (form_nonnegative(form)) throw std::invalid_argument("negativity_witness: form is nonnegative");
    const NormalVector& A = form.A;
    BivariatePoly phi = form.poly();
    const Monomial& hi = form.main_term();
    const Monomial& lo = form.trailing_term();

    auto scan_curve = [&](const Rational& cx, long long ex, const Rational& cy,
                          long long ey) -> std::optional<NegativityWitness> {
        Rational s(1, 2);
        for (int i = 0; i < 512; ++i) {
            Rational x = cx * pow_rational(s, ex), y = cy * pow_rational(s, ey);
            if (phi.evaluate(x, y) < 0) {
                NegativityWitness w;
                w.x = x;
                w.y = y;
                w.xt = UniPoly::monomial(x, static_cast<int>(A.a1));
                w.yt = UniPoly::monomial(y, static_cast<int>(A.a2));
                return w;
            }
            s /= 2;
        }
        return std::nullopt;
    };

    if (hi.coef < 0 || is_odd(hi.exps.alpha) || is_odd(hi.exps.beta)) {
        auto [c1, c2] = signs_making_negative(hi.coef, hi.exps);
        // along (c1 t^A1, c2 t^(A2+1)) the main term dominates
        if (auto w = scan_curve(Rational(c1), A.a1, Rational(c2), A.a2 + 1)) return *w;
        throw std::logic_error("negativity_witness: main-term scan failed");
    }
    if (lo.coef < 0 || is_odd(lo.exps.alpha) || is_odd(lo.exps.beta)) {
        auto [c1, c2] = signs_making_negative(lo.coef, lo.exps);
        if (auto w = scan_curve(Rational(c1), A.a1 + 1, Rational(c2), A.a2)) return *w;
        throw std::logic_error("negativity_witness: trailing-term scan failed");
    }
    // corner condition holds, so the characteristic polynomial dips negative
    CharPoly cp = characteristic(form);
    Rational uhat = negative_sample(cp.g);
    if (uhat == 0) throw std::logic_error("negativity_witness: g(0) cannot be negative here");
    for (auto& [x, y] : rational_points_on_level(A, uhat)) {
        if (phi.evaluate(x, y) < 0) {
            NegativityWitness w;
            w.x = x;
            w.y = y;
            w.xt = UniPoly::monomial(x, static_cast<int>(A.a1));
            w.yt = UniPoly::monomial(y, static_cast<int>(A.a2));
            return w;
        }
    }
    throw std::logic_error("negativity_witness: no level point was negative");
}

QuasiForm factor_out_root(const QuasiForm& form, const Rational& u0, int m) {
    if (m <= 0) throw std::invalid_argument("factor_out_root: multiplicity must be positive");
    CharPoly cp = characteristic(form);
    AlgebraicNumber r = AlgebraicNumber::from_rational(u0);
    if (multiplicity_in(cp.g, r) < m)
        throw std::invalid_argument("factor_out_root: u0 is not a root of sufficient multiplicity");
    UniPoly lin({-u0, Rational(1)});
    UniPoly g = cp.g;
    for (int i = 0; i < m; ++i) g = g.exact_div(lin);
    ExpPair main{cp.main.alpha - static_cast<long long>(m) * form.A.a2, cp.main.beta};
    return form_from_char(form.A, g, main);
}

Verdict main_form_nonNN_case(const BivariatePoly& p) {
    Verdict v;
    std::set<ExpPair> sup = p.support();
    Polytope h = hull(sup);
    if (h.dimension >= 2) throw std::invalid_argument("main_form_nonNN_case: support is two-dimensional");

    auto finish_not_min = [&](const UniPoly& xt, const UniPoly& yt, Certificate::Kind kind) {
        auto cert = try_certificate(p, AlgCurve::rational(xt, yt), kind);
        if (!cert) throw std::logic_error("main_form_nonNN_case: witness curve failed to verify");
        v.status = Status::NotLocalMin;
        v.certificate = *cert;
    };

    if (h.dimension == 0) {
        // single term a x^alpha y^beta
        const auto& [k, a] = *p.terms().begin();
        if (a > 0 && is_even(k.alpha) && is_even(k.beta)) {
            v.status = Status::LocalMin;
            v.trace.push_back({"single-term-nonnegative", "A1", std::nullopt, {{"term", p.str()}}});
            return v;
        }
        auto [c1, c2] = signs_making_negative(a, k);
        v.trace.push_back({"single-term-negative-direction",
                           "A1",
                           std::nullopt,
                           {{"term", p.str()}, {"signs", "(" + std::to_string(c1) + "," + std::to_string(c2) + ")"}}});
        finish_not_min(UniPoly::monomial(Rational(c1), 1), UniPoly::monomial(Rational(c2), 1),
                       Certificate::Kind::ScaledPointDescent);
        return v;
    }

    // dimension 1: all support points on a line with primitive direction d
    ExpPair p0 = h.vertices[0], p1 = h.vertices[1];
    long long dx = p1.alpha - p0.alpha, dy = p1.beta - p0.beta;
    long long g = std::gcd(dx < 0 ? -dx : dx, dy < 0 ? -dy : dy);
    dx /= g;
    dy /= g;
    // normals perpendicular to d
    NormalVector cand = reduce_normal(-dy, dx);
    if (cand.a1 < 0 || (cand.a1 == 0 && cand.a2 < 0)) cand = NormalVector{-cand.a1, -cand.a2};

    if (cand.a1 >= 1 && cand.a2 >= 1) {
        // the whole polynomial is one southwestern form: full single-form test
        Decomposition dec = decompose(p, cand);
        const QuasiForm& form = dec.forms.at(0);
        if (form_nonnegative(form)) {
            CharPoly cp = characteristic(form);
            v.status = Status::LocalMin;
            v.trace.push_back({"single-form-nonnegative",
                               "A1",
                               cand,
                               {{"g", cp.g.str()}}});
            if (!has_real_roots(cp.g))
                v.trace.push_back({"characteristic-no-real-roots", "A2", cand, {{"g", cp.g.str()}}});
            return v;
        }
        NegativityWitness w = negativity_witness(form);
        v.trace.push_back({"single-form-not-nonnegative",
                           "A1",
                           cand,
                           {{"point", "(" + w.x.str() + ", " + w.y.str() + ")"}}});
        finish_not_min(w.xt, w.yt, Certificate::Kind::ScaledPointDescent);
        return v;
    }

    // the supporting direction has a zero or negative component: the
    // componentwise-minimal term alone decides
    ExpPair mt = *sup.begin();
    for (const auto& k : sup)
        if (k.alpha <= mt.alpha && k.beta <= mt.beta) mt = k;
    for (const auto& k : sup)
        if (!(mt.alpha <= k.alpha && mt.beta <= k.beta))
            throw std::logic_error("main_form_nonNN_case: no componentwise-minimal term on the line");
    Rational a = p.coefficient(mt.alpha, mt.beta);
    if (a > 0 && is_even(mt.alpha) && is_even(mt.beta)) {
        v.status = Status::LocalMin;
        v.trace.push_back({"main-term-nonnegative",
                           "S2",
                           std::nullopt,
                           {{"term", BivariatePoly::term(a, mt.alpha, mt.beta).str()}}});
        return v;
    }
    auto [c1, c2] = signs_making_negative(a, mt);
    v.trace.push_back({"main-term-negative-direction",
                       "S2",
                       std::nullopt,
                       {{"term", BivariatePoly::term(a, mt.alpha, mt.beta).str()},
                        {"signs", "(" + std::to_string(c1) + "," + std::to_string(c2) + ")"}}});
    finish_not_min(UniPoly::monomial(Rational(c1), 1), UniPoly::monomial(Rational(c2), 1),
                   Certificate::Kind::ScaledPointDescent);
    return v;
}

}  // namespace polymin
