#include "polymin/substitution.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polymin {

SymPoly SymPoly::constant(int nsyms, AlgValue v) {
    SymPoly p(nsyms);
    if (!v.rep().is_zero()) p.terms_.emplace(Key(static_cast<size_t>(nsyms), 0), std::move(v));
    return p;
}

SymPoly SymPoly::symbol(int nsyms, int idx) {
    SymPoly p(nsyms);
    Key k(static_cast<size_t>(nsyms), 0);
    k[static_cast<size_t>(idx)] = 1;
    p.terms_.emplace(std::move(k), AlgValue(Rational(1)));
    return p;
}

void SymPoly::add_term(const Key& k, const AlgValue& v) {
    if (v.rep().is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, v);
    } else {
        AlgValue s = it->second + v;
        if (s.rep().is_zero()) {
            terms_.erase(it);
        } else {
            it->second = s;
        }
    }
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    SymPoly r = *this;
    for (const auto& [k, v] : o.terms_) r.add_term(k, v);
    return r;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
    SymPoly r(nsyms_);
    for (const auto& [k1, v1] : terms_)
        for (const auto& [k2, v2] : o.terms_) {
            Key k(k1.size());
            for (size_t i = 0; i < k.size(); ++i) k[i] = k1[i] + k2[i];
            r.add_term(k, v1 * v2);
        }
    return r;
}

SymPoly SymPoly::operator*(const AlgValue& c) const {
    SymPoly r(nsyms_);
    if (c.rep().is_zero()) return r;
    for (const auto& [k, v] : terms_) r.add_term(k, v * c);
    return r;
}

std::optional<AlgValue> SymPoly::as_constant() const {
    AlgValue c;
    for (const auto& [k, v] : terms_) {
        bool is_const_key = std::all_of(k.begin(), k.end(), [](int e) { return e == 0; });
        if (is_const_key) {
            c = c + v;
        } else if (v.sign() != 0) {
            return std::nullopt;
        }
    }
    return c;
}

std::vector<int> SymPoly::symbols_present() const {
    std::vector<int> out;
    for (int s = 0; s < nsyms_; ++s) {
        for (const auto& [k, v] : terms_) {
            if (k[static_cast<size_t>(s)] > 0 && v.sign() != 0) {
                out.push_back(s);
                break;
            }
        }
    }
    return out;
}

long long SymPoly::total_degree() const {
    long long d = 0;
    for (const auto& [k, v] : terms_) {
        long long t = 0;
        for (int e : k) t += e;
        d = std::max(d, t);
    }
    return d;
}

SymPoly SymPoly::substitute(int sym, const SymPoly& value) const {
    SymPoly r(nsyms_);
    for (const auto& [k, v] : terms_) {
        int e = k[static_cast<size_t>(sym)];
        Key rest = k;
        rest[static_cast<size_t>(sym)] = 0;
        SymPoly term(nsyms_);
        term.terms_.emplace(rest, v);
        for (int i = 0; i < e; ++i) term = term * value;
        r = r + term;
    }
    return r;
}

AlgValue SymPoly::evaluate(const std::vector<AlgValue>& assignment) const {
    AlgValue acc;
    for (const auto& [k, v] : terms_) {
        AlgValue t = v;
        for (size_t i = 0; i < k.size(); ++i)
            if (k[i] > 0) t = t * assignment[i].pow(static_cast<unsigned>(k[i]));
        acc = acc + t;
    }
    return acc;
}

std::string SymPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    int n = nsyms_ / 2;
    for (const auto& [k, v] : terms_) {
        if (!first) os << " + ";
        os << v.str();
        for (size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            os << "*" << (static_cast<int>(i) < n ? "c" : "d") << (static_cast<int>(i) % n) + 1;
            if (k[i] > 1) os << "^" << k[i];
        }
        first = false;
    }
    return os.str();
}

LeadingPairSet leading_pair_candidates(const NormalVector& A, const AlgebraicNumber& u0) {
    if (u0.sign() == 0) throw std::invalid_argument("leading_pair_candidates: u0 must be nonzero");
    long long e1 = -A.a2, e2 = A.a1;
    LeadingPairSet out;
    auto wrap = [&](const AlgebraicNumber& num) -> AlgValue {
        if (num.is_rational()) return AlgValue(num.rational_value());
        auto shared = std::make_shared<AlgebraicNumber>(num);
        out.theta = shared;
        return AlgValue::theta_of(shared);
    };
    if (is_even(e1)) {
        // case 1: d0 = u0^(1/e2), c0 = +-1
        out.case_id = "1";
        AlgValue d0 = wrap(real_nth_root(u0, static_cast<int>(e2)));
        out.pairs = {{AlgValue(Rational(1)), d0}, {AlgValue(Rational(-1)), d0}};
    } else if (is_even(e2)) {
        // case 2: c0 = u0^(1/e1) = (1/u0)^(1/A2), d0 = +-1
        out.case_id = "2";
        AlgValue c0 = wrap(real_nth_root(alg_reciprocal(u0), static_cast<int>(A.a2)));
        out.pairs = {{c0, AlgValue(Rational(1))}, {c0, AlgValue(Rational(-1))}};
    } else {
        // case 3: both odd
        out.case_id = "3a";
        AlgValue d0 = wrap(real_nth_root(u0, static_cast<int>(e2)));
        out.pairs = {{AlgValue(Rational(1)), d0}, {AlgValue(Rational(-1)), -d0}};
    }
    return out;
}

AlgebraicNumber alg_reciprocal(const AlgebraicNumber& a) {
    if (a.sign() == 0) throw std::domain_error("alg_reciprocal: zero");
    if (a.is_rational()) return AlgebraicNumber::from_rational(Rational(1) / a.rational_value());
    AlgebraicNumber s = a.separated_from_zero();
    UniPoly d = s.defining();
    // strip a root at zero so the reversal is a genuine defining polynomial
    while (sign_of(d.coeff(0)) == 0) d = d.exact_div(UniPoly({Rational(0), Rational(1)}));
    std::vector<Rational> rev(d.coeffs().rbegin(), d.coeffs().rend());
    UniPoly reversed((std::vector<Rational>(rev)));
    return AlgebraicNumber(reversed, Rational(1) / s.hi(), Rational(1) / s.lo());
}

std::vector<std::pair<long long, SymPoly>> expand_template(const BivariatePoly& p,
                                                           const CurveTemplate& tpl) {
    const int nsyms = 2 * tpl.unknowns;
    const long long nu1 = static_cast<long long>(tpl.nu) * tpl.A.a1;
    const long long nu2 = static_cast<long long>(tpl.nu) * tpl.A.a2;
    const long long bound = tpl.order_bound;
    if (bound <= 0) throw std::invalid_argument("expand_template: order bound must be positive");

    using TPoly = std::vector<SymPoly>;  // index = t-degree, truncated at bound
    auto make_zero = [&]() { return TPoly(static_cast<size_t>(bound) + 1, SymPoly(nsyms)); };
    auto mul = [&](const TPoly& a, const TPoly& b) {
        TPoly r = make_zero();
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].is_zero_rep()) continue;
            for (size_t j = 0; j + i <= static_cast<size_t>(bound) && j < b.size(); ++j) {
                if (b[j].is_zero_rep()) continue;
                r[i + j] = r[i + j] + a[i] * b[j];
            }
        }
        return r;
    };

    TPoly xt = make_zero(), yt = make_zero();
    if (nu1 <= bound) xt[static_cast<size_t>(nu1)] = SymPoly::constant(nsyms, tpl.c0);
    if (nu2 <= bound) yt[static_cast<size_t>(nu2)] = SymPoly::constant(nsyms, tpl.d0);
    for (int i = 1; i <= tpl.unknowns; ++i) {
        if (nu1 + i <= bound) xt[static_cast<size_t>(nu1 + i)] = SymPoly::symbol(nsyms, i - 1);
        if (nu2 + i <= bound) yt[static_cast<size_t>(nu2 + i)] = SymPoly::symbol(nsyms, tpl.unknowns + i - 1);
    }

    long long mx = 0, my = 0;
    for (const auto& [k, c] : p.terms()) {
        mx = std::max(mx, k.alpha);
        my = std::max(my, k.beta);
    }
    std::vector<TPoly> px(static_cast<size_t>(mx) + 1), py(static_cast<size_t>(my) + 1);
    px[0] = make_zero();
    px[0][0] = SymPoly::constant(nsyms, AlgValue(Rational(1)));
    for (long long i = 1; i <= mx; ++i) px[static_cast<size_t>(i)] = mul(px[static_cast<size_t>(i - 1)], xt);
    py[0] = px[0];
    for (long long i = 1; i <= my; ++i) py[static_cast<size_t>(i)] = mul(py[static_cast<size_t>(i - 1)], yt);

    TPoly acc = make_zero();
    for (const auto& [k, c] : p.terms()) {
        TPoly term = mul(px[static_cast<size_t>(k.alpha)], py[static_cast<size_t>(k.beta)]);
        for (size_t i = 0; i < term.size(); ++i)
            if (!term[i].is_zero_rep()) acc[i] = acc[i] + term[i] * AlgValue(c);
    }

    std::vector<std::pair<long long, SymPoly>> out;
    for (size_t i = 0; i < acc.size(); ++i)
        if (!acc[i].is_zero_rep()) out.push_back({static_cast<long long>(i), acc[i]});
    return out;
}

namespace {

using Env = std::vector<std::optional<SymPoly>>;

SymPoly apply_env(SymPoly e, const Env& env) {
    for (int guard = 0; guard < static_cast<int>(env.size()) + 2; ++guard) {
        bool changed = false;
        for (int s : e.symbols_present()) {
            if (env[static_cast<size_t>(s)]) {
                e = e.substitute(s, *env[static_cast<size_t>(s)]);
                changed = true;
                break;
            }
        }
        if (!changed) return e;
    }
    throw std::logic_error("apply_env: substitution chain too deep");
}

// Detect E == gamma * L^k for a linear form L in at most two symbols with
// small integer coefficients; returns the symbol to solve for and its
// solved expression.
std::optional<std::pair<int, SymPoly>> solve_linear_power(const SymPoly& E) {
    long long k = E.total_degree();
    if (k < 1) return std::nullopt;
    std::vector<int> syms = E.symbols_present();
    if (syms.empty() || syms.size() > 2) return std::nullopt;
    const int nsyms = E.nsyms();
    std::vector<Rational> coefs = {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
                                   Rational(-1, 2)};
    std::vector<Rational> consts = {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(-2)};
    for (const Rational& la : coefs) {
        std::vector<Rational> lbs = syms.size() == 2 ? coefs : std::vector<Rational>{Rational(0)};
        for (const Rational& lb : lbs) {
            for (const Rational& mu : consts) {
                SymPoly L = SymPoly::constant(nsyms, AlgValue(mu)) +
                            SymPoly::symbol(nsyms, syms[0]) * AlgValue(la);
                if (syms.size() == 2) L = L + SymPoly::symbol(nsyms, syms[1]) * AlgValue(lb);
                SymPoly Lk = SymPoly::constant(nsyms, AlgValue(Rational(1)));
                for (long long i = 0; i < k; ++i) Lk = Lk * L;
                // match gamma from any nonzero term of Lk
                if (Lk.terms().empty()) continue;
                auto it = Lk.terms().begin();
                auto jt = E.terms().find(it->first);
                if (jt == E.terms().end()) continue;
                if (!it->second.is_rational() || !jt->second.is_rational()) continue;
                AlgValue gamma(jt->second.rational_value() / it->second.rational_value());
                SymPoly diff = E + (Lk * gamma) * AlgValue(Rational(-1));
                bool zero = diff.is_zero_rep();
                if (!zero && diff.as_constant() && diff.as_constant()->sign() == 0) zero = true;
                if (!zero) continue;
                // solve L = 0 for syms[0]: s0 = -(mu + lb*s1)/la
                SymPoly rhs = SymPoly::constant(nsyms, AlgValue(-mu / la));
                if (syms.size() == 2)
                    rhs = rhs + SymPoly::symbol(nsyms, syms[1]) * AlgValue(-lb / la);
                return std::make_pair(syms[0], rhs);
            }
        }
    }
    return std::nullopt;
}

struct StageSearcher {
    const BivariatePoly& p;
    const CurveTemplate& tpl;
    const SearchBudget& budget;
    long long& nodes;
    std::vector<std::pair<long long, SymPoly>> expansion;

    std::optional<Certificate> build(const Env& env) {
        const int nsyms = 2 * tpl.unknowns;
        std::vector<AlgValue> zeros(static_cast<size_t>(nsyms));
        auto resolve = [&](int s) {
            SymPoly e = apply_env(SymPoly::symbol(nsyms, s), env);
            return e.evaluate(zeros);
        };
        AlgCurve curve;
        curve.theta = tpl.theta;
        long long nu1 = static_cast<long long>(tpl.nu) * tpl.A.a1;
        long long nu2 = static_cast<long long>(tpl.nu) * tpl.A.a2;
        curve.x_terms.emplace(nu1, tpl.c0);
        curve.y_terms.emplace(nu2, tpl.d0);
        for (int i = 1; i <= tpl.unknowns; ++i) {
            AlgValue cv = resolve(i - 1);
            AlgValue dv = resolve(tpl.unknowns + i - 1);
            if (!cv.rep().is_zero()) curve.x_terms.emplace(nu1 + i, cv);
            if (!dv.rep().is_zero()) curve.y_terms.emplace(nu2 + i, dv);
        }
        return try_certificate(p, curve, Certificate::Kind::CurveDescent);
    }

    std::optional<Certificate> dfs(size_t idx, Env env) {
        if (++nodes > budget.node_limit) return std::nullopt;
        for (size_t i = idx; i < expansion.size(); ++i) {
            SymPoly E = apply_env(expansion[i].second, env);
            if (E.is_zero_rep()) continue;
            if (auto c = E.as_constant()) {
                int s = c->sign();
                if (s == 0) continue;
                if (s < 0) return build(env);
                return std::nullopt;  // positive leading coefficient on this branch
            }
            // symbolic zeroing of a pure power of a linear form
            if (auto solved = solve_linear_power(E)) {
                Env env2 = env;
                env2[static_cast<size_t>(solved->first)] = solved->second;
                if (auto c = dfs(i + 1, std::move(env2))) return c;
            }
            // grid branching on the symbols in E
            std::vector<int> syms = E.symbols_present();
            static const Rational grid[] = {Rational(0),  Rational(1),     Rational(-1),    Rational(2),
                                            Rational(-2), Rational(1, 2), Rational(-1, 2)};
            std::vector<size_t> pick(syms.size(), 0);
            while (true) {
                if (++nodes > budget.node_limit) return std::nullopt;
                Env env2 = env;
                for (size_t s = 0; s < syms.size(); ++s)
                    env2[static_cast<size_t>(syms[s])] =
                        SymPoly::constant(E.nsyms(), AlgValue(grid[pick[s]]));
                AlgValue val = apply_env(E, env2).as_constant().value_or(AlgValue(Rational(1)));
                int sg = val.sign();
                if (sg < 0) {
                    if (auto c = build(env2)) return c;
                } else if (sg == 0) {
                    if (auto c = dfs(i + 1, std::move(env2))) return c;
                }
                // next grid combination
                size_t s = 0;
                while (s < pick.size() && ++pick[s] == std::size(grid)) {
                    pick[s] = 0;
                    ++s;
                }
                if (s == pick.size()) break;
            }
            return std::nullopt;
        }
        return std::nullopt;  // every coefficient within the bound vanished
    }
};

}  // namespace

std::optional<Certificate> search_descent(const BivariatePoly& p, const std::vector<SearchFace>& faces,
                                          const SearchBudget& budget) {
    if (faces.empty()) return std::nullopt;
    long long nodes = 0;
    for (const auto& face : faces) {
        for (const auto& u0 : face.roots) {
            LeadingPairSet pairs = leading_pair_candidates(face.A, *u0);
            for (int nu = 1; nu <= budget.max_nu; ++nu) {
                for (const auto& [c0, d0] : pairs.pairs) {
                    for (int unknowns = 0; unknowns <= budget.max_unknowns; ++unknowns) {
                        CurveTemplate tpl;
                        tpl.A = face.A;
                        tpl.nu = nu;
                        tpl.c0 = c0;
                        tpl.d0 = d0;
                        tpl.theta = pairs.theta;
                        tpl.unknowns = unknowns;
                        tpl.order_bound = budget.max_order;
                        StageSearcher searcher{p, tpl, budget, nodes, expand_template(p, tpl)};
                        Env env(static_cast<size_t>(2 * unknowns));
                        if (auto c = searcher.dfs(0, std::move(env))) return c;
                        if (nodes > budget.node_limit) return std::nullopt;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace polymin
