#include "polymin/realroots.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polymin {

namespace {

// Smallest-denominator rational in [lo, hi] via the continued-fraction walk.
Rational simplest_in(const Rational& lo, const Rational& hi) {
    if (lo == hi) return lo;
    if (lo <= 0 && 0 <= hi) return Rational(0);
    if (hi < 0) return -simplest_in(-hi, -lo);
    // 0 < lo < hi
    Integer fl = num(lo) / den(lo);
    Rational ce = (den(lo) == 1) ? lo : Rational(fl + 1);
    if (ce <= hi) return ce;
    Rational r = simplest_in(Rational(1) / (hi - Rational(fl)), Rational(1) / (lo - Rational(fl)));
    return Rational(fl) + Rational(1) / r;
}

// Bisect [lo, hi] with sign change of f (f(lo) * f(hi) < 0) once.
void bisect_step(const UniPoly& f, Rational& lo, Rational& hi) {
    Rational mid = (lo + hi) / 2;
    int sm = sign_of(f.evaluate(mid));
    if (sm == 0) {
        lo = mid;
        hi = mid;
        return;
    }
    int sl = sign_of(f.evaluate(lo));
    if (sl == sm) {
        lo = mid;
    } else {
        hi = mid;
    }
}

}  // namespace

AlgebraicNumber::AlgebraicNumber(UniPoly defining, Rational lo, Rational hi)
    : defining_(defining.primitive_positive_scale()), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::invalid_argument("AlgebraicNumber: empty interval");
    if (lo_ == hi_) {
        defining_ = UniPoly({-lo_, Rational(1)}).primitive_positive_scale();
        return;
    }
    if (defining_.is_constant()) throw std::invalid_argument("AlgebraicNumber: constant defining polynomial");
    if (sign_of(defining_.evaluate(lo_)) == 0) {
        hi_ = lo_;
        defining_ = UniPoly({-lo_, Rational(1)}).primitive_positive_scale();
        return;
    }
    if (sign_of(defining_.evaluate(hi_)) == 0) {
        lo_ = hi_;
        defining_ = UniPoly({-hi_, Rational(1)}).primitive_positive_scale();
        return;
    }
    SturmChain chain(defining_);
    if (chain.count_roots(lo_, hi_) != 1)
        throw std::invalid_argument("AlgebraicNumber: interval does not isolate one root");
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& v) {
    return AlgebraicNumber(UniPoly({-v, Rational(1)}), v, v);
}

const Rational& AlgebraicNumber::rational_value() const {
    if (!is_rational()) throw std::logic_error("rational_value on irrational number");
    return lo_;
}

AlgebraicNumber AlgebraicNumber::refined() const {
    if (is_rational()) return *this;
    AlgebraicNumber r = *this;
    bisect_step(r.defining_, r.lo_, r.hi_);
    if (r.lo_ == r.hi_) return from_rational(r.lo_);
    return r;
}

AlgebraicNumber AlgebraicNumber::refined_to_width(const Rational& w) const {
    AlgebraicNumber r = *this;
    while (!r.is_rational() && r.hi_ - r.lo_ > w) r = r.refined();
    return r;
}

AlgebraicNumber AlgebraicNumber::separated_from_zero() const {
    AlgebraicNumber r = *this;
    for (int guard = 0; guard < 100000; ++guard) {
        if (r.is_rational()) {
            if (r.lo_ == 0) throw std::logic_error("separated_from_zero: number is zero");
            return r;
        }
        if (r.lo_ > 0 || r.hi_ < 0) return r;
        if (sign_of(r.defining_.evaluate(Rational(0))) == 0)
            throw std::logic_error("separated_from_zero: number is zero");
        r = r.refined();
    }
    throw std::logic_error("separated_from_zero: refinement stalled");
}

int AlgebraicNumber::sign() const {
    if (is_rational()) return sign_of(lo_);
    AlgebraicNumber r = separated_from_zero();
    return r.lo() > 0 ? 1 : -1;
}

int AlgebraicNumber::compare(const Rational& q) const {
    if (is_rational()) return lo_ < q ? -1 : (lo_ == q ? 0 : 1);
    if (sign_of(defining_.evaluate(q)) == 0) {
        // q might be the number itself only if q is a root inside the interval
        if (lo_ < q && q < hi_) return 0;
    }
    AlgebraicNumber r = *this;
    for (int guard = 0; guard < 100000; ++guard) {
        if (r.hi_ < q) return -1;
        if (r.lo_ > q) return 1;
        if (r.is_rational()) return r.lo_ < q ? -1 : (r.lo_ == q ? 0 : 1);
        r = r.refined();
    }
    throw std::logic_error("compare: refinement stalled");
}

std::string AlgebraicNumber::str() const {
    if (is_rational()) return lo_.str();
    std::ostringstream os;
    os << "root of " << defining_.str() << " in [" << lo_.str() << ", " << hi_.str() << "]";
    return os.str();
}

std::vector<std::pair<UniPoly, int>> squarefree(const UniPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("squarefree: zero polynomial");
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly p = g.primitive_positive_scale();
    if (p.is_constant()) return out;
    // Yun's algorithm
    UniPoly dp = p.derivative();
    UniPoly a = UniPoly::gcd(p, dp);
    UniPoly b = p.exact_div(a);
    UniPoly c = dp.exact_div(a);
    UniPoly d = c - b.derivative();
    int i = 1;
    while (!(b.is_constant())) {
        UniPoly f = UniPoly::gcd(b, d);
        if (f.degree() > 0) out.push_back({f.primitive_positive_scale(), i});
        b = b.exact_div(f);
        c = d.exact_div(f);
        d = c - b.derivative();
        ++i;
        if (i > g.degree() + 2) throw std::logic_error("squarefree: runaway iteration");
    }
    return out;
}

namespace {

// Isolate the real roots of a square-free polynomial f.
std::vector<AlgebraicNumber> isolate_squarefree(const UniPoly& f) {
    std::vector<AlgebraicNumber> out;
    if (f.degree() < 1) return out;
    if (f.degree() == 1) {
        out.push_back(AlgebraicNumber::from_rational(-f.coeff(0) / f.coeff(1)));
        return out;
    }
    SturmChain chain(f);
    Rational bound = cauchy_root_bound(f);
    struct Seg {
        Rational lo, hi;
        int count;
    };
    std::vector<Seg> work;
    std::vector<std::pair<Rational, Rational>> found;
    std::vector<Rational> exact;
    Rational lo = -bound, hi = bound;
    // the Cauchy bound is strict, so the endpoints are never roots
    work.push_back({lo, hi, chain.count_roots(lo, hi)});
    while (!work.empty()) {
        Seg s = work.back();
        work.pop_back();
        if (s.count == 0) continue;
        if (s.count == 1 && sign_of(f.evaluate(s.lo)) != 0 && sign_of(f.evaluate(s.hi)) != 0) {
            found.push_back({s.lo, s.hi});
            continue;
        }
        Rational mid = (s.lo + s.hi) / 2;
        if (sign_of(f.evaluate(mid)) == 0) {
            exact.push_back(mid);
            // split around the exact root; shrink to avoid re-counting it
            Rational eps = (s.hi - s.lo) / 1024;
            Rational l2 = mid - eps, r2 = mid + eps;
            while (sign_of(f.evaluate(l2)) == 0) l2 = (s.lo + l2) / 2;
            while (sign_of(f.evaluate(r2)) == 0) r2 = (r2 + s.hi) / 2;
            int cl = l2 > s.lo ? chain.count_roots(s.lo, l2) : 0;
            int cr = r2 < s.hi ? chain.count_roots(r2, s.hi) : 0;
            if (cl > 0) work.push_back({s.lo, l2, cl});
            if (cr > 0) work.push_back({r2, s.hi, cr});
        } else {
            int cl = chain.count_roots(s.lo, mid);
            int cr = s.count - cl;
            if (cl > 0) work.push_back({s.lo, mid, cl});
            if (cr > 0) work.push_back({mid, s.hi, cr});
        }
    }
    for (const auto& v : exact) out.push_back(AlgebraicNumber::from_rational(v));
    for (auto& [l, h] : found) {
        // try to pin a rational value: refine, then test the simplest rational
        Rational llo = l, lhi = h;
        for (int i = 0; i < 48; ++i) bisect_step(f, llo, lhi);
        if (llo == lhi) {
            out.push_back(AlgebraicNumber::from_rational(llo));
            continue;
        }
        Rational guess = simplest_in(llo, lhi);
        if (sign_of(f.evaluate(guess)) == 0) {
            out.push_back(AlgebraicNumber::from_rational(guess));
        } else {
            out.push_back(AlgebraicNumber(f, llo, lhi));
        }
    }
    std::sort(out.begin(), out.end(), [](const AlgebraicNumber& a, const AlgebraicNumber& b) {
        return (a.lo() + a.hi()) < (b.lo() + b.hi());
    });
    return out;
}

}  // namespace

RootList isolate_roots(const UniPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    RootList out;
    for (const auto& [factor, mult] : squarefree(g)) {
        for (auto& r : isolate_squarefree(factor)) out.push_back({r, mult});
    }
    // Disjointness across coprime factors: refine until intervals separate.
    bool changed = true;
    int guard = 0;
    while (changed) {
        if (++guard > 10000) throw std::logic_error("isolate_roots: separation stalled");
        changed = false;
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = i + 1; j < out.size(); ++j) {
                auto& a = out[i].root;
                auto& b = out[j].root;
                bool overlap = !(a.hi() < b.lo() || b.hi() < a.lo());
                if (overlap) {
                    if (a.is_rational() && b.is_rational()) {
                        // coprime factors cannot share a root
                        throw std::logic_error("isolate_roots: duplicate root across factors");
                    }
                    if (!a.is_rational()) {
                        out[i].root = a.refined();
                        changed = true;
                    }
                    if (!b.is_rational()) {
                        out[j].root = b.refined();
                        changed = true;
                    }
                }
            }
    }
    std::sort(out.begin(), out.end(), [](const RootRecord& a, const RootRecord& b) {
        return (a.root.lo() + a.root.hi()) < (b.root.lo() + b.root.hi());
    });
    return out;
}

bool univariate_nonnegative(const UniPoly& g) {
    if (g.is_zero()) return true;
    if (g.is_constant()) return g.coeff(0) > 0;
    if (is_odd(g.degree()) || g.leading() < 0) return false;
    for (const auto& [factor, mult] : squarefree(g)) {
        if (is_even(mult)) continue;
        SturmChain chain(factor);
        Rational bound = cauchy_root_bound(factor);
        if (chain.count_roots(-bound, bound) > 0) return false;
    }
    return true;
}

int sign_at_root(const UniPoly& h, const AlgebraicNumber& r) {
    if (h.is_zero()) return 0;
    if (r.is_rational()) return sign_of(h.evaluate(r.rational_value()));
    // exact zero test first, otherwise interval refinement may never settle
    UniPoly d = UniPoly::gcd(h, r.defining());
    if (d.degree() > 0) {
        SturmChain chain(d);
        if (sign_of(d.evaluate(r.lo())) == 0 || sign_of(d.evaluate(r.hi())) == 0)
            throw std::logic_error("sign_at_root: endpoint collision");
        if (chain.count_roots(r.lo(), r.hi()) > 0) return 0;
    }
    AlgebraicNumber a = r;
    for (int guard = 0; guard < 100000; ++guard) {
        auto [lo, hi] = interval_evaluate(h, a.lo(), a.hi());
        if (lo > 0) return 1;
        if (hi < 0) return -1;
        a = a.refined();
        if (a.is_rational()) return sign_of(h.evaluate(a.rational_value()));
    }
    throw std::logic_error("sign_at_root: refinement stalled");
}

int multiplicity_in(const UniPoly& g, const AlgebraicNumber& r) {
    if (g.is_zero()) throw std::invalid_argument("multiplicity_in: zero polynomial");
    if (r.is_rational()) {
        const Rational& v = r.rational_value();
        if (sign_of(g.evaluate(v)) != 0) return 0;
        UniPoly lin({-v, Rational(1)});
        UniPoly q = g;
        int m = 0;
        while (true) {
            auto [qq, rem] = q.divmod(lin);
            if (!rem.is_zero()) break;
            q = qq;
            ++m;
        }
        return m;
    }
    int total = 0;
    for (const auto& [factor, mult] : squarefree(g)) {
        if (sign_at_root(factor, r) == 0) total += mult;
    }
    return total;
}

Rational negative_sample(const UniPoly& g) {
    if (g.is_zero()) throw std::invalid_argument("negative_sample: zero polynomial");
    if (g.is_constant()) {
        if (g.coeff(0) < 0) return Rational(0);
        throw std::invalid_argument("negative_sample: polynomial is nonnegative");
    }
    Rational bound = cauchy_root_bound(g) + 1;
    std::vector<Rational> candidates = {-bound, Rational(0), bound};
    RootList roots = isolate_roots(g);
    for (size_t i = 0; i < roots.size(); ++i) {
        candidates.push_back(roots[i].root.lo() - Rational(1, 1024));
        candidates.push_back(roots[i].root.hi() + Rational(1, 1024));
        if (i + 1 < roots.size()) candidates.push_back((roots[i].root.hi() + roots[i + 1].root.lo()) / 2);
    }
    for (const auto& c : candidates)
        if (g.evaluate(c) < 0) return c;
    throw std::invalid_argument("negative_sample: polynomial is nonnegative");
}

}  // namespace polymin
