#include "polymin/oracle.hpp"

#include "polymin/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace polymin {

namespace {

// Sign of p at (px/q, py/q) using one integer accumulation: the value scaled
// by L * q^D where L clears the coefficient denominators and D is the top
// total degree.
class FastEval {
public:
    explicit FastEval(const BivariatePoly& p) {
        Integer L(1);
        for (const auto& [k, c] : p.terms()) {
            Integer d = den(c);
            L = L / boost::multiprecision::gcd(L, d) * d;
            deg_ = std::max(deg_, k.alpha + k.beta);
            ma_ = std::max(ma_, k.alpha);
            mb_ = std::max(mb_, k.beta);
        }
        for (const auto& [k, c] : p.terms())
            terms_.push_back({Integer(num(c) * (L / den(c))), k.alpha, k.beta});
    }

    int sign_at(const Integer& px, const Integer& py, const Integer& q) const {
        std::vector<Integer> ppx(static_cast<size_t>(ma_) + 1), ppy(static_cast<size_t>(mb_) + 1),
            ppq(static_cast<size_t>(deg_) + 1);
        ppx[0] = 1;
        for (long long i = 1; i <= ma_; ++i) ppx[static_cast<size_t>(i)] = ppx[static_cast<size_t>(i - 1)] * px;
        ppy[0] = 1;
        for (long long i = 1; i <= mb_; ++i) ppy[static_cast<size_t>(i)] = ppy[static_cast<size_t>(i - 1)] * py;
        ppq[0] = 1;
        for (long long i = 1; i <= deg_; ++i) ppq[static_cast<size_t>(i)] = ppq[static_cast<size_t>(i - 1)] * q;
        Integer acc(0);
        for (const auto& t : terms_)
            acc += t.c * ppx[static_cast<size_t>(t.a)] * ppy[static_cast<size_t>(t.b)] *
                   ppq[static_cast<size_t>(deg_ - t.a - t.b)];
        return acc.sign();
    }

private:
    struct Term {
        Integer c;
        long long a, b;
    };
    std::vector<Term> terms_;
    long long deg_ = 0, ma_ = 0, mb_ = 0;
};

}  // namespace

SampleReport falsify_local_min(const BivariatePoly& p, const Rational& radius, long long n) {
    if (radius <= 0) throw std::invalid_argument("falsify_local_min: radius must be positive");
    SampleReport rep;
    if (p.is_zero()) return rep;
    FastEval fe(p);

    auto report_hit = [&](const Rational& x, const Rational& y) {
        rep.found = true;
        rep.x = x;
        rep.y = y;
        rep.value = p.evaluate(x, y);
        return rep;
    };

    // rays along every southwestern direction
    std::vector<NormalVector> dirs = {NormalVector{1, 1}};
    for (const auto& f : southwest_edges(p))
        if (f.normal && !(*f.normal == NormalVector{1, 1})) dirs.push_back(*f.normal);

    int j0 = 0;
    while (pow_rational(Rational(1, 2), j0) > radius) ++j0;
    for (const auto& A : dirs) {
        long long amax = std::max(A.a1, A.a2);
        for (int c1 : {1, -1})
            for (int c2 : {1, -1})
                for (int j = j0; j < j0 + 48; ++j) {
                    ++rep.samples;
                    Integer q = pow_integer(Integer(2), static_cast<unsigned long long>(j) *
                                                            static_cast<unsigned long long>(amax));
                    Integer px = Integer(c1) * pow_integer(Integer(2),
                                                           static_cast<unsigned long long>(j) *
                                                               static_cast<unsigned long long>(amax - A.a1));
                    Integer py = Integer(c2) * pow_integer(Integer(2),
                                                           static_cast<unsigned long long>(j) *
                                                               static_cast<unsigned long long>(amax - A.a2));
                    if (fe.sign_at(px, py, q) < 0) {
                        Rational qq = pow_rational(Rational(1, 2), j);
                        return report_hit(Rational(c1) * pow_rational(qq, A.a1),
                                          Rational(c2) * pow_rational(qq, A.a2));
                    }
                }
    }

    // uniform grid over the radius box
    long long g = std::max<long long>(1, static_cast<long long>(std::sqrt(static_cast<double>(
                                             std::max<long long>(0, n - rep.samples) / 4 + 1))));
    Integer qd = den(radius) * g;
    for (long long i = -g; i <= g; ++i)
        for (long long j = -g; j <= g; ++j) {
            if (i == 0 && j == 0) continue;
            ++rep.samples;
            Integer px = num(radius) * i, py = num(radius) * j;
            if (fe.sign_at(px, py, qd) < 0)
                return report_hit(radius * Rational(i) / Rational(g), radius * Rational(j) / Rational(g));
        }
    return rep;
}

int root_count_bruteforce(const UniPoly& g, const Rational& lo, const Rational& hi, int steps) {
    if (!(lo < hi)) throw std::invalid_argument("root_count_bruteforce: needs lo < hi");
    if (steps < 1) throw std::invalid_argument("root_count_bruteforce: needs steps >= 1");
    UniPoly d = UniPoly::gcd(g, g.derivative());
    UniPoly f = d.degree() > 0 ? g.exact_div(d) : g;
    int count = 0, prev = 0;
    for (int k = 0; k <= steps; ++k) {
        Rational u = lo + (hi - lo) * Rational(k) / Rational(steps);
        int s = sign_of(f.evaluate(u));
        if (s == 0) {
            ++count;  // grid point is a root
            prev = 0;
            continue;
        }
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace polymin
