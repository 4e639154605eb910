#include "polymin/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace polymin {

UniPoly::UniPoly(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(Rational c, int k) {
    if (c == 0) return UniPoly();
    std::vector<Rational> v(static_cast<size_t>(k) + 1, Rational(0));
    v[static_cast<size_t>(k)] = std::move(c);
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Rational& UniPoly::coeff(int k) const {
    static const Rational kZero(0);
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<size_t>(k)];
}

const Rational& UniPoly::leading() const {
    if (coeffs_.empty()) throw std::logic_error("leading() of zero polynomial");
    return coeffs_.back();
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator-() const {
    std::vector<Rational> v = coeffs_;
    for (auto& c : v) c = -c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const Rational& c) const {
    if (c == 0) return UniPoly();
    std::vector<Rational> v = coeffs_;
    for (auto& x : v) x *= c;
    return UniPoly(std::move(v));
}

UniPoly operator*(const Rational& c, const UniPoly& p) { return p * c; }

Rational UniPoly::evaluate(const Rational& u) const {
    Rational acc(0);
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * u + coeffs_[i];
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return UniPoly();
    std::vector<Rational> v(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * Rational(static_cast<long long>(i));
    return UniPoly(std::move(v));
}

UniPoly UniPoly::compose(const UniPoly& g) const {
    UniPoly acc;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * g + UniPoly(coeffs_[i]);
    }
    return acc;
}

UniPoly UniPoly::shift_up(int k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : UniPoly();
    std::vector<Rational> v(coeffs_.size() + static_cast<size_t>(k), Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) v[i + static_cast<size_t>(k)] = coeffs_[i];
    return UniPoly(std::move(v));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::domain_error("division by zero polynomial");
    UniPoly rem = *this;
    if (rem.degree() < d.degree()) return {UniPoly(), rem};
    std::vector<Rational> q(static_cast<size_t>(rem.degree() - d.degree()) + 1, Rational(0));
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int k = rem.degree() - d.degree();
        Rational c = rem.leading() / d.leading();
        q[static_cast<size_t>(k)] = c;
        rem = rem - (d * c).shift_up(k);
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly UniPoly::exact_div(const UniPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
    return q;
}

UniPoly UniPoly::primitive_same_sign() const {
    if (is_zero()) return *this;
    Integer lcm_den(1);
    for (const auto& c : coeffs_) {
        Integer d = den(c);
        lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
    }
    Integer content(0);
    for (const auto& c : coeffs_) content = boost::multiprecision::gcd(content, Integer(num(c) * (lcm_den / den(c))));
    if (content == 0) content = 1;
    Rational scale = Rational(lcm_den) / Rational(content);
    return *this * scale;
}

UniPoly UniPoly::primitive_positive_scale() const {
    if (is_zero()) return *this;
    UniPoly out = primitive_same_sign();
    if (out.leading() < 0) out = -out;
    return out;
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
    a = a.primitive_positive_scale();
    b = b.primitive_positive_scale();
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second.primitive_positive_scale();
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.leading());
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        bool unit = (a == 1) && i > 0;
        if (!unit) os << a.str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

std::pair<Rational, Rational> interval_evaluate(const UniPoly& p, const Rational& lo, const Rational& hi) {
    // Horner with interval arithmetic; endpoints exact rationals.
    Rational alo(0), ahi(0);
    const auto& cs = p.coeffs();
    for (size_t i = cs.size(); i-- > 0;) {
        Rational c1 = alo * lo, c2 = alo * hi, c3 = ahi * lo, c4 = ahi * hi;
        Rational nlo = std::min(std::min(c1, c2), std::min(c3, c4));
        Rational nhi = std::max(std::max(c1, c2), std::max(c3, c4));
        alo = nlo + cs[i];
        ahi = nhi + cs[i];
    }
    return {alo, ahi};
}

Rational cauchy_root_bound(const UniPoly& p) {
    if (p.is_zero() || p.is_constant()) return Rational(1);
    Rational m(0);
    const auto& cs = p.coeffs();
    for (size_t i = 0; i + 1 < cs.size(); ++i) m = std::max(m, abs_rational(cs[i]));
    return Rational(1) + m / abs_rational(p.leading());
}

SturmChain::SturmChain(const UniPoly& squarefree) {
    chain.push_back(squarefree.primitive_same_sign());
    if (chain[0].is_constant()) return;
    chain.push_back(chain[0].derivative().primitive_same_sign());
    while (!chain.back().is_zero() && !chain.back().is_constant()) {
        UniPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
        if (r.is_zero()) break;
        // Normalize by a positive rational only; the negation is the chain rule.
        chain.push_back((-r).primitive_same_sign());
    }
}

int SturmChain::variations_at(const Rational& u) const {
    int var = 0, prev = 0;
    for (const auto& p : chain) {
        int s = sign_of(p.evaluate(u));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int SturmChain::count_roots(const Rational& lo, const Rational& hi) const {
    if (!(lo < hi)) throw std::invalid_argument("count_roots: needs lo < hi");
    return variations_at(lo) - variations_at(hi);
}

}  // namespace polymin
