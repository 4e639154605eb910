#include "polymin/algvalue.hpp"

#include <sstream>
#include <stdexcept>

namespace polymin {

AlgValue::AlgValue(std::shared_ptr<const AlgebraicNumber> theta, UniPoly rep)
    : theta_(std::move(theta)), rep_(std::move(rep)) {
    if (theta_ && theta_->is_rational()) {
        rep_ = UniPoly(rep_.evaluate(theta_->rational_value()));
        theta_ = nullptr;
    }
    reduce();
}

AlgValue AlgValue::theta_of(std::shared_ptr<const AlgebraicNumber> theta) {
    return AlgValue(std::move(theta), UniPoly({Rational(0), Rational(1)}));
}

void AlgValue::reduce() {
    if (theta_ && rep_.degree() >= theta_->defining().degree())
        rep_ = rep_.divmod(theta_->defining()).second;
    if (rep_.is_constant()) theta_ = nullptr;
}

Rational AlgValue::rational_value() const {
    if (!is_rational()) throw std::logic_error("AlgValue: not rational");
    return rep_.coeff(0);
}

std::shared_ptr<const AlgebraicNumber> AlgValue::join(const AlgValue& a, const AlgValue& b) {
    if (a.theta_ == nullptr) return b.theta_;
    if (b.theta_ == nullptr) return a.theta_;
    if (a.theta_ == b.theta_) return a.theta_;
    // same mathematical number stored separately is fine; anything else is a bug
    if (a.theta_->defining() == b.theta_->defining() && a.theta_->lo() == b.theta_->lo() &&
        a.theta_->hi() == b.theta_->hi())
        return a.theta_;
    throw std::logic_error("AlgValue: mixing two different algebraic generators");
}

AlgValue AlgValue::operator+(const AlgValue& o) const { return AlgValue(join(*this, o), rep_ + o.rep_); }
AlgValue AlgValue::operator-(const AlgValue& o) const { return AlgValue(join(*this, o), rep_ - o.rep_); }
AlgValue AlgValue::operator-() const { return AlgValue(theta_, -rep_); }
AlgValue AlgValue::operator*(const AlgValue& o) const { return AlgValue(join(*this, o), rep_ * o.rep_); }

AlgValue AlgValue::pow(unsigned e) const {
    AlgValue acc(Rational(1));
    AlgValue base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

int AlgValue::sign() const {
    if (theta_ == nullptr || rep_.is_constant()) return sign_of(rep_.coeff(0));
    return sign_at_root(rep_, *theta_);
}

std::string AlgValue::str() const {
    if (is_rational()) return rep_.coeff(0).str();
    std::ostringstream os;
    os << "(" << rep_.str("r") << " : r = " << theta_->str() << ")";
    return os.str();
}

bool AlgPoly::is_zero_rep() const {
    for (const auto& c : coeffs)
        if (!c.rep().is_zero()) return false;
    return true;
}

AlgPoly AlgPoly::operator+(const AlgPoly& o) const {
    AlgPoly r;
    r.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()));
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        AlgValue a = i < coeffs.size() ? coeffs[i] : AlgValue();
        AlgValue b = i < o.coeffs.size() ? o.coeffs[i] : AlgValue();
        r.coeffs[i] = a + b;
    }
    return r;
}

AlgPoly AlgPoly::operator*(const AlgPoly& o) const {
    AlgPoly r;
    if (coeffs.empty() || o.coeffs.empty()) return r;
    r.coeffs.resize(coeffs.size() + o.coeffs.size() - 1);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].rep().is_zero()) continue;
        for (size_t j = 0; j < o.coeffs.size(); ++j) r.coeffs[i + j] = r.coeffs[i + j] + coeffs[i] * o.coeffs[j];
    }
    return r;
}

AlgPoly AlgPoly::operator*(const AlgValue& c) const {
    AlgPoly r;
    r.coeffs.reserve(coeffs.size());
    for (const auto& x : coeffs) r.coeffs.push_back(x * c);
    return r;
}

std::pair<long long, int> AlgPoly::lowest_nonzero() const {
    for (size_t i = 0; i < coeffs.size(); ++i) {
        int s = coeffs[i].sign();
        if (s != 0) return {static_cast<long long>(i), s};
    }
    return {-1, 0};
}

AlgValue AlgPoly::evaluate(const Rational& t) const {
    AlgValue acc;
    for (size_t i = coeffs.size(); i-- > 0;) {
        acc = acc * AlgValue(t) + coeffs[i];
    }
    return acc;
}

AlgebraicNumber real_nth_root(const AlgebraicNumber& a, int n) {
    if (n <= 0) throw std::invalid_argument("real_nth_root: n must be positive");
    if (n == 1) return a;
    if (is_even(n) && a.sign() < 0) throw std::domain_error("real_nth_root: even root of a negative number");
    if (a.is_rational()) {
        // exact rational root if one exists, otherwise an algebraic number
        const Rational& v = a.rational_value();
        if (v == 0) return AlgebraicNumber::from_rational(Rational(0));
        // defining polynomial u^n - v
        std::vector<Rational> cs(static_cast<size_t>(n) + 1, Rational(0));
        cs[0] = -v;
        cs[static_cast<size_t>(n)] = Rational(1);
        UniPoly def(cs);
        for (const auto& rec : isolate_roots(def)) {
            if (is_odd(n) && rec.root.sign() == a.sign()) return rec.root;
            if (is_even(n) && rec.root.sign() > 0) return rec.root;
        }
        throw std::logic_error("real_nth_root: no real root found");
    }
    // defining(u^n) has the n-th roots of all roots of defining; select the
    // one whose n-th power lands in a's isolating interval
    UniPoly power = UniPoly::monomial(Rational(1), n);
    UniPoly def = a.defining().compose(power);
    RootList cands = isolate_roots(def);
    AlgebraicNumber target = a.separated_from_zero();
    for (int guard = 0; guard < 200; ++guard) {
        std::vector<AlgebraicNumber> hits;
        for (const auto& rec : cands) {
            int s = rec.root.sign();
            if (s == 0) continue;
            if (is_odd(n) && s != target.sign()) continue;
            if (is_even(n) && s < 0) continue;
            // interval of root^n
            AlgebraicNumber r = rec.root.separated_from_zero();
            Rational plo = pow_rational(r.lo(), n), phi = pow_rational(r.hi(), n);
            if (plo > phi) std::swap(plo, phi);
            if (!(phi < target.lo() || plo > target.hi())) hits.push_back(rec.root);
        }
        if (hits.size() == 1) return hits[0];
        target = target.refined();
        for (auto& rec : cands) rec.root = rec.root.refined();
    }
    throw std::logic_error("real_nth_root: selection did not converge");
}

}  // namespace polymin
