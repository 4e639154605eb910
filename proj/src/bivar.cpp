#include "polymin/bivar.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace polymin {

BivariatePoly BivariatePoly::constant(const Rational& c) { return term(c, 0, 0); }

BivariatePoly BivariatePoly::term(const Rational& c, long long alpha, long long beta) {
    BivariatePoly p;
    p.add_term(c, alpha, beta);
    return p;
}

Rational BivariatePoly::coefficient(long long alpha, long long beta) const {
    auto it = terms_.find(ExpPair{alpha, beta});
    return it == terms_.end() ? Rational(0) : it->second;
}

void BivariatePoly::add_term(const Rational& c, long long alpha, long long beta) {
    if (c == 0) return;
    if (alpha < 0 || beta < 0) throw std::invalid_argument("negative exponent in polynomial term");
    ExpPair k{alpha, beta};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    BivariatePoly r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(c, k.alpha, k.beta);
    return r;
}

BivariatePoly BivariatePoly::operator-(const BivariatePoly& o) const { return *this + (-o); }

BivariatePoly BivariatePoly::operator-() const {
    BivariatePoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
    BivariatePoly r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) r.add_term(c1 * c2, k1.alpha + k2.alpha, k1.beta + k2.beta);
    return r;
}

BivariatePoly BivariatePoly::operator*(const Rational& c) const {
    BivariatePoly r;
    if (c == 0) return r;
    for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
    return r;
}

BivariatePoly BivariatePoly::pow(unsigned e) const {
    BivariatePoly acc = constant(Rational(1));
    BivariatePoly base = *this;
    while (e) {
        if (e & 1u) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Rational BivariatePoly::evaluate(const Rational& x, const Rational& y) const {
    // Power tables keep repeated exponentiation out of the inner loop.
    long long mx = 0, my = 0;
    for (const auto& [k, c] : terms_) {
        mx = std::max(mx, k.alpha);
        my = std::max(my, k.beta);
    }
    std::vector<Rational> px(static_cast<size_t>(mx) + 1), py(static_cast<size_t>(my) + 1);
    px[0] = Rational(1);
    for (long long i = 1; i <= mx; ++i) px[static_cast<size_t>(i)] = px[static_cast<size_t>(i - 1)] * x;
    py[0] = Rational(1);
    for (long long i = 1; i <= my; ++i) py[static_cast<size_t>(i)] = py[static_cast<size_t>(i - 1)] * y;
    Rational acc(0);
    for (const auto& [k, c] : terms_) acc += c * px[static_cast<size_t>(k.alpha)] * py[static_cast<size_t>(k.beta)];
    return acc;
}

std::set<ExpPair> BivariatePoly::support() const {
    std::set<ExpPair> s;
    for (const auto& [k, c] : terms_) s.insert(k);
    return s;
}

BivariatePoly BivariatePoly::shortening(const std::set<ExpPair>& N) const {
    BivariatePoly r;
    for (const auto& [k, c] : terms_)
        if (N.count(k)) r.terms_.emplace(k, c);
    return r;
}

bool BivariatePoly::is_stationary_origin() const {
    for (const auto& [k, c] : terms_)
        if (k.alpha + k.beta <= 1) return false;
    return true;
}

UniPoly BivariatePoly::axis_restriction(bool along_x_axis) const {
    std::vector<Rational> cs;
    for (const auto& [k, c] : terms_) {
        long long other = along_x_axis ? k.beta : k.alpha;
        long long deg = along_x_axis ? k.alpha : k.beta;
        if (other != 0) continue;
        if (static_cast<long long>(cs.size()) <= deg) cs.resize(static_cast<size_t>(deg) + 1, Rational(0));
        cs[static_cast<size_t>(deg)] += c;
    }
    return UniPoly(std::move(cs));
}

BivariatePoly BivariatePoly::swap_variables() const {
    BivariatePoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(ExpPair{k.beta, k.alpha}, c);
    return r;
}

long long BivariatePoly::max_exponent() const {
    long long m = 0;
    for (const auto& [k, c] : terms_) m = std::max({m, k.alpha, k.beta});
    return m;
}

std::string BivariatePoly::str() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<ExpPair, Rational>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        long long da = a.first.alpha + a.first.beta, db = b.first.alpha + b.first.beta;
        if (da != db) return da > db;
        return a.first.alpha > b.first.alpha;
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : v) {
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
        bool has_var = k.alpha > 0 || k.beta > 0;
        bool unit = (a == 1) && has_var;
        if (!unit) os << a.str();
        bool emitted = !unit;
        if (k.alpha > 0) {
            if (emitted) os << "*";
            os << "x";
            if (k.alpha > 1) os << "^" << k.alpha;
            emitted = true;
        }
        if (k.beta > 0) {
            if (emitted) os << "*";
            os << "y";
            if (k.beta > 1) os << "^" << k.beta;
        }
        first = false;
    }
    return os.str();
}

UniPoly substitute_curve(const BivariatePoly& p, const UniPoly& xt, const UniPoly& yt) {
    if (xt.coeff(0) != 0 || yt.coeff(0) != 0)
        throw std::invalid_argument("substitute_curve: curves must have zero constant term");
    long long mx = 0, my = 0;
    for (const auto& [k, c] : p.terms()) {
        mx = std::max(mx, k.alpha);
        my = std::max(my, k.beta);
    }
    std::vector<UniPoly> px(static_cast<size_t>(mx) + 1), py(static_cast<size_t>(my) + 1);
    px[0] = UniPoly::one();
    for (long long i = 1; i <= mx; ++i) px[static_cast<size_t>(i)] = px[static_cast<size_t>(i - 1)] * xt;
    py[0] = UniPoly::one();
    for (long long i = 1; i <= my; ++i) py[static_cast<size_t>(i)] = py[static_cast<size_t>(i - 1)] * yt;
    UniPoly acc;
    for (const auto& [k, c] : p.terms())
        acc = acc + px[static_cast<size_t>(k.alpha)] * py[static_cast<size_t>(k.beta)] * c;
    return acc;
}

namespace {

// Recursive-descent parser for the expression grammar. Whitespace is
// insignificant; '*' between factors is optional.
class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    BivariatePoly parse() {
        BivariatePoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected input", pos_);
        return p;
    }

private:
    BivariatePoly expr() {
        skip_ws();
        int sgn = 1;
        if (peek() == '+' || peek() == '-') {
            if (get() == '-') sgn = -1;
        }
        BivariatePoly p = term() * Rational(sgn);
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                get();
                BivariatePoly t = term();
                p = (c == '+') ? p + t : p - t;
            } else {
                break;
            }
        }
        return p;
    }

    BivariatePoly term() {
        BivariatePoly p = factor();
        for (;;) {
            skip_ws();
            char c = peek();
            if (c == '*') {
                get();
                p = p * factor();
            } else if (c == '(' || c == 'x' || c == 'y' || std::isdigit(static_cast<unsigned char>(c))) {
                p = p * factor();  // implicit multiplication
            } else {
                break;
            }
        }
        return p;
    }

    BivariatePoly factor() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            BivariatePoly p = expr();
            skip_ws();
            if (peek() != ')') throw ParseError("expected ')'", pos_);
            get();
            return p.pow(exponent_suffix());
        }
        if (c == 'x' || c == 'y') {
            get();
            unsigned e = exponent_suffix();
            return c == 'x' ? BivariatePoly::term(Rational(1), e, 0) : BivariatePoly::term(Rational(1), 0, e);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational v = number();
            skip_ws();
            if (peek() == '^') {
                // numeric powers appear in inputs like 2^3; keep them exact
                get();
                long long e = natural("exponent");
                return BivariatePoly::constant(pow_rational(v, e));
            }
            return BivariatePoly::constant(v);
        }
        throw ParseError("expected coefficient, variable, or '('", pos_);
    }

    unsigned exponent_suffix() {
        skip_ws();
        if (peek() != '^') return 1;
        get();
        skip_ws();
        if (peek() == '-') throw ParseError("negative exponent", pos_);
        long long e = natural("exponent");
        return static_cast<unsigned>(e);
    }

    Rational number() {
        Integer ip = natural_integer("number");
        skip_ws();
        if (peek() == '.') {
            get();
            size_t start = pos_;
            Integer frac(0), scale(1);
            while (std::isdigit(static_cast<unsigned char>(peek()))) {
                frac = frac * 10 + (get() - '0');
                scale *= 10;
            }
            if (pos_ == start) throw ParseError("expected digits after '.'", pos_);
            return Rational(ip) + Rational(frac) / Rational(scale);
        }
        if (peek() == '/') {
            size_t save = pos_;
            get();
            skip_ws();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) {
                pos_ = save;  // not a fraction; leave '/' for the caller to reject
                return Rational(ip);
            }
            Integer d = natural_integer("denominator");
            if (d == 0) throw ParseError("zero denominator", pos_);
            return Rational(ip) / Rational(d);
        }
        return Rational(ip);
    }

    long long natural(const char* what) {
        Integer v = natural_integer(what);
        if (v > 1000000) throw ParseError(std::string(what) + " too large", pos_);
        return v.convert_to<long long>();
    }

    Integer natural_integer(const char* what) {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(std::string("expected ") + what, pos_);
        Integer v(0);
        while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (get() - '0');
        return v;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    char get() { return s_[pos_++]; }

    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

BivariatePoly parse_poly(const std::string& text) {
    Parser p(text);
    return p.parse();
}

}  // namespace polymin
