#pragma once

#include "polymin/decision.hpp"
#include "polymin/quasiform.hpp"

#include <map>
#include <optional>
#include <vector>

namespace polymin {

/// Multivariate polynomial in the undetermined curve coefficients
/// c1..cn, d1..dn (symbol indices 0..n-1 and n..2n-1) over Q(theta).
class SymPoly {
public:
    using Key = std::vector<int>;

    explicit SymPoly(int nsyms) : nsyms_(nsyms) {}
    static SymPoly constant(int nsyms, AlgValue v);
    static SymPoly symbol(int nsyms, int idx);

    int nsyms() const { return nsyms_; }
    const std::map<Key, AlgValue>& terms() const { return terms_; }

    SymPoly operator+(const SymPoly& o) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly operator*(const AlgValue& c) const;

    bool is_zero_rep() const { return terms_.empty(); }
    /// The value when no symbol occurs with a provably nonzero coefficient.
    std::optional<AlgValue> as_constant() const;
    std::vector<int> symbols_present() const;
    long long total_degree() const;

    SymPoly substitute(int sym, const SymPoly& value) const;
    AlgValue evaluate(const std::vector<AlgValue>& assignment) const;

    std::string str() const;

private:
    void add_term(const Key& k, const AlgValue& v);
    int nsyms_;
    std::map<Key, AlgValue> terms_;
};

/// Curve shape x(t) = c0 t^(nu*A1) + c1 t^(nu*A1+1) + ... ,
/// y(t) = d0 t^(nu*A2) + d1 t^(nu*A2+1) + ... with `unknowns` undetermined
/// tail coefficients per variable.
struct CurveTemplate {
    NormalVector A;
    int nu = 1;
    AlgValue c0, d0;  // both nonzero, c0^e1 d0^e2 = u0
    std::shared_ptr<const AlgebraicNumber> theta;  // generator of c0, d0 (null if rational)
    int unknowns = 1;
    long long order_bound = 0;
};

/// The finite leading-pair candidates for a root u0, selected by the parity
/// of e = (-A2, A1). Exactly two pairs.
struct LeadingPairSet {
    std::string case_id;  // "1", "2", or "3a"
    std::shared_ptr<const AlgebraicNumber> theta;
    std::vector<std::pair<AlgValue, AlgValue>> pairs;
};

LeadingPairSet leading_pair_candidates(const NormalVector& A, const AlgebraicNumber& u0);

/// Coefficients of t^sigma in p(x(t), y(t)) for sigma up to the order bound,
/// as symbolic expressions in the unknowns; zero coefficients are omitted.
std::vector<std::pair<long long, SymPoly>> expand_template(const BivariatePoly& p,
                                                           const CurveTemplate& tpl);

struct SearchFace {
    NormalVector A;
    std::vector<std::shared_ptr<AlgebraicNumber>> roots;  // U_p(A)
};

struct SearchBudget {
    int max_nu = 3;
    long long max_order = 0;
    int max_unknowns = 2;
    long long node_limit = 200000;
};

/// Bounded search for a descent curve with undetermined coefficients over the
/// unresolved faces. Sound but incomplete: a returned certificate is verified
/// exactly; exhaustion means "not found within budget", never "local min".
std::optional<Certificate> search_descent(const BivariatePoly& p, const std::vector<SearchFace>& faces,
                                          const SearchBudget& budget);

/// 1/a for a nonzero algebraic number.
AlgebraicNumber alg_reciprocal(const AlgebraicNumber& a);

}  // namespace polymin
