#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polymin/decision.hpp"
#include "polymin/jsonio.hpp"
#include "polymin/oracle.hpp"

#include <random>

using namespace polymin;

namespace {

Rational rq(long long n, long long d = 1) { return Rational(n) / Rational(d); }

BivariatePoly example3(const Rational& a) {
    BivariatePoly p = parse_poly("x^2*y^6 + x^6*y^4 + y^10 - 10*x*y^9 - 0.1*x^8*y^4");
    p.add_term(-(rq(2) + a), 4, 5);
    return p;
}

BivariatePoly example5(const Rational& a) {
    BivariatePoly p = parse_poly("x^4*y^2 + 2*x^2*y^3 + y^4 + 3*x^4*y^3 + 0.01*x^8*y^3");
    p.add_term(rq(3) * a, 6, 2);
    return p;
}

bool has_rule(const Verdict& v, const std::string& rule) {
    for (const auto& t : v.trace)
        if (t.rule == rule) return true;
    return false;
}

bool has_ref(const Verdict& v, const std::string& ref) {
    for (const auto& t : v.trace)
        if (t.ref == ref) return true;
    return false;
}

void check_not_min(const BivariatePoly& p, const Verdict& v) {
    REQUIRE(v.status == Status::NotLocalMin);
    REQUIRE(v.certificate.has_value());
    CHECK(verify_certificate(p, *v.certificate));
}

}  // namespace

TEST_CASE("joint_4_6 parity and sign cases") {
    // the three-form family: A = (1,2), u0 = -1, second form 3a x^6 y^2 + 3 x^4 y^3
    NormalVector A{1, 2};
    AlgebraicNumber u0 = AlgebraicNumber::from_rational(rq(-1));
    auto char2 = [&](const Rational& a) {
        Decomposition dec = decompose(example5(a), A);
        return characteristic(dec.forms[1]);
    };
    CHECK_FALSE(joint_4_6(A, u0, char2(rq(101, 100))));  // 3(a-1) > 0: not joint
    CHECK(joint_4_6(A, u0, char2(rq(99, 100))));         // 3(a-1) < 0: joint
    CHECK_THROWS(joint_4_6(A, u0, char2(rq(1))));        // g2(u0) = 0: precondition violated

    // odd parity is always joint: reduced pair (x-y)^4 - x^5 data
    Decomposition red = decompose(parse_poly("(x-y)^4 - x^5"), {1, 1});
    CHECK(joint_4_6({1, 1}, AlgebraicNumber::from_rational(rq(1)), characteristic(red.forms[1])));
}

TEST_CASE("condition_C1_axes on the worked pairs") {
    BivariatePoly p1 = parse_poly("x^2*(x-y)^2 + 2*y^5");
    Decomposition d1 = decompose(p1, {1, 1});
    auto w1 = condition_C1_axes(p1, {1, 1}, d1);
    REQUIRE(w1.has_value());
    CHECK(w1->y_axis);
    CHECK(w1->sign == -1);
    CHECK(substitute_curve(p1, w1->xt, w1->yt).coeff(5) == rq(-2));

    BivariatePoly p2 = parse_poly("y^2*(x-y)^2 + 2*x^5");
    Decomposition d2 = decompose(p2, {1, 1});
    auto w2 = condition_C1_axes(p2, {1, 1}, d2);
    REQUIRE(w2.has_value());
    CHECK_FALSE(w2->y_axis);
    CHECK(w2->sign == -1);

    BivariatePoly fig1 = example5(rq(1));
    auto w3 = condition_C1_axes(fig1, {1, 2}, decompose(fig1, {1, 2}));
    CHECK_FALSE(w3.has_value());
}

TEST_CASE("worked family: three-form polynomial across the parameter") {
    // a = 1.01: every root is benign -> local minimum
    Verdict v101 = decide(example5(rq(101, 100)));
    CHECK(v101.status == Status::LocalMin);

    // a = 1: needs the substitution method; certificate along (t, -t^2)
    Verdict v1 = decide(example5(rq(1)));
    check_not_min(example5(rq(1)), v1);
    CHECK(v1.certificate->sigma == 14);
    CHECK(v1.certificate->curve.is_rational());

    // a = 0.99: joint sign system at u0 = -1; trace carries the note
    Verdict v099 = decide(example5(rq(99, 100)));
    check_not_min(example5(rq(99, 100)), v099);
    bool note_found = false;
    for (const auto& t : v099.trace)
        for (const auto& [k, val] : t.data)
            if (k == "note") note_found = true;
    CHECK(note_found);
    // independent check: y = -x^2 gives -(3/100) x^10 + o
    UniPoly sub = substitute_curve(example5(rq(99, 100)), UniPoly::monomial(rq(1), 1),
                                   UniPoly::monomial(rq(-1), 2));
    CHECK(sub.coeff(10) == rq(-3, 100));
    for (int i = 0; i < 10; ++i) CHECK(sub.coeff(i) == 0);
}

TEST_CASE("worked family: deformed face polynomial") {
    Verdict pos = decide(example3(rq(1, 100)));
    check_not_min(example3(rq(1, 100)), pos);

    Verdict neg = decide(example3(rq(-1, 100)));
    CHECK(neg.status == Status::LocalMin);
    CHECK(has_rule(neg, "face-weakly-nondegenerate"));

    Verdict zero = decide(example3(rq(0)));
    check_not_min(example3(rq(0)), zero);
    // certificate curve (t, t^2) with leading term -(1/10) t^16
    CHECK(zero.certificate->sigma == 16);
    UniPoly expansion = substitute_curve(example3(rq(0)), zero.certificate->curve.x_rational(),
                                         zero.certificate->curve.y_rational());
    CHECK(expansion.coeff(16) == rq(-1, 10));
}

TEST_CASE("axis-condition pairs decide NotLocalMin with axis witnesses") {
    BivariatePoly p1 = parse_poly("x^2*(x-y)^2 + 2*y^5");
    Verdict v1 = decide(p1);
    check_not_min(p1, v1);
    CHECK(v1.certificate->kind == Certificate::Kind::AxisDescent);
    CHECK(v1.certificate->curve.x_terms.empty());
    REQUIRE(v1.certificate->curve.y_terms.size() == 1);
    CHECK(v1.certificate->curve.y_terms.begin()->second.rational_value() == rq(-1));

    BivariatePoly p2 = parse_poly("y^2*(x-y)^2 + 2*x^5");
    Verdict v2 = decide(p2);
    check_not_min(p2, v2);
    CHECK(v2.certificate->kind == Certificate::Kind::AxisDescent);
    CHECK(v2.certificate->curve.y_terms.empty());
}

TEST_CASE("quasi-homogeneous inputs route through the degenerate branch") {
    Verdict v1 = decide(parse_poly("2*x*y^2 - 3*x^2*y^3 + 5*x^3*y^4"));
    check_not_min(parse_poly("2*x*y^2 - 3*x^2*y^3 + 5*x^3*y^4"), v1);
    Verdict v2 = decide(parse_poly("2*x*y^2 + 3*x^3*y^2 - 5*x^5*y^2"));
    check_not_min(parse_poly("2*x*y^2 + 3*x^3*y^2 - 5*x^5*y^2"), v2);
    Verdict v3 = decide(parse_poly("2*x*y^2 + 3*x*y^3 + 4*x*y^5"));
    check_not_min(parse_poly("2*x*y^2 + 3*x*y^3 + 4*x*y^5"), v3);
    Verdict v4 = decide(parse_poly("2*x^4*y^2 + 3*x^2*y^3 + 2*y^4"));
    CHECK(v4.status == Status::LocalMin);
    CHECK(has_ref(v4, "A1"));
    CHECK(has_ref(v4, "A2"));
    CHECK(decide(parse_poly("x^2 + y^2")).status == Status::LocalMin);
}

TEST_CASE("decide validates its inputs") {
    CHECK_THROWS(decide(BivariatePoly::zero()));
    CHECK_THROWS(decide(parse_poly("x + y")));
    CHECK_THROWS(decide(parse_poly("1 + x^2")));
}

TEST_CASE("two_form_decide: worked cases") {
    // k = 6, l = 2: reduce by (u-1)^2, odd-parity jointness on the reduced pair
    BivariatePoly q1 = parse_poly("(x-y)^6 - (x-y)^2*x^5");
    Verdict v1 = two_form_decide(q1, {1, 1});
    check_not_min(q1, v1);

    // oracle agreement: p(t,t) is identically zero but nearby descent exists
    SampleReport rep = falsify_local_min(q1, rq(1, 2), 20000);
    CHECK(rep.found);

    // the two-form head of the three-form family at a = 1.01 is minimal
    BivariatePoly q2 = parse_poly("y^2*(x^2+y)^2 + 3.03*x^6*y^2 + 3*x^4*y^3");
    Verdict v2 = two_form_decide(q2, {1, 2});
    CHECK(v2.status == Status::LocalMin);
    SampleReport rep2 = falsify_local_min(q2, rq(1, 1000), 20000);
    CHECK_FALSE(rep2.found);

    // axis condition inside the two-form decision
    BivariatePoly q3 = parse_poly("x^2*(x-y)^2 + 2*y^5");
    Verdict v3 = two_form_decide(q3, {1, 1});
    check_not_min(q3, v3);
    CHECK(v3.certificate->kind == Certificate::Kind::AxisDescent);

    // case 4 with l = 1 directly: k = 2, l = 1
    BivariatePoly q4 = parse_poly("y^2*(x^2+y)^2 + 3*x^6*y^2 + 3*x^4*y^3");
    Verdict v4 = two_form_decide(q4, {1, 2});
    check_not_min(q4, v4);

    CHECK_THROWS(two_form_decide(example5(rq(1)), {1, 2}));  // three forms
}

TEST_CASE("example with insufficient nu=1 substitution") {
    BivariatePoly p = parse_poly("(x-y)^6 - (x-y)^2*x^5 + x^8");
    DecideConfig small;
    small.max_nu = 1;
    Verdict v1 = decide(p, small);
    CHECK(v1.status == Status::Unresolved);
    REQUIRE(!v1.unresolved.empty());
    CHECK(v1.unresolved[0] == NormalVector{1, 1});

    DecideConfig big;
    big.max_nu = 2;
    Verdict v2 = decide(p, big);
    check_not_min(p, v2);
    CHECK(v2.certificate->sigma == 16);
}

TEST_CASE("verify_certificate rejects wrong data") {
    BivariatePoly p = example5(rq(1));
    Verdict v = decide(p);
    REQUIRE(v.certificate.has_value());
    Certificate good = *v.certificate;
    CHECK(verify_certificate(p, good));

    Certificate wrong_sigma = good;
    wrong_sigma.sigma += 1;
    CHECK_FALSE(verify_certificate(p, wrong_sigma));

    // a curve with positive leading term: (t, t^2)
    Certificate wrong_curve = good;
    wrong_curve.curve = AlgCurve::rational(UniPoly::monomial(rq(1), 1), UniPoly::monomial(rq(1), 2));
    CHECK_FALSE(verify_certificate(p, wrong_curve));
}

TEST_CASE("scale invariance and symmetry on the fixture set") {
    std::vector<BivariatePoly> fixtures = {
        parse_poly("2*x^4*y^2 + 3*x^2*y^3 + 2*y^4"),
        example3(rq(1, 100)),
        example3(rq(-1, 100)),
        example5(rq(101, 100)),
        example5(rq(99, 100)),
        parse_poly("x^2*(x-y)^2 + 2*y^5"),
        parse_poly("x^2 + y^2"),
        parse_poly("(x-y)^6 - (x-y)^2*x^5 + x^8"),
    };
    for (const auto& p : fixtures) {
        Verdict v = decide(p);
        Verdict vs = decide(p * rq(7, 3));
        CHECK(v.status == vs.status);
        Verdict vswap = decide(p.swap_variables());
        CHECK(v.status == vswap.status);
        if (v.status == Status::LocalMin) {
            Verdict vneg = decide(-p);
            CHECK(vneg.status == Status::NotLocalMin);
        }
    }
}

TEST_CASE("verdict JSON round-trips the certificate") {
    BivariatePoly p = example5(rq(1));
    Verdict v = decide(p);
    std::string json = verdict_to_json(v);
    // extract the certificate object textually
    auto pos = json.find("\"certificate\"");
    REQUIRE(pos != std::string::npos);
    // reparse the whole verdict and re-verify the certificate
    std::string cert_json = json.substr(json.find('{', pos));
    int depth = 0;
    size_t end = 0;
    for (size_t i = 0; i < cert_json.size(); ++i) {
        if (cert_json[i] == '{') ++depth;
        if (cert_json[i] == '}') {
            if (--depth == 0) {
                end = i + 1;
                break;
            }
        }
    }
    Certificate c = certificate_from_json(cert_json.substr(0, end));
    CHECK(verify_certificate(p, c));
    CHECK(c.sigma == v.certificate->sigma);
}

TEST_CASE("reduction preserves the verdict (rational u0, even power)") {
    std::mt19937_64 rng(515151);
    std::uniform_int_distribution<int> pick(0, 2), lsel(1, 2), usel(0, 2);
    const NormalVector As[3] = {{1, 1}, {1, 2}, {2, 1}};
    int done = 0;
    for (int it = 0; it < 120 && done < 50; ++it) {
        NormalVector A = As[pick(rng)];
        Rational u0 = std::vector<Rational>{rq(1), rq(-1), rq(2)}[usel(rng)];
        int l = 2 * lsel(rng);
        // base polynomial: a small two-form sum known to decide
        BivariatePoly base;
        {
            UniPoly g1({rq(1), rq(0), rq(1)});  // no real roots
            QuasiForm f1 = form_from_char(A, g1, ExpPair{2 * A.a2 + 2 * A.a2, 2 * A.a1});
            // ensure even corner data
            long long a1 = 2 * A.a2 * (g1.degree() + 1);
            a1 += a1 % 2;
            f1 = form_from_char(A, g1, ExpPair{a1, 2});
            BivariatePoly tail = BivariatePoly::term(rq(1), a1 + 2 * A.a1, 2 + 2 * A.a2);
            base = f1.poly() + tail;
        }
        if (!base.is_stationary_origin()) continue;
        BivariatePoly factor = BivariatePoly::term(rq(1), 0, A.a1) - BivariatePoly::term(u0, A.a2, 0);
        BivariatePoly p = base;
        for (int i = 0; i < l; ++i) p = p * factor;
        Verdict vp = decide(p);
        Verdict vb = decide(base);
        CHECK(vp.status == vb.status);
        ++done;
    }
    CHECK(done == 50);
}

TEST_CASE("corner gate fires with a verified ray certificate") {
    BivariatePoly p = parse_poly("x^2 + 2*x*y^2 + y^6");
    Verdict v = decide(p);
    check_not_min(p, v);
    CHECK(has_rule(v, "corner-condition-violated"));
}

TEST_CASE("two-form decisions at irrational roots") {
    // g1 = (u^2-2)^2 vanishes at +-sqrt(2); the second form is sign-definite
    // there, odd parity makes the sign system joint
    BivariatePoly f1 = parse_poly("4*x^8*y^2 - 4*x^6*y^4 + x^4*y^6");  // x^4 y^2 (2x^2 - y^2)^2
    BivariatePoly p1 = f1 - parse_poly("x^5*y^6");
    Verdict v1 = two_form_decide(p1, {1, 1});
    check_not_min(p1, v1);
    CHECK_FALSE(v1.certificate->curve.is_rational());

    // shared irrational root with l = 1: the bent-curve construction
    BivariatePoly f2 = parse_poly("-2*x^7*y^4 + x^5*y^6");  // x^5 y^4 (y^2 - 2x^2)
    BivariatePoly p2 = f1 + f2;
    Verdict v2 = two_form_decide(p2, {1, 1});
    check_not_min(p2, v2);

    // shared irrational roots with l = k = 2: case-3 reduction empties the
    // root set and the verdict must still be definite
    BivariatePoly pair1 = parse_poly("4*x^8*y^2 - 4*x^6*y^4 + x^4*y^6");
    BivariatePoly pair2 = parse_poly("4*x^9*y^2 - 4*x^7*y^4 + x^5*y^6");
    BivariatePoly p4 = pair1 + pair2;
    Verdict v4 = two_form_decide(p4, {1, 1});
    // here g2 = g1/x-shift shares both roots with multiplicity 2 = k: case 3;
    // reduction empties the root set; verdict must still be definite
    CHECK(v4.status != Status::Unresolved);
    if (v4.status == Status::NotLocalMin) {
        CHECK(verify_certificate(p4, *v4.certificate));
    } else {
        SampleReport rep = falsify_local_min(p4, rq(1, 100), 20000);
        CHECK_FALSE(rep.found);
    }
}

TEST_CASE("descent_case4 builds the bent curve directly") {
    // y^2 (x^2+y)^2 + 3 x^6 y^2 + 3 x^4 y^3: u0 = -1 with k = 2, l = 1
    BivariatePoly q = parse_poly("y^2*(x^2+y)^2 + 3*x^6*y^2 + 3*x^4*y^3");
    NormalVector A{1, 2};
    AlgebraicNumber u0 = AlgebraicNumber::from_rational(rq(-1));
    Certificate c = descent_case4(q, A, u0, points_on_level(A, std::make_shared<AlgebraicNumber>(u0)));
    CHECK(verify_certificate(q, c));
    // shape: x(t) = c0 t, y(t) = d0 t^2 +- d0 t^(2+kappa)
    REQUIRE(c.curve.x_terms.size() == 1);
    REQUIRE(c.curve.y_terms.size() == 2);
    CHECK(c.curve.x_terms.begin()->first == 1);
    CHECK(c.curve.y_terms.begin()->first == 2);
}

TEST_CASE("negativity_witness rejects nonnegative forms") {
    Decomposition d = decompose(parse_poly("2*x^4*y^2 + 3*x^2*y^3 + 2*y^4"), {1, 2});
    CHECK_THROWS(negativity_witness(d.forms[0]));
}

TEST_CASE("algorithm1 spec examples run standalone") {
    BivariatePoly plus = example3(rq(1, 100));
    Verdict v1 = algorithm1(plus);
    CHECK(v1.status == Status::NotLocalMin);
    CHECK(verify_certificate(plus, *v1.certificate));

    Verdict v2 = algorithm1(example3(rq(-1, 100)));
    CHECK(v2.status == Status::LocalMin);

    BivariatePoly zero = example3(rq(0));
    Verdict v3 = algorithm1(zero);
    CHECK(v3.status == Status::NotLocalMin);
    CHECK(v3.certificate->sigma == 16);

    CHECK_THROWS(algorithm1(parse_poly("x + y^3")));                      // not stationary
    CHECK_THROWS(algorithm1(parse_poly("2*x^4*y^2 + 3*x^2*y^3 + 2*y^4")));  // dim 1
    CHECK_THROWS(algorithm1(parse_poly("x^2 + 2*x*y^2 + y^6")));          // corner gate must hold
}

TEST_CASE("random mixed fixtures: soundness under any verdict") {
    std::mt19937_64 rng(0xFEED5);
    std::uniform_int_distribution<int> pickA(0, 2), c(-3, 3), small(0, 2), coin(0, 1), mult(1, 2);
    const NormalVector As[3] = {{1, 1}, {1, 2}, {2, 1}};
    int done = 0, unresolved = 0, notmin = 0, locmin = 0;
    for (int it = 0; it < 120 && done < 100; ++it) {
        NormalVector A = As[pickA(rng)];
        // first form: nonnegative with a planted even root
        Rational r = rq(coin(rng) ? 1 : -1);
        UniPoly g1 = UniPoly(rq(1 + small(rng)));
        int m = 2 * mult(rng);
        for (int j = 0; j < m; ++j) g1 = g1 * UniPoly({-r, rq(1)});
        long long a1 = g1.degree() * A.a2 + 2;
        if (a1 % 2) ++a1;
        QuasiForm f1 = form_from_char(A, g1, ExpPair{a1, 2});
        BivariatePoly p = f1.poly();
        // two or three higher forms, possibly sharing the root
        int extra = 2 + coin(rng);
        long long level = f1.level;
        for (int e = 0; e < extra; ++e) {
            int d2 = small(rng);
            std::vector<Rational> cs(static_cast<size_t>(d2) + 1);
            bool nz = false;
            for (auto& x : cs) {
                x = rq(c(rng));
                if (x != 0) nz = true;
            }
            if (!nz) cs[0] = rq(1);
            UniPoly g(cs);
            if (coin(rng))
                for (int j = 0; j < 1 + small(rng) % 2; ++j) g = g * UniPoly({-r, rq(1)});
            long long chi = g.degree() * A.a2 + small(rng), eta = small(rng);
            while (A.a1 * chi + A.a2 * eta <= level || A.a1 * chi + A.a2 * eta <= A.a1 + A.a2) ++chi;
            level = A.a1 * chi + A.a2 * eta;
            p = p + form_from_char(A, g, ExpPair{chi, eta}).poly();
        }
        if (!p.is_stationary_origin()) continue;
        if (hull(p.support()).dimension != 2) continue;
        ++done;
        Verdict v;
        try {
            v = decide(p);
        } catch (const std::invalid_argument&) {
            continue;  // e.g. zero polynomial after cancellation
        }
        if (v.status == Status::NotLocalMin) {
            ++notmin;
            REQUIRE(v.certificate.has_value());
            CHECK(verify_certificate(p, *v.certificate));
        } else if (v.status == Status::LocalMin) {
            ++locmin;
            SampleReport rep = falsify_local_min(p, rq(1, 100), 8000);
            if (rep.found) {
                CAPTURE(p.str());
                CHECK_FALSE(rep.found);
            }
        } else {
            ++unresolved;
            CHECK(!v.unresolved.empty());
        }
    }
    CHECK(done >= 90);
    CHECK(notmin > 0);
    CHECK(locmin > 0);
}

TEST_CASE("depth bound: level-3 resolution vs honest exhaustion") {
    // sum of nonnegatives; the shared root needs the third form to resolve
    BivariatePoly p = parse_poly("(x-y)^4 + (x-y)^2*x^4 + x^10");
    Verdict deep = decide(p);
    CHECK(deep.status == Status::LocalMin);
    CHECK(has_rule(deep, "partial-sum-minimal"));
    CHECK(has_rule(deep, "face-resolved"));

    DecideConfig shallow;
    shallow.depth = 2;
    Verdict v2 = decide(p, shallow);
    CHECK(v2.status == Status::Unresolved);
    CHECK(v2.unresolved == std::vector<NormalVector>{{1, 1}});
}

TEST_CASE("verify_certificate accepts the hand-built sixth-power curve") {
    BivariatePoly p = parse_poly("(x-y)^6 - (x-y)^2*x^5 + x^8");
    AlgCurve curve = AlgCurve::rational(UniPoly({rq(0), rq(0), rq(1), rq(2)}),
                                        UniPoly::monomial(rq(1), 2));
    auto cert = try_certificate(p, curve, Certificate::Kind::CurveDescent);
    REQUIRE(cert.has_value());
    CHECK(cert->sigma == 16);
    CHECK(verify_certificate(p, *cert));
}
