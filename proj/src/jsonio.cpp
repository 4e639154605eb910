#include "polymin/jsonio.hpp"

#include "polymin/geometry.hpp"

#include <json.hpp>

#include <sstream>

namespace polymin {

namespace {

using nlohmann::json;

json coef_to_json(const AlgValue& v) {
    if (v.is_rational()) return v.rational_value().str();
    json arr = json::array();
    for (int i = 0; i <= v.rep().degree(); ++i) arr.push_back(v.rep().coeff(i).str());
    return arr;
}

json curve_side_to_json(const std::map<long long, AlgValue>& terms) {
    json arr = json::array();
    for (const auto& [e, c] : terms) arr.push_back(json::array({e, coef_to_json(c)}));
    return arr;
}

json certificate_to_json(const Certificate& c) {
    json j;
    j["kind"] = certificate_kind_name(c.kind);
    j["x_t"] = curve_side_to_json(c.curve.x_terms);
    j["y_t"] = curve_side_to_json(c.curve.y_terms);
    j["sigma"] = c.sigma;
    j["sample_t"] = c.sample_t.str();
    if (c.sample_value) j["value"] = c.sample_value->str();
    if (c.curve.theta) {
        json theta;
        json def = json::array();
        for (int i = 0; i <= c.curve.theta->defining().degree(); ++i)
            def.push_back(c.curve.theta->defining().coeff(i).str());
        theta["defining"] = def;
        theta["lo"] = c.curve.theta->lo().str();
        theta["hi"] = c.curve.theta->hi().str();
        j["theta"] = theta;
    }
    return j;
}

json pair_to_json(const ExpPair& k) { return json::array({k.alpha, k.beta}); }

}  // namespace

std::string verdict_to_json(const Verdict& v, int trace_verbosity) {
    json j;
    j["status"] = status_name(v.status);
    if (v.certificate) j["certificate"] = certificate_to_json(*v.certificate);
    if (trace_verbosity >= 1) {
        json tr = json::array();
        for (const auto& t : v.trace) {
            json e;
            e["rule"] = t.rule;
            e["ref"] = t.ref;
            if (t.face) e["face"] = json::array({t.face->a1, t.face->a2});
            if (trace_verbosity >= 2) {
                json d = json::object();
                for (const auto& [k, val] : t.data) d[k] = val;
                e["data"] = d;
            }
            tr.push_back(e);
        }
        j["trace"] = tr;
    }
    json un = json::array();
    for (const auto& A : v.unresolved) un.push_back(json::array({A.a1, A.a2}));
    j["unresolved"] = un;
    return j.dump(2);
}

Certificate certificate_from_json(const std::string& text) {
    json j = json::parse(text);
    Certificate c;
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "axis-descent") {
        c.kind = Certificate::Kind::AxisDescent;
    } else if (kind == "scaled-point-descent") {
        c.kind = Certificate::Kind::ScaledPointDescent;
    } else if (kind == "curve-descent") {
        c.kind = Certificate::Kind::CurveDescent;
    } else {
        throw std::invalid_argument("certificate_from_json: unknown kind " + kind);
    }
    std::shared_ptr<const AlgebraicNumber> theta;
    if (j.contains("theta")) {
        const json& t = j.at("theta");
        std::vector<Rational> cs;
        for (const auto& s : t.at("defining")) cs.push_back(Rational(s.get<std::string>()));
        theta = std::make_shared<AlgebraicNumber>(UniPoly(cs), Rational(t.at("lo").get<std::string>()),
                                                  Rational(t.at("hi").get<std::string>()));
    }
    c.curve.theta = theta;
    auto read_side = [&](const json& arr, std::map<long long, AlgValue>& out) {
        for (const auto& entry : arr) {
            long long e = entry.at(0).get<long long>();
            const json& cv = entry.at(1);
            if (cv.is_string()) {
                out.emplace(e, AlgValue(Rational(cv.get<std::string>())));
            } else {
                std::vector<Rational> cs;
                for (const auto& s : cv) cs.push_back(Rational(s.get<std::string>()));
                if (!theta) throw std::invalid_argument("certificate_from_json: algebraic coefficient without theta");
                out.emplace(e, AlgValue(theta, UniPoly(cs)));
            }
        }
    };
    read_side(j.at("x_t"), c.curve.x_terms);
    read_side(j.at("y_t"), c.curve.y_terms);
    c.sigma = j.at("sigma").get<long long>();
    c.sample_t = Rational(j.at("sample_t").get<std::string>());
    if (j.contains("value")) c.sample_value = Rational(j.at("value").get<std::string>());
    return c;
}

namespace {

json newton_model(const BivariatePoly& p) {
    json j;
    json sup = json::array();
    for (const auto& k : p.support()) sup.push_back(pair_to_json(k));
    j["support"] = sup;
    Polytope h = hull(p.support());
    j["dimension"] = h.dimension;
    json verts = json::array();
    for (const auto& k : h.vertices) verts.push_back(pair_to_json(k));
    j["vertices"] = verts;
    json par = json::array();
    for (const auto& k : pareto(p.support())) par.push_back(pair_to_json(k));
    j["pareto"] = par;
    json om = json::array();
    for (const auto& k : omega(p)) om.push_back(pair_to_json(k));
    j["omega"] = om;
    json faces = json::array();
    for (const auto& f : southwest_edges(p)) {
        json e;
        json pts = json::array();
        for (const auto& k : f.points) pts.push_back(pair_to_json(k));
        e["points"] = pts;
        if (f.normal) {
            e["normal"] = json::array({f.normal->a1, f.normal->a2});
            e["level"] = f.level;
        }
        e["group"] = f.group;
        faces.push_back(e);
    }
    j["faces"] = faces;
    return j;
}

}  // namespace

std::string newton_to_json(const BivariatePoly& p) { return newton_model(p).dump(2); }

std::string newton_to_svg(const BivariatePoly& p) {
    Polytope h = hull(p.support());
    long long maxa = 2, maxb = 2;
    for (const auto& k : p.support()) {
        maxa = std::max(maxa, k.alpha);
        maxb = std::max(maxb, k.beta);
    }
    const double margin = 30.0, cell = std::min(440.0 / static_cast<double>(maxa + 1),
                                                440.0 / static_cast<double>(maxb + 1));
    const double W = margin * 2 + cell * static_cast<double>(maxa), H = margin * 2 + cell * static_cast<double>(maxb);
    auto X = [&](long long a) { return margin + cell * static_cast<double>(a); };
    auto Y = [&](long long b) { return H - margin - cell * static_cast<double>(b); };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
       << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    // lattice
    for (long long a = 0; a <= maxa; ++a)
        for (long long b = 0; b <= maxb; ++b)
            os << "  <circle cx=\"" << X(a) << "\" cy=\"" << Y(b) << "\" r=\"1.2\" fill=\"#cccccc\"/>\n";
    // hull
    if (h.vertices.size() >= 2) {
        os << "  <polygon points=\"";
        for (const auto& v : h.vertices) os << X(v.alpha) << "," << Y(v.beta) << " ";
        os << "\" fill=\"#e8e8f8\" stroke=\"#8888aa\" stroke-width=\"1\"/>\n";
    }
    // southwestern faces
    for (const auto& f : southwest_edges(p)) {
        if (!f.normal) continue;
        const auto& a = f.points.front();
        const auto& b = f.points.back();
        os << "  <line x1=\"" << X(a.alpha) << "\" y1=\"" << Y(a.beta) << "\" x2=\"" << X(b.alpha)
           << "\" y2=\"" << Y(b.beta) << "\" stroke=\"#cc3333\" stroke-width=\"3\"/>\n";
        os << "  <text x=\"" << (X(a.alpha) + X(b.alpha)) / 2 + 6 << "\" y=\""
           << (Y(a.beta) + Y(b.beta)) / 2 - 6 << "\" font-size=\"11\">A=" << f.normal->str()
           << " group " << f.group << "</text>\n";
    }
    // support points
    for (const auto& k : p.support())
        os << "  <circle cx=\"" << X(k.alpha) << "\" cy=\"" << Y(k.beta) << "\" r=\"3.5\" fill=\"#333399\"/>\n";
    // omega markers
    for (const auto& k : omega(p))
        os << "  <rect x=\"" << X(k.alpha) - 5 << "\" y=\"" << Y(k.beta) - 5
           << "\" width=\"10\" height=\"10\" fill=\"none\" stroke=\"#119911\" stroke-width=\"2\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace polymin
