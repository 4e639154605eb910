#include "polymin/decision.hpp"
#include "polymin/jsonio.hpp"
#include "polymin/quasiform.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitLocalMin = 0;
constexpr int kExitNotLocalMin = 1;
constexpr int kExitUnresolved = 2;
constexpr int kExitUsage = 64;

std::string read_input(const std::string& expr, const std::string& file) {
    if (!file.empty()) {
        std::ifstream in(file);
        if (!in) throw std::runtime_error("cannot open " + file);
        std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        return text;
    }
    return expr;
}

void print_human(const polymin::Verdict& v, int verbosity) {
    std::cout << polymin::status_name(v.status) << "\n";
    if (v.certificate) {
        const auto& c = *v.certificate;
        std::cout << "certificate: " << polymin::certificate_kind_name(c.kind) << "\n";
        std::cout << "  " << c.curve.str() << "\n";
        std::cout << "  leading order sigma = " << c.sigma << ", sample t = " << c.sample_t.str();
        if (c.sample_value) std::cout << ", p(x(t), y(t)) = " << c.sample_value->str();
        std::cout << "\n";
    }
    if (!v.unresolved.empty()) {
        std::cout << "directions needing finer study:";
        for (const auto& A : v.unresolved) std::cout << " " << A.str();
        std::cout << "\n";
    }
    if (verbosity >= 1) {
        for (const auto& t : v.trace) {
            std::cout << "  [" << t.ref << "] " << t.rule;
            if (t.face) std::cout << " A=" << t.face->str();
            if (verbosity >= 2)
                for (const auto& [k, val] : t.data) std::cout << " " << k << "=" << val;
            std::cout << "\n";
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact local-minimum test for bivariate polynomials at a stationary origin"};
    app.require_subcommand(1);

    std::string expr, file, svg_path;
    polymin::DecideConfig cfg;
    bool json_out = false;

    auto* check = app.add_subcommand("check", "decide whether the origin is a local minimum");
    check->add_option("expr", expr, "polynomial expression, e.g. \"2*x^4*y^2+3*x^2*y^3+2*y^4\"");
    check->add_option("--file", file, "read the expression from a file");
    check->add_option("--depth", cfg.depth, "forms considered per face")->check(CLI::PositiveNumber);
    check->add_option("--max-nu", cfg.max_nu, "largest nu in the substitution search")->check(CLI::PositiveNumber);
    check->add_option("--max-order", cfg.max_order, "expansion order bound for the substitution search");
    check->add_option("--max-unknowns", cfg.max_unknowns, "undetermined coefficients per variable");
    check->add_flag("--json", json_out, "emit the verdict as JSON");
    check->add_option("--svg", svg_path, "also write the Newton polyhedron plot to this path");
    check->add_option("--trace", cfg.trace_verbosity, "trace verbosity 0-2")->check(CLI::Range(0, 2));

    std::string nexpr, nsvg;
    auto* newton = app.add_subcommand("newton", "emit the Newton polyhedron as SVG + JSON");
    newton->add_option("expr", nexpr, "polynomial expression")->required();
    newton->add_option("svg", nsvg, "output SVG path")->required();

    std::string dexpr;
    long long da1 = 1, da2 = 1;
    auto* decomp = app.add_subcommand("decompose", "print the quasi-homogeneous decomposition");
    decomp->add_option("expr", dexpr, "polynomial expression")->required();
    decomp->add_option("a1", da1, "first component of A")->required();
    decomp->add_option("a2", da2, "second component of A")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (check->parsed()) {
            std::string text = read_input(expr, file);
            if (text.empty()) {
                std::cerr << "error: no expression given\n";
                return kExitUsage;
            }
            polymin::BivariatePoly p = polymin::parse_poly(text);
            polymin::Verdict v = polymin::decide(p, cfg);
            if (!svg_path.empty()) {
                std::ofstream out(svg_path);
                out << polymin::newton_to_svg(p);
            }
            if (json_out) {
                std::cout << polymin::verdict_to_json(v, cfg.trace_verbosity) << "\n";
            } else {
                print_human(v, cfg.trace_verbosity);
            }
            switch (v.status) {
                case polymin::Status::LocalMin: return kExitLocalMin;
                case polymin::Status::NotLocalMin: return kExitNotLocalMin;
                case polymin::Status::Unresolved: return kExitUnresolved;
            }
        }
        if (newton->parsed()) {
            polymin::BivariatePoly p = polymin::parse_poly(nexpr);
            std::ofstream out(nsvg);
            if (!out) {
                std::cerr << "error: cannot write " << nsvg << "\n";
                return kExitUsage;
            }
            out << polymin::newton_to_svg(p);
            std::ofstream sidecar(nsvg + ".json");
            sidecar << polymin::newton_to_json(p) << "\n";
            std::cout << "wrote " << nsvg << " and " << nsvg << ".json\n";
            return 0;
        }
        if (decomp->parsed()) {
            if (da1 < 1 || da2 < 1 || std::gcd(da1, da2) != 1) {
                std::cerr << "error: A must have positive coprime components\n";
                return kExitUsage;
            }
            polymin::BivariatePoly p = polymin::parse_poly(dexpr);
            polymin::NormalVector A{da1, da2};
            polymin::Decomposition dec = polymin::decompose(p, A);
            for (size_t i = 0; i < dec.forms.size(); ++i) {
                const auto& f = dec.forms[i];
                polymin::CharPoly cp = polymin::characteristic(f);
                std::cout << "phi_" << (i + 1) << "  (level " << f.level << "): " << f.poly().str()
                          << "\n";
                std::cout << "  g_" << (i + 1) << "(u) = " << cp.g.str() << "   main term x^"
                          << cp.main.alpha << "*y^" << cp.main.beta << "\n";
            }
            return 0;
        }
    } catch (const polymin::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
