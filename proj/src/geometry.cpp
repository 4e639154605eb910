#include "polymin/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace polymin {

namespace {

long long cross(const ExpPair& o, const ExpPair& a, const ExpPair& b) {
    return (a.alpha - o.alpha) * (b.beta - o.beta) - (a.beta - o.beta) * (b.alpha - o.alpha);
}

long long dot(long long a1, long long a2, const ExpPair& k) { return a1 * k.alpha + a2 * k.beta; }

}  // namespace

Polytope hull(const std::set<ExpPair>& points) {
    if (points.empty()) throw std::invalid_argument("hull: empty point set");
    std::vector<ExpPair> pts(points.begin(), points.end());  // already sorted lexicographically
    Polytope out;
    if (pts.size() == 1) {
        out.vertices = pts;
        out.dimension = 0;
        return out;
    }
    // Monotone chain with strict turns, so collinear points never become vertices.
    std::vector<ExpPair> lower, upper;
    for (const auto& p : pts) {
        while (lower.size() >= 2 && cross(lower[lower.size() - 2], lower.back(), p) <= 0) lower.pop_back();
        lower.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), *it) <= 0) upper.pop_back();
        upper.push_back(*it);
    }
    lower.pop_back();
    upper.pop_back();
    out.vertices = lower;
    out.vertices.insert(out.vertices.end(), upper.begin(), upper.end());
    out.dimension = out.vertices.size() == 2 ? 1 : 2;
    return out;
}

std::set<ExpPair> pareto(const std::set<ExpPair>& points) {
    if (points.empty()) throw std::invalid_argument("pareto: empty point set");
    std::set<ExpPair> out;
    for (const auto& p : points) {
        bool dominated = false;
        for (const auto& q : points) {
            if (q == p) continue;
            if (q.alpha <= p.alpha && q.beta <= p.beta) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.insert(p);
    }
    return out;
}

std::set<ExpPair> omega(const BivariatePoly& p) {
    // Pareto-optimal corner points of the Newton polyhedron. The polyhedron
    // here is conv(support + positive quadrant), so its corners are exactly
    // the support points that some direction with positive components
    // isolates; equivalently the strict-turn vertices of the Pareto chain.
    if (p.is_zero()) throw std::invalid_argument("omega: zero polynomial");
    std::set<ExpPair> par = pareto(p.support());
    std::vector<ExpPair> pts(par.begin(), par.end());  // alpha ascending, beta strictly descending
    if (pts.size() <= 2) return par;
    std::vector<ExpPair> chain;
    for (const auto& q : pts) {
        while (chain.size() >= 2 && cross(chain[chain.size() - 2], chain.back(), q) <= 0)
            chain.pop_back();
        chain.push_back(q);
    }
    return std::set<ExpPair>(chain.begin(), chain.end());
}

std::vector<FaceRecord> southwest_edges(const BivariatePoly& p) {
    if (p.is_zero()) throw std::invalid_argument("southwest_edges: zero polynomial");
    std::set<ExpPair> sup = p.support();
    Polytope h = hull(sup);
    std::vector<FaceRecord> edges;

    auto make_edge = [&](const ExpPair& v, const ExpPair& w) -> std::optional<FaceRecord> {
        // Supporting direction of the edge, oriented as the argmin normal.
        long long da = w.alpha - v.alpha, db = w.beta - v.beta;
        NormalVector A = reduce_normal(-db, da);
        // For a ccw hull, (-db, da) points toward the argmin side already;
        // for the degenerate 1-D hull both orientations are tried by the caller.
        if (A.a1 <= 0 || A.a2 <= 0) return std::nullopt;
        long long B = dot(A.a1, A.a2, v);
        for (const auto& k : sup)
            if (dot(A.a1, A.a2, k) < B) return std::nullopt;
        FaceRecord face;
        face.normal = A;
        face.level = B;
        for (const auto& k : sup)
            if (dot(A.a1, A.a2, k) == B) face.points.push_back(k);
        std::sort(face.points.begin(), face.points.end(),
                  [](const ExpPair& a, const ExpPair& b) { return a.beta < b.beta; });
        face.group = face.points.size() >= 3 ? 3 : 2;
        return face;
    };

    if (h.dimension == 1) {
        auto f = make_edge(h.vertices[0], h.vertices[1]);
        if (!f) f = make_edge(h.vertices[1], h.vertices[0]);
        if (f) edges.push_back(*f);
    } else if (h.dimension == 2) {
        for (size_t i = 0; i < h.vertices.size(); ++i) {
            const ExpPair& v = h.vertices[i];
            const ExpPair& w = h.vertices[(i + 1) % h.vertices.size()];
            auto f = make_edge(v, w);
            if (f) edges.push_back(*f);
        }
    }
    std::sort(edges.begin(), edges.end(),
              [](const FaceRecord& a, const FaceRecord& b) { return *a.normal < *b.normal; });

    for (const auto& k : omega(p)) {
        FaceRecord face;
        face.points = {k};
        face.group = 1;
        face.level = 0;
        edges.push_back(face);
    }
    return edges;
}

CornerCheck check_corner_condition(const BivariatePoly& p) {
    CornerCheck out;
    for (const auto& k : omega(p)) {
        Rational a = p.coefficient(k.alpha, k.beta);
        if (a > 0 && is_even(k.alpha) && is_even(k.beta)) continue;
        out.ok = false;
        out.corner = k;
        // pick signs with a * c1^alpha * c2^beta < 0
        for (int c1 : {1, -1}) {
            for (int c2 : {1, -1}) {
                Rational v = a * Rational(is_odd(k.alpha) && c1 < 0 ? -1 : 1) *
                             Rational(is_odd(k.beta) && c2 < 0 ? -1 : 1);
                if (v < 0) {
                    out.c1 = c1;
                    out.c2 = c2;
                    return out;
                }
            }
        }
        throw std::logic_error("corner violation without sign witness");
    }
    return out;
}

NormalVector isolating_normal(const BivariatePoly& p, const ExpPair& corner) {
    std::set<ExpPair> sup = p.support();
    if (!sup.count(corner)) throw std::invalid_argument("isolating_normal: not a support point");
    Polytope h = hull(sup);

    // Constraint directions d with <A, d> > 0: hull edges leaving the corner.
    std::vector<ExpPair> dirs;
    size_t n = h.vertices.size();
    bool is_vertex = false;
    for (size_t i = 0; i < n; ++i) {
        if (!(h.vertices[i] == corner)) continue;
        is_vertex = true;
        if (n >= 2) {
            const ExpPair& prev = h.vertices[(i + n - 1) % n];
            const ExpPair& next = h.vertices[(i + 1) % n];
            dirs.push_back(ExpPair{prev.alpha - corner.alpha, prev.beta - corner.beta});
            if (n >= 3) dirs.push_back(ExpPair{next.alpha - corner.alpha, next.beta - corner.beta});
        }
    }
    if (!is_vertex) throw std::invalid_argument("isolating_normal: point is not a corner of the hull");

    auto strict_ok = [&](long long a1, long long a2) {
        if (a1 < 1 || a2 < 1) return false;
        for (const auto& d : dirs)
            if (a1 * d.alpha + a2 * d.beta <= 0) return false;
        return true;
    };

    // Closure rays of the feasible cone: perpendiculars of the constraints
    // plus the axes bounding the positive quadrant.
    std::vector<std::pair<long long, long long>> rays = {{1, 0}, {0, 1}};
    for (const auto& d : dirs) {
        rays.push_back({-d.beta, d.alpha});
        rays.push_back({d.beta, -d.alpha});
    }
    auto closure_ok = [&](long long a1, long long a2) {
        if (a1 < 0 || a2 < 0) return false;
        for (const auto& d : dirs)
            if (a1 * d.alpha + a2 * d.beta < 0) return false;
        return true;
    };
    std::vector<std::pair<long long, long long>> feas;
    for (auto [r1, r2] : rays)
        if ((r1 != 0 || r2 != 0) && closure_ok(r1, r2)) feas.push_back({r1, r2});

    for (auto [r1, r2] : feas)
        if (strict_ok(r1, r2)) {
            auto A = reduce_normal(r1, r2);
            return A;
        }
    for (size_t i = 0; i < feas.size(); ++i)
        for (size_t j = i + 1; j < feas.size(); ++j) {
            long long a1 = feas[i].first + feas[j].first;
            long long a2 = feas[i].second + feas[j].second;
            if (strict_ok(a1, a2)) return reduce_normal(a1, a2);
        }
    throw std::logic_error("isolating_normal: no positive direction isolates the corner");
}

}  // namespace polymin
