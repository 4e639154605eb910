#pragma once

#include "polymin/bivar.hpp"

#include <numeric>
#include <optional>
#include <set>
#include <vector>

namespace polymin {

/// Primitive integer direction with positive components; the supporting
/// direction of a southwestern face (gcd(a1, a2) == 1).
struct NormalVector {
    long long a1 = 1;
    long long a2 = 1;
    friend bool operator==(const NormalVector& a, const NormalVector& b) { return a.a1 == b.a1 && a.a2 == b.a2; }
    friend bool operator<(const NormalVector& a, const NormalVector& b) {
        // order by slope a1/a2, then by magnitude (slope ties only via equal vectors after reduction)
        long long lhs = a.a1 * b.a2, rhs = b.a1 * a.a2;
        if (lhs != rhs) return lhs < rhs;
        return a.a1 < b.a1;
    }
    std::string str() const { return "(" + std::to_string(a1) + "," + std::to_string(a2) + ")"; }
};

inline NormalVector reduce_normal(long long a1, long long a2) {
    long long g = std::gcd(a1 < 0 ? -a1 : a1, a2 < 0 ? -a2 : a2);
    if (g == 0) g = 1;
    return NormalVector{a1 / g, a2 / g};
}

/// Convex hull of lattice points; vertices are exactly the corner points in
/// counterclockwise order (no collinear interior vertices kept).
struct Polytope {
    std::vector<ExpPair> vertices;  // ccw
    int dimension = 0;              // 0, 1 or 2
};

struct FaceRecord {
    std::vector<ExpPair> points;           // support points on the face, by increasing beta
    std::optional<NormalVector> normal;    // set for dimension-1 faces
    int group = 1;                         // 1: single corner point, 2: two-point edge, 3: edge with interior points
    long long level = 0;                   // common value of <A, (alpha,beta)> for dimension-1 faces
};

Polytope hull(const std::set<ExpPair>& points);
std::set<ExpPair> pareto(const std::set<ExpPair>& points);
/// Pareto-optimal corner points of the support of p.
std::set<ExpPair> omega(const BivariatePoly& p);

/// All dimension-1 faces supported by a direction with both components
/// positive, each carrying its reduced normal, plus dimension-0 records for
/// the omega points. Sorted by increasing a1/a2 (edges), points last.
std::vector<FaceRecord> southwest_edges(const BivariatePoly& p);

struct CornerCheck {
    bool ok = true;
    ExpPair corner{};     // violating corner when !ok
    int c1 = 1, c2 = 1;   // sign direction with coef * c1^alpha * c2^beta < 0 when !ok
};

/// The corner-point gate: every Pareto-optimal corner term must have a
/// positive coefficient and even exponents. On failure returns the corner
/// and signs making that single term negative.
CornerCheck check_corner_condition(const BivariatePoly& p);

/// A direction A with both components >= 1 whose minimum over the support is
/// attained exactly at the given omega point. Throws if the point is not
/// isolated by any such direction.
NormalVector isolating_normal(const BivariatePoly& p, const ExpPair& corner);

}  // namespace polymin
