#pragma once

#include "polymin/bivar.hpp"
#include "polymin/unipoly.hpp"

namespace polymin {

/// Result of a brute-force sampling run. When found, the reported value is
/// the exact evaluation at the reported point.
struct SampleReport {
    bool found = false;
    Rational x, y, value;
    long long samples = 0;
};

/// Searches rational points on sign-scaled rays (c1 q^A1, c2 q^A2) for every
/// southwestern face direction plus a uniform grid of rationals in the
/// radius box, all evaluated exactly. Independent of the decision engine's
/// sign machinery.
SampleReport falsify_local_min(const BivariatePoly& p, const Rational& radius, long long n);

/// Lower bound on the number of distinct real roots of g in [lo, hi]: sign
/// changes of the square-free part over a uniform grid.
int root_count_bruteforce(const UniPoly& g, const Rational& lo, const Rational& hi, int steps);

}  // namespace polymin
