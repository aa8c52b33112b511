#pragma once

#include <span>
#include <vector>

namespace frl {

/// Triangular fuzzy number (a, b, c) with a <= b <= c. The degenerate
/// sides a == b and b == c are valid and used by shoulder terms.
struct Tfn {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    Tfn() = default;
    Tfn(double a_, double b_, double c_);
};

struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    bool contains(double x) const { return x >= lo && x <= hi; }
    bool contains(const Interval& other) const { return other.lo >= lo && other.hi <= hi; }
    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
};

/// Whether membership plateaus at 1 beyond the mode toward a universe edge.
/// A left shoulder requires a == b (plateau for x <= b), a right shoulder
/// requires b == c (plateau for x >= b).
enum class Shoulder { none, left, right };

/// Piecewise-linear membership of x in the triangular fuzzy number,
/// with shoulder plateaus handled per the Shoulder flag. Total function.
double membership(const Tfn& t, Shoulder shoulder, double x);

/// The crisp interval [a + (b-a)*alpha, c - (c-b)*alpha]. Throws
/// std::invalid_argument when alpha is outside [0, 1].
Interval alpha_cut(const Tfn& t, double alpha);

/// Vertex-mean defuzzification (a + b + c) / 3.
double centroid_defuzzify(const Tfn& t);

/// Scales non-negative values so they sum to 1. Throws
/// std::invalid_argument on negative input or when all values are zero.
std::vector<double> normalize(std::span<const double> values);

}  // namespace frl
