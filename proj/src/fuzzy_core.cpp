#include "frl/fuzzy_core.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace frl {

Tfn::Tfn(double a_, double b_, double c_) : a(a_), b(b_), c(c_) {
    if (!(a <= b && b <= c)) {
        throw std::invalid_argument("triangular fuzzy number requires a <= b <= c, got (" +
                                    std::to_string(a_) + ", " + std::to_string(b_) + ", " +
                                    std::to_string(c_) + ")");
    }
}

double membership(const Tfn& t, Shoulder shoulder, double x) {
    if (x == t.b) return 1.0;
    if (x < t.b) {
        if (shoulder == Shoulder::left) return 1.0;  // plateau, requires a == b
        if (x < t.a) return 0.0;
        if (t.b == t.a) return 1.0;
        return (x - t.a) / (t.b - t.a);
    }
    if (shoulder == Shoulder::right) return 1.0;  // plateau, requires b == c
    if (x > t.c) return 0.0;
    if (t.c == t.b) return 1.0;
    return (t.c - x) / (t.c - t.b);
}

Interval alpha_cut(const Tfn& t, double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw std::invalid_argument("alpha-cut level must lie in [0, 1], got " +
                                    std::to_string(alpha));
    }
    return {t.a + (t.b - t.a) * alpha, t.c - (t.c - t.b) * alpha};
}

double centroid_defuzzify(const Tfn& t) { return (t.a + t.b + t.c) / 3.0; }

std::vector<double> normalize(std::span<const double> values) {
    double sum = 0.0;
    for (double v : values) {
        if (v < 0.0) throw std::invalid_argument("normalize requires non-negative values");
        sum += v;
    }
    if (sum <= 0.0) throw std::invalid_argument("normalize requires at least one positive value");
    std::vector<double> out(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i] / sum;
    return out;
}

}  // namespace frl
