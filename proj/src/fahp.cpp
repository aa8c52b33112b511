#include "frl/fahp.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>
#include <string>

namespace frl {

Tfn term_to_fuzzy_rank(const RelevanceTerm& term, int scale) {
    if (scale < 2) throw std::invalid_argument("fuzzy number scale must be at least 2");
    if (term.rank < 1 || term.rank > scale) {
        throw std::invalid_argument("relevance term '" + term.name + "' has rank " +
                                    std::to_string(term.rank) + " outside the " +
                                    std::to_string(scale) + "-point scale");
    }
    double r = static_cast<double>(term.rank);
    return Tfn(std::max(r - 1.0, 1.0), r, std::min(r + 1.0, static_cast<double>(scale)));
}

FuzzyWeightVector fwa_normalize(FuzzyWeightVector fw) {
    double mode_sum = 0.0;
    for (const Tfn& w : fw.weights) mode_sum += w.b;
    if (mode_sum <= 0.0) throw std::invalid_argument("cannot fwa-normalize weights with zero mode sum");
    for (Tfn& w : fw.weights) w = Tfn(w.a / mode_sum, w.b / mode_sum, w.c / mode_sum);
    return fw;
}

FuzzyWeightVector fahp_geometric_mean(std::span<const RelevanceTerm> terms, int scale) {
    const std::size_t n = terms.size();
    if (n == 0) throw std::invalid_argument("fahp requires at least one link column");

    std::vector<Tfn> ranks;
    ranks.reserve(n);
    for (const RelevanceTerm& t : terms) ranks.push_back(term_to_fuzzy_rank(t, scale));

    // Geometric row mean of a_ij = (l_i/u_j, m_i/m_j, u_i/l_j) factorizes into
    // the row's own vertex over the geometric mean of the opposite vertices.
    double gm_l = 1.0, gm_m = 1.0, gm_u = 1.0;
    for (const Tfn& r : ranks) {
        gm_l *= r.a;
        gm_m *= r.b;
        gm_u *= r.c;
    }
    const double inv_n = 1.0 / static_cast<double>(n);
    gm_l = std::pow(gm_l, inv_n);
    gm_m = std::pow(gm_m, inv_n);
    gm_u = std::pow(gm_u, inv_n);

    std::vector<Tfn> row_means;
    row_means.reserve(n);
    double sum_l = 0.0, sum_m = 0.0, sum_u = 0.0;
    for (const Tfn& r : ranks) {
        Tfn g(r.a / gm_u, r.b / gm_m, r.c / gm_l);
        sum_l += g.a;
        sum_m += g.b;
        sum_u += g.c;
        row_means.push_back(g);
    }

    FuzzyWeightVector fw;
    fw.weights.reserve(n);
    for (const Tfn& g : row_means) {
        Tfn w(g.a / sum_u, g.b / sum_m, g.c / sum_l);
        assert(w.a >= 0.0);  // scale values are >= 1, so no clamping is ever needed
        fw.weights.push_back(w);
    }
    return fwa_normalize(std::move(fw));
}

std::vector<double> crisp_weights(const FuzzyWeightVector& fw) {
    std::vector<double> centroids;
    centroids.reserve(fw.weights.size());
    for (const Tfn& w : fw.weights) centroids.push_back(centroid_defuzzify(w));
    return normalize(centroids);
}

}  // namespace frl
