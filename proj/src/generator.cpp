#include "tmc/generator.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace tmc {

RationalMeasure generate_measure(const GenerateSpec& spec) {
    spec.curve.validate();
    if (spec.atoms < 1 || spec.max_denominator < 1 || spec.radius <= 0)
        throw Error(ErrorCode::InvalidInput, "bad generator parameters");
    std::set<Rational> grid;
    for (int d = 1; d <= spec.max_denominator; ++d) {
        const Integer top = Integer(spec.radius.get_num() * d) / spec.radius.get_den();
        for (Integer k = -top; k <= top; ++k)
            if (k != 0) grid.insert(fraction(k, d));
    }
    if (static_cast<int>(grid.size()) < spec.atoms) throw Error(ErrorCode::InvalidInput, "not enough distinct grid points");
    std::vector<Rational> points(grid.begin(), grid.end());

    // draw indices with raw engine output so results do not depend on the standard library's distributions
    std::mt19937_64 rng(spec.seed);
    std::set<std::size_t> chosen;
    while (static_cast<int>(chosen.size()) < spec.atoms) chosen.insert(rng() % points.size());
    RationalMeasure mu;
    for (std::size_t idx : chosen) {
        const Rational& x = points[idx];
        mu.push_back({x, spec.curve.y_at(x), fraction(static_cast<long>(1 + rng() % 10), 10)});
    }
    return mu;
}

GeneratedInstance generate_instance(const GenerateSpec& spec) {
    GeneratedInstance g;
    g.truth = generate_measure(spec);
    g.beta = moments_from_measure(g.truth, 2 * spec.n);
    return g;
}

}  // namespace tmc
