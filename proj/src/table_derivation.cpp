#include <cmath>
#include <random>

#include "spin7cells/errors.hpp"
#include "spin7cells/groups.hpp"
#include "spin7cells/octonion.hpp"

namespace spin7 {

namespace {

constexpr double kTol = 1e-9;

bool candidate_ok(const MultTable& t, int nsamples, std::uint64_t seed) {
    std::mt19937_64 rng(seed); // identical sample set for every candidate
    std::uniform_real_distribution<double> uni(-1.0, 1.0);

    auto random_unit = [&] {
        Octonion o;
        double n2 = 0.0;
        do {
            n2 = 0.0;
            for (int i = 0; i < 8; ++i) {
                o[i] = uni(rng);
                n2 += o[i] * o[i];
            }
        } while (n2 < 1e-6);
        return o * (1.0 / std::sqrt(n2));
    };
    auto random_disc = [&](int dim) {
        std::vector<double> p(static_cast<std::size_t>(dim));
        double n2;
        do {
            n2 = 0.0;
            for (double& v : p) {
                v = uni(rng);
                n2 += v * v;
            }
        } while (n2 > 1.0);
        return p;
    };

    // norm multiplicativity
    for (int s = 0; s < nsamples; ++s) {
        const Octonion x = random_unit(), y = random_unit();
        if (std::abs(norm(mul(x, y, t)) - norm(x) * norm(y)) > kTol) return false;
    }
    // A, B, C are automorphisms
    for (Generator kind : {Generator::A, Generator::B, Generator::C}) {
        for (int s = 0; s < nsamples; ++s) {
            const auto params = random_disc(generator_param_count(kind));
            const Mat8 m = generator_matrix(kind, params);
            const Octonion x = random_unit(), y = random_unit();
            if (inf_dist(mul(m * x, m * y, t), m * mul(x, y, t)) > kTol) return false;
        }
    }
    // companion identity D'(w)x * D(w)y = D(w)(xy)
    for (int s = 0; s < nsamples; ++s) {
        const auto w = random_disc(2);
        const Mat8 d = generator_matrix(Generator::D, w);
        const Mat8 dp = generator_matrix(Generator::Dprime, w);
        const Octonion x = random_unit(), y = random_unit();
        if (inf_dist(mul(dp * x, d * y, t), d * mul(x, y, t)) > kTol) return false;
    }
    return true;
}

} // namespace

TableDerivation derive_mult_table(int samples_per_constraint, std::uint64_t seed) {
    const auto& lines = fano_reference_lines();
    TableDerivation result;
    for (int mask = 0; mask < 128; ++mask) {
        std::array<int, 7> orientation;
        for (int l = 0; l < 7; ++l) orientation[static_cast<std::size_t>(l)] = (mask >> l) & 1 ? -1 : 1;
        const MultTable t = MultTable::from_lines(lines, orientation);
        ++result.candidates_checked;
        if (!t.structural_ok()) continue;
        if (!candidate_ok(t, samples_per_constraint, seed)) continue;
        ++result.survivors;
        result.table = t;
        result.orientation = orientation;
    }
    if (result.survivors != 1)
        throw ConfigError("mult table derivation: expected a unique sign assignment, found " +
                          std::to_string(result.survivors));
    return result;
}

} // namespace spin7
