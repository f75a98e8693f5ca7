#include "spin7cells/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "spin7cells/cellcomplex.hpp"
#include "spin7cells/charts.hpp"
#include "spin7cells/cohomology.hpp"
#include "spin7cells/data.hpp"
#include "spin7cells/errors.hpp"
#include "spin7cells/groups.hpp"
#include "spin7cells/octonion.hpp"

namespace spin7 {

namespace {

CheckResult row(std::string id, std::string subject, bool pass, double metric, double tol,
                long samples, std::uint64_t seed, std::string note = "") {
    return CheckResult{std::move(id), std::move(subject), pass ? "pass" : "fail",
                       metric,        tol,                samples, seed, std::move(note)};
}

int pick(int requested, int fallback) { return requested > 0 ? requested : fallback; }

double spin7_identity_error(const Mat8& gt, int nsamples, std::mt19937_64& rng) {
    const Mat8 g = vector_rep(gt);
    double err = inf_dist(g * Octonion::basis(0), Octonion::basis(0));
    err = std::max(err, (g.transposed() * g).max_abs_diff(Mat8::identity()));
    err = std::max(err, std::abs(g.determinant() - 1.0));
    for (int s = 0; s < nsamples; ++s) {
        const Octonion x = random_unit_octonion(rng);
        const Octonion y = random_unit_octonion(rng);
        err = std::max(err, inf_dist(octonion_mul(g * x, gt * y), gt * octonion_mul(x, y)));
    }
    return err;
}

Mat8 random_spin7_element(double margin, std::mt19937_64& rng) {
    Mat8 g = Mat8::identity();
    for (Chart k : {Chart::Phi6, Chart::Phi7, Chart::Phi5, Chart::Phi3})
        g = g * char_map(random_interior_param(k, margin, rng));
    return g;
}

Mat8 random_su4_element(double margin, std::mt19937_64& rng) {
    Mat8 g = Mat8::identity();
    for (Chart k : {Chart::Phi7, Chart::Phi5, Chart::Phi3})
        g = g * char_map(random_interior_param(k, margin, rng));
    return g;
}

// ---------------------------------------------------------------- cayley ---

std::vector<CheckResult> check_table_derivation(const CheckConfig& cfg) {
    const int pairs = pick(cfg.samples, 1000);
    std::vector<CheckResult> out;
    bool unique = false;
    bool matches_shipped = false;
    std::string note;
    try {
        const TableDerivation derived = derive_mult_table();
        unique = derived.survivors == 1;
        matches_shipped = derived.table == cayley_table();
        note = "survivors=" + std::to_string(derived.survivors) +
               (matches_shipped ? ", matches shipped table" : ", DIFFERS from shipped table");
    } catch (const ConfigError& e) {
        note = e.what();
    }
    std::mt19937_64 rng(cfg.seed);
    double err = 0.0;
    for (int s = 0; s < pairs; ++s) {
        const Octonion x = random_unit_octonion(rng);
        const Octonion y = random_unit_octonion(rng);
        err = std::max(err, std::abs(norm(octonion_mul(x, y)) - norm(x) * norm(y)));
    }
    out.push_back(row("cayley.table_derivation", "mult-table", unique && matches_shipped && err <= cfg.tol,
                      err, cfg.tol, pairs, cfg.seed, note));
    return out;
}

std::vector<CheckResult> check_alternativity(const CheckConfig& cfg) {
    const int pairs = pick(cfg.samples, 1000);
    std::mt19937_64 rng(cfg.seed + 1);
    double err = 0.0;
    for (int s = 0; s < pairs; ++s) {
        const Octonion x = random_unit_octonion(rng);
        const Octonion y = random_unit_octonion(rng);
        const Octonion xx = octonion_mul(x, x);
        err = std::max(err, inf_dist(octonion_mul(x, octonion_mul(x, y)), octonion_mul(xx, y)));
        err = std::max(err, inf_dist(octonion_mul(octonion_mul(y, x), x), octonion_mul(y, xx)));
    }
    return {row("cayley.alternativity", "mult-table", err <= cfg.tol, err, cfg.tol, pairs, cfg.seed)};
}

std::vector<CheckResult> check_conj_antiautomorphism(const CheckConfig& cfg) {
    const int pairs = pick(cfg.samples, 1000);
    std::mt19937_64 rng(cfg.seed + 2);
    double err = 0.0;
    for (int s = 0; s < pairs; ++s) {
        const Octonion x = random_unit_octonion(rng);
        const Octonion y = random_unit_octonion(rng);
        err = std::max(err, inf_dist(conj(octonion_mul(x, y)), octonion_mul(conj(y), conj(x))));
    }
    return {row("cayley.conj_antiautomorphism", "mult-table", err <= cfg.tol, err, cfg.tol, pairs,
                cfg.seed)};
}

std::vector<CheckResult> check_nonassociativity(const CheckConfig& cfg) {
    double worst = 0.0;
    for (int i = 1; i < 8; ++i)
        for (int j = 1; j < 8; ++j)
            for (int k = 1; k < 8; ++k) {
                const Octonion lhs =
                    octonion_mul(octonion_mul(Octonion::basis(i), Octonion::basis(j)), Octonion::basis(k));
                const Octonion rhs =
                    octonion_mul(Octonion::basis(i), octonion_mul(Octonion::basis(j), Octonion::basis(k)));
                worst = std::max(worst, inf_dist(lhs, rhs));
            }
    return {row("cayley.nonassociativity_witness", "mult-table", worst > 0.5, worst, 0.5, 343,
                cfg.seed, "max basis associator")};
}

// ---------------------------------------------------------------- groups ---

std::vector<CheckResult> check_generator_orthogonality(const CheckConfig& cfg) {
    const int per_kind = pick(cfg.samples, 100);
    std::mt19937_64 rng(cfg.seed + 3);
    double err = 0.0;
    for (Generator kind : {Generator::A, Generator::B, Generator::C, Generator::D, Generator::Dprime}) {
        std::vector<double> params(static_cast<std::size_t>(generator_param_count(kind)));
        for (int s = 0; s < per_kind; ++s) {
            random_in_ball(params, 0.0, rng);
            const Mat8 m = generator_matrix(kind, params);
            err = std::max(err, (m.transposed() * m).max_abs_diff(Mat8::identity()));
            err = std::max(err, std::abs(m.determinant() - 1.0));
        }
    }
    return {row("groups.orthogonality", "A,B,C,D,D'", err <= cfg.tol, err, cfg.tol, 5L * per_kind,
                cfg.seed)};
}

std::vector<CheckResult> check_g2_identities(const CheckConfig& cfg) {
    const int samples = pick(cfg.samples, 1000);
    std::mt19937_64 rng(cfg.seed + 4);
    double err = 0.0;
    for (Generator kind : {Generator::A, Generator::B, Generator::C}) {
        std::vector<double> params(static_cast<std::size_t>(generator_param_count(kind)));
        for (int s = 0; s < samples; ++s) {
            random_in_ball(params, 0.0, rng);
            const Mat8 m = generator_matrix(kind, params);
            const Octonion x = random_unit_octonion(rng);
            const Octonion y = random_unit_octonion(rng);
            err = std::max(err, inf_dist(octonion_mul(m * x, m * y), m * octonion_mul(x, y)));
        }
    }
    return {row("groups.g2_identities", "A,B,C", err <= cfg.tol, err, cfg.tol, 3L * samples, cfg.seed)};
}

std::vector<CheckResult> check_dprime_identity(const CheckConfig& cfg) {
    const int samples = pick(cfg.samples, 1000);
    std::mt19937_64 rng(cfg.seed + 5);
    std::vector<double> w(2);
    double err = 0.0;
    for (int s = 0; s < samples; ++s) {
        random_in_ball(w, 0.0, rng);
        const Mat8 d = generator_matrix(Generator::D, w);
        const Mat8 dp = generator_matrix(Generator::Dprime, w);
        const Octonion x = random_unit_octonion(rng);
        const Octonion y = random_unit_octonion(rng);
        err = std::max(err, inf_dist(octonion_mul(dp * x, d * y), d * octonion_mul(x, y)));
    }
    return {row("groups.dprime_identity", "D',D", err <= cfg.tol, err, cfg.tol, samples, cfg.seed)};
}

std::vector<CheckResult> check_spin7_membership(const CheckConfig& cfg) {
    const int per_family = pick(cfg.samples, 100);
    std::mt19937_64 rng(cfg.seed + 6);
    double err = 0.0;
    long tested = 0;
    for (Generator kind : {Generator::A, Generator::B, Generator::C, Generator::D}) {
        std::vector<double> params(static_cast<std::size_t>(generator_param_count(kind)));
        for (int s = 0; s < per_family; ++s) {
            random_in_ball(params, 0.0, rng);
            err = std::max(err, spin7_identity_error(generator_matrix(kind, params), 16, rng));
            ++tested;
        }
    }
    for (Chart k : {Chart::Phi3, Chart::Phi5, Chart::Phi6, Chart::Phi7}) {
        for (int s = 0; s < per_family; ++s) {
            const DiscParam v = random_interior_param(k, 0.0, rng);
            err = std::max(err, spin7_identity_error(char_map(v), 16, rng));
            ++tested;
        }
    }
    // closure under products of random generator elements
    for (int s = 0; s < per_family / 4; ++s) {
        err = std::max(err, spin7_identity_error(random_spin7_element(0.0, rng), 16, rng));
        ++tested;
    }
    return {row("groups.spin7_membership", "generators+charts+products", err <= cfg.tol, err,
                cfg.tol, tested, cfg.seed)};
}

std::vector<CheckResult> check_double_cover(const CheckConfig& cfg) {
    const int samples = pick(cfg.samples, 100);
    std::mt19937_64 rng(cfg.seed + 7);
    std::vector<CheckResult> out;

    double kernel_err = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Mat8 g = random_spin7_element(0.05, rng);
        kernel_err = std::max(kernel_err, vector_rep(g).max_abs_diff(vector_rep(-g)));
    }
    out.push_back(row("groups.double_cover.kernel", "spin7", kernel_err <= 1e-12, kernel_err, 1e-12,
                      samples, cfg.seed));

    const bool minus_id = is_spin7(-Mat8::identity(), 64, cfg.tol, cfg.seed);
    out.push_back(row("groups.double_cover.minus_identity", "-I", minus_id, minus_id ? 0.0 : 1.0,
                      cfg.tol, 64, cfg.seed));

    double fix_err = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Mat8 g = random_su4_element(0.05, rng);
        fix_err = std::max(fix_err, std::sqrt((proj_p(g) - Octonion::basis(1)).norm()));
    }
    out.push_back(row("groups.double_cover.su4_fixes_e1", "su4", fix_err <= cfg.tol, fix_err, cfg.tol,
                      samples, cfg.seed));
    return out;
}

// ---------------------------------------------------------------- charts ---

std::vector<CheckResult> check_p0phi7_roundtrip(const CheckConfig& cfg) {
    const int samples = pick(cfg.samples, 1000);
    std::mt19937_64 rng(cfg.seed + 8);
    double err = 0.0;
    for (int s = 0; s < samples; ++s) {
        const DiscParam v = random_interior_param(Chart::Phi7, 0.05, rng);
        const Octonion a = chart_projection(Chart::Phi7, v.coords);
        const DiscParam back = invert_p0_phi7(a);
        for (std::size_t i = 0; i < v.coords.size(); ++i)
            err = std::max(err, std::abs(v.coords[i] - back.coords[i]));
    }
    return {row("charts.p0phi7_roundtrip", "phi7", err <= 1e-6, err, 1e-6, samples, cfg.seed)};
}

std::vector<CheckResult> check_p0phi7_boundary(const CheckConfig& cfg) {
    const int per_face = pick(cfg.samples, 100);
    std::mt19937_64 rng(cfg.seed + 9);
    const auto& factors = chart_factor_dims(Chart::Phi7);
    double err = 0.0;
    for (std::size_t face = 0; face < factors.size(); ++face) {
        for (int s = 0; s < per_face; ++s) {
            DiscParam v = random_interior_param(Chart::Phi7, 0.05, rng);
            std::size_t off = 0;
            for (std::size_t k = 0; k < face; ++k) off += static_cast<std::size_t>(factors[k]);
            random_on_sphere(
                std::span<double>(v.coords.data() + off, static_cast<std::size_t>(factors[face])),
                rng);
            const Octonion a = chart_projection(Chart::Phi7, v.coords);
            err = std::max(err, std::sqrt((a - Octonion::basis(0)).norm()));
        }
    }
    return {row("charts.p0phi7_boundary", "phi7 faces", err <= 1e-9, err, 1e-9,
                3L * per_face, cfg.seed)};
}

std::vector<CheckResult> check_phi6_inversion(const CheckConfig& cfg) {
    const int samples = pick(cfg.samples, 200);
    std::mt19937_64 rng(cfg.seed + 10);
    std::vector<CheckResult> out;
    double residual = 0.0, param_err = 0.0;
    for (int s = 0; s < samples; ++s) {
        const DiscParam v = random_interior_param(Chart::Phi6, 0.05, rng);
        const Octonion target = chart_projection(Chart::Phi6, v.coords);
        const DiscParam back = invert_chart_numeric(Chart::Phi6, target);
        const Octonion forward = chart_projection(Chart::Phi6, back.coords);
        residual = std::max(residual, std::sqrt((forward - target).norm()));
        for (std::size_t i = 0; i < v.coords.size(); ++i)
            param_err = std::max(param_err, std::abs(v.coords[i] - back.coords[i]));
    }
    out.push_back(row("charts.phi6_inversion", "phi6", residual <= 1e-10, residual, 1e-10, samples,
                      cfg.seed, "param recovery max " + std::to_string(param_err)));
    out.push_back(row("charts.phi6_param_recovery", "phi6", param_err <= 1e-6, param_err, 1e-6,
                      samples, cfg.seed));

    bool rejected = false;
    try {
        invert_chart_numeric(Chart::Phi6, Octonion::basis(1));
    } catch (const BoundaryError&) {
        rejected = true;
    }
    out.push_back(row("charts.phi6_basepoint_reject", "phi6", rejected, rejected ? 0.0 : 1.0, 0.5, 1,
                      cfg.seed));
    return out;
}

std::vector<CheckResult> check_phi5_phi3_inversion(const CheckConfig& cfg) {
    const int samples = pick(cfg.samples, 100);
    std::mt19937_64 rng(cfg.seed + 11);
    std::vector<CheckResult> out;
    for (Chart k : {Chart::Phi5, Chart::Phi3}) {
        double residual = 0.0;
        for (int s = 0; s < samples; ++s) {
            const DiscParam v = random_interior_param(k, 0.05, rng);
            const Octonion target = chart_projection(k, v.coords);
            const DiscParam back = invert_chart_numeric(k, target);
            const Octonion forward = chart_projection(k, back.coords);
            residual = std::max(residual, std::sqrt((forward - target).norm()));
        }
        const std::string id =
            k == Chart::Phi5 ? "charts.phi5_inversion" : "charts.phi3_inversion";
        out.push_back(row(id, k == Chart::Phi5 ? "phi5" : "phi3", residual <= 1e-10, residual, 1e-10,
                          samples, cfg.seed));
    }
    // closed-form cross-check for the 3-stage: X = sqrt((1 - t4)/2), x_i = t_i / (2X)
    double cross_err = 0.0;
    for (int s = 0; s < samples; ++s) {
        const DiscParam v = random_interior_param(Chart::Phi3, 0.05, rng);
        const Octonion t = chart_projection(Chart::Phi3, v.coords);
        const double X = std::sqrt((1.0 - t[4]) / 2.0);
        const double closed[3] = {t[5] / (2 * X), t[6] / (2 * X), t[7] / (2 * X)};
        const DiscParam back = invert_chart_numeric(Chart::Phi3, t);
        for (int i = 0; i < 3; ++i)
            cross_err = std::max(cross_err, std::abs(closed[i] - back.coords[static_cast<std::size_t>(i)]));
    }
    out.push_back(row("charts.phi3_closed_form_crosscheck", "phi3", cross_err <= 1e-6, cross_err,
                      1e-6, samples, cfg.seed));
    return out;
}

std::vector<CheckResult> check_factorize(const CheckConfig& cfg) {
    const int samples = pick(cfg.samples, 100);
    std::mt19937_64 rng(cfg.seed + 12);
    std::vector<CheckResult> out;

    double recon_err = 0.0, param_err = 0.0;
    int bad_labels = 0;
    for (int s = 0; s < samples; ++s) {
        std::vector<DiscParam> vs;
        Mat8 g = Mat8::identity();
        for (Chart k : {Chart::Phi6, Chart::Phi7, Chart::Phi5, Chart::Phi3}) {
            vs.push_back(random_interior_param(k, 0.05, rng));
            g = g * char_map(vs.back());
        }
        const Factorization f = factorize(g, 1e-4);
        if (!(f.label == CellLabel::from_gens({6, 7, 5, 3}))) {
            ++bad_labels;
            continue;
        }
        const Mat8 rec = f.reconstruct();
        double fro = 0.0;
        for (int i = 0; i < 64; ++i) {
            const double d = rec.a[static_cast<std::size_t>(i)] - g.a[static_cast<std::size_t>(i)];
            fro += d * d;
        }
        recon_err = std::max(recon_err, std::sqrt(fro));
        for (std::size_t stage = 0; stage < vs.size(); ++stage)
            for (std::size_t i = 0; i < vs[stage].coords.size(); ++i)
                param_err = std::max(param_err,
                                     std::abs(vs[stage].coords[i] - f.factors[stage].coords[i]));
    }
    out.push_back(row("charts.factorize_reconstruction", "e21 products",
                      bad_labels == 0 && recon_err <= 1e-5, recon_err, 1e-5, samples, cfg.seed,
                      bad_labels ? "wrong labels: " + std::to_string(bad_labels) : ""));
    out.push_back(row("charts.factorize_parameters", "e21 products", param_err <= 1e-4, param_err,
                      1e-4, samples, cfg.seed));

    const Factorization id_fact = factorize(Mat8::identity());
    out.push_back(row("charts.factorize_identity", "I", id_fact.label.gens.empty(),
                      id_fact.terminal_residual, 1e-6, 1, cfg.seed));

    int singleton_bad = 0;
    const int per_chart = std::max(1, samples / 4);
    for (Chart k : {Chart::Phi6, Chart::Phi7, Chart::Phi5, Chart::Phi3}) {
        for (int s = 0; s < per_chart; ++s) {
            const DiscParam v = random_interior_param(k, 0.05, rng);
            const Factorization f = factorize(char_map(v));
            if (f.label.gens.size() != 1 || f.label.gens[0] != static_cast<int>(k)) ++singleton_bad;
        }
    }
    out.push_back(row("charts.factorize_singletons", "phi3,phi5,phi6,phi7", singleton_bad == 0,
                      singleton_bad, 0.5, 4L * per_chart, cfg.seed));
    return out;
}

std::vector<CheckResult> check_factorize_surjectivity(const CheckConfig& cfg) {
    // products of charts and bare generators in arbitrary order; every one
    // must peel through the canonical stages and reconstruct
    const int samples = pick(cfg.samples, 100);
    std::mt19937_64 rng(cfg.seed + 16);
    std::uniform_int_distribution<int> n_factors(1, 5);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> chart_pick(0, 3);
    std::uniform_int_distribution<int> gen_pick(0, 3);
    constexpr Chart charts[4] = {Chart::Phi3, Chart::Phi5, Chart::Phi6, Chart::Phi7};
    constexpr Generator gens[4] = {Generator::A, Generator::B, Generator::C, Generator::D};
    double recon_err = 0.0;
    int failures = 0;
    std::string note;
    for (int s = 0; s < samples; ++s) {
        Mat8 g = Mat8::identity();
        const int n = n_factors(rng);
        for (int i = 0; i < n; ++i) {
            if (coin(rng)) {
                g = g * char_map(random_interior_param(charts[chart_pick(rng)], 0.1, rng));
            } else {
                const Generator kind = gens[gen_pick(rng)];
                std::vector<double> params(static_cast<std::size_t>(generator_param_count(kind)));
                random_in_ball(params, 0.1, rng);
                g = g * generator_matrix(kind, params);
            }
        }
        try {
            const Factorization f = factorize(g);
            recon_err = std::max(recon_err, f.reconstruct().max_abs_diff(g));
        } catch (const std::exception& e) {
            ++failures;
            if (note.empty()) note = e.what();
        }
    }
    return {row("charts.factorize_surjectivity", "mixed products",
                failures == 0 && recon_err <= 1e-8, recon_err, 1e-8, samples, cfg.seed,
                failures ? note : "")};
}

std::vector<CheckResult> check_disjointness(const CheckConfig& cfg) {
    const int samples = pick(cfg.samples, 50);
    std::mt19937_64 rng(cfg.seed + 13);
    std::vector<CheckResult> out;

    // p sends everything inside the complex-linear subgroup to e1 ...
    double su4_err = 0.0;
    for (int s = 0; s < samples; ++s) {
        const Mat8 g = random_su4_element(0.05, rng);
        su4_err = std::max(su4_err, std::sqrt((proj_p(g) - Octonion::basis(1)).norm()));
        if (!is_su4(g, 1e-8)) su4_err = std::max(su4_err, 1.0);
    }
    // ... while interior 6-led cells stay away from it
    double phi6_min = 1e300;
    for (int s = 0; s < samples; ++s) {
        const DiscParam v = random_interior_param(Chart::Phi6, 0.05, rng);
        Mat8 g = char_map(v);
        if (s % 2 == 1) g = g * char_map(random_interior_param(Chart::Phi3, 0.05, rng));
        phi6_min = std::min(phi6_min, std::sqrt((proj_p(g) - Octonion::basis(1)).norm()));
        if (is_su4(g, 1e-6)) su4_err = std::max(su4_err, 1.0);
    }
    out.push_back(row("charts.disjointness_p", "su4 vs 6-led", su4_err <= cfg.tol && phi6_min > 1e-4,
                      su4_err, cfg.tol, 2L * samples, cfg.seed,
                      "min 6-led distance " + std::to_string(phi6_min)));

    // p0 separates the subgroup stabilizing e0 from the 7-led cells
    double su3_err = 0.0;
    double phi7_min = 1e300;
    for (int s = 0; s < samples; ++s) {
        Mat8 g = char_map(random_interior_param(Chart::Phi5, 0.05, rng)) *
                 char_map(random_interior_param(Chart::Phi3, 0.05, rng));
        su3_err = std::max(su3_err, std::sqrt((proj_p0(g) - Octonion::basis(0)).norm()));
        const Mat8 h = char_map(random_interior_param(Chart::Phi7, 0.05, rng)) * g;
        phi7_min = std::min(phi7_min, std::sqrt((proj_p0(h) - Octonion::basis(0)).norm()));
    }
    out.push_back(row("charts.disjointness_p0", "su3 vs 7-led", su3_err <= cfg.tol && phi7_min > 1e-4,
                      su3_err, cfg.tol, 2L * samples, cfg.seed,
                      "min 7-led distance " + std::to_string(phi7_min)));
    return out;
}

std::vector<CheckResult> check_cell_commutation(const CheckConfig& cfg) {
    const int samples = pick(cfg.samples, 50);
    std::mt19937_64 rng(cfg.seed + 14);
    double worst = 0.0;
    int wrong = 0;
    for (int s = 0; s < samples; ++s) {
        const Mat8 a = char_map(random_interior_param(Chart::Phi3, 0.05, rng));
        const Mat8 b = char_map(random_interior_param(Chart::Phi5, 0.05, rng));
        for (const Mat8& g : {b * a, a * b}) { // both orders must peel as 5-then-3
            const Factorization f = factorize(g, 1e-5);
            worst = std::max(worst, f.terminal_residual);
            for (int gen : f.label.gens)
                if (gen != 5 && gen != 3) ++wrong;
        }
    }
    return {row("charts.cell_commutation", "e3*e5 vs e5*e3", wrong == 0 && worst <= 1e-5, worst, 1e-5,
                2L * samples, cfg.seed)};
}

// --------------------------------------------------------------- complex ---

std::vector<long long> poly_product(const std::vector<int>& gens) {
    std::vector<long long> poly = {1};
    for (int n : gens) {
        std::vector<long long> next(poly.size() + static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + static_cast<std::size_t>(n)] += poly[i];
        }
        poly = std::move(next);
    }
    return poly;
}

std::vector<CheckResult> check_census(const CheckConfig& cfg) {
    std::vector<CheckResult> out;
    const std::set<int> spin7_dims = {0, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 21};
    const std::set<int> su4_dims = {0, 3, 5, 7, 8, 10, 12, 15};

    auto dims_of = [](Space s) {
        std::set<int> dims;
        for (const Cell& c : cell_census(s)) dims.insert(c.dim());
        return dims;
    };
    bool ok = cell_census(Space::Spin7).size() == 16 && dims_of(Space::Spin7) == spin7_dims;
    ok = ok && cell_census(Space::SU4).size() == 8 && dims_of(Space::SU4) == su4_dims;
    ok = ok && cell_census(Space::SU2).size() == 2 && cell_census(Space::Spin8).size() == 32;
    out.push_back(row("complex.census", "spin7,su4,su2,spin8", ok, ok ? 0 : 1, 0.5, 58, cfg.seed));

    // polynomial oracle: expand prod (1 + t^n) independently of the census
    bool poly_ok = true;
    for (Space s : {Space::SU2, Space::SU3, Space::SU4, Space::G2, Space::Spin7, Space::Spin8}) {
        std::vector<int> gens = space_generators(s);
        if (s == Space::Spin8) gens.push_back(7);
        if (poincare_polynomial(s) != poly_product(gens)) poly_ok = false;
    }
    out.push_back(row("complex.poincare_polynomial", "all spaces", poly_ok, poly_ok ? 0 : 1, 0.5, 6,
                      cfg.seed));
    return out;
}

std::vector<CheckResult> check_boundaries(const CheckConfig& cfg) {
    std::vector<CheckResult> out;
    std::string why;
    const bool structural = boundary_relations_structural_ok(Space::Spin7, &why);
    out.push_back(row("complex.boundaries_structural", "spin7", structural, structural ? 0 : 1, 0.5,
                      static_cast<long>(boundary_relations(Space::Spin7).size()), cfg.seed, why));

    const int per_face = pick(cfg.samples, 20);
    double worst_skip = 0.0;
    long total = 0;
    int violations = 0;
    std::string note;
    for (const BoundaryRelation& rel : boundary_relations(Space::Spin7)) {
        if (rel.cell.gens.empty()) continue;
        const BoundaryCheckReport r = verify_boundaries_numeric(rel, per_face, cfg.seed + 100);
        total += r.samples;
        violations += static_cast<int>(r.violations.size());
        if (r.samples > 0) worst_skip = std::max(worst_skip, double(r.skipped) / double(r.samples));
        if (!r.violations.empty() && note.empty()) note = r.violations.front();
    }
    out.push_back(row("complex.boundaries_numeric", "spin7", violations == 0 && worst_skip <= 0.10,
                      worst_skip, 0.10, total, cfg.seed,
                      violations ? note : "metric = worst per-relation skip fraction"));
    return out;
}

std::vector<CheckResult> check_filtration_ledger(const CheckConfig& cfg) {
    std::vector<CheckResult> out;
    const FiltrationCheck f = check_filtration(filtration_ledger(), Space::Spin7);
    out.push_back(row("complex.filtration", "F_1..F_5", f.ok, f.ok ? 0 : 1, 0.5, 5, cfg.seed,
                      f.ok ? "" : f.lines.back()));
    const FiltrationCheck fp = check_filtration(su4_filtration_ledger(), Space::SU4);
    out.push_back(row("complex.su4_filtration", "F'_1..F'_3", fp.ok, fp.ok ? 0 : 1, 0.5, 3, cfg.seed,
                      fp.ok ? "" : fp.lines.back()));
    const FiltrationCheck g = check_spin8_cone_ledger();
    out.push_back(row("complex.spin8_cone_ledger", "G_1..G_6", g.ok, g.ok ? 0 : 1, 0.5, 6, cfg.seed,
                      g.ok ? "" : g.lines.back()));
    return out;
}

std::vector<CheckResult> check_join_model(const CheckConfig& cfg) {
    const int samples = pick(cfg.samples, 1000);
    std::mt19937_64 rng(cfg.seed + 15);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double round_err = 0.0, boundary_err = 0.0;
    const std::pair<int, int> shapes[] = {{6, 7}, {6, 3}, {2, 3}, {1, 1}};
    for (const auto& [m, n] : shapes) {
        for (int s = 0; s < samples / 4; ++s) {
            std::vector<double> p(static_cast<std::size_t>(m + n));
            random_in_ball(std::span<double>(p.data(), static_cast<std::size_t>(m)), 0.0, rng);
            random_in_ball(std::span<double>(p.data() + m, static_cast<std::size_t>(n)), 0.0, rng);
            const std::vector<double> fwd = join_box_to_ball(m, n, p);
            const std::vector<double> back = join_ball_to_box(m, n, fwd);
            for (std::size_t i = 0; i < p.size(); ++i)
                round_err = std::max(round_err, std::abs(p[i] - back[i]));

            // pin the first block to its boundary sphere; image must be unit
            double n2 = 0.0;
            for (int i = 0; i < m; ++i) {
                p[static_cast<std::size_t>(i)] = gauss(rng);
                n2 += p[static_cast<std::size_t>(i)] * p[static_cast<std::size_t>(i)];
            }
            for (int i = 0; i < m; ++i) p[static_cast<std::size_t>(i)] /= std::sqrt(n2);
            const std::vector<double> onto = join_box_to_ball(m, n, p);
            double img2 = 0.0;
            for (double v : onto) img2 += v * v;
            boundary_err = std::max(boundary_err, std::abs(std::sqrt(img2) - 1.0));
        }
    }
    std::vector<CheckResult> out;
    out.push_back(row("complex.join_roundtrip", "disc model", round_err <= 1e-9, round_err, 1e-9,
                      samples, cfg.seed));
    out.push_back(row("complex.join_boundary", "disc model", boundary_err <= 1e-9, boundary_err, 1e-9,
                      samples, cfg.seed));
    return out;
}

// ------------------------------------------------------------ cohomology ---

const std::map<std::string, int>& expected_cup_lengths() {
    static const std::map<std::string, int> expected = {
        {"f1", 1}, {"f2", 2}, {"f3", 3}, {"f4", 4}, {"f5", 5},
        {"fp1", 1}, {"fp2", 2}, {"fp3", 3},
        {"su4", 3}, {"spin7", 5}, {"spin8", 6},
    };
    return expected;
}

std::vector<CheckResult> check_cup_length(const CheckConfig& cfg) {
    std::vector<CheckResult> out;
    for (const auto& [space, expected] : expected_cup_lengths()) {
        if (!cfg.space.empty() && cfg.space != space) continue;
        const int got = cup_length(ring_for_space(space));
        out.push_back(row("cohomology.cup_length", space, got == expected, got, expected, 1,
                          cfg.seed, "expected " + std::to_string(expected)));
    }
    if (out.empty()) throw DomainError("no shipped ring for space: " + cfg.space);
    return out;
}

std::vector<CheckResult> check_ls_category(const CheckConfig& cfg) {
    std::vector<CheckResult> out;
    for (const auto& [space, expected] : expected_cup_lengths()) {
        if (!cfg.space.empty() && cfg.space != space) continue;
        const CategoryReport r = ls_category_report(space);
        const bool ok = r.determined() && r.wcat_lower == expected;
        std::ostringstream note;
        note << "lower " << r.wcat_lower << ", upper " << r.cat_upper << ", "
             << (r.determined() ? "determined" : "gap");
        out.push_back(row("cohomology.ls_category", space, ok, r.wcat_lower, expected, 1, cfg.seed,
                          note.str()));
    }
    if (out.empty()) throw DomainError("no shipped ring for space: " + cfg.space);
    return out;
}

std::vector<CheckResult> check_basis_census_bridge(const CheckConfig& cfg) {
    auto dims_from_ring = [](const std::string& tag) {
        std::vector<int> dims;
        for (const auto& [deg, rank] : additive_basis(ring_for_space(tag)))
            for (int i = 0; i < rank; ++i) dims.push_back(deg);
        return dims;
    };
    auto dims_from_census = [](Space s) {
        std::vector<int> dims;
        for (const Cell& c : cell_census(s)) dims.push_back(c.dim());
        std::sort(dims.begin(), dims.end());
        return dims;
    };
    const bool spin7_ok = dims_from_ring("spin7") == dims_from_census(Space::Spin7);
    const bool spin8_ok = dims_from_ring("spin8") == dims_from_census(Space::Spin8);
    const bool su4_ok = dims_from_ring("su4") == dims_from_census(Space::SU4);
    const bool ok = spin7_ok && spin8_ok && su4_ok;
    return {row("cohomology.basis_census_bridge", "spin7,spin8,su4", ok, ok ? 0 : 1, 0.5, 3,
                cfg.seed)};
}

std::vector<CheckResult> check_cup_length_completeness(const CheckConfig& cfg) {
    bool ok = true;
    for (const std::string tag : {"f1", "f2"}) {
        const GradedRingGF2 ring = ring_for_space(tag);
        if (cup_length(ring) != cup_length_bruteforce(ring)) ok = false;
    }
    return {row("cohomology.cup_length_completeness", "f1,f2", ok, ok ? 0 : 1, 0.5, 2, cfg.seed,
                "generator-restricted search vs homogeneous brute force")};
}

std::vector<CheckResult> check_ss_ledger(const CheckConfig& cfg) {
    std::vector<CheckResult> out;
    const LedgerReport r = ss_ledger_check();
    out.push_back(row("cohomology.ss_ledger", "fibration", r.ok, r.ok ? 0 : 1, 0.5,
                      static_cast<long>(r.lines.size()), cfg.seed, r.ok ? "" : r.failure));
    // the candidate fiber ranks themselves
    const std::map<int, int> expected = {{7, 1}, {9, 2}, {11, 4}, {8, 0}, {10, 0}};
    bool ranks_ok = true;
    {
        const std::string text = spin7::data::ss_ledger_text();
        std::istringstream in(text);
        std::string line;
        std::map<int, int> fiber_table;
        while (std::getline(in, line)) {
            std::istringstream row_in(line);
            std::string kw, tag;
            row_in >> kw >> tag;
            if (kw != "table" || tag != "fiber") continue;
            std::string entry;
            while (row_in >> entry) {
                const auto colon = entry.find(':');
                fiber_table[std::stoi(entry.substr(0, colon))] = std::stoi(entry.substr(colon + 1));
            }
        }
        for (const auto& [deg, rank] : expected) {
            const auto it = fiber_table.find(deg);
            const int got = it == fiber_table.end() ? 0 : it->second;
            if (got != rank) ranks_ok = false;
        }
    }
    out.push_back(row("cohomology.fiber_ranks", "H*(F)", ranks_ok, ranks_ok ? 0 : 1, 0.5, 5,
                      cfg.seed, "degrees 7,9,11 ranks 1,2,4; 8,10 zero"));
    return out;
}

std::vector<CheckResult> check_sq2(const CheckConfig& cfg) {
    const LedgerReport r = sq2_check();
    return {row("cohomology.sq2", "12-skeleton", r.ok, r.ok ? 0 : 1, 0.5,
                static_cast<long>(r.lines.size()), cfg.seed, r.ok ? "" : r.failure)};
}

} // namespace

const std::vector<CheckSpec>& check_registry() {
    static const std::vector<CheckSpec> registry = {
        {"cayley.table_derivation", "cayley", check_table_derivation},
        {"cayley.alternativity", "cayley", check_alternativity},
        {"cayley.conj_antiautomorphism", "cayley", check_conj_antiautomorphism},
        {"cayley.nonassociativity_witness", "cayley", check_nonassociativity},
        {"groups.orthogonality", "groups", check_generator_orthogonality},
        {"groups.g2_identities", "groups", check_g2_identities},
        {"groups.dprime_identity", "groups", check_dprime_identity},
        {"groups.spin7_membership", "groups", check_spin7_membership},
        {"groups.double_cover", "groups", check_double_cover},
        {"charts.p0phi7_roundtrip", "charts", check_p0phi7_roundtrip},
        {"charts.p0phi7_boundary", "charts", check_p0phi7_boundary},
        {"charts.phi6_inversion", "charts", check_phi6_inversion},
        {"charts.phi5_phi3_inversion", "charts", check_phi5_phi3_inversion},
        {"charts.factorize", "charts", check_factorize},
        {"charts.factorize_surjectivity", "charts", check_factorize_surjectivity},
        {"charts.disjointness", "charts", check_disjointness},
        {"charts.cell_commutation", "charts", check_cell_commutation},
        {"complex.census", "complex", check_census},
        {"complex.boundaries", "complex", check_boundaries},
        {"complex.filtration", "complex", check_filtration_ledger},
        {"complex.join_model", "complex", check_join_model},
        {"cohomology.cup_length", "cohomology", check_cup_length},
        {"cohomology.ls_category", "cohomology", check_ls_category},
        {"cohomology.basis_census_bridge", "cohomology", check_basis_census_bridge},
        {"cohomology.cup_length_completeness", "cohomology", check_cup_length_completeness},
        {"cohomology.ss_ledger", "cohomology", check_ss_ledger},
        {"cohomology.sq2", "cohomology", check_sq2},
    };
    return registry;
}

std::vector<std::string> known_suites() {
    return {"cayley", "groups", "charts", "complex", "cohomology", "all"};
}

bool suite_known(const std::string& suite) {
    const auto suites = known_suites();
    return std::find(suites.begin(), suites.end(), suite) != suites.end();
}

std::vector<CheckResult> run_suite(const std::string& suite, const CheckConfig& cfg) {
    if (!suite_known(suite)) throw DomainError("unknown suite: " + suite);
    std::vector<CheckResult> rows;
    for (const CheckSpec& spec : check_registry()) {
        if (suite != "all" && spec.suite != suite) continue;
        const std::vector<CheckResult> results = spec.run(cfg);
        rows.insert(rows.end(), results.begin(), results.end());
    }
    std::stable_sort(rows.begin(), rows.end(), [](const CheckResult& a, const CheckResult& b) {
        if (a.id != b.id) return a.id < b.id;
        return a.subject < b.subject;
    });
    return rows;
}

std::string format_report_text(const std::vector<CheckResult>& rows) {
    std::ostringstream out;
    out << "# check  subject  status  metric  tolerance  samples  seed  note\n";
    char metric_buf[32], tol_buf[32];
    for (const CheckResult& r : rows) {
        std::snprintf(metric_buf, sizeof metric_buf, "%.3e", r.metric);
        std::snprintf(tol_buf, sizeof tol_buf, "%.3e", r.tolerance);
        out << r.id << "  " << r.subject << "  " << r.status << "  " << metric_buf << "  "
            << tol_buf << "  " << r.samples << "  " << r.seed;
        if (!r.note.empty()) out << "  # " << r.note;
        out << '\n';
    }
    return out.str();
}

std::string format_report_json(const std::vector<CheckResult>& rows) {
    // kept dependency-light: the schema is flat
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + "\"";
    };
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const CheckResult& r = rows[i];
        out << "  {\"check\": " << quote(r.id) << ", \"subject\": " << quote(r.subject)
            << ", \"status\": " << quote(r.status) << ", \"metric\": " << r.metric
            << ", \"tolerance\": " << r.tolerance << ", \"samples\": " << r.samples
            << ", \"seed\": " << r.seed << ", \"note\": " << quote(r.note) << "}"
            << (i + 1 == rows.size() ? "" : ",") << '\n';
    }
    out << "]\n";
    return out.str();
}

} // namespace spin7
