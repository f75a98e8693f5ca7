#include "spin7cells/charts.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spin7cells/errors.hpp"

namespace spin7 {

Chart chart_from_dim(int k) {
    switch (k) {
        case 3: return Chart::Phi3;
        case 5: return Chart::Phi5;
        case 6: return Chart::Phi6;
        case 7: return Chart::Phi7;
        default: throw DomainError("no chart of dimension " + std::to_string(k));
    }
}

const std::vector<int>& chart_factor_dims(Chart k) {
    static const std::vector<int> d3 = {3};
    static const std::vector<int> d5 = {3, 2};
    static const std::vector<int> d6 = {3, 2, 1};
    static const std::vector<int> d7 = {3, 2, 2};
    switch (k) {
        case Chart::Phi3: return d3;
        case Chart::Phi5: return d5;
        case Chart::Phi6: return d6;
        case Chart::Phi7: return d7;
    }
    return d3;
}

int chart_param_count(Chart k) {
    int n = 0;
    for (int d : chart_factor_dims(k)) n += d;
    return n;
}

double DiscParam::max_factor_norm() const {
    double worst = 0.0;
    std::size_t off = 0;
    for (int d : chart_factor_dims(chart)) {
        double n2 = 0.0;
        for (int i = 0; i < d; ++i) n2 += coords[off + i] * coords[off + i];
        worst = std::max(worst, std::sqrt(n2));
        off += static_cast<std::size_t>(d);
    }
    return worst;
}

DiscParam random_interior_param(Chart k, double margin, std::mt19937_64& rng) {
    DiscParam v{k, std::vector<double>(static_cast<std::size_t>(chart_param_count(k)))};
    std::size_t off = 0;
    for (int d : chart_factor_dims(k)) {
        random_in_ball(std::span<double>(v.coords.data() + off, static_cast<std::size_t>(d)), margin, rng);
        off += static_cast<std::size_t>(d);
    }
    return v;
}

Mat8 char_map(Chart k, std::span<const double> coords) {
    if (static_cast<int>(coords.size()) != chart_param_count(k))
        throw DomainError("char_map: wrong coordinate count for chart");
    const Mat8 a = generator_matrix(Generator::A, coords.subspan(0, 3));
    switch (k) {
        case Chart::Phi3:
            return a;
        case Chart::Phi5: {
            const Mat8 b = generator_matrix(Generator::B, coords.subspan(3, 2));
            return b * a * b.transposed();
        }
        case Chart::Phi6: {
            const Mat8 b = generator_matrix(Generator::B, coords.subspan(3, 2));
            const Mat8 c = generator_matrix(Generator::C, coords.subspan(5, 1));
            return c * (b * a * b.transposed()) * c.transposed();
        }
        case Chart::Phi7: {
            const Mat8 b = generator_matrix(Generator::B, coords.subspan(3, 2));
            const Mat8 d = generator_matrix(Generator::D, coords.subspan(5, 2));
            return d * (b * a * b.transposed()) * d.transposed();
        }
    }
    throw DomainError("char_map: bad chart");
}

Mat8 char_map(const DiscParam& v) { return char_map(v.chart, v.coords); }

int chart_basepoint(Chart k) {
    switch (k) {
        case Chart::Phi6: return 1;
        case Chart::Phi7: return 0;
        case Chart::Phi5: return 2;
        case Chart::Phi3: return 4;
    }
    return 0;
}

Octonion stage_projection(Chart k, const Mat8& g) {
    if (k == Chart::Phi6) return proj_p(g);
    return g.column(chart_basepoint(k));
}

Octonion chart_projection(Chart k, std::span<const double> coords) {
    // every chart image fixes e0, so its vector representative is itself and
    // the stage projection reduces to a matrix column
    return char_map(k, coords).column(chart_basepoint(k));
}

DiscParam invert_p0_phi7(const Octonion& a, double eps_base) {
    if (std::abs(norm(a) - 1.0) > 1e-6)
        throw DomainError("invert_p0_phi7: target is not a unit vector");
    const double s = 1.0 - a[0];
    if (s < eps_base)
        throw BoundaryError("invert_p0_phi7: target within eps of the basepoint e0");

    const double a1 = a[1], a2 = a[2], a3 = a[3], a4 = a[4], a5 = a[5];
    const double p = s * s + a1 * a1;
    const double q = p + a2 * a2 + a3 * a3;
    const double r = q + a4 * a4 + a5 * a5;

    const double x2 = a[6] / std::sqrt(2.0 * s);
    const double x3 = a[7] / std::sqrt(2.0 * s);
    const double x1 = a1 * std::sqrt(r / (2.0 * s * p));
    const double y1 = (a1 * a5 - s * a4) / std::sqrt(p * r);
    const double y2 = (a1 * a4 + s * a5) / std::sqrt(p * r);
    const double w1 = (s * a2 - a1 * a3) / std::sqrt(p * q);
    const double w2 = (-a1 * a2 - s * a3) / std::sqrt(p * q);

    return DiscParam{Chart::Phi7, {x1, x2, x3, y1, y2, w1, w2}};
}

namespace {

// Chart evaluation with each disc factor radially clamped to the closed disc,
// so finite-difference probes just outside the domain stay well defined.
Octonion projection_clamped(Chart k, std::span<const double> coords) {
    std::vector<double> v(coords.begin(), coords.end());
    std::size_t off = 0;
    for (int d : chart_factor_dims(k)) {
        double n2 = 0.0;
        for (int i = 0; i < d; ++i) n2 += v[off + i] * v[off + i];
        if (n2 > 1.0) {
            const double f = 1.0 / std::sqrt(n2);
            for (int i = 0; i < d; ++i) v[off + i] *= f;
        }
        off += static_cast<std::size_t>(d);
    }
    return chart_projection(k, v);
}

void clamp_factors(Chart k, std::vector<double>& v, double max_norm) {
    std::size_t off = 0;
    for (int d : chart_factor_dims(k)) {
        double n2 = 0.0;
        for (int i = 0; i < d; ++i) n2 += v[off + i] * v[off + i];
        if (n2 > max_norm * max_norm) {
            const double f = max_norm / std::sqrt(n2);
            for (int i = 0; i < d; ++i) v[off + i] *= f;
        }
        off += static_cast<std::size_t>(d);
    }
}

double euclid(const Octonion& o) { return std::sqrt(o.norm()); }

// Solves (A + mu I) delta = rhs in place for small n; returns false on a zero pivot.
bool solve_spd(std::vector<double> m, std::vector<double>& delta, int n) {
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row)
            if (std::abs(m[static_cast<std::size_t>(row * n + col)]) >
                std::abs(m[static_cast<std::size_t>(pivot * n + col)]))
                pivot = row;
        if (m[static_cast<std::size_t>(pivot * n + col)] == 0.0) return false;
        if (pivot != col) {
            for (int j = 0; j < n; ++j)
                std::swap(m[static_cast<std::size_t>(pivot * n + j)],
                          m[static_cast<std::size_t>(col * n + j)]);
            std::swap(delta[static_cast<std::size_t>(pivot)], delta[static_cast<std::size_t>(col)]);
        }
        for (int row = col + 1; row < n; ++row) {
            const double f =
                m[static_cast<std::size_t>(row * n + col)] / m[static_cast<std::size_t>(col * n + col)];
            for (int j = col; j < n; ++j)
                m[static_cast<std::size_t>(row * n + j)] -= f * m[static_cast<std::size_t>(col * n + j)];
            delta[static_cast<std::size_t>(row)] -= f * delta[static_cast<std::size_t>(col)];
        }
    }
    for (int row = n - 1; row >= 0; --row) {
        double s = delta[static_cast<std::size_t>(row)];
        for (int j = row + 1; j < n; ++j)
            s -= m[static_cast<std::size_t>(row * n + j)] * delta[static_cast<std::size_t>(j)];
        delta[static_cast<std::size_t>(row)] = s / m[static_cast<std::size_t>(row * n + row)];
    }
    return true;
}

// One damped Gauss-Newton run from a fixed start; returns the final residual.
// Damping is Levenberg-style: the factor grows whenever a step would increase
// the residual and shrinks again after accepted steps.
double gauss_newton_run(Chart k, const Octonion& target, std::vector<double>& v,
                        const GaussNewtonOptions& opts) {
    const int n = chart_param_count(k);
    const double clamp_radius = 1.0 - 1e-9;
    clamp_factors(k, v, clamp_radius);
    Octonion res = projection_clamped(k, v) - target;
    double err = euclid(res);
    double damping = 0.0;

    for (int iter = 0; iter < opts.max_iterations && err > 1e-15; ++iter) {
        // forward-difference Jacobian, column per parameter
        std::vector<std::array<double, 8>> jac(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::vector<double> probe = v;
            probe[static_cast<std::size_t>(i)] += opts.fd_step;
            const Octonion shifted = projection_clamped(k, probe) - target;
            for (int row = 0; row < 8; ++row)
                jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(row)] =
                    (shifted[row] - res[row]) / opts.fd_step;
        }
        std::vector<double> jtj(static_cast<std::size_t>(n * n), 0.0);
        std::vector<double> rhs(static_cast<std::size_t>(n), 0.0);
        double diag_max = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i; j < n; ++j) {
                double s = 0.0;
                for (int row = 0; row < 8; ++row)
                    s += jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(row)] *
                         jac[static_cast<std::size_t>(j)][static_cast<std::size_t>(row)];
                jtj[static_cast<std::size_t>(i * n + j)] = s;
                jtj[static_cast<std::size_t>(j * n + i)] = s;
            }
            diag_max = std::max(diag_max, jtj[static_cast<std::size_t>(i * n + i)]);
            double s = 0.0;
            for (int row = 0; row < 8; ++row)
                s += jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(row)] * res[row];
            rhs[static_cast<std::size_t>(i)] = -s;
        }
        const double ridge = std::max(diag_max, 1.0) * 1e-14;

        bool accepted = false;
        std::vector<double> next;
        Octonion next_res;
        double next_err = err;
        double mu = damping;
        std::vector<double> delta(static_cast<std::size_t>(n));
        for (int attempt = 0; attempt < 16; ++attempt) {
            std::vector<double> m = jtj;
            for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i * n + i)] += ridge + mu;
            delta = rhs;
            if (!solve_spd(std::move(m), delta, n)) return err;
            next = v;
            for (int i = 0; i < n; ++i)
                next[static_cast<std::size_t>(i)] += delta[static_cast<std::size_t>(i)];
            clamp_factors(k, next, clamp_radius);
            next_res = projection_clamped(k, next) - target;
            next_err = euclid(next_res);
            if (next_err < err) {
                accepted = true;
                damping = mu * 0.5;
                break;
            }
            mu = (mu == 0.0) ? 1e-6 * std::max(diag_max, 1.0) : mu * 8.0;
        }
        if (!accepted) break;

        double step_norm = 0.0;
        for (int i = 0; i < n; ++i) {
            const double dv = next[static_cast<std::size_t>(i)] - v[static_cast<std::size_t>(i)];
            step_norm += dv * dv;
        }
        v = next;
        res = next_res;
        err = next_err;
        if (std::sqrt(step_norm) <= opts.step_tol) break;
    }
    return err;
}

// Point on the great circle from a to b (both unit), at parameter s in [0,1].
Octonion slerp(const Octonion& a, const Octonion& b, double s) {
    double dot = 0.0;
    for (int i = 0; i < 8; ++i) dot += a[i] * b[i];
    dot = std::clamp(dot, -1.0, 1.0);
    const double theta = std::acos(dot);
    if (theta < 1e-12) return b;
    const double inv_sin = 1.0 / std::sin(theta);
    return a * (std::sin((1.0 - s) * theta) * inv_sin) + b * (std::sin(s * theta) * inv_sin);
}

// Fallback for targets whose preimage hides in a thin shell near the domain
// boundary: walk the target along the great circle from the chart's antipodal
// point (preimage: the domain center) toward the goal, warm-starting each
// solve and bisecting the step on failure.
double continuation_run(Chart k, const Octonion& goal, std::vector<double>& v,
                        const GaussNewtonOptions& opts) {
    const Octonion anti = -Octonion::basis(chart_basepoint(k));
    GaussNewtonOptions sub = opts;
    sub.max_iterations = 60;
    v.assign(static_cast<std::size_t>(chart_param_count(k)), 0.0);
    double s_cur = 0.0, step = 1.0;
    for (int solves = 0; solves < 60; ++solves) {
        const double s_try = std::min(1.0, s_cur + step);
        const Octonion waypoint = slerp(anti, goal, s_try);
        std::vector<double> v_new = v;
        const double sub_err = gauss_newton_run(k, waypoint, v_new, sub);
        const double accept = s_try < 1.0 ? 1e-8 : opts.residual_tol;
        if (sub_err <= accept) {
            v = std::move(v_new);
            s_cur = s_try;
            if (s_cur >= 1.0) return sub_err;
            step *= 1.7;
        } else {
            step *= 0.4;
            if (step < 1e-6) break;
        }
    }
    return euclid(projection_clamped(k, v) - goal); // wherever the walk stopped
}

} // namespace

DiscParam invert_chart_numeric(Chart k, const Octonion& target, const GaussNewtonOptions& opts) {
    if (k == Chart::Phi7)
        throw DomainError("invert_chart_numeric: the 7-cell projection has a closed-form inverse");
    if (std::abs(norm(target) - 1.0) > 1e-6)
        throw DomainError("invert_chart_numeric: target is not a unit vector");
    const int base = chart_basepoint(k);
    for (int i = 0; i < base; ++i)
        if (std::abs(target[i]) > 1e-6)
            throw DomainError("invert_chart_numeric: target outside the chart's sphere");
    // project onto the chart's sphere: off-subspace dust (roundoff from the
    // caller's products) would otherwise floor the attainable residual
    Octonion goal = target;
    for (int i = 0; i < base; ++i) goal[i] = 0.0;
    goal = goal * (1.0 / std::sqrt(goal.norm()));
    if (euclid(goal - Octonion::basis(base)) < opts.eps_base)
        throw BoundaryError("invert_chart_numeric: target within eps of the chart basepoint");

    const int n = chart_param_count(k);

    // deterministic candidate pool, ranked by forward residual; the damped
    // iteration then runs from at most max_starts of the best seeds. Half the
    // pool is pushed onto thin shells near the factor boundaries, where the
    // preimages of near-basepoint targets live.
    std::mt19937_64 start_rng(0x5ca77e7ull + static_cast<unsigned>(n));
    std::uniform_int_distribution<int> shell_pick(0, 4);
    const double shells[5] = {0.5, 0.9, 0.99, 0.999, 0.99999};
    std::vector<std::pair<double, std::vector<double>>> pool;
    pool.emplace_back(0.0, std::vector<double>(static_cast<std::size_t>(n), 0.0));
    for (int c = 1; c < 96; ++c) {
        DiscParam p = random_interior_param(k, 0.02, start_rng);
        if (c >= 48) {
            std::size_t off = 0;
            for (int d : chart_factor_dims(k)) {
                const double radius = shells[shell_pick(start_rng)];
                double n2 = 0.0;
                for (int i = 0; i < d; ++i) n2 += p.coords[off + static_cast<std::size_t>(i)] *
                                                   p.coords[off + static_cast<std::size_t>(i)];
                if (n2 > 0.0) {
                    const double f = radius / std::sqrt(n2);
                    for (int i = 0; i < d; ++i) p.coords[off + static_cast<std::size_t>(i)] *= f;
                }
                off += static_cast<std::size_t>(d);
            }
        }
        pool.emplace_back(0.0, std::move(p.coords));
    }
    for (auto& [score, v] : pool) score = euclid(projection_clamped(k, v) - goal);
    std::sort(pool.begin(), pool.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    double best_err = 1e300;
    std::vector<double> best;
    for (int start = 0; start < opts.max_starts && start < static_cast<int>(pool.size()); ++start) {
        std::vector<double> v = pool[static_cast<std::size_t>(start)].second;
        const double err = gauss_newton_run(k, goal, v, opts);
        if (err < best_err) {
            best_err = err;
            best = v;
        }
        if (best_err <= opts.residual_tol) break;
    }
    if (best_err > opts.residual_tol) {
        // multi-start missed the basin (preimage in a thin boundary shell):
        // walk the target in from the antipode instead
        std::vector<double> v;
        const double err = continuation_run(k, goal, v, opts);
        if (err < best_err) {
            best_err = err;
            best = v;
        }
    }
    if (best_err > opts.residual_tol) {
        std::ostringstream msg;
        msg << "invert_chart_numeric: no start converged (best residual " << best_err << ")";
        throw NumericError(msg.str());
    }
    return DiscParam{k, best};
}

CellLabel CellLabel::from_gens(std::vector<int> gens) {
    static const int order[4] = {6, 7, 5, 3};
    CellLabel label;
    for (int g : order)
        if (std::count(gens.begin(), gens.end(), g) > 0) label.gens.push_back(g);
    if (label.gens.size() != gens.size())
        throw DomainError("cell label: generators must be a subset of {6,7,5,3}");
    return label;
}

CellLabel CellLabel::from_dim(int dim) {
    static const int order[4] = {6, 7, 5, 3};
    for (int mask = 0; mask < 16; ++mask) {
        CellLabel label;
        for (int b = 0; b < 4; ++b)
            if (mask & (1 << b)) label.gens.push_back(order[b]);
        if (label.dim() == dim) return label;
    }
    throw DomainError("no cell of dimension " + std::to_string(dim));
}

int CellLabel::dim() const {
    int d = 0;
    for (int g : gens) d += g;
    return d;
}

bool CellLabel::contains(int gen) const {
    return std::count(gens.begin(), gens.end(), gen) > 0;
}

bool CellLabel::operator<(const CellLabel& o) const {
    if (dim() != o.dim()) return dim() < o.dim();
    return gens < o.gens;
}

std::string CellLabel::name() const { return "e" + std::to_string(dim()); }

std::string CellLabel::word() const {
    if (gens.empty()) return "1";
    std::string w;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) w += '.';
        w += std::to_string(gens[i]);
    }
    return w;
}

Mat8 Factorization::reconstruct() const {
    Mat8 g = Mat8::identity();
    for (const DiscParam& f : factors) g = g * char_map(f);
    return g;
}

Factorization factorize(const Mat8& g, double tol, double eps_base) {
    static const Chart stages[4] = {Chart::Phi6, Chart::Phi7, Chart::Phi5, Chart::Phi3};
    Factorization out;
    Mat8 current = g;
    GaussNewtonOptions opts;
    opts.eps_base = eps_base;
    for (Chart stage : stages) {
        const Octonion target = stage_projection(stage, current);
        const Octonion basepoint = Octonion::basis(chart_basepoint(stage));
        if (std::sqrt((target - basepoint).norm()) <= eps_base) continue;
        DiscParam v = (stage == Chart::Phi7) ? invert_p0_phi7(target, eps_base)
                                             : invert_chart_numeric(stage, target, opts);
        const Mat8 h = char_map(v);
        current = h.transposed() * current;
        out.label.gens.push_back(static_cast<int>(stage));
        out.factors.push_back(std::move(v));
    }
    out.terminal_residual = current.dist_to_identity();
    if (out.terminal_residual > tol) {
        std::ostringstream msg;
        msg << "factorize: terminal residue " << out.terminal_residual
            << " exceeds tolerance (input not in the group, or a stage within eps of a cell boundary)";
        throw InconsistencyError(msg.str());
    }
    return out;
}

} // namespace spin7
