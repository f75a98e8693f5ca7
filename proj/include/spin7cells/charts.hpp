#pragma once

#include <span>
#include <string>
#include <vector>

#include "spin7cells/groups.hpp"
#include "spin7cells/mat8.hpp"

namespace spin7 {

/// The four characteristic maps, keyed by cell dimension.
enum class Chart { Phi3 = 3, Phi5 = 5, Phi6 = 6, Phi7 = 7 };

Chart chart_from_dim(int k);

/// Disc factors of the chart domain: Phi3 -> {3}; Phi5 -> {3,2};
/// Phi6 -> {3,2,1}; Phi7 -> {3,2,2}.
const std::vector<int>& chart_factor_dims(Chart k);
int chart_param_count(Chart k);

/// Coordinates are stored flat in factor order:
/// [x1 x2 x3 | y1 y2 | z1] for Phi6, [x1 x2 x3 | y1 y2 | w1 w2] for Phi7, etc.
struct DiscParam {
    Chart chart;
    std::vector<double> coords;

    /// Largest factor norm (a point is "interior with margin m" when this
    /// stays <= 1 - m).
    double max_factor_norm() const;
};

DiscParam random_interior_param(Chart k, double margin, std::mt19937_64& rng);

/// The conjugation product of generator matrices for the chart.
Mat8 char_map(Chart k, std::span<const double> coords);
Mat8 char_map(const DiscParam& v);

/// Index of the basis vector each stage projection is based at:
/// Phi6 -> e1, Phi7 -> e0, Phi5 -> e2, Phi3 -> e4.
int chart_basepoint(Chart k);

/// Stage projection applied to an arbitrary group element g:
/// Phi6 uses p(g) = vector_rep(g) e1; the others are plain columns g e_b.
Octonion stage_projection(Chart k, const Mat8& g);

/// Same projection evaluated on the chart itself; since every chart image
/// fixes e0 or is its own vector representative where needed, this reduces to
/// a column of char_map.
Octonion chart_projection(Chart k, std::span<const double> coords);

/// Closed-form inverse of the 7-cell projection a = p0(phi7(v)).
/// Throws BoundaryError when a is within eps_base of the basepoint e0.
DiscParam invert_p0_phi7(const Octonion& a, double eps_base = 1e-6);

struct GaussNewtonOptions {
    int max_iterations = 100;
    double fd_step = 1e-7;          // forward-difference Jacobian step
    double step_tol = 1e-12;        // convergence on the damped step norm
    double residual_tol = 1e-10;    // required forward-image residual
    int max_starts = 8;             // deterministic multi-starts
    double eps_base = 1e-6;         // basepoint rejection radius
};

/// Damped Gauss-Newton inversion of the stage projections for k in {3,5,6}.
/// Throws BoundaryError for targets within eps_base of the chart basepoint,
/// NumericError when no start converges.
DiscParam invert_chart_numeric(Chart k, const Octonion& target,
                               const GaussNewtonOptions& opts = {});

/// A product cell name: the subset of generators {6,7,5,3} present, kept in
/// canonical product order e^6 e^7 e^5 e^3.
struct CellLabel {
    std::vector<int> gens;

    static CellLabel from_gens(std::vector<int> gens); // sorts canonically
    static CellLabel from_dim(int dim);                // unique in this complex

    int dim() const;
    bool contains(int gen) const;
    bool operator==(const CellLabel& o) const { return gens == o.gens; }
    bool operator<(const CellLabel& o) const;

    /// "e0", "e13", ... (dimensions are unique across the complex).
    std::string name() const;
    /// Generator word, e.g. "6.7.5.3" ("1" for the trivial cell).
    std::string word() const;
};

struct Factorization {
    CellLabel label;
    std::vector<DiscParam> factors; // aligned with label.gens
    double terminal_residual = 0.0; // ||residue - I||_inf after peeling

    Mat8 reconstruct() const;
};

/// Peels g through the stages 6, 7, 5, 3 in canonical order. Each stage fires
/// only when the stage projection is farther than eps_base from its basepoint.
/// Throws InconsistencyError when the terminal residue is not the identity
/// within tol (non-member input, or a stage within eps_base ambiguity of a
/// cell boundary).
Factorization factorize(const Mat8& g, double tol = 1e-6, double eps_base = 1e-6);

} // namespace spin7
