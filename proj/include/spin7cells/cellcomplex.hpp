#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "spin7cells/charts.hpp"

namespace spin7 {

enum class Space { SU2, SU3, SU4, G2, Spin7, Spin8 };

Space parse_space(const std::string& tag); // "su2", ..., "spin8"
std::string space_name(Space s);

/// One cell of a census. Spin(8) cells carry an extra S^7 factor flag; for
/// every other space `s7_factor` is false and the label alone names the cell.
struct Cell {
    CellLabel label;
    bool s7_factor = false;

    int dim() const { return label.dim() + (s7_factor ? 7 : 0); }
    std::string name() const;
};

/// Generator dimensions of the space's product decomposition
/// (SU3: {5,3}; SU4: {7,5,3}; G2: {6,5,3}; Spin7/Spin8: {6,7,5,3}).
const std::vector<int>& space_generators(Space s);

/// The full subset lattice: 2^|generators| cells (x2 for Spin(8)).
std::vector<Cell> cell_census(Space s);

/// Coefficient vector of sum_cells t^dim == prod_gens (1 + t^n).
std::vector<long long> poincare_polynomial(Space s);

struct BoundaryRelation {
    CellLabel cell;
    std::vector<CellLabel> faces; // closed cells containing the boundary
};

/// The shipped containment table, filtered to cells present in the census.
std::vector<BoundaryRelation> boundary_relations(Space s);

std::vector<BoundaryRelation> parse_boundary_relations(const std::string& text);
std::string serialize_boundary_relations(const std::vector<BoundaryRelation>& rels);

/// Structural check: every listed face exists, has strictly smaller dimension,
/// and the transitive closure stays inside the census.
bool boundary_relations_structural_ok(Space s, std::string* why = nullptr);

/// Downward closure of a set of cells under the shipped table (a cell's closed
/// cell meets exactly the open cells reachable this way).
std::set<int> boundary_closure(std::span<const int> cell_dims);

struct BoundaryCheckReport {
    int samples = 0;
    int ok = 0;
    int skipped = 0;
    std::vector<std::string> violations;

    bool passed(double max_skip_fraction = 0.10) const;
};

/// Samples every boundary face of the cell's parameter domain (one disc factor
/// on its boundary sphere, the rest interior), factorizes the chart product,
/// and requires the resulting open cell to lie in the closure of the listed
/// faces. Factorization ambiguities near eps_base are skipped and counted.
BoundaryCheckReport verify_boundaries_numeric(const BoundaryRelation& rel,
                                              int samples_per_face,
                                              std::uint64_t seed,
                                              double margin = 0.05);

/// One cone attachment: X_i -> F_{i-1} -> F_i.
struct FiltrationStep {
    int index = 0;
    std::string attach; // attachment-space expression, e.g. "S14 + join(S5, CP3)"
    std::vector<CellLabel> new_cells;
};

struct Filtration {
    std::string name; // "F" (the full group) or "F'" (the SU(4) skeleta)
    std::vector<FiltrationStep> steps;
};

/// Shipped filtrations parsed from the ledger file.
Filtration filtration_ledger();        // F_0 subset ... subset F_5
Filtration su4_filtration_ledger();    // F'_0 subset ... subset F'_3
Filtration parse_filtration(const std::string& text, const std::string& name);

/// Reduced-homology degree multiset of an attachment expression. Grammar:
///   expr  := term ('+' term)*            (wedge: union of degree multisets)
///   term  := 'S' n | 'CP' n | 'A' | 'join(' expr ',' expr ')'
/// with degrees(S^n) = {n}, degrees(CP^n) = {2,4,...,2n}, degrees(A) = {7,9,11},
/// degrees(join(X,Y)) = {dx + dy + 1}.
std::vector<int> attach_degrees(const std::string& expr);

struct FiltrationCheck {
    bool ok = true;
    std::vector<std::string> lines;
};

/// Per-step verification: new-cell dims match attachment degrees + 1, the
/// steps are monotone and exhaust the census, and each step's labels carry the
/// predicted generators.
FiltrationCheck check_filtration(const Filtration& f, Space s);

/// Number of cone attachments the ledger provides for a category upper bound.
int cone_length(const std::string& space_tag);

/// Derived cone ledger for the product with S^7: step i attaches
/// X_i wedge join(X_{i-1}, S^6), giving length 6.
Filtration spin8_cone_ledger();

/// The multiset of ledger dims (plus the basepoint) must equal the product
/// census dims.
FiltrationCheck check_spin8_cone_ledger();

/// Disc model of the join homeomorphism: (D^m x D^n, boundary) -> (D^{m+n}, S^{m+n-1}),
/// radially rescaling so the block-max norm becomes the euclidean norm.
std::vector<double> join_box_to_ball(int m, int n, std::span<const double> point);
std::vector<double> join_ball_to_box(int m, int n, std::span<const double> point);

} // namespace spin7
