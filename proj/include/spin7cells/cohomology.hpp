#pragma once

#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace spin7 {

struct RingGenerator {
    std::string name;
    int degree = 0;
    int height = 2; // g^height = 0, g^{height-1} != 0
};

/// Graded-commutative GF(2) ring with monomial basis prod g_i^{k_i}, k_i < h_i,
/// optionally truncated to a set of kept degrees (an ideal quotient here, since
/// killed monomials only ever multiply into killed or zero monomials).
struct GradedRingGF2 {
    std::vector<RingGenerator> gens;
    std::optional<std::set<int>> kept_degrees;

    static GradedRingGF2 parse(const std::string& text);
    std::string serialize() const;

    int monomial_degree(std::span<const int> exps) const;
    bool monomial_alive(std::span<const int> exps) const;
    /// All alive monomials as exponent vectors.
    std::vector<std::vector<int>> monomials() const;
};

/// degree -> rank
using AdditiveTable = std::map<int, int>;

AdditiveTable additive_basis(const GradedRingGF2& ring);

/// Longest nonzero product of positive-degree generators (with multiplicity).
int cup_length(const GradedRingGF2& ring);

/// Brute-force oracle: longest nonzero product of homogeneous elements.
/// Feasible because every shipped ring has at most one basis monomial per
/// degree; used to certify the generator-restricted search.
int cup_length_bruteforce(const GradedRingGF2& ring);

/// Shipped ring for a space tag: "spin7", "spin8", "su4", the filtration
/// truncations "f1".."f5", and the SU(4) skeleta "fp1".."fp3".
GradedRingGF2 ring_for_space(const std::string& tag);

struct CategoryReport {
    std::string space;
    int wcat_lower = 0;  // cup length of the (truncated) ring
    int cat_upper = 0;   // cone attachments in the ledger
    bool determined() const { return wcat_lower == cat_upper; }
};

CategoryReport ls_category_report(const std::string& space_tag);

/// One transgression-style cancellation: the fiber generator in E_r^{0,q} is
/// matched against E_r^{p, q-r+1} (p = r for all shipped matchings).
struct SsMatching {
    std::string generator;
    int q = 0;
    int p = 0;
    int r = 0;
};

struct LedgerReport {
    bool ok = true;
    std::vector<std::string> lines;
    std::string failure; // first offending bidegree / rule when !ok
};

std::vector<SsMatching> parse_ss_matchings(const std::string& text);

/// Rank bookkeeping for the Serre spectral sequence of the fibration over the
/// 12-skeleton of SU(4): builds E_2^{p,q} ranks for p+q <= 12 from the shipped
/// additive tables, applies each matching as a legal rank-1 cancellation, and
/// compares the survivors against H*(Sigma CP^3).
LedgerReport ss_ledger_check();

/// degree -> image degree (0 means the operation vanishes there)
using Sq2Table = std::map<int, int>;

Sq2Table parse_sq2_table(const std::string& text);

/// Sq^2 sanity on the base table plus the transgression-commutation
/// deductions for the fiber classes in degrees 7 and 9.
LedgerReport sq2_check();

} // namespace spin7
