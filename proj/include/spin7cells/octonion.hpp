#pragma once

#include <array>
#include <cstdint>
#include <string>

namespace spin7 {

/// Element of the Cayley algebra, stored as coefficients over the basis
/// e0..e7 (e0 is the unit). Doubles throughout; the basis products are
/// exact integers held in MultTable.
struct Octonion {
    std::array<double, 8> c{};

    static Octonion basis(int i);

    double& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
    double operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

    Octonion operator+(const Octonion& o) const;
    Octonion operator-(const Octonion& o) const;
    Octonion operator*(double s) const;
    Octonion operator-() const;

    /// Quadratic norm N(x) = sum of squared coefficients (not the length).
    double norm() const;
    /// max_i |c_i|
    double inf_norm() const;
};

double inf_dist(const Octonion& a, const Octonion& b);

/// Signed basis product: e_i * e_j = sign * e_index.
struct TableEntry {
    int sign = 1;
    int index = 0;
};

/// The 8x8 signed multiplication table on basis octonions.
class MultTable {
public:
    MultTable();

    TableEntry at(int i, int j) const { return entries_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    /// Build from the seven oriented lines (a,b,c): e_a e_b = sign * e_c,
    /// cyclically, together with the forced unit/square/anticommutation rules.
    static MultTable from_lines(const std::array<std::array<int, 3>, 7>& lines,
                                const std::array<int, 7>& orientation);

    /// Text format: 64 lines "i j sign k" meaning e_i e_j = sign * e_k.
    static MultTable parse(const std::string& text);
    std::string serialize() const;

    /// Unit row/column, e_i^2 = -e0, anticommutativity, and the complex-module
    /// convention e1 e_{2k} = e_{2k+1}. On failure `why` names the first
    /// violated rule.
    bool structural_ok(std::string* why = nullptr) const;

    bool operator==(const MultTable& other) const;

private:
    std::array<std::array<TableEntry, 8>, 8> entries_;
};

/// The shipped table (embedded copy of data/mult_table.txt), parsed once.
const MultTable& cayley_table();

/// Products and friends against an explicit table (used by the derivation
/// search) and against the shipped table.
Octonion mul(const Octonion& x, const Octonion& y, const MultTable& table);
Octonion octonion_mul(const Octonion& x, const Octonion& y);

Octonion conj(const Octonion& x);
double norm(const Octonion& x);
/// conj(x)/N(x); throws DomainError when N(x) < 1e-12.
Octonion inverse(const Octonion& x);

struct TableDerivation {
    MultTable table;
    std::array<int, 7> orientation; // relative to the reference lines below
    int candidates_checked = 0;
    int survivors = 0;
};

/// Reference (unoriented) lines of the Fano plane compatible with the
/// complex-module convention: the lines through 1 are {1,2,3},{1,4,5},{1,6,7}.
const std::array<std::array<int, 3>, 7>& fano_reference_lines();

/// Exhaustive search over the 2^7 orientation assignments of the reference
/// lines, keeping the unique one for which (a) the structural rules hold,
/// (b) norm multiplicativity holds on random samples, (c) the generator
/// matrices A, B, C satisfy M(x)M(y) = M(xy), and (d) D'(w)x * D(w)y = D(w)(xy).
/// Throws ConfigError unless exactly one assignment survives.
TableDerivation derive_mult_table(int samples_per_constraint = 64,
                                  std::uint64_t seed = 0x5eed'0c7au);

} // namespace spin7
