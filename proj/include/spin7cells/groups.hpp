#pragma once

#include <complex>
#include <random>
#include <span>

#include "spin7cells/mat8.hpp"
#include "spin7cells/octonion.hpp"

namespace spin7 {

inline constexpr std::uint64_t kDefaultSeed = 42;

/// The five generator families. A: D^3, B: D^2, C: D^1, D and Dprime: D^2.
enum class Generator { A, B, C, D, Dprime };

int generator_param_count(Generator k);

/// The displayed matrix for the given parameters. Parameters must lie in the
/// closed unit disc of the matching dimension (DomainError otherwise); the
/// radical sqrt(1 - |params|^2) is clamped at zero against roundoff.
Mat8 generator_matrix(Generator k, std::span<const double> params);

bool is_special_orthogonal(const Mat8& m, double tol = 1e-9);

/// Uniform point on the unit sphere of the Cayley algebra.
Octonion random_unit_octonion(std::mt19937_64& rng);

/// Uniform point in the dim-ball of radius (1 - margin).
void random_in_ball(std::span<double> out, double margin, std::mt19937_64& rng);

/// Uniform direction on the unit sphere, nudged so the computed radical
/// sqrt(max(0, 1 - |p|^2)) is exactly zero (the chart collapse at boundary
/// faces is then exact in floating point as well).
void random_on_sphere(std::span<double> out, std::mt19937_64& rng);

/// Automorphism test: fixes e0 and M(x)M(y) = M(xy) on sampled pairs.
/// Caller guarantees orthogonality.
bool is_g2(const Mat8& m, int nsamples, double tol, std::mt19937_64& rng);
bool is_g2(const Mat8& m, int nsamples = 64, double tol = 1e-9,
           std::uint64_t seed = kDefaultSeed);

/// The vector representation g of gt, recovered via g(x) = gt(x) * gt(e0)^{-1}.
Mat8 vector_rep(const Mat8& gt);

/// Defining identity of the spin group inside SO(8):
/// g = vector_rep(gt) fixes e0, lies in SO(7), and g(x) gt(y) = gt(xy) on samples.
bool is_spin7(const Mat8& gt, int nsamples, double tol, std::mt19937_64& rng);
bool is_spin7(const Mat8& gt, int nsamples = 64, double tol = 1e-9,
              std::uint64_t seed = kDefaultSeed);
/// As above, but reports which clause failed ("orthogonality", "vector_rep
/// orthogonality", "spin identity") for diagnostics.
bool is_spin7_diagnose(const Mat8& gt, int nsamples, double tol,
                       std::mt19937_64& rng, std::string* failed_clause);

/// Complex-linearity (commutation with left multiplication by e1) plus unit
/// complex determinant on the basis {e0, e2, e4, e6}. Caller guarantees
/// orthogonality.
bool is_su4(const Mat8& m, double tol = 1e-9);

/// The 4x4 complex matrix of a ℂ-linear m on the basis {e0, e2, e4, e6}.
std::array<std::complex<double>, 16> complex_matrix(const Mat8& m);

/// Left multiplication by e1 as a matrix (the complex structure J).
const Mat8& complex_structure();

/// Bundle projections: p0(g) = g e0, and p(g) = vector_rep(g) e1.
Octonion proj_p0(const Mat8& g);
Octonion proj_p(const Mat8& g);

} // namespace spin7
