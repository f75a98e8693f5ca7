#include "spin7cells/groups.hpp"

#include <cmath>

#include "spin7cells/errors.hpp"

namespace spin7 {

namespace {

double squared_norm(std::span<const double> p) {
    double n = 0.0;
    for (double v : p) n += v * v;
    return n;
}

// Nonnegative radical sqrt(1 - |p|^2), clamped against roundoff; rejects
// points measurably outside the closed disc.
double radical(std::span<const double> p, const char* who) {
    const double n2 = squared_norm(p);
    if (n2 > 1.0 + 1e-9) throw DomainError(std::string(who) + ": parameters outside the unit disc");
    return std::sqrt(std::max(0.0, 1.0 - n2));
}

} // namespace

int generator_param_count(Generator k) {
    switch (k) {
        case Generator::A: return 3;
        case Generator::B: return 2;
        case Generator::C: return 1;
        case Generator::D: return 2;
        case Generator::Dprime: return 2;
    }
    return 0;
}

Mat8 generator_matrix(Generator k, std::span<const double> params) {
    if (static_cast<int>(params.size()) != generator_param_count(k))
        throw DomainError("generator_matrix: wrong parameter count");
    Mat8 m = Mat8::identity();
    switch (k) {
        case Generator::A: {
            const double x1 = params[0], x2 = params[1], x3 = params[2];
            const double X = radical(params, "A");
            m(4, 4) = 1 - 2 * X * X; m(4, 5) = -2 * x1 * X; m(4, 6) = -2 * x2 * X; m(4, 7) = -2 * x3 * X;
            m(5, 4) = 2 * x1 * X;    m(5, 5) = 1 - 2 * X * X; m(5, 6) = 2 * x3 * X;  m(5, 7) = -2 * x2 * X;
            m(6, 4) = 2 * x2 * X;    m(6, 5) = -2 * x3 * X;   m(6, 6) = 1 - 2 * X * X; m(6, 7) = 2 * x1 * X;
            m(7, 4) = 2 * x3 * X;    m(7, 5) = 2 * x2 * X;    m(7, 6) = -2 * x1 * X;  m(7, 7) = 1 - 2 * X * X;
            break;
        }
        case Generator::B: {
            const double y1 = params[0], y2 = params[1];
            const double Y = radical(params, "B");
            m(2, 2) = y1; m(2, 3) = -y2; m(2, 4) = -Y; m(2, 5) = 0;
            m(3, 2) = y2; m(3, 3) = y1;  m(3, 4) = 0;  m(3, 5) = -Y;
            m(4, 2) = Y;  m(4, 3) = 0;   m(4, 4) = y1; m(4, 5) = y2;
            m(5, 2) = 0;  m(5, 3) = Y;   m(5, 4) = -y2; m(5, 5) = y1;
            break;
        }
        case Generator::C: {
            const double z1 = params[0];
            const double Z = radical(params, "C");
            m(1, 1) = z1; m(1, 3) = -Z;
            m(3, 1) = Z;  m(3, 3) = z1;
            m(5, 5) = z1; m(5, 7) = -Z;
            m(7, 5) = Z;  m(7, 7) = z1;
            break;
        }
        case Generator::D: {
            const double w1 = params[0], w2 = params[1];
            const double W = radical(params, "D");
            m(0, 0) = w1; m(0, 1) = -w2; m(0, 2) = -W; m(0, 3) = 0;
            m(1, 0) = w2; m(1, 1) = w1;  m(1, 2) = 0;  m(1, 3) = -W;
            m(2, 0) = W;  m(2, 1) = 0;   m(2, 2) = w1; m(2, 3) = w2;
            m(3, 0) = 0;  m(3, 1) = W;   m(3, 2) = -w2; m(3, 3) = w1;
            break;
        }
        case Generator::Dprime: {
            const double w1 = params[0], w2 = params[1];
            const double W = radical(params, "Dprime");
            m(4, 4) = w1;  m(4, 5) = -w2; m(4, 6) = W;   m(4, 7) = 0;
            m(5, 4) = w2;  m(5, 5) = w1;  m(5, 6) = 0;   m(5, 7) = -W;
            m(6, 4) = -W;  m(6, 5) = 0;   m(6, 6) = w1;  m(6, 7) = -w2;
            m(7, 4) = 0;   m(7, 5) = W;   m(7, 6) = w2;  m(7, 7) = w1;
            break;
        }
    }
    return m;
}

bool is_special_orthogonal(const Mat8& m, double tol) {
    const Mat8 gram = m.transposed() * m;
    if (gram.max_abs_diff(Mat8::identity()) > tol) return false;
    return std::abs(m.determinant() - 1.0) <= tol;
}

Octonion random_unit_octonion(std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Octonion o;
    double n2 = 0.0;
    do {
        n2 = 0.0;
        for (int i = 0; i < 8; ++i) {
            o[i] = gauss(rng);
            n2 += o[i] * o[i];
        }
    } while (n2 < 1e-12);
    return o * (1.0 / std::sqrt(n2));
}

void random_in_ball(std::span<double> out, double margin, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const double radius = 1.0 - margin;
    while (true) {
        double n2 = 0.0;
        for (double& v : out) {
            v = uni(rng);
            n2 += v * v;
        }
        if (n2 <= 1.0) {
            for (double& v : out) v *= radius;
            return;
        }
    }
}

void random_on_sphere(std::span<double> out, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    while (true) {
        double n2 = 0.0;
        for (double& v : out) {
            v = gauss(rng);
            n2 += v * v;
        }
        if (n2 < 1e-12) continue;
        const double f = (1.0 + 4e-16) / std::sqrt(n2);
        double check = 0.0; // same accumulation order as the radical
        for (double& v : out) {
            v *= f;
            check += v * v;
        }
        if (check >= 1.0) return;
    }
}

bool is_g2(const Mat8& m, int nsamples, double tol, std::mt19937_64& rng) {
    if (inf_dist(m * Octonion::basis(0), Octonion::basis(0)) > tol) return false;
    for (int s = 0; s < nsamples; ++s) {
        const Octonion x = random_unit_octonion(rng);
        const Octonion y = random_unit_octonion(rng);
        const Octonion lhs = octonion_mul(m * x, m * y);
        const Octonion rhs = m * octonion_mul(x, y);
        if (inf_dist(lhs, rhs) > tol) return false;
    }
    return true;
}

bool is_g2(const Mat8& m, int nsamples, double tol, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return is_g2(m, nsamples, tol, rng);
}

Mat8 vector_rep(const Mat8& gt) {
    const Octonion u = gt * Octonion::basis(0);
    const Octonion u_inv = inverse(u); // right division by gt(e0)
    Mat8 g;
    for (int j = 0; j < 8; ++j) {
        const Octonion col = octonion_mul(gt.column(j), u_inv);
        for (int i = 0; i < 8; ++i) g(i, j) = col[i];
    }
    return g;
}

bool is_spin7_diagnose(const Mat8& gt, int nsamples, double tol,
                       std::mt19937_64& rng, std::string* failed_clause) {
    auto fail = [&](const char* clause) {
        if (failed_clause) *failed_clause = clause;
        return false;
    };
    if (norm(gt * Octonion::basis(0)) < 1e-12) return fail("ge0 has zero norm");
    const Mat8 g = vector_rep(gt);
    if (inf_dist(g * Octonion::basis(0), Octonion::basis(0)) > tol)
        return fail("vector representative moves e0");
    if (!is_special_orthogonal(g, tol)) return fail("vector representative not in SO(7)");
    for (int s = 0; s < nsamples; ++s) {
        const Octonion x = random_unit_octonion(rng);
        const Octonion y = random_unit_octonion(rng);
        const Octonion lhs = octonion_mul(g * x, gt * y);
        const Octonion rhs = gt * octonion_mul(x, y);
        if (inf_dist(lhs, rhs) > tol) return fail("spin identity g(x)g~(y) = g~(xy)");
    }
    return true;
}

bool is_spin7(const Mat8& gt, int nsamples, double tol, std::mt19937_64& rng) {
    return is_spin7_diagnose(gt, nsamples, tol, rng, nullptr);
}

bool is_spin7(const Mat8& gt, int nsamples, double tol, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return is_spin7(gt, nsamples, tol, rng);
}

const Mat8& complex_structure() {
    static const Mat8 j = [] {
        Mat8 m;
        const Octonion e1 = Octonion::basis(1);
        for (int col = 0; col < 8; ++col) {
            const Octonion img = octonion_mul(e1, Octonion::basis(col));
            for (int row = 0; row < 8; ++row) m(row, col) = img[row];
        }
        return m;
    }();
    return j;
}

std::array<std::complex<double>, 16> complex_matrix(const Mat8& m) {
    std::array<std::complex<double>, 16> z;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            z[static_cast<std::size_t>(r * 4 + c)] = {m(2 * r, 2 * c), m(2 * r + 1, 2 * c)};
    return z;
}

namespace {

std::complex<double> det4(std::array<std::complex<double>, 16> lu) {
    std::complex<double> det = 1.0;
    for (int col = 0; col < 4; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 4; ++r)
            if (std::abs(lu[r * 4 + col]) > std::abs(lu[pivot * 4 + col])) pivot = r;
        if (std::abs(lu[pivot * 4 + col]) == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = 0; j < 4; ++j) std::swap(lu[pivot * 4 + j], lu[col * 4 + j]);
            det = -det;
        }
        det *= lu[col * 4 + col];
        for (int r = col + 1; r < 4; ++r) {
            const std::complex<double> f = lu[r * 4 + col] / lu[col * 4 + col];
            for (int j = col; j < 4; ++j) lu[r * 4 + j] -= f * lu[col * 4 + j];
        }
    }
    return det;
}

} // namespace

bool is_su4(const Mat8& m, double tol) {
    const Mat8& j = complex_structure();
    if ((m * j).max_abs_diff(j * m) > tol) return false;
    const std::complex<double> det = det4(complex_matrix(m));
    return std::abs(det - std::complex<double>(1.0, 0.0)) <= tol;
}

Octonion proj_p0(const Mat8& g) { return g.column(0); }

Octonion proj_p(const Mat8& g) { return vector_rep(g) * Octonion::basis(1); }

} // namespace spin7
