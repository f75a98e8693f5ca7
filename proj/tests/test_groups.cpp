#include <doctest.h>

#include <random>
#include <sstream>

#include "spin7cells/charts.hpp"
#include "spin7cells/errors.hpp"
#include "spin7cells/groups.hpp"

using namespace spin7;

namespace {
Octonion e(int i) { return Octonion::basis(i); }

Mat8 diag(std::initializer_list<double> entries) {
    Mat8 m;
    int i = 0;
    for (double v : entries) m(i, i) = v, ++i;
    return m;
}
}

TEST_CASE("generator matrices at distinguished parameters") {
    const double x_id[3] = {1, 0, 0};
    CHECK(generator_matrix(Generator::A, x_id).dist_to_identity() == 0.0);
    const double y_id[2] = {1, 0};
    CHECK(generator_matrix(Generator::B, y_id).dist_to_identity() == 0.0);
    const double x0[3] = {0, 0, 0};
    const Mat8 a0 = generator_matrix(Generator::A, x0);
    CHECK(a0.max_abs_diff(diag({1, 1, 1, 1, -1, -1, -1, -1})) == 0.0);
}

TEST_CASE("generator parameters outside the disc are rejected") {
    const double bad[3] = {0.8, 0.7, 0.0};
    CHECK_THROWS_AS(generator_matrix(Generator::A, bad), DomainError);
    const double two[2] = {0.8, 0.7};
    CHECK_THROWS_AS(generator_matrix(Generator::B, std::span<const double>(two, 2)), DomainError);
    CHECK_THROWS_AS(generator_matrix(Generator::A, std::span<const double>(two, 2)), DomainError);
}

TEST_CASE("special orthogonality") {
    CHECK(is_special_orthogonal(Mat8::identity()));
    CHECK_FALSE(is_special_orthogonal(diag({-1, 1, 1, 1, 1, 1, 1, 1})));
    std::mt19937_64 rng(11);
    std::vector<double> x(3);
    for (int s = 0; s < 100; ++s) {
        random_in_ball(x, 0.0, rng);
        CHECK(is_special_orthogonal(generator_matrix(Generator::A, x)));
    }
}

TEST_CASE("automorphism membership") {
    std::mt19937_64 rng(12);
    std::vector<double> p;
    p = {0.3, -0.2, 0.4};
    CHECK(is_g2(generator_matrix(Generator::A, p)));
    p = {0.5, 0.2};
    CHECK(is_g2(generator_matrix(Generator::B, p)));
    p = {0.7};
    CHECK(is_g2(generator_matrix(Generator::C, p)));
    CHECK(is_g2(Mat8::identity()));
    // D moves the unit, so it cannot be an automorphism
    p = {0.5, 0.2};
    CHECK_FALSE(is_g2(generator_matrix(Generator::D, p)));
}

TEST_CASE("vector representation") {
    CHECK(vector_rep(Mat8::identity()).dist_to_identity() == 0.0);
    CHECK(vector_rep(-Mat8::identity()).dist_to_identity() == 0.0);
    const double x[3] = {0.3, -0.1, 0.2};
    const Mat8 a = generator_matrix(Generator::A, x);
    CHECK(vector_rep(a).max_abs_diff(a) <= 1e-15);
}

TEST_CASE("spin membership") {
    const double w[2] = {0.4, -0.3};
    CHECK(is_spin7(generator_matrix(Generator::D, w)));
    CHECK(is_spin7(-Mat8::identity()));
    CHECK_FALSE(is_spin7(diag({1, 1, 1, 1, 1, 1, 1, -1})));
}

TEST_CASE("companion identity for the non-automorphism generator") {
    std::mt19937_64 rng(13);
    std::vector<double> w(2);
    double err = 0.0;
    for (int s = 0; s < 1000; ++s) {
        random_in_ball(w, 0.0, rng);
        const Mat8 d = generator_matrix(Generator::D, w);
        const Mat8 dp = generator_matrix(Generator::Dprime, w);
        const Octonion x = random_unit_octonion(rng);
        const Octonion y = random_unit_octonion(rng);
        err = std::max(err, inf_dist(octonion_mul(dp * x, d * y), d * octonion_mul(x, y)));
    }
    CHECK(err <= 1e-9);
}

TEST_CASE("complex linearity membership") {
    CHECK(is_su4(Mat8::identity()));
    std::mt19937_64 rng(14);
    // the odd-dimensional chart images are complex-linear, the 6-chart is not
    for (Chart k : {Chart::Phi3, Chart::Phi5, Chart::Phi7})
        CHECK(is_su4(char_map(random_interior_param(k, 0.1, rng))));
    const DiscParam v6 = random_interior_param(Chart::Phi6, 0.1, rng);
    CHECK_FALSE(is_su4(char_map(v6)));
    CHECK(is_su4(-Mat8::identity())); // complex determinant (-1)^4 = 1
}

TEST_CASE("bundle projections") {
    CHECK(inf_dist(proj_p0(Mat8::identity()), e(0)) == 0.0);
    const double center[7] = {0, 0, 0, 0, 0, 0, 0};
    const Mat8 bottom = char_map(Chart::Phi7, std::span<const double>(center, 7));
    CHECK(inf_dist(proj_p0(bottom), -e(0)) <= 1e-15);

    // the 6-chart with z at either end of its interval projects to the basepoint
    for (double z : {1.0, -1.0}) {
        const double v[6] = {0.3, -0.2, 0.1, 0.4, 0.2, z};
        CHECK(std::sqrt((proj_p(char_map(Chart::Phi6, std::span<const double>(v, 6))) - e(1)).norm()) <=
              1e-15);
    }
}

TEST_CASE("double cover kernel and the complex subgroup") {
    std::mt19937_64 rng(15);
    for (int s = 0; s < 50; ++s) {
        Mat8 g = Mat8::identity();
        for (Chart k : {Chart::Phi6, Chart::Phi7, Chart::Phi5, Chart::Phi3})
            g = g * char_map(random_interior_param(k, 0.05, rng));
        CHECK(vector_rep(g).max_abs_diff(vector_rep(-g)) <= 1e-12);
    }
    for (int s = 0; s < 50; ++s) {
        Mat8 g = Mat8::identity();
        for (Chart k : {Chart::Phi7, Chart::Phi5, Chart::Phi3})
            g = g * char_map(random_interior_param(k, 0.05, rng));
        CHECK(std::sqrt((proj_p(g) - e(1)).norm()) <= 1e-9);
        CHECK(std::sqrt((proj_p(-g) - e(1)).norm()) <= 1e-9); // two-to-one on samples
    }
}

TEST_CASE("matrix text round trip") {
    std::mt19937_64 rng(16);
    const Mat8 m = char_map(random_interior_param(Chart::Phi7, 0.1, rng));
    std::stringstream buf;
    m.print(buf);
    CHECK(Mat8::parse(buf).max_abs_diff(m) == 0.0);
    std::istringstream short_input("1 2 3");
    CHECK_THROWS_AS(Mat8::parse(short_input), DomainError);
}
