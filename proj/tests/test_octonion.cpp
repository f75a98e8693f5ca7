#include <doctest.h>

#include <random>

#include "spin7cells/data.hpp"
#include "spin7cells/errors.hpp"
#include "spin7cells/groups.hpp"
#include "spin7cells/octonion.hpp"

using namespace spin7;

namespace {
Octonion e(int i) { return Octonion::basis(i); }
}

TEST_CASE("unit acts as two-sided identity") {
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 10; ++trial) {
        const Octonion x = random_unit_octonion(rng);
        CHECK(inf_dist(octonion_mul(e(0), x), x) == 0.0);
        CHECK(inf_dist(octonion_mul(x, e(0)), x) == 0.0);
    }
}

TEST_CASE("table derivation is unique and matches the shipped table") {
    const TableDerivation d = derive_mult_table();
    CHECK(d.survivors == 1);
    CHECK(d.candidates_checked == 128);
    // frozen outcome of the search: only the {2,4,6}-line is reversed
    const std::array<int, 7> expected_orientation = {1, 1, 1, -1, 1, 1, 1};
    CHECK(d.orientation == expected_orientation);
    CHECK(d.table == cayley_table());
}

TEST_CASE("frozen basis products") {
    const MultTable& t = cayley_table();
    // oracle: the derivation search pins e1 e2 = e3
    CHECK(t.at(1, 2).sign == 1);
    CHECK(t.at(1, 2).index == 3);
    CHECK(t.at(0, 5).sign == 1);
    CHECK(t.at(0, 5).index == 5);
    CHECK(t.at(2, 1).sign == -1);
    CHECK(t.at(2, 1).index == 3);
    // complex module convention
    CHECK(t.at(1, 4).index == 5);
    CHECK(t.at(1, 6).index == 7);
}

TEST_CASE("norm expands multiplicatively on a concrete pair") {
    const Octonion x = e(1) + e(2);
    const Octonion prod = octonion_mul(x, e(4));
    CHECK(norm(prod) == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(norm(prod) == doctest::Approx(norm(x) * norm(e(4))).epsilon(1e-12));
}

TEST_CASE("conj, inverse, norm basics") {
    CHECK(inf_dist(conj(e(0)), e(0)) == 0.0);
    CHECK(inf_dist(inverse(e(3)), -e(3)) == 0.0);
    Octonion all;
    for (int i = 0; i < 8; ++i) all[i] = 1.0;
    CHECK(norm(all) == 8.0);
    CHECK_THROWS_AS(inverse(Octonion{}), DomainError);
    std::mt19937_64 rng(2);
    const Octonion x = random_unit_octonion(rng) * 1.7;
    CHECK(inf_dist(octonion_mul(x, inverse(x)), e(0)) <= 1e-12);
}

TEST_CASE("norm multiplicativity and alternativity on random samples") {
    std::mt19937_64 rng(3);
    double norm_err = 0.0, alt_err = 0.0;
    for (int s = 0; s < 1000; ++s) {
        const Octonion x = random_unit_octonion(rng);
        const Octonion y = random_unit_octonion(rng);
        norm_err = std::max(norm_err, std::abs(norm(octonion_mul(x, y)) - norm(x) * norm(y)));
        const Octonion xx = octonion_mul(x, x);
        alt_err = std::max(alt_err, inf_dist(octonion_mul(x, octonion_mul(x, y)), octonion_mul(xx, y)));
        alt_err = std::max(alt_err, inf_dist(octonion_mul(octonion_mul(y, x), x), octonion_mul(y, xx)));
    }
    CHECK(norm_err <= 1e-9);
    CHECK(alt_err <= 1e-9);
}

TEST_CASE("the algebra is not associative") {
    // (e2 e4) e5 = -e6 e5 = e3 but e2 (e4 e5) = e2 e1 = -e3
    const Octonion lhs = octonion_mul(octonion_mul(e(2), e(4)), e(5));
    const Octonion rhs = octonion_mul(e(2), octonion_mul(e(4), e(5)));
    CHECK(inf_dist(lhs, rhs) == 2.0);
    CHECK(inf_dist(lhs, e(3)) == 0.0);
    CHECK(inf_dist(rhs, -e(3)) == 0.0);
}

TEST_CASE("conjugation is an anti-automorphism") {
    std::mt19937_64 rng(4);
    for (int s = 0; s < 200; ++s) {
        const Octonion x = random_unit_octonion(rng);
        const Octonion y = random_unit_octonion(rng);
        CHECK(inf_dist(conj(octonion_mul(x, y)), octonion_mul(conj(y), conj(x))) <= 1e-12);
    }
}

TEST_CASE("table text round trip and structural validation") {
    const MultTable& t = cayley_table();
    CHECK(MultTable::parse(t.serialize()) == t);
    std::string why;
    CHECK(t.structural_ok(&why));

    // flipping one entry breaks anticommutativity
    std::string broken = t.serialize();
    broken.replace(broken.find("1 2 1 3"), 7, "1 2 -1 3");
    CHECK_FALSE(MultTable::parse(broken).structural_ok(&why));
    CHECK(why == "not anticommutative");

    CHECK_THROWS_AS(MultTable::parse("0 0 1 0\n"), ConfigError);
}

TEST_CASE("shipped data files match the bundled copies") {
    data::set_data_dir(SPIN7CELLS_DATA_DIR);
    const std::string on_disk = data::mult_table_text();
    data::set_data_dir("");
    CHECK(on_disk == data::mult_table_text());
}
