#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>

#include "spin7cells/cellcomplex.hpp"
#include "spin7cells/cohomology.hpp"
#include "spin7cells/data.hpp"
#include "spin7cells/errors.hpp"

using namespace spin7;

TEST_CASE("truncated polynomial ring on one generator") {
    GradedRingGF2 ring;
    ring.gens.push_back({"x", 3, 4}); // x^4 = 0
    CHECK(cup_length(ring) == 3);
    CHECK(cup_length_bruteforce(ring) == 3);
    const AdditiveTable table = additive_basis(ring);
    CHECK(table == AdditiveTable{{0, 1}, {3, 1}, {6, 1}, {9, 1}});
}

TEST_CASE("exterior generator") {
    GradedRingGF2 ring;
    ring.gens.push_back({"x", 3, 2});
    CHECK(additive_basis(ring) == AdditiveTable{{0, 1}, {3, 1}});
    CHECK(cup_length(ring) == 1);
}

TEST_CASE("ring text round trip") {
    GradedRingGF2 ring = ring_for_space("spin7");
    CHECK(ring.gens.size() == 3);
    const GradedRingGF2 round = GradedRingGF2::parse(ring.serialize());
    CHECK(round.gens.size() == 3);
    CHECK(round.gens[0].name == "x3");
    CHECK(round.gens[0].height == 4);

    ring.kept_degrees = std::set<int>{0, 3, 5, 7};
    const GradedRingGF2 trunc = GradedRingGF2::parse(ring.serialize());
    REQUIRE(trunc.kept_degrees.has_value());
    CHECK(*trunc.kept_degrees == std::set<int>{0, 3, 5, 7});

    CHECK_THROWS_AS(GradedRingGF2::parse("x3 deg=3 height=1\n"), ConfigError);
    CHECK_THROWS_AS(ring_for_space("e8"), DomainError);
}

TEST_CASE("full ring bases agree with the censuses") {
    auto ring_dims = [](const std::string& tag) {
        std::vector<int> dims;
        for (const auto& [deg, rank] : additive_basis(ring_for_space(tag)))
            for (int i = 0; i < rank; ++i) dims.push_back(deg);
        return dims;
    };
    auto complex_dims = [](Space s) {
        std::vector<int> dims;
        for (const Cell& c : cell_census(s)) dims.push_back(c.dim());
        std::sort(dims.begin(), dims.end());
        return dims;
    };
    CHECK(ring_dims("spin7") == complex_dims(Space::Spin7));
    CHECK(ring_dims("su4") == complex_dims(Space::SU4));
    CHECK(ring_dims("spin8") == complex_dims(Space::Spin8));
}

TEST_CASE("the skeletal truncation table") {
    // ranks 1 exactly at the cell dimensions of the 12-skeleton
    const AdditiveTable table = additive_basis(ring_for_space("fp2"));
    CHECK(table == AdditiveTable{{0, 1}, {3, 1}, {5, 1}, {7, 1}, {8, 1}, {10, 1}, {12, 1}});
}

TEST_CASE("cup lengths across the filtrations") {
    const std::pair<const char*, int> expected[] = {
        {"f1", 1}, {"f2", 2}, {"f3", 3}, {"f4", 4}, {"f5", 5},
        {"fp1", 1}, {"fp2", 2}, {"fp3", 3},
        {"su4", 3}, {"spin7", 5}, {"spin8", 6},
    };
    for (const auto& [tag, value] : expected) CHECK(cup_length(ring_for_space(tag)) == value);
}

TEST_CASE("generator-restricted search is complete on the small truncations") {
    for (const char* tag : {"f1", "f2", "fp1", "fp2"}) {
        const GradedRingGF2 ring = ring_for_space(tag);
        CHECK(cup_length(ring) == cup_length_bruteforce(ring));
    }
}

TEST_CASE("category reports are determined everywhere") {
    const std::pair<const char*, int> expected[] = {
        {"f1", 1}, {"f2", 2}, {"f3", 3}, {"f4", 4}, {"f5", 5},
        {"fp1", 1}, {"fp2", 2}, {"fp3", 3}, {"spin7", 5}, {"spin8", 6},
    };
    for (const auto& [tag, value] : expected) {
        const CategoryReport r = ls_category_report(tag);
        CHECK(r.wcat_lower == value);
        CHECK(r.cat_upper == value);
        CHECK(r.determined());
    }
}

TEST_CASE("spectral sequence ledger") {
    const LedgerReport r = ss_ledger_check();
    CHECK_MESSAGE(r.ok, r.failure);
    // seven cancellations, one per matching line
    CHECK(parse_ss_matchings(data::ss_ledger_text()).size() == 7);
}

TEST_CASE("illegal cancellations are caught") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "spin7cells_bad_ledger";
    fs::create_directories(dir);
    {
        // the degree-8 base slot is empty, so the transgression has no target
        std::ofstream out(dir / "ss_ledger.txt");
        out << "table base 0:1 3:1\n"
               "table fiber 0:1 7:1\n"
               "table target 0:1 3:1\n"
               "match x7 q=7 -> p=8 r=8\n";
    }
    data::set_data_dir(dir.string());
    const LedgerReport r = ss_ledger_check();
    data::set_data_dir("");
    fs::remove_all(dir);
    CHECK_FALSE(r.ok);
    CHECK(r.failure.find("illegal cancellation") != std::string::npos);
}

TEST_CASE("squaring operation table") {
    const Sq2Table table = parse_sq2_table(data::sq2_text());
    CHECK(table.at(3) == 5);
    CHECK(table.at(10) == 12);
    CHECK(table.at(5) == 0);
    CHECK(table.at(7) == 0);
    CHECK(table.at(8) == 0);
    CHECK(table.at(12) == 0);
    const LedgerReport r = sq2_check();
    CHECK_MESSAGE(r.ok, r.failure);
    bool deduced = false;
    for (const std::string& line : r.lines)
        if (line.find("Sq2 x7 -> 0") != std::string::npos) deduced = true;
    CHECK(deduced);
}
