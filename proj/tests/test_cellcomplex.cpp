#include <doctest.h>

#include <algorithm>
#include <set>

#include "spin7cells/cellcomplex.hpp"
#include "spin7cells/errors.hpp"

using namespace spin7;

namespace {

std::set<int> census_dims(Space s) {
    std::set<int> dims;
    for (const Cell& c : cell_census(s)) dims.insert(c.dim());
    return dims;
}

// independent oracle: expand prod (1 + t^n) directly
std::vector<long long> expand(const std::vector<int>& gens) {
    std::vector<long long> poly = {1};
    for (int n : gens) {
        std::vector<long long> next(poly.size() + static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i] += poly[i];
            next[i + static_cast<std::size_t>(n)] += poly[i];
        }
        poly = std::move(next);
    }
    return poly;
}

} // namespace

TEST_CASE("censuses") {
    CHECK(cell_census(Space::Spin7).size() == 16);
    CHECK(census_dims(Space::Spin7) ==
          std::set<int>{0, 3, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 18, 21});
    CHECK(cell_census(Space::SU4).size() == 8);
    CHECK(census_dims(Space::SU4) == std::set<int>{0, 3, 5, 7, 8, 10, 12, 15});
    CHECK(census_dims(Space::SU2) == std::set<int>{0, 3});
    CHECK(census_dims(Space::SU3) == std::set<int>{0, 3, 5, 8});
    CHECK(census_dims(Space::G2) == std::set<int>{0, 3, 5, 6, 8, 9, 11, 14});
    CHECK(cell_census(Space::Spin8).size() == 32);
}

TEST_CASE("space tags") {
    CHECK(parse_space("spin7") == Space::Spin7);
    CHECK(space_name(Space::G2) == "g2");
    CHECK_THROWS_AS(parse_space("so7"), DomainError);
}

TEST_CASE("poincare polynomials match the generating-function oracle") {
    CHECK(poincare_polynomial(Space::Spin7) == expand({3, 5, 6, 7}));
    CHECK(poincare_polynomial(Space::SU4) == expand({3, 5, 7}));
    CHECK(poincare_polynomial(Space::SU2) == expand({3}));
    CHECK(poincare_polynomial(Space::Spin8) == expand({3, 5, 6, 7, 7}));
    // coefficient of t^d counts cells of dimension d
    const auto poly = poincare_polynomial(Space::Spin7);
    for (const Cell& c : cell_census(Space::Spin7))
        CHECK(poly[static_cast<std::size_t>(c.dim())] == 1);
}

TEST_CASE("boundary relations are shipped for every positive cell") {
    const auto rels = boundary_relations(Space::Spin7);
    CHECK(rels.size() == 15);
    auto find = [&](int dim) -> const BoundaryRelation& {
        for (const auto& r : rels)
            if (r.cell.dim() == dim) return r;
        throw std::runtime_error("missing relation");
    };
    auto face_dims = [](const BoundaryRelation& r) {
        std::vector<int> dims;
        for (const CellLabel& f : r.faces) dims.push_back(f.dim());
        std::sort(dims.begin(), dims.end());
        return dims;
    };
    CHECK(face_dims(find(3)) == std::vector<int>{0});
    CHECK(face_dims(find(6)) == std::vector<int>{3, 5});
    CHECK(face_dims(find(21)) == std::vector<int>{14, 15, 16, 18});
    std::string why;
    for (Space s : {Space::SU2, Space::SU3, Space::SU4, Space::G2, Space::Spin7})
        CHECK_MESSAGE(boundary_relations_structural_ok(s, &why), why);
}

TEST_CASE("boundary relation text round trip") {
    const auto rels = boundary_relations(Space::Spin7);
    const auto round = parse_boundary_relations(serialize_boundary_relations(rels));
    REQUIRE(round.size() == rels.size());
    for (std::size_t i = 0; i < rels.size(); ++i) {
        CHECK(round[i].cell == rels[i].cell);
        CHECK(round[i].faces == rels[i].faces);
    }
    CHECK_THROWS_AS(parse_boundary_relations("7 <=\n"), ConfigError);
}

TEST_CASE("downward closure") {
    const std::vector<int> top = {21};
    const std::set<int> everything = boundary_closure(top);
    CHECK(everything.size() == 16); // the whole census is reachable from the top cell
    const std::vector<int> mid = {8};
    CHECK(boundary_closure(mid) == std::set<int>{0, 3, 5, 8});
}

TEST_CASE("numeric boundary sampling on small relations") {
    for (int dim : {6, 9}) {
        BoundaryRelation rel;
        for (const BoundaryRelation& r : boundary_relations(Space::Spin7))
            if (r.cell.dim() == dim) rel = r;
        const BoundaryCheckReport report = verify_boundaries_numeric(rel, 10, 777);
        const std::string first_violation =
            report.violations.empty() ? std::string() : report.violations.front();
        CHECK_MESSAGE(report.violations.empty(), first_violation);
        CHECK(report.passed());
    }
}

TEST_CASE("attachment degree grammar") {
    CHECK(attach_degrees("S20") == std::vector<int>{20});
    CHECK(attach_degrees("CP3") == std::vector<int>{2, 4, 6});
    CHECK(attach_degrees("A") == std::vector<int>{7, 9, 11});
    CHECK(attach_degrees("S5 + A") == std::vector<int>{5, 7, 9, 11});
    CHECK(attach_degrees("S14 + join(S5, CP3)") == std::vector<int>{8, 10, 12, 14});
    CHECK(attach_degrees("join(S5, A)") == std::vector<int>{13, 15, 17});
    CHECK_THROWS_AS(attach_degrees("T2"), ConfigError);
    CHECK_THROWS_AS(attach_degrees("join(S5 S3)"), ConfigError);
}

TEST_CASE("filtration ledgers verify") {
    const Filtration f = filtration_ledger();
    REQUIRE(f.steps.size() == 5);
    const std::vector<std::vector<int>> expected_dims = {
        {3, 5, 7}, {6, 8, 10, 12}, {9, 11, 13, 15}, {14, 16, 18}, {21}};
    for (std::size_t i = 0; i < f.steps.size(); ++i) {
        std::vector<int> dims;
        for (const CellLabel& l : f.steps[i].new_cells) dims.push_back(l.dim());
        std::sort(dims.begin(), dims.end());
        CHECK(dims == expected_dims[i]);
    }
    const FiltrationCheck check = check_filtration(f, Space::Spin7);
    const std::string last_line = check.lines.empty() ? std::string() : check.lines.back();
    CHECK_MESSAGE(check.ok, last_line);

    const FiltrationCheck su4_check = check_filtration(su4_filtration_ledger(), Space::SU4);
    CHECK(su4_check.ok);

    CHECK(check_spin8_cone_ledger().ok);
}

TEST_CASE("cone lengths") {
    CHECK(cone_length("spin7") == 5);
    CHECK(cone_length("spin8") == 6);
    CHECK(cone_length("su4") == 3);
    CHECK(cone_length("f4") == 4);
    CHECK(cone_length("fp2") == 2);
    CHECK_THROWS_AS(cone_length("f9"), DomainError);
}

TEST_CASE("join disc model") {
    const std::vector<double> zero(5, 0.0);
    for (double v : join_box_to_ball(2, 3, zero)) CHECK(v == 0.0);

    std::mt19937_64 rng(31);
    double round_err = 0.0;
    for (int s = 0; s < 1000; ++s) {
        std::vector<double> p(9);
        random_in_ball(std::span<double>(p.data(), 4), 0.0, rng);
        random_in_ball(std::span<double>(p.data() + 4, 5), 0.0, rng);
        const auto fwd = join_box_to_ball(4, 5, p);
        double n2 = 0.0;
        for (double v : fwd) n2 += v * v;
        CHECK(n2 <= 1.0 + 1e-12);
        const auto back = join_ball_to_box(4, 5, fwd);
        for (std::size_t i = 0; i < p.size(); ++i)
            round_err = std::max(round_err, std::abs(p[i] - back[i]));
    }
    CHECK(round_err <= 1e-9);

    // boundary face goes to the boundary sphere
    std::vector<double> p(5, 0.0);
    random_on_sphere(std::span<double>(p.data(), 2), rng);
    random_in_ball(std::span<double>(p.data() + 2, 3), 0.1, rng);
    const auto img = join_box_to_ball(2, 3, p);
    double n2 = 0.0;
    for (double v : img) n2 += v * v;
    CHECK(std::abs(std::sqrt(n2) - 1.0) <= 1e-9);

    CHECK_THROWS_AS(join_box_to_ball(2, 2, zero), DomainError);
}
