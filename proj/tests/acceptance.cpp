// Acceptance suite: one line per criterion, every tolerance pinned in the
// underlying checks. Runs the full registry once with default settings
// (seed 42, documented sample counts) and aggregates rows per criterion.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "spin7cells/verify.hpp"

namespace {

struct Criterion {
    int number;
    const char* description;
    std::vector<std::string> check_ids;
};

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list = {
        {1, "multiplication table: unique sign assignment, norm multiplicative to 1e-9",
         {"cayley.table_derivation"}},
        {2, "generator identities hold to 1e-9; generators and charts pass spin membership",
         {"groups.g2_identities", "groups.dprime_identity", "groups.spin7_membership"}},
        {3, "closed-form 7-chart inverse: round trip 1e-6, boundary faces collapse to 1e-9",
         {"charts.p0phi7_roundtrip", "charts.p0phi7_boundary"}},
        {4, "numeric 6-chart inversion: residual 1e-10 on 200 samples, basepoint rejected",
         {"charts.phi6_inversion", "charts.phi6_basepoint_reject"}},
        {5, "factorization: reconstruction 1e-5, parameters 1e-4, identity and singletons",
         {"charts.factorize_reconstruction", "charts.factorize_parameters",
          "charts.factorize_identity", "charts.factorize_singletons"}},
        {6, "censuses: 16 cells with the stated dims, 8 for the subgroup, exact polynomial",
         {"complex.census", "complex.poincare_polynomial"}},
        {7, "boundary relations: structural check and numeric face sampling (<=10% skips)",
         {"complex.boundaries_structural", "complex.boundaries_numeric"}},
        {8, "filtration ledger: new-cell dims match the attachment degrees exactly",
         {"complex.filtration", "complex.su4_filtration"}},
        {9, "category reports: (i, i, determined) on every filtration stage, 5 and 6 on top",
         {"cohomology.ls_category"}},
        {10, "spectral-sequence ledger: stated fiber ranks, 7 legal cancellations, survivors",
         {"cohomology.ss_ledger", "cohomology.fiber_ranks"}},
        {11, "squaring operation table and the deduced vanishing in fiber degree 7",
         {"cohomology.sq2"}},
        {12, "double cover: kernel pair 1e-12, -I membership, complex subgroup fixes e1",
         {"groups.double_cover.kernel", "groups.double_cover.minus_identity",
          "groups.double_cover.su4_fixes_e1"}},
        {13, "join disc model: round trip 1e-9, boundary preserved to 1e-9",
         {"complex.join_roundtrip", "complex.join_boundary"}},
    };
    return list;
}

} // namespace

int main() {
    const auto start = std::chrono::steady_clock::now();
    const spin7::CheckConfig cfg; // defaults: tol 1e-9, seed 42, documented sample counts
    const std::vector<spin7::CheckResult> rows = spin7::run_suite("all", cfg);

    int failures = 0;
    for (const Criterion& c : criteria()) {
        bool pass = true;
        double worst_metric = 0.0;
        int matched = 0;
        std::string detail;
        for (const spin7::CheckResult& r : rows) {
            bool wanted = false;
            for (const std::string& id : c.check_ids) wanted = wanted || r.id == id;
            if (!wanted) continue;
            ++matched;
            worst_metric = std::max(worst_metric, r.metric);
            if (r.status != "pass") {
                pass = false;
                if (detail.empty()) detail = r.id + " (" + r.subject + ")";
            }
        }
        if (matched == 0) {
            pass = false;
            detail = "no checks matched";
        }
        if (!pass) ++failures;
        std::printf("[%s] criterion %2d: %s%s%s\n", pass ? "PASS" : "FAIL", c.number,
                    c.description, detail.empty() ? "" : " -- failed: ", detail.c_str());
    }

    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_budget = elapsed < 60.0;
    if (!in_budget) ++failures;
    std::printf("[%s] runtime: %.1f s (budget 60 s)\n", in_budget ? "PASS" : "FAIL", elapsed);
    std::printf("%d of %zu criteria failed\n", failures, criteria().size());
    return failures == 0 ? 0 : 1;
}
