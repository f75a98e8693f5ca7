#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "spin7cells/cellcomplex.hpp"
#include "spin7cells/charts.hpp"
#include "spin7cells/cohomology.hpp"
#include "spin7cells/data.hpp"
#include "spin7cells/errors.hpp"
#include "spin7cells/groups.hpp"
#include "spin7cells/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInputRejected = 3;

std::string polynomial_string(const std::vector<long long>& coeffs) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t d = 0; d < coeffs.size(); ++d) {
        if (coeffs[d] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (d == 0) {
            out << coeffs[d];
            continue;
        }
        if (coeffs[d] != 1) out << coeffs[d] << "*";
        out << "t^" << d;
    }
    if (first) out << 0;
    return out.str();
}

int run_verify(const std::string& suite, const spin7::CheckConfig& cfg, const std::string& format) {
    const std::vector<spin7::CheckResult> rows = spin7::run_suite(suite, cfg);
    std::cout << (format == "data" ? spin7::format_report_json(rows)
                                   : spin7::format_report_text(rows));
    for (const spin7::CheckResult& r : rows)
        if (r.status == "fail") return kExitCheckFailure;
    return kExitOk;
}

int run_factorize(const std::string& path, double tol) {
    spin7::Mat8 g;
    if (path == "-") {
        g = spin7::Mat8::parse(std::cin);
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open " << path << "\n";
            return kExitUsage;
        }
        g = spin7::Mat8::parse(in);
    }
    if (!spin7::is_special_orthogonal(g, 1e-6)) {
        std::cerr << "rejected: input is not special orthogonal\n";
        return kExitInputRejected;
    }
    std::mt19937_64 rng(spin7::kDefaultSeed);
    std::string clause;
    if (!spin7::is_spin7_diagnose(g, 64, 1e-6, rng, &clause)) {
        std::cerr << "rejected: input fails the membership test (" << clause << ")\n";
        return kExitInputRejected;
    }
    try {
        const spin7::Factorization f = spin7::factorize(g, tol);
        std::cout << "cell " << f.label.name() << " (word " << f.label.word() << ", dim "
                  << f.label.dim() << ")\n";
        for (std::size_t i = 0; i < f.factors.size(); ++i) {
            std::cout << "  stage " << f.label.gens[i] << " params";
            for (double v : f.factors[i].coords) {
                char buf[32];
                std::snprintf(buf, sizeof buf, " %.12g", v);
                std::cout << buf;
            }
            std::cout << '\n';
        }
        const spin7::Mat8 rec = f.reconstruct();
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", rec.max_abs_diff(g));
        std::cout << "reconstruction_residual " << buf << '\n';
        std::snprintf(buf, sizeof buf, "%.3e", f.terminal_residual);
        std::cout << "terminal_residual " << buf << '\n';
        return kExitOk;
    } catch (const spin7::BoundaryError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitInputRejected;
    } catch (const spin7::InconsistencyError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitInputRejected;
    } catch (const spin7::NumericError& e) {
        std::cerr << "rejected: " << e.what() << "\n";
        return kExitInputRejected;
    }
}

int run_census(const std::string& space_tag) {
    const spin7::Space s = spin7::parse_space(space_tag);
    const std::vector<spin7::Cell> cells = spin7::cell_census(s);
    std::cout << "space " << spin7::space_name(s) << "\ncells " << cells.size() << '\n';
    for (const spin7::Cell& c : cells)
        std::cout << "  " << c.name() << " word " << c.label.word() << (c.s7_factor ? "*s7" : "")
                  << " dim " << c.dim() << '\n';
    std::cout << "poincare " << polynomial_string(spin7::poincare_polynomial(s)) << '\n';
    return kExitOk;
}

int run_cat(const std::string& space_tag) {
    const spin7::CategoryReport r = spin7::ls_category_report(space_tag);
    std::cout << "space " << r.space << "\nwcat_lower " << r.wcat_lower << "\ncat_upper "
              << r.cat_upper << "\nverdict " << (r.determined() ? "determined" : "undetermined")
              << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cell structure and category verifier for the 21-dimensional spin group"};
    app.require_subcommand(1);

    std::string data_dir;
    app.add_option("--data-dir", data_dir, "directory of data files (default: bundled)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    spin7::CheckConfig cfg;
    std::string format = "text";
    verify->add_option("suite", suite, "cayley, groups, charts, complex, cohomology, all");
    verify->add_option("--tol", cfg.tol, "tolerance for identity checks");
    verify->add_option("--samples", cfg.samples, "override per-check sample counts");
    verify->add_option("--seed", cfg.seed, "RNG seed");
    verify->add_option("--space", cfg.space, "restrict space-parametrized checks");
    verify->add_option("--format", format, "text or data")
        ->check(CLI::IsMember({"text", "data"}));

    // factorize
    auto* fact = app.add_subcommand("factorize", "factor a matrix into cell coordinates");
    std::string matrix_path;
    double fact_tol = 1e-6;
    fact->add_option("file", matrix_path, "matrix file (8 lines of 8 numbers, - for stdin)")
        ->required();
    fact->add_option("--tol", fact_tol, "terminal residue tolerance");

    // census
    auto* census = app.add_subcommand("census", "list the cells of a space");
    std::string census_space;
    census->add_option("space", census_space, "su2, su3, su4, g2, spin7, spin8")->required();

    // cat
    auto* cat = app.add_subcommand("cat", "category bounds for a space");
    std::string cat_space;
    cat->add_option("space", cat_space, "f1..f5, fp1..fp3, su4, spin7, spin8")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (!data_dir.empty()) spin7::data::set_data_dir(data_dir);
        if (verify->parsed()) return run_verify(suite, cfg, format);
        if (fact->parsed()) return run_factorize(matrix_path, fact_tol);
        if (census->parsed()) return run_census(census_space);
        if (cat->parsed()) return run_cat(cat_space);
    } catch (const spin7::DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const spin7::ConfigError& e) {
        std::cerr << "data error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailure;
    }
    return kExitUsage;
}
