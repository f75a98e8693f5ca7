#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spin7cells/cellcomplex.hpp"
#include "spin7cells/charts.hpp"
#include "spin7cells/cohomology.hpp"
#include "spin7cells/data.hpp"
#include "spin7cells/errors.hpp"
#include "spin7cells/groups.hpp"
#include "spin7cells/octonion.hpp"
#include "spin7cells/verify.hpp"

namespace py = pybind11;

namespace {

spin7::Octonion to_oct(const std::vector<double>& v) {
    if (v.size() != 8) throw spin7::DomainError("expected 8 coefficients");
    spin7::Octonion o;
    for (int i = 0; i < 8; ++i) o[i] = v[static_cast<std::size_t>(i)];
    return o;
}

std::vector<double> from_oct(const spin7::Octonion& o) {
    return std::vector<double>(o.c.begin(), o.c.end());
}

spin7::Mat8 to_mat(const py::array_t<double>& arr) {
    const auto buf = arr.request();
    if (buf.ndim != 2 || buf.shape[0] != 8 || buf.shape[1] != 8)
        throw spin7::DomainError("expected an 8x8 matrix");
    spin7::Mat8 m;
    const auto r = arr.unchecked<2>();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) m(i, j) = r(i, j);
    return m;
}

py::array_t<double> from_mat(const spin7::Mat8& m) {
    py::array_t<double> arr({8, 8});
    auto w = arr.mutable_unchecked<2>();
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) w(i, j) = m(i, j);
    return arr;
}

spin7::Generator parse_generator(const std::string& kind) {
    if (kind == "A") return spin7::Generator::A;
    if (kind == "B") return spin7::Generator::B;
    if (kind == "C") return spin7::Generator::C;
    if (kind == "D") return spin7::Generator::D;
    if (kind == "D'" || kind == "Dprime") return spin7::Generator::Dprime;
    throw spin7::DomainError("unknown generator kind: " + kind);
}

py::dict report_to_dict(const spin7::LedgerReport& r) {
    py::dict d;
    d["ok"] = r.ok;
    d["lines"] = r.lines;
    d["failure"] = r.failure;
    return d;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "octonion arithmetic, spin group charts, cell censuses and category bounds";

    py::register_exception<spin7::BoundaryError>(m, "BoundaryError");
    py::register_exception<spin7::NumericError>(m, "NumericError");
    py::register_exception<spin7::InconsistencyError>(m, "InconsistencyError");
    py::register_exception<spin7::ConfigError>(m, "ConfigError");

    // octonions
    m.def("octonion_mul",
          [](const std::vector<double>& x, const std::vector<double>& y) {
              return from_oct(spin7::octonion_mul(to_oct(x), to_oct(y)));
          },
          py::arg("x"), py::arg("y"));
    m.def("conj", [](const std::vector<double>& x) { return from_oct(spin7::conj(to_oct(x))); });
    m.def("norm", [](const std::vector<double>& x) { return spin7::norm(to_oct(x)); });
    m.def("inverse",
          [](const std::vector<double>& x) { return from_oct(spin7::inverse(to_oct(x))); });
    m.def("mult_table", [] {
        const spin7::MultTable& t = spin7::cayley_table();
        std::vector<std::tuple<int, int, int, int>> rows;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                const spin7::TableEntry e = t.at(i, j);
                rows.emplace_back(i, j, e.sign, e.index);
            }
        return rows;
    });
    m.def("derive_mult_table", [] {
        const spin7::TableDerivation d = spin7::derive_mult_table();
        py::dict out;
        out["survivors"] = d.survivors;
        out["candidates_checked"] = d.candidates_checked;
        out["orientation"] = std::vector<int>(d.orientation.begin(), d.orientation.end());
        out["matches_shipped"] = d.table == spin7::cayley_table();
        out["table_text"] = d.table.serialize();
        return out;
    });

    // groups
    m.def("generator_matrix",
          [](const std::string& kind, const std::vector<double>& params) {
              return from_mat(spin7::generator_matrix(parse_generator(kind), params));
          },
          py::arg("kind"), py::arg("params"));
    m.def("is_special_orthogonal",
          [](const py::array_t<double>& m8, double tol) {
              return spin7::is_special_orthogonal(to_mat(m8), tol);
          },
          py::arg("m"), py::arg("tol") = 1e-9);
    m.def("is_g2",
          [](const py::array_t<double>& m8, int nsamples, double tol, std::uint64_t seed) {
              return spin7::is_g2(to_mat(m8), nsamples, tol, seed);
          },
          py::arg("m"), py::arg("nsamples") = 64, py::arg("tol") = 1e-9,
          py::arg("seed") = spin7::kDefaultSeed);
    m.def("is_spin7",
          [](const py::array_t<double>& m8, int nsamples, double tol, std::uint64_t seed) {
              return spin7::is_spin7(to_mat(m8), nsamples, tol, seed);
          },
          py::arg("m"), py::arg("nsamples") = 64, py::arg("tol") = 1e-9,
          py::arg("seed") = spin7::kDefaultSeed);
    m.def("is_su4",
          [](const py::array_t<double>& m8, double tol) { return spin7::is_su4(to_mat(m8), tol); },
          py::arg("m"), py::arg("tol") = 1e-9);
    m.def("vector_rep",
          [](const py::array_t<double>& m8) { return from_mat(spin7::vector_rep(to_mat(m8))); });
    m.def("proj_p0",
          [](const py::array_t<double>& m8) { return from_oct(spin7::proj_p0(to_mat(m8))); });
    m.def("proj_p",
          [](const py::array_t<double>& m8) { return from_oct(spin7::proj_p(to_mat(m8))); });

    // charts
    m.def("char_map",
          [](int k, const std::vector<double>& coords) {
              return from_mat(spin7::char_map(spin7::chart_from_dim(k), coords));
          },
          py::arg("k"), py::arg("coords"));
    m.def("chart_projection",
          [](int k, const std::vector<double>& coords) {
              return from_oct(spin7::chart_projection(spin7::chart_from_dim(k), coords));
          },
          py::arg("k"), py::arg("coords"));
    m.def("invert_p0_phi7",
          [](const std::vector<double>& a, double eps_base) {
              return spin7::invert_p0_phi7(to_oct(a), eps_base).coords;
          },
          py::arg("a"), py::arg("eps_base") = 1e-6);
    m.def("invert_chart_numeric",
          [](int k, const std::vector<double>& target) {
              return spin7::invert_chart_numeric(spin7::chart_from_dim(k), to_oct(target)).coords;
          },
          py::arg("k"), py::arg("target"));
    m.def("factorize",
          [](const py::array_t<double>& m8, double tol) {
              const spin7::Factorization f = spin7::factorize(to_mat(m8), tol);
              py::dict out;
              out["generators"] = f.label.gens;
              out["cell"] = f.label.name();
              out["word"] = f.label.word();
              out["dim"] = f.label.dim();
              std::vector<std::vector<double>> params;
              for (const spin7::DiscParam& p : f.factors) params.push_back(p.coords);
              out["params"] = params;
              out["terminal_residual"] = f.terminal_residual;
              out["reconstruction"] = from_mat(f.reconstruct());
              return out;
          },
          py::arg("m"), py::arg("tol") = 1e-6);

    // cell complexes
    m.def("cell_census", [](const std::string& space) {
        std::vector<std::tuple<std::string, std::string, int>> cells;
        for (const spin7::Cell& c : spin7::cell_census(spin7::parse_space(space)))
            cells.emplace_back(c.name(), c.label.word(), c.dim());
        return cells;
    });
    m.def("poincare_polynomial", [](const std::string& space) {
        return spin7::poincare_polynomial(spin7::parse_space(space));
    });
    m.def("boundary_relations", [](const std::string& space) {
        std::vector<std::pair<int, std::vector<int>>> rels;
        for (const spin7::BoundaryRelation& r : spin7::boundary_relations(spin7::parse_space(space))) {
            std::vector<int> faces;
            for (const spin7::CellLabel& f : r.faces) faces.push_back(f.dim());
            rels.emplace_back(r.cell.dim(), faces);
        }
        return rels;
    });
    m.def("attach_degrees", &spin7::attach_degrees);
    m.def("filtration_ledger", [](const std::string& which) {
        const spin7::Filtration f =
            which == "su4" ? spin7::su4_filtration_ledger()
                           : (which == "spin8" ? spin7::spin8_cone_ledger() : spin7::filtration_ledger());
        std::vector<py::dict> steps;
        for (const spin7::FiltrationStep& s : f.steps) {
            py::dict d;
            d["index"] = s.index;
            d["attach"] = s.attach;
            std::vector<int> dims;
            for (const spin7::CellLabel& l : s.new_cells) dims.push_back(l.dim());
            d["new_cell_dims"] = dims;
            steps.push_back(std::move(d));
        }
        return steps;
    }, py::arg("which") = "spin7");
    m.def("verify_boundaries_numeric",
          [](int cell_dim, int samples_per_face, std::uint64_t seed) {
              for (const spin7::BoundaryRelation& r : spin7::boundary_relations(spin7::Space::Spin7))
                  if (r.cell.dim() == cell_dim) {
                      const spin7::BoundaryCheckReport rep =
                          spin7::verify_boundaries_numeric(r, samples_per_face, seed);
                      py::dict d;
                      d["samples"] = rep.samples;
                      d["ok"] = rep.ok;
                      d["skipped"] = rep.skipped;
                      d["violations"] = rep.violations;
                      d["passed"] = rep.passed();
                      return d;
                  }
              throw spin7::DomainError("no boundary relation for cell of dimension " +
                                       std::to_string(cell_dim));
          },
          py::arg("cell_dim"), py::arg("samples_per_face") = 20,
          py::arg("seed") = spin7::kDefaultSeed);
    m.def("join_box_to_ball",
          [](int m_dim, int n_dim, const std::vector<double>& p) {
              return spin7::join_box_to_ball(m_dim, n_dim, p);
          });
    m.def("join_ball_to_box",
          [](int m_dim, int n_dim, const std::vector<double>& p) {
              return spin7::join_ball_to_box(m_dim, n_dim, p);
          });

    // cohomology
    m.def("cup_length",
          [](const std::string& space) { return spin7::cup_length(spin7::ring_for_space(space)); });
    m.def("ls_category_report", [](const std::string& space) {
        const spin7::CategoryReport r = spin7::ls_category_report(space);
        return py::make_tuple(r.wcat_lower, r.cat_upper,
                              r.determined() ? "determined" : "undetermined");
    });
    m.def("ss_ledger_check", [] { return report_to_dict(spin7::ss_ledger_check()); });
    m.def("sq2_check", [] { return report_to_dict(spin7::sq2_check()); });

    // verification front end
    m.def("run_verify",
          [](const std::string& suite, double tol, int samples, std::uint64_t seed,
             const std::string& space) {
              spin7::CheckConfig cfg;
              cfg.tol = tol;
              cfg.samples = samples;
              cfg.seed = seed;
              cfg.space = space;
              std::vector<py::dict> rows;
              for (const spin7::CheckResult& r : spin7::run_suite(suite, cfg)) {
                  py::dict d;
                  d["check"] = r.id;
                  d["subject"] = r.subject;
                  d["status"] = r.status;
                  d["metric"] = r.metric;
                  d["tolerance"] = r.tolerance;
                  d["samples"] = r.samples;
                  d["seed"] = r.seed;
                  d["note"] = r.note;
                  rows.push_back(std::move(d));
              }
              return rows;
          },
          py::arg("suite") = "all", py::arg("tol") = 1e-9, py::arg("samples") = 0,
          py::arg("seed") = spin7::kDefaultSeed, py::arg("space") = "");

    m.def("set_data_dir", &spin7::data::set_data_dir);
}
