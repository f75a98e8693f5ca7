#include "spin7cells/cellcomplex.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "spin7cells/data.hpp"
#include "spin7cells/errors.hpp"

namespace spin7 {

Space parse_space(const std::string& tag) {
    if (tag == "su2") return Space::SU2;
    if (tag == "su3") return Space::SU3;
    if (tag == "su4") return Space::SU4;
    if (tag == "g2") return Space::G2;
    if (tag == "spin7") return Space::Spin7;
    if (tag == "spin8") return Space::Spin8;
    throw DomainError("unknown space tag: " + tag);
}

std::string space_name(Space s) {
    switch (s) {
        case Space::SU2: return "su2";
        case Space::SU3: return "su3";
        case Space::SU4: return "su4";
        case Space::G2: return "g2";
        case Space::Spin7: return "spin7";
        case Space::Spin8: return "spin8";
    }
    return "?";
}

std::string Cell::name() const {
    std::string n = label.name();
    if (s7_factor) n += "*s7";
    return n;
}

const std::vector<int>& space_generators(Space s) {
    static const std::vector<int> su2 = {3};
    static const std::vector<int> su3 = {5, 3};
    static const std::vector<int> su4 = {7, 5, 3};
    static const std::vector<int> g2 = {6, 5, 3};
    static const std::vector<int> spin = {6, 7, 5, 3};
    switch (s) {
        case Space::SU2: return su2;
        case Space::SU3: return su3;
        case Space::SU4: return su4;
        case Space::G2: return g2;
        case Space::Spin7:
        case Space::Spin8: return spin;
    }
    return su2;
}

std::vector<Cell> cell_census(Space s) {
    const std::vector<int>& gens = space_generators(s);
    const int n = static_cast<int>(gens.size());
    std::vector<Cell> cells;
    for (int mask = 0; mask < (1 << n); ++mask) {
        std::vector<int> sub;
        for (int b = 0; b < n; ++b)
            if (mask & (1 << b)) sub.push_back(gens[static_cast<std::size_t>(b)]);
        Cell cell{CellLabel::from_gens(sub), false};
        if (s == Space::Spin8) {
            Cell with = cell;
            with.s7_factor = true;
            cells.push_back(cell);
            cells.push_back(with);
        } else {
            cells.push_back(cell);
        }
    }
    std::sort(cells.begin(), cells.end(), [](const Cell& a, const Cell& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return a.s7_factor < b.s7_factor;
    });
    return cells;
}

std::vector<long long> poincare_polynomial(Space s) {
    std::vector<long long> coeffs(1, 0);
    for (const Cell& cell : cell_census(s)) {
        const std::size_t d = static_cast<std::size_t>(cell.dim());
        if (coeffs.size() <= d) coeffs.resize(d + 1, 0);
        ++coeffs[d];
    }
    return coeffs;
}

std::vector<BoundaryRelation> parse_boundary_relations(const std::string& text) {
    std::vector<BoundaryRelation> rels;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        int dim;
        std::string arrow;
        if (!(row >> dim >> arrow) || arrow != "<=")
            throw ConfigError("boundary relations: malformed line: " + line);
        BoundaryRelation rel;
        rel.cell = CellLabel::from_dim(dim);
        int face;
        while (row >> face) rel.faces.push_back(CellLabel::from_dim(face));
        if (rel.faces.empty()) throw ConfigError("boundary relations: no faces: " + line);
        rels.push_back(std::move(rel));
    }
    return rels;
}

std::string serialize_boundary_relations(const std::vector<BoundaryRelation>& rels) {
    std::ostringstream out;
    for (const BoundaryRelation& rel : rels) {
        out << rel.cell.dim() << " <=";
        for (const CellLabel& f : rel.faces) out << ' ' << f.dim();
        out << '\n';
    }
    return out.str();
}

namespace {

const std::vector<BoundaryRelation>& master_relations() {
    static const std::vector<BoundaryRelation> rels =
        parse_boundary_relations(data::boundary_relations_text());
    return rels;
}

bool census_has(Space s, const CellLabel& label) {
    const std::vector<int>& gens = space_generators(s);
    for (int g : label.gens)
        if (std::count(gens.begin(), gens.end(), g) == 0) return false;
    return true;
}

} // namespace

std::vector<BoundaryRelation> boundary_relations(Space s) {
    std::vector<BoundaryRelation> out;
    for (const BoundaryRelation& rel : master_relations())
        if (census_has(s, rel.cell)) out.push_back(rel);
    return out;
}

bool boundary_relations_structural_ok(Space s, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (const BoundaryRelation& rel : boundary_relations(s)) {
        for (const CellLabel& f : rel.faces) {
            if (f.dim() >= rel.cell.dim())
                return fail("face of " + rel.cell.name() + " not lower-dimensional");
            if (!census_has(s, f))
                return fail("face " + f.name() + " of " + rel.cell.name() + " not in census");
        }
        std::vector<int> dims;
        for (const CellLabel& f : rel.faces) dims.push_back(f.dim());
        for (int d : boundary_closure(dims))
            if (!census_has(s, CellLabel::from_dim(d)))
                return fail("closure of " + rel.cell.name() + " leaves the census");
    }
    return true;
}

std::set<int> boundary_closure(std::span<const int> cell_dims) {
    std::set<int> closed;
    std::vector<int> todo(cell_dims.begin(), cell_dims.end());
    while (!todo.empty()) {
        const int d = todo.back();
        todo.pop_back();
        if (!closed.insert(d).second) continue;
        for (const BoundaryRelation& rel : master_relations())
            if (rel.cell.dim() == d)
                for (const CellLabel& f : rel.faces) todo.push_back(f.dim());
    }
    closed.insert(0);
    return closed;
}

bool BoundaryCheckReport::passed(double max_skip_fraction) const {
    if (!violations.empty()) return false;
    if (samples == 0) return false;
    return skipped <= static_cast<int>(max_skip_fraction * samples);
}

BoundaryCheckReport verify_boundaries_numeric(const BoundaryRelation& rel,
                                              int samples_per_face,
                                              std::uint64_t seed,
                                              double margin) {
    BoundaryCheckReport report;
    std::vector<int> face_dims;
    for (const CellLabel& f : rel.faces) face_dims.push_back(f.dim());
    const std::set<int> allowed = boundary_closure(face_dims);

    std::mt19937_64 rng(seed);

    // faces of the product domain: one disc factor per generator on its sphere
    for (std::size_t gi = 0; gi < rel.cell.gens.size(); ++gi) {
        const Chart chart = chart_from_dim(rel.cell.gens[gi]);
        const std::vector<int>& factors = chart_factor_dims(chart);
        for (std::size_t fi = 0; fi < factors.size(); ++fi) {
            for (int s = 0; s < samples_per_face; ++s) {
                Mat8 g = Mat8::identity();
                for (std::size_t gj = 0; gj < rel.cell.gens.size(); ++gj) {
                    const Chart cj = chart_from_dim(rel.cell.gens[gj]);
                    DiscParam v = random_interior_param(cj, margin, rng);
                    if (gj == gi) {
                        // pin the chosen factor to its boundary sphere
                        std::size_t off = 0;
                        for (std::size_t k = 0; k < fi; ++k)
                            off += static_cast<std::size_t>(chart_factor_dims(cj)[k]);
                        const int d = chart_factor_dims(cj)[fi];
                        random_on_sphere(
                            std::span<double>(v.coords.data() + off, static_cast<std::size_t>(d)),
                            rng);
                    }
                    g = g * char_map(v);
                }
                ++report.samples;
                try {
                    const Factorization fact = factorize(g);
                    if (allowed.count(fact.label.dim()) == 0) {
                        std::ostringstream msg;
                        msg << rel.cell.name() << " face " << gi << "." << fi
                            << ": sample landed in " << fact.label.name()
                            << " outside the listed closure";
                        report.violations.push_back(msg.str());
                    } else {
                        ++report.ok;
                    }
                } catch (const BoundaryError&) {
                    ++report.skipped;
                } catch (const NumericError&) {
                    ++report.skipped;
                } catch (const InconsistencyError&) {
                    ++report.skipped;
                }
            }
        }
    }
    return report;
}

Filtration parse_filtration(const std::string& text, const std::string& name) {
    Filtration f;
    f.name = name;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string kw;
        FiltrationStep step;
        if (!(row >> kw >> step.index) || kw != "step")
            throw ConfigError("filtration: malformed line: " + line);
        if (!(row >> kw) || kw != "attach")
            throw ConfigError("filtration: expected attach: " + line);
        std::string tok;
        std::string expr;
        while (row >> tok && tok != "cells") {
            if (!expr.empty()) expr += ' ';
            expr += tok;
        }
        if (tok != "cells") throw ConfigError("filtration: expected cells: " + line);
        step.attach = expr;
        int dim;
        while (row >> dim) step.new_cells.push_back(CellLabel::from_dim(dim));
        if (step.new_cells.empty()) throw ConfigError("filtration: no cells: " + line);
        f.steps.push_back(std::move(step));
    }
    return f;
}

Filtration filtration_ledger() { return parse_filtration(data::filtration_text(), "F"); }

Filtration su4_filtration_ledger() { return parse_filtration(data::su4_filtration_text(), "F'"); }

namespace {

struct AttachParser {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool eat_word(const std::string& w) {
        skip_ws();
        if (s.compare(pos, w.size(), w) == 0) {
            pos += w.size();
            return true;
        }
        return false;
    }
    int number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw ConfigError("attach expression: expected number in: " + s);
        return std::stoi(s.substr(start, pos - start));
    }

    std::vector<int> expr() {
        std::vector<int> degs = term();
        while (eat('+')) {
            std::vector<int> more = term();
            degs.insert(degs.end(), more.begin(), more.end());
        }
        std::sort(degs.begin(), degs.end());
        return degs;
    }

    std::vector<int> term() {
        skip_ws();
        if (eat_word("join")) {
            if (!eat('(')) throw ConfigError("attach expression: join needs '(' in: " + s);
            std::vector<int> lhs = expr();
            if (!eat(',')) throw ConfigError("attach expression: join needs ',' in: " + s);
            std::vector<int> rhs = expr();
            if (!eat(')')) throw ConfigError("attach expression: join needs ')' in: " + s);
            std::vector<int> degs;
            for (int a : lhs)
                for (int b : rhs) degs.push_back(a + b + 1);
            return degs;
        }
        if (eat_word("CP")) {
            const int n = number();
            std::vector<int> degs;
            for (int k = 1; k <= n; ++k) degs.push_back(2 * k);
            return degs;
        }
        if (eat_word("S")) return {number()};
        if (eat_word("A")) return {7, 9, 11};
        throw ConfigError("attach expression: cannot parse: " + s);
    }
};

} // namespace

std::vector<int> attach_degrees(const std::string& expr) {
    AttachParser p{expr};
    std::vector<int> degs = p.expr();
    p.skip_ws();
    if (p.pos != expr.size()) throw ConfigError("attach expression: trailing input in: " + expr);
    return degs;
}

namespace {

// Expected generator content of each step, from the product formulas: the
// 6-cell times the lower skeleta sweeps out the non-subgroup half.
std::vector<std::vector<CellLabel>> expected_step_labels(Space s) {
    auto subsets_of_753 = [](std::size_t size) {
        static const int base[3] = {7, 5, 3};
        std::vector<CellLabel> out;
        for (int mask = 0; mask < 8; ++mask) {
            std::vector<int> sub;
            for (int b = 0; b < 3; ++b)
                if (mask & (1 << b)) sub.push_back(base[b]);
            if (sub.size() == size) out.push_back(CellLabel::from_gens(sub));
        }
        return out;
    };
    auto with6 = [](std::vector<CellLabel> labels) {
        for (CellLabel& l : labels) {
            l.gens.insert(l.gens.begin(), 6);
        }
        return labels;
    };
    if (s == Space::SU4)
        return {subsets_of_753(1), subsets_of_753(2), subsets_of_753(3)};
    if (s != Space::Spin7) return {};
    // Spin7: skeleta of the subgroup interleaved with its 6-translates
    std::vector<std::vector<CellLabel>> steps;
    steps.push_back(subsets_of_753(1));
    std::vector<CellLabel> s2 = {CellLabel::from_gens({6})};
    for (CellLabel& l : subsets_of_753(2)) s2.push_back(l);
    steps.push_back(s2);
    std::vector<CellLabel> s3 = with6(subsets_of_753(1));
    for (CellLabel& l : subsets_of_753(3)) s3.push_back(l);
    steps.push_back(s3);
    steps.push_back(with6(subsets_of_753(2)));
    steps.push_back(with6(subsets_of_753(3)));
    return steps;
}

} // namespace

FiltrationCheck check_filtration(const Filtration& f, Space s) {
    FiltrationCheck check;
    auto fail = [&](const std::string& msg) {
        check.ok = false;
        check.lines.push_back("FAIL " + msg);
    };
    std::set<int> seen = {0};
    const std::vector<std::vector<CellLabel>> expected = expected_step_labels(s);
    for (const FiltrationStep& step : f.steps) {
        std::vector<int> predicted;
        for (int d : attach_degrees(step.attach)) predicted.push_back(d + 1);
        std::vector<int> actual;
        for (const CellLabel& l : step.new_cells) actual.push_back(l.dim());
        std::sort(predicted.begin(), predicted.end());
        std::sort(actual.begin(), actual.end());
        std::ostringstream line;
        line << f.name << "_" << step.index << " attach " << step.attach << " -> dims {";
        for (std::size_t i = 0; i < actual.size(); ++i) line << (i ? "," : "") << actual[i];
        line << "}";
        if (predicted != actual) {
            fail(line.str() + " does not match the attachment degrees");
            continue;
        }
        for (const CellLabel& l : step.new_cells) {
            if (!census_has(s, l)) fail(l.name() + " not in census");
            if (!seen.insert(l.dim()).second) fail(l.name() + " repeated across steps");
        }
        if (!expected.empty() && static_cast<std::size_t>(step.index) <= expected.size()) {
            std::vector<CellLabel> want = expected[static_cast<std::size_t>(step.index - 1)];
            std::vector<CellLabel> got = step.new_cells;
            std::sort(want.begin(), want.end());
            std::sort(got.begin(), got.end());
            if (want != got) fail(line.str() + " has unexpected generator content");
        }
        check.lines.push_back("ok   " + line.str());
    }
    if (seen.size() != cell_census(s).size())
        fail("filtration does not exhaust the census");
    return check;
}

int cone_length(const std::string& tag) {
    if (tag == "spin7") return static_cast<int>(filtration_ledger().steps.size());
    if (tag == "spin8") return static_cast<int>(spin8_cone_ledger().steps.size());
    if (tag == "su4") return static_cast<int>(su4_filtration_ledger().steps.size());
    if (tag.size() == 2 && tag[0] == 'f' && tag[1] >= '1' && tag[1] <= '5') return tag[1] - '0';
    if (tag.size() == 3 && tag.compare(0, 2, "fp") == 0 && tag[2] >= '1' && tag[2] <= '3')
        return tag[2] - '0';
    throw DomainError("no cone ledger for space: " + tag);
}

Filtration spin8_cone_ledger() {
    const Filtration base = filtration_ledger();
    Filtration out;
    out.name = "G";
    for (std::size_t i = 0; i < base.steps.size() + 1; ++i) {
        FiltrationStep step;
        step.index = static_cast<int>(i + 1);
        std::string expr;
        if (i < base.steps.size()) expr = base.steps[i].attach;
        if (i > 0) {
            const std::string joined = "join(" + base.steps[i - 1].attach + ", S6)";
            expr = expr.empty() ? joined : expr + " + " + joined;
        } else {
            expr += " + S6"; // the sphere factor's own top cell
        }
        step.attach = expr;
        out.steps.push_back(std::move(step));
    }
    return out;
}

FiltrationCheck check_spin8_cone_ledger() {
    FiltrationCheck check;
    std::vector<int> ledger_dims = {0};
    for (const FiltrationStep& step : spin8_cone_ledger().steps) {
        std::ostringstream line;
        line << "G_" << step.index << " attach " << step.attach;
        check.lines.push_back(line.str());
        for (int d : attach_degrees(step.attach)) ledger_dims.push_back(d + 1);
    }
    std::vector<int> census_dims;
    for (const Cell& c : cell_census(Space::Spin8)) census_dims.push_back(c.dim());
    std::sort(ledger_dims.begin(), ledger_dims.end());
    std::sort(census_dims.begin(), census_dims.end());
    if (ledger_dims != census_dims) {
        check.ok = false;
        check.lines.push_back("FAIL ledger dims do not match the product census");
    }
    return check;
}

std::vector<double> join_box_to_ball(int m, int n, std::span<const double> point) {
    if (static_cast<int>(point.size()) != m + n)
        throw DomainError("join model: point has wrong dimension");
    double nu2 = 0.0, nv2 = 0.0;
    for (int i = 0; i < m; ++i) nu2 += point[static_cast<std::size_t>(i)] * point[static_cast<std::size_t>(i)];
    for (int i = m; i < m + n; ++i) nv2 += point[static_cast<std::size_t>(i)] * point[static_cast<std::size_t>(i)];
    const double rho = std::sqrt(std::max(nu2, nv2)); // block-max norm
    const double eps = std::sqrt(nu2 + nv2);
    std::vector<double> out(point.begin(), point.end());
    if (eps == 0.0) return out;
    const double scale = rho / eps;
    for (double& v : out) v *= scale;
    return out;
}

std::vector<double> join_ball_to_box(int m, int n, std::span<const double> point) {
    if (static_cast<int>(point.size()) != m + n)
        throw DomainError("join model: point has wrong dimension");
    double t2 = 0.0;
    for (double v : point) t2 += v * v;
    std::vector<double> out(point.begin(), point.end());
    if (t2 == 0.0) return out;
    const double t = std::sqrt(t2);
    double nu2 = 0.0, nv2 = 0.0;
    for (int i = 0; i < m; ++i) nu2 += point[static_cast<std::size_t>(i)] * point[static_cast<std::size_t>(i)];
    for (int i = m; i < m + n; ++i) nv2 += point[static_cast<std::size_t>(i)] * point[static_cast<std::size_t>(i)];
    const double mu = std::sqrt(std::max(nu2, nv2)) / t; // block-max of the direction
    const double scale = 1.0 / mu;                       // t/mu over t
    for (double& v : out) v *= scale;
    return out;
}

} // namespace spin7
