#include "spin7cells/cohomology.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "spin7cells/cellcomplex.hpp"
#include "spin7cells/data.hpp"
#include "spin7cells/errors.hpp"

namespace spin7 {

namespace {

int parse_kv(const std::string& token, const std::string& key) {
    if (token.compare(0, key.size(), key) != 0)
        throw ConfigError("expected " + key + "<int>, got: " + token);
    return std::stoi(token.substr(key.size()));
}

} // namespace

GradedRingGF2 GradedRingGF2::parse(const std::string& text) {
    GradedRingGF2 ring;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string first;
        row >> first;
        if (first == "truncate") {
            std::set<int> kept;
            int d;
            while (row >> d) kept.insert(d);
            ring.kept_degrees = kept;
            continue;
        }
        RingGenerator g;
        g.name = first;
        std::string tok;
        while (row >> tok) {
            if (tok.rfind("deg=", 0) == 0) g.degree = parse_kv(tok, "deg=");
            else if (tok.rfind("height=", 0) == 0) g.height = parse_kv(tok, "height=");
            else throw ConfigError("ring: unexpected token: " + tok);
        }
        if (g.degree <= 0 || g.height < 2) throw ConfigError("ring: bad generator line: " + line);
        ring.gens.push_back(std::move(g));
    }
    return ring;
}

std::string GradedRingGF2::serialize() const {
    std::ostringstream out;
    for (const RingGenerator& g : gens)
        out << g.name << " deg=" << g.degree << " height=" << g.height << '\n';
    if (kept_degrees) {
        out << "truncate";
        for (int d : *kept_degrees) out << ' ' << d;
        out << '\n';
    }
    return out.str();
}

int GradedRingGF2::monomial_degree(std::span<const int> exps) const {
    int d = 0;
    for (std::size_t i = 0; i < gens.size(); ++i) d += exps[i] * gens[i].degree;
    return d;
}

bool GradedRingGF2::monomial_alive(std::span<const int> exps) const {
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (exps[i] < 0 || exps[i] >= gens[i].height) return false;
    if (kept_degrees && kept_degrees->count(monomial_degree(exps)) == 0) return false;
    return true;
}

std::vector<std::vector<int>> GradedRingGF2::monomials() const {
    std::vector<std::vector<int>> out;
    std::vector<int> exps(gens.size(), 0);
    while (true) {
        if (monomial_alive(exps)) out.push_back(exps);
        std::size_t i = 0;
        for (; i < gens.size(); ++i) {
            if (++exps[i] < gens[i].height) break;
            exps[i] = 0;
        }
        if (i == gens.size()) break;
    }
    return out;
}

AdditiveTable additive_basis(const GradedRingGF2& ring) {
    AdditiveTable table;
    for (const auto& exps : ring.monomials()) ++table[ring.monomial_degree(exps)];
    return table;
}

int cup_length(const GradedRingGF2& ring) {
    int best = 0;
    for (const auto& exps : ring.monomials()) {
        int factors = 0;
        for (int e : exps) factors += e;
        best = std::max(best, factors);
    }
    return best;
}

namespace {

// An element is a GF(2) sum of monomials (sets add symmetric-differencewise).
using Element = std::set<std::vector<int>>;

Element multiply(const GradedRingGF2& ring, const Element& a, const Element& b) {
    Element out;
    for (const auto& ma : a)
        for (const auto& mb : b) {
            std::vector<int> prod(ring.gens.size());
            bool zero = false;
            for (std::size_t i = 0; i < ring.gens.size(); ++i) {
                prod[i] = ma[i] + mb[i];
                if (prod[i] >= ring.gens[i].height) zero = true;
            }
            if (zero || !ring.monomial_alive(prod)) continue;
            auto it = out.find(prod);
            if (it == out.end()) out.insert(prod);
            else out.erase(it); // GF(2)
        }
    return out;
}

void bruteforce_dfs(const GradedRingGF2& ring,
                    const std::vector<std::vector<Element>>& homogeneous,
                    const Element& acc, int count, int& best) {
    best = std::max(best, count);
    for (const auto& degree_class : homogeneous)
        for (const Element& h : degree_class) {
            const Element next = multiply(ring, acc, h);
            if (!next.empty()) bruteforce_dfs(ring, homogeneous, next, count + 1, best);
        }
}

} // namespace

int cup_length_bruteforce(const GradedRingGF2& ring) {
    // all nonzero homogeneous elements, grouped by (positive) degree
    std::map<int, std::vector<std::vector<int>>> basis_by_degree;
    for (const auto& exps : ring.monomials()) {
        const int d = ring.monomial_degree(exps);
        if (d > 0) basis_by_degree[d].push_back(exps);
    }
    std::vector<std::vector<Element>> homogeneous;
    for (const auto& [d, basis] : basis_by_degree) {
        std::vector<Element> classes;
        const std::size_t n = basis.size();
        for (std::size_t mask = 1; mask < (1ull << n); ++mask) {
            Element e;
            for (std::size_t b = 0; b < n; ++b)
                if (mask & (1ull << b)) e.insert(basis[b]);
            classes.push_back(std::move(e));
        }
        homogeneous.push_back(std::move(classes));
    }
    Element unit;
    unit.insert(std::vector<int>(ring.gens.size(), 0));
    int best = 0;
    bruteforce_dfs(ring, homogeneous, unit, 0, best);
    return best;
}

namespace {

std::set<int> filtration_kept_degrees(const Filtration& f, int upto_step) {
    std::set<int> kept = {0};
    for (const FiltrationStep& step : f.steps) {
        if (step.index > upto_step) break;
        for (const CellLabel& l : step.new_cells) kept.insert(l.dim());
    }
    return kept;
}

} // namespace

GradedRingGF2 ring_for_space(const std::string& tag) {
    if (tag == "spin7" || tag == "su4" || tag == "spin8")
        return GradedRingGF2::parse(data::ring_text(tag));
    if (tag.size() == 2 && tag[0] == 'f' && tag[1] >= '1' && tag[1] <= '5') {
        GradedRingGF2 ring = GradedRingGF2::parse(data::ring_text("spin7"));
        ring.kept_degrees = filtration_kept_degrees(filtration_ledger(), tag[1] - '0');
        return ring;
    }
    if (tag.size() == 3 && tag.compare(0, 2, "fp") == 0 && tag[2] >= '1' && tag[2] <= '3') {
        GradedRingGF2 ring = GradedRingGF2::parse(data::ring_text("su4"));
        ring.kept_degrees = filtration_kept_degrees(su4_filtration_ledger(), tag[2] - '0');
        return ring;
    }
    throw DomainError("no shipped ring for space: " + tag);
}

CategoryReport ls_category_report(const std::string& tag) {
    CategoryReport report;
    report.space = tag;
    report.wcat_lower = cup_length(ring_for_space(tag));
    report.cat_upper = cone_length(tag);
    return report;
}

std::vector<SsMatching> parse_ss_matchings(const std::string& text) {
    std::vector<SsMatching> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string kw;
        row >> kw;
        if (kw != "match") continue;
        SsMatching m;
        std::string qtok, arrow, ptok, rtok;
        if (!(row >> m.generator >> qtok >> arrow >> ptok >> rtok) || arrow != "->")
            throw ConfigError("ss ledger: malformed match: " + line);
        m.q = parse_kv(qtok, "q=");
        m.p = parse_kv(ptok, "p=");
        m.r = parse_kv(rtok, "r=");
        out.push_back(std::move(m));
    }
    return out;
}

namespace {

AdditiveTable parse_named_table(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string kw, tag;
        row >> kw >> tag;
        if (kw != "table" || tag != name) continue;
        AdditiveTable table;
        std::string entry;
        while (row >> entry) {
            const auto colon = entry.find(':');
            if (colon == std::string::npos) throw ConfigError("ss ledger: bad entry: " + entry);
            table[std::stoi(entry.substr(0, colon))] = std::stoi(entry.substr(colon + 1));
        }
        return table;
    }
    throw ConfigError("ss ledger: no table named " + name);
}

int table_rank(const AdditiveTable& t, int degree) {
    auto it = t.find(degree);
    return it == t.end() ? 0 : it->second;
}

} // namespace

LedgerReport ss_ledger_check() {
    LedgerReport report;
    const std::string text = data::ss_ledger_text();
    const AdditiveTable base = parse_named_table(text, "base");
    const AdditiveTable fiber = parse_named_table(text, "fiber");
    const AdditiveTable target = parse_named_table(text, "target");
    const std::vector<SsMatching> matchings = parse_ss_matchings(text);

    constexpr int kMaxTotal = 12;
    // E_2^{p,q} = H^p(base) (x) H^q(fiber), free throughout this range
    int grid[kMaxTotal + 1][kMaxTotal + 1] = {};
    for (int p = 0; p <= kMaxTotal; ++p)
        for (int q = 0; p + q <= kMaxTotal; ++q)
            grid[p][q] = table_rank(base, p) * table_rank(fiber, q);

    auto total_rank = [&grid] {
        int total = 0;
        for (int p = 0; p <= kMaxTotal; ++p)
            for (int q = 0; p + q <= kMaxTotal; ++q) total += grid[p][q];
        return total;
    };

    for (const SsMatching& m : matchings) {
        const int tq = m.q - m.r + 1;
        std::ostringstream line;
        line << "d_" << m.r << ": " << m.generator << " at (0," << m.q << ") -> (" << m.p << ","
             << tq << ")";
        if (m.p != m.r || tq < 0 || m.q > kMaxTotal || m.p + tq > kMaxTotal) {
            report.ok = false;
            report.failure = "matching outside the tracked range: " + line.str();
            report.lines.push_back("FAIL " + line.str());
            continue;
        }
        if (grid[0][m.q] < 1 || grid[m.p][tq] < 1) {
            report.ok = false;
            report.failure = "illegal cancellation at " + line.str();
            report.lines.push_back("FAIL " + line.str());
            continue;
        }
        const int before = total_rank();
        --grid[0][m.q];
        --grid[m.p][tq];
        if (before - total_rank() != 2) {
            report.ok = false;
            report.failure = "cancellation did not remove exactly 2 units: " + line.str();
            report.lines.push_back("FAIL " + line.str());
            continue;
        }
        report.lines.push_back("ok   " + line.str());
    }

    for (int n = 0; n <= kMaxTotal; ++n) {
        int surviving = 0;
        for (int p = 0; p <= n; ++p) surviving += grid[p][n - p];
        const int expected = table_rank(target, n);
        std::ostringstream line;
        line << "total degree " << n << ": surviving rank " << surviving << " expected " << expected;
        if (surviving != expected) {
            report.ok = false;
            if (report.failure.empty()) report.failure = line.str();
            report.lines.push_back("FAIL " + line.str());
        } else {
            report.lines.push_back("ok   " + line.str());
        }
    }
    return report;
}

Sq2Table parse_sq2_table(const std::string& text) {
    Sq2Table table;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        int from, to;
        std::string arrow;
        if (!(row >> from >> arrow >> to) || arrow != "->")
            throw ConfigError("sq2 table: malformed line: " + line);
        table[from] = to;
    }
    return table;
}

LedgerReport sq2_check() {
    LedgerReport report;
    const Sq2Table table = parse_sq2_table(data::sq2_text());
    const std::string ledger = data::ss_ledger_text();
    const AdditiveTable base = parse_named_table(ledger, "base");
    const std::vector<SsMatching> matchings = parse_ss_matchings(ledger);

    auto fail = [&](const std::string& msg) {
        report.ok = false;
        if (report.failure.empty()) report.failure = msg;
        report.lines.push_back("FAIL " + msg);
    };

    for (const auto& [from, to] : table) {
        std::ostringstream line;
        line << "Sq2 y" << from << " -> " << (to ? "y" + std::to_string(to) : "0");
        if (table_rank(base, from) < 1) {
            fail(line.str() + " (no class in degree " + std::to_string(from) + ")");
            continue;
        }
        if (to != 0 && to != from + 2) {
            fail(line.str() + " (degree shift is not 2)");
            continue;
        }
        if (to != 0 && table_rank(base, to) < 1) {
            fail(line.str() + " (no class in the target degree)");
            continue;
        }
        report.lines.push_back("ok   " + line.str());
    }

    // transgression commutation: Sq2 x7 transgresses to Sq2 y8 = 0, and the
    // degree-9 transgression hits y10 != 0, so Sq2 x7 must vanish
    bool tau_x9_nonzero = false;
    for (const SsMatching& m : matchings)
        if (m.generator == "x9" && m.q == 9 && m.p == 10 && m.r == 10) tau_x9_nonzero = true;
    const int sq2_y8 = table.count(8) ? table.at(8) : 0;
    if (!tau_x9_nonzero) {
        fail("ledger does not transgress x9 onto y10");
    } else if (sq2_y8 != 0) {
        fail("Sq2 y8 nonzero: cannot deduce Sq2 x7 = 0");
    } else {
        report.lines.push_back("ok   Sq2 x7 -> 0 (transgresses to Sq2 y8 = 0, tau injective via x9 -> y10)");
    }

    // Sq2 y10 = y12 matches the transgression x11 -> y12, so Sq2 x9 = x11 is
    // consistent on the fiber side
    bool tau_x11_to_y12 = false;
    for (const SsMatching& m : matchings)
        if (m.generator == "x11" && m.q == 11 && m.p == 12 && m.r == 12) tau_x11_to_y12 = true;
    const int sq2_y10 = table.count(10) ? table.at(10) : 0;
    if (sq2_y10 != 12) {
        fail("Sq2 y10 != y12: cannot detect the degree-11 transgression");
    } else if (!tau_x11_to_y12) {
        fail("ledger does not transgress x11 onto y12");
    } else {
        report.lines.push_back("ok   Sq2 x9 -> x11 consistent (tau x9 = y10, Sq2 y10 = y12 = tau x11)");
    }
    return report;
}

} // namespace spin7
