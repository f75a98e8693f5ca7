#include "spin7cells/octonion.hpp"

#include <cmath>
#include <sstream>

#include "spin7cells/data.hpp"
#include "spin7cells/errors.hpp"

namespace spin7 {

Octonion Octonion::basis(int i) {
    Octonion o;
    o.c[static_cast<std::size_t>(i)] = 1.0;
    return o;
}

Octonion Octonion::operator+(const Octonion& o) const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

Octonion Octonion::operator-(const Octonion& o) const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

Octonion Octonion::operator*(double s) const {
    Octonion r;
    for (int i = 0; i < 8; ++i) r.c[i] = c[i] * s;
    return r;
}

Octonion Octonion::operator-() const { return *this * -1.0; }

double Octonion::norm() const {
    double n = 0.0;
    for (double v : c) n += v * v;
    return n;
}

double Octonion::inf_norm() const {
    double m = 0.0;
    for (double v : c) m = std::max(m, std::abs(v));
    return m;
}

double inf_dist(const Octonion& a, const Octonion& b) { return (a - b).inf_norm(); }

MultTable::MultTable() {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) entries_[i][j] = TableEntry{1, 0};
}

MultTable MultTable::from_lines(const std::array<std::array<int, 3>, 7>& lines,
                                const std::array<int, 7>& orientation) {
    MultTable t;
    for (int k = 0; k < 8; ++k) {
        t.entries_[0][k] = TableEntry{1, k};
        t.entries_[k][0] = TableEntry{1, k};
    }
    for (int k = 1; k < 8; ++k) t.entries_[k][k] = TableEntry{-1, 0};
    for (int l = 0; l < 7; ++l) {
        const auto [a, b, c] = lines[static_cast<std::size_t>(l)];
        const int s = orientation[static_cast<std::size_t>(l)];
        // e_a e_b = s e_c cyclically, anticommuting in reverse order
        const int tri[3] = {a, b, c};
        for (int k = 0; k < 3; ++k) {
            const int u = tri[k], v = tri[(k + 1) % 3], w = tri[(k + 2) % 3];
            t.entries_[u][v] = TableEntry{s, w};
            t.entries_[v][u] = TableEntry{-s, w};
        }
    }
    return t;
}

MultTable MultTable::parse(const std::string& text) {
    MultTable t;
    std::array<std::array<bool, 8>, 8> seen{};
    std::istringstream in(text);
    std::string line;
    int count = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        int i, j, sign, k;
        if (!(row >> i >> j >> sign >> k))
            throw ConfigError("mult table: malformed line: " + line);
        if (i < 0 || i > 7 || j < 0 || j > 7 || k < 0 || k > 7 || (sign != 1 && sign != -1))
            throw ConfigError("mult table: entry out of range: " + line);
        t.entries_[i][j] = TableEntry{sign, k};
        seen[i][j] = true;
        ++count;
    }
    if (count != 64) throw ConfigError("mult table: expected 64 entries");
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (!seen[i][j]) throw ConfigError("mult table: missing entry");
    return t;
}

std::string MultTable::serialize() const {
    std::ostringstream out;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const TableEntry e = entries_[i][j];
            out << i << ' ' << j << ' ' << (e.sign > 0 ? "1" : "-1") << ' ' << e.index << '\n';
        }
    return out.str();
}

bool MultTable::structural_ok(std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    for (int k = 0; k < 8; ++k) {
        if (entries_[0][k].sign != 1 || entries_[0][k].index != k) return fail("e0 not a left unit");
        if (entries_[k][0].sign != 1 || entries_[k][0].index != k) return fail("e0 not a right unit");
    }
    for (int k = 1; k < 8; ++k)
        if (entries_[k][k].sign != -1 || entries_[k][k].index != 0)
            return fail("e_i^2 != -e0");
    for (int i = 1; i < 8; ++i)
        for (int j = 1; j < 8; ++j) {
            if (i == j) continue;
            const TableEntry a = entries_[i][j], b = entries_[j][i];
            if (a.index != b.index || a.sign != -b.sign) return fail("not anticommutative");
            if (a.index == 0 || a.index == i || a.index == j) return fail("degenerate product index");
        }
    for (int k = 1; k <= 3; ++k) {
        const TableEntry e = entries_[1][2 * k];
        if (e.sign != 1 || e.index != 2 * k + 1) return fail("complex-module convention violated");
    }
    return true;
}

bool MultTable::operator==(const MultTable& other) const {
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const TableEntry a = entries_[i][j], b = other.entries_[i][j];
            if (a.sign != b.sign || a.index != b.index) return false;
        }
    return true;
}

const MultTable& cayley_table() {
    static const MultTable table = [] {
        MultTable t = MultTable::parse(data::mult_table_text());
        std::string why;
        if (!t.structural_ok(&why)) throw ConfigError("shipped mult table invalid: " + why);
        return t;
    }();
    return table;
}

Octonion mul(const Octonion& x, const Octonion& y, const MultTable& table) {
    Octonion r;
    for (int i = 0; i < 8; ++i) {
        const double xi = x.c[static_cast<std::size_t>(i)];
        if (xi == 0.0) continue;
        for (int j = 0; j < 8; ++j) {
            const double yj = y.c[static_cast<std::size_t>(j)];
            if (yj == 0.0) continue;
            const TableEntry e = table.at(i, j);
            r.c[static_cast<std::size_t>(e.index)] += e.sign * xi * yj;
        }
    }
    return r;
}

Octonion octonion_mul(const Octonion& x, const Octonion& y) { return mul(x, y, cayley_table()); }

Octonion conj(const Octonion& x) {
    Octonion r = x;
    for (int i = 1; i < 8; ++i) r.c[static_cast<std::size_t>(i)] = -r.c[static_cast<std::size_t>(i)];
    return r;
}

double norm(const Octonion& x) { return x.norm(); }

Octonion inverse(const Octonion& x) {
    const double n = x.norm();
    if (n < 1e-12) throw DomainError("octonion inverse: norm below 1e-12");
    return conj(x) * (1.0 / n);
}

const std::array<std::array<int, 3>, 7>& fano_reference_lines() {
    static const std::array<std::array<int, 3>, 7> lines = {{
        {1, 2, 3}, {1, 4, 5}, {1, 6, 7}, {2, 4, 6}, {2, 5, 7}, {3, 4, 7}, {3, 5, 6},
    }};
    return lines;
}

} // namespace spin7
