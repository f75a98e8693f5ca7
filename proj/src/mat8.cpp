#include "spin7cells/mat8.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>

#include "spin7cells/errors.hpp"

namespace spin7 {

Mat8 Mat8::identity() {
    Mat8 m;
    for (int i = 0; i < 8; ++i) m(i, i) = 1.0;
    return m;
}

Mat8 Mat8::operator*(const Mat8& o) const {
    Mat8 r;
    for (int i = 0; i < 8; ++i)
        for (int k = 0; k < 8; ++k) {
            const double v = (*this)(i, k);
            if (v == 0.0) continue;
            for (int j = 0; j < 8; ++j) r(i, j) += v * o(k, j);
        }
    return r;
}

Octonion Mat8::operator*(const Octonion& v) const {
    Octonion r;
    for (int i = 0; i < 8; ++i) {
        double s = 0.0;
        for (int j = 0; j < 8; ++j) s += (*this)(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

Mat8 Mat8::operator-() const {
    Mat8 r;
    for (std::size_t i = 0; i < a.size(); ++i) r.a[i] = -a[i];
    return r;
}

Mat8 Mat8::transposed() const {
    Mat8 r;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) r(j, i) = (*this)(i, j);
    return r;
}

double Mat8::determinant() const {
    Mat8 lu = *this;
    double det = 1.0;
    for (int col = 0; col < 8; ++col) {
        int pivot = col;
        for (int r = col + 1; r < 8; ++r)
            if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
        if (lu(pivot, col) == 0.0) return 0.0;
        if (pivot != col) {
            for (int j = 0; j < 8; ++j) std::swap(lu(pivot, j), lu(col, j));
            det = -det;
        }
        det *= lu(col, col);
        for (int r = col + 1; r < 8; ++r) {
            const double f = lu(r, col) / lu(col, col);
            for (int j = col; j < 8; ++j) lu(r, j) -= f * lu(col, j);
        }
    }
    return det;
}

Octonion Mat8::column(int c) const {
    Octonion v;
    for (int i = 0; i < 8; ++i) v[i] = (*this)(i, c);
    return v;
}

double Mat8::max_abs_diff(const Mat8& o) const {
    double m = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - o.a[i]));
    return m;
}

double Mat8::dist_to_identity() const { return max_abs_diff(Mat8::identity()); }

Mat8 Mat8::parse(std::istream& in) {
    Mat8 m;
    for (int i = 0; i < 64; ++i) {
        double v;
        if (!(in >> v)) throw DomainError("matrix parse: expected 64 numbers");
        m.a[static_cast<std::size_t>(i)] = v;
    }
    return m;
}

Mat8 Mat8::parse_text(const std::string& text) {
    std::istringstream in(text);
    return parse(in);
}

void Mat8::print(std::ostream& out) const {
    char buf[32];
    for (int i = 0; i < 8; ++i) {
        for (int j = 0; j < 8; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", (*this)(i, j));
            out << buf << (j == 7 ? "" : " ");
        }
        out << '\n';
    }
}

std::string Mat8::to_text() const {
    std::ostringstream out;
    print(out);
    return out.str();
}

} // namespace spin7
