#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "spin7cells/octonion.hpp"

namespace spin7 {

/// Dense 8x8 real matrix, rows/columns indexed by the basis e0..e7.
struct Mat8 {
    std::array<double, 64> a{};

    static Mat8 identity();

    double& operator()(int r, int c) { return a[static_cast<std::size_t>(r * 8 + c)]; }
    double operator()(int r, int c) const { return a[static_cast<std::size_t>(r * 8 + c)]; }

    Mat8 operator*(const Mat8& o) const;
    Octonion operator*(const Octonion& v) const;
    Mat8 operator-() const;

    Mat8 transposed() const;

    /// Partial-pivot LU determinant.
    double determinant() const;

    Octonion column(int c) const;

    double max_abs_diff(const Mat8& o) const;
    double dist_to_identity() const;

    /// Text format: 8 lines of 8 whitespace-separated decimal numbers.
    static Mat8 parse(std::istream& in);
    static Mat8 parse_text(const std::string& text);
    void print(std::ostream& out) const;
    std::string to_text() const;
};

} // namespace spin7
