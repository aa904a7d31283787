#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cstdint>
#include <numeric>
#include <vector>

namespace springer {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

namespace detail {
using Q = boost::rational<std::int64_t>;

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<std::vector<Q>>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c].numerator() == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const Q inv = Q(1) / m[row][c];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c].numerator() == 0) continue;
            const Q f = m[r][c];
            for (std::size_t k = 0; k < cols; ++k) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

inline std::vector<std::vector<Q>> to_rational(const IntMatrix& a) {
    std::vector<std::vector<Q>> m;
    for (const auto& r : a) m.emplace_back(r.begin(), r.end());
    return m;
}
}  // namespace detail

inline std::size_t rank(const IntMatrix& a, std::size_t cols) {
    auto m = detail::to_rational(a);
    return detail::rref(m, cols).size();
}

/// Integer basis of {v : a v = 0}, one primitive vector per free column.
inline IntMatrix kernel_basis(const IntMatrix& a, std::size_t cols) {
    auto m = detail::to_rational(a);
    const auto pivots = detail::rref(m, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;
    IntMatrix out;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<detail::Q> v(cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][f];
        std::int64_t den = 1;
        for (const auto& x : v) den = std::lcm(den, x.denominator());
        std::vector<std::int64_t> iv;
        for (const auto& x : v) iv.push_back(x.numerator() * (den / x.denominator()));
        out.push_back(iv);
    }
    return out;
}

inline std::vector<std::int64_t> apply(const IntMatrix& a, const std::vector<std::int64_t>& v) {
    std::vector<std::int64_t> out(a.size(), 0);
    for (std::size_t r = 0; r < a.size(); ++r)
        for (std::size_t c = 0; c < v.size(); ++c) out[r] += a[r][c] * v[c];
    return out;
}

/// Whether ker a is contained in ker b, checked on an integer kernel basis of a.
inline bool kernel_contained(const IntMatrix& a, const IntMatrix& b, std::size_t cols) {
    for (const auto& v : kernel_basis(a, cols))
        for (auto x : apply(b, v))
            if (x != 0) return false;
    return true;
}

/// Exact determinant of a square integer matrix (fraction-free Bareiss elimination).
inline boost::multiprecision::cpp_int determinant(const IntMatrix& a) {
    using boost::multiprecision::cpp_int;
    const std::size_t n = a.size();
    std::vector<std::vector<cpp_int>> m;
    for (const auto& r : a) m.emplace_back(r.begin(), r.end());
    cpp_int prev = 1;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            sign = -sign;
        }
        for (std::size_t r = c + 1; r < n; ++r) {
            for (std::size_t k = c + 1; k < n; ++k) m[r][k] = (m[r][k] * m[c][c] - m[r][c] * m[c][k]) / prev;
            m[r][c] = 0;
        }
        prev = m[c][c];
    }
    return n == 0 ? cpp_int(1) : sign * m[n - 1][n - 1];
}

}  // namespace springer
