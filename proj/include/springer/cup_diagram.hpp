#pragma once

#include <springer/weight.hpp>

#include <string>
#include <utility>
#include <vector>

namespace springer {

using Cup = std::pair<int, int>;

/// Non-crossing cups below points 1..n, with downward rays on the unmatched points.
class CupDiagram {
public:
    CupDiagram() = default;

    CupDiagram(int n, const std::vector<Cup>& cups) : n_(n), partner_(static_cast<std::size_t>(n + 1), 0) {
        if (n < 0) throw validation_error("negative point count");
        for (auto [i, j] : cups) {
            if (i > j) std::swap(i, j);
            if (i < 1 || j > n || i == j) throw validation_error("cup endpoint out of range");
            if (partner_[static_cast<std::size_t>(i)] || partner_[static_cast<std::size_t>(j)])
                throw validation_error("point used twice");
            if ((j - i) % 2 == 0) throw validation_error("cup spans an odd number of points");
            partner_[static_cast<std::size_t>(i)] = j;
            partner_[static_cast<std::size_t>(j)] = i;
        }
        for (auto [a, b] : this->cups())
            for (auto [c, d] : this->cups())
                if (a < c && c < b && b < d) throw validation_error("crossing cups");
        for (int p : rays())
            for (auto [a, b] : this->cups())
                if (a < p && p < b) throw validation_error("ray inside a cup");
    }

    int n() const { return n_; }
    /// Cup partner of p, or 0 for a ray.
    int partner(int p) const { return partner_.at(static_cast<std::size_t>(p)); }
    bool is_ray(int p) const { return partner(p) == 0; }
    bool is_left_end(int p) const { return partner(p) > p; }

    /// Cups sorted by left endpoint.
    std::vector<Cup> cups() const {
        std::vector<Cup> out;
        for (int p = 1; p <= n_; ++p)
            if (is_left_end(p)) out.emplace_back(p, partner(p));
        return out;
    }
    std::vector<int> rays() const {
        std::vector<int> out;
        for (int p = 1; p <= n_; ++p)
            if (is_ray(p)) out.push_back(p);
        return out;
    }
    int cup_count() const { return static_cast<int>(cups().size()); }

    /// Number of cups strictly enclosing the cup with left end i.
    int depth(int i) const {
        int d = 0;
        for (auto [a, b] : cups())
            if (a < i && partner(i) < b) ++d;
        return d;
    }

    bool operator==(const CupDiagram&) const = default;

private:
    int n_ = 0;
    std::vector<int> partner_{0};
};

/// m(w): repeatedly join a v with the next free ^ to its right (stack matching); rays elsewhere.
inline CupDiagram weight_to_m(const Weight& w) {
    std::vector<int> stack;
    std::vector<Cup> cups;
    for (int p = 1; p <= w.size(); ++p) {
        if (w.down(p)) {
            stack.push_back(p);
        } else if (!stack.empty()) {
            cups.emplace_back(stack.back(), p);
            stack.pop_back();
        }
    }
    return CupDiagram(w.size(), cups);
}

/// C(w): m(w) completed by matching each remaining v, innermost first, to the nearest free ^ on its left.
inline CupDiagram weight_to_C(const Weight& w) {
    const CupDiagram m = weight_to_m(w);
    std::vector<Cup> cups = m.cups();
    std::vector<int> free_up, free_down;
    for (int p : m.rays()) (w.down(p) ? free_down : free_up).push_back(p);
    for (int d : free_down) {
        if (free_up.empty()) throw validation_error("weight " + w.str() + " cannot be completed to a full matching");
        cups.emplace_back(free_up.back(), d);
        free_up.pop_back();
    }
    return CupDiagram(w.size(), cups);
}

/// Cup count of m(w) equals the number of downs.
inline bool is_standard(const Weight& w) { return weight_to_m(w).cup_count() == w.downs(); }

/// Cups carry opposite marks and every ray reads ^.
inline bool is_oriented(const Weight& w, const CupDiagram& c) {
    if (w.size() != c.n()) throw validation_error("length mismatch between weight and diagram");
    for (auto [i, j] : c.cups())
        if (w.down(i) == w.down(j)) return false;
    for (int p : c.rays())
        if (w.down(p)) return false;
    return true;
}

/// Cups carry opposite marks and rays agree with the reference weight.
inline bool oriented_against(const Weight& w, const CupDiagram& c, const Weight& ref) {
    if (w.size() != c.n() || ref.size() != c.n()) throw validation_error("length mismatch between weight and diagram");
    for (auto [i, j] : c.cups())
        if (w.down(i) == w.down(j)) return false;
    for (int p : c.rays())
        if (w.down(p) != ref.down(p)) return false;
    return true;
}

/// One row of point markers, cups drawn as nested brackets below, rays as '|'.
inline std::string render(const CupDiagram& c, const Weight* marks = nullptr) {
    const int n = c.n();
    const auto cups = c.cups();
    // height of a cup = 1 + height of the tallest cup inside it
    std::vector<int> height(static_cast<std::size_t>(n + 1), 0);
    for (int span = 1; span < n; span += 2)
        for (auto [a, b] : cups) {
            if (b - a != span) continue;
            int h = 1;
            for (auto [x, y] : cups)
                if (a < x && y < b) h = std::max(h, height[static_cast<std::size_t>(x)] + 1);
            height[static_cast<std::size_t>(a)] = h;
        }
    int rows = 1;
    for (auto [a, b] : cups) rows = std::max(rows, height[static_cast<std::size_t>(a)]);
    std::vector<std::string> grid(static_cast<std::size_t>(rows + 1),
                                  std::string(static_cast<std::size_t>(2 * n), ' '));
    auto at = [&](int r, int col) -> char& { return grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]; };
    for (int p = 1; p <= n; ++p) at(0, 2 * (p - 1)) = marks ? (marks->down(p) ? 'v' : '^') : '*';
    for (auto [a, b] : cups) {
        const int h = height[static_cast<std::size_t>(a)];
        for (int r = 1; r < h; ++r) at(r, 2 * (a - 1)) = at(r, 2 * (b - 1)) = '|';
        at(h, 2 * (a - 1)) = '\\';
        at(h, 2 * (b - 1)) = '/';
        for (int x = 2 * (a - 1) + 1; x < 2 * (b - 1); ++x) at(h, x) = '_';
    }
    for (int p : c.rays())
        for (int r = 1; r <= rows; ++r) at(r, 2 * (p - 1)) = '|';
    std::string out;
    for (auto& line : grid) {
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    return out;
}

}  // namespace springer
