#pragma once

#include <springer/cup_diagram.hpp>
#include <springer/linalg.hpp>
#include <springer/weight.hpp>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace springer {

/// w <= v iff every suffix of v holds at least as many downs as the same suffix of w
/// (so v^ <= ^v: moving a down mark to the right makes a weight bigger).
inline bool weight_leq(const Weight& w, const Weight& v) {
    if (w.shape() != v.shape()) throw validation_error("compared weights have different shapes");
    int dw = 0, dv = 0;
    for (int p = w.size(); p >= 1; --p) {
        dw += w.down(p);
        dv += v.down(p);
        if (dv < dw) return false;
    }
    return true;
}

enum class CupSource { m, completed };

/// Weights obtained from w by flipping both marks of any subset of cups of m(w) (or of C(w)).
inline std::vector<Weight> theta_set(const Weight& w, CupSource src = CupSource::m) {
    const CupDiagram c = src == CupSource::m ? weight_to_m(w) : weight_to_C(w);
    const auto cups = c.cups();
    std::vector<Weight> out;
    for (std::size_t bits = 0; bits < (std::size_t{1} << cups.size()); ++bits) {
        Weight v = w;
        for (std::size_t k = 0; k < cups.size(); ++k)
            if (bits >> k & 1) {
                v.flip(cups[k].first);
                v.flip(cups[k].second);
            }
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Number of cups flipped to reach v from w inside theta_set(w), or -1.
inline int flipped_cups(const Weight& w, const Weight& v, CupSource src = CupSource::m) {
    const CupDiagram c = src == CupSource::m ? weight_to_m(w) : weight_to_C(w);
    int flips = 0;
    for (int p = 1; p <= w.size(); ++p) {
        if (w.down(p) == v.down(p)) continue;
        if (c.is_ray(p)) return -1;
        if (w.down(c.partner(p)) == v.down(c.partner(p))) return -1;
        if (c.is_left_end(p)) ++flips;
    }
    return flips;
}

/// Rows [M_w], columns [L_w'], both indexed by enumerate_weights(shape).
struct K0Matrix {
    std::vector<Weight> weights;
    IntMatrix entries;
};

inline K0Matrix k0_matrix(Shape s, CupSource src = CupSource::m) {
    K0Matrix k{enumerate_weights(s), {}};
    const std::size_t n = k.weights.size();
    k.entries.assign(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t r = 0; r < n; ++r) {
        const Weight& w = k.weights[r];
        for (const Weight& v : theta_set(w, src)) {
            const auto c = static_cast<std::size_t>(std::find(k.weights.begin(), k.weights.end(), v) - k.weights.begin());
            k.entries[r][c] = (length(w) - length(v)) % 2 == 0 ? 1 : -1;
        }
    }
    return k;
}

enum class OrderDirection { stated, reversed, none };

inline std::string to_string(OrderDirection d) {
    switch (d) {
        case OrderDirection::stated: return "stated";
        case OrderDirection::reversed: return "reversed";
        default: return "none";
    }
}

/// Which direction of weight_leq puts every off-diagonal support entry w' of row w above w
/// ("stated": w < w'), below it ("reversed"), or neither uniformly.
inline OrderDirection support_direction(const K0Matrix& k) {
    bool up = true, down = true;
    for (std::size_t r = 0; r < k.weights.size(); ++r)
        for (std::size_t c = 0; c < k.weights.size(); ++c) {
            if (r == c || k.entries[r][c] == 0) continue;
            const Weight &w = k.weights[r], &v = k.weights[c];
            up = up && weight_leq(w, v) && w != v;
            down = down && weight_leq(v, w) && w != v;
        }
    if (up) return OrderDirection::stated;
    if (down) return OrderDirection::reversed;
    return OrderDirection::none;
}

/// Reorders rows and columns by a linear extension of the direction and checks the result is
/// upper unitriangular.
inline bool unitriangular(const K0Matrix& k, OrderDirection d) {
    if (d == OrderDirection::none) return false;
    std::vector<std::size_t> idx(k.weights.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    // number of weights strictly below: a linear extension of the partial order
    auto below = [&](std::size_t i) {
        int cnt = 0;
        for (const auto& v : k.weights)
            if (v != k.weights[i] && weight_leq(v, k.weights[i])) ++cnt;
        return d == OrderDirection::stated ? cnt : -cnt;
    };
    std::vector<int> key(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) key[i] = below(i);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
    for (std::size_t r = 0; r < idx.size(); ++r) {
        if (k.entries[idx[r]][idx[r]] != 1) return false;
        for (std::size_t c = 0; c < r; ++c)
            if (k.entries[idx[r]][idx[c]] != 0) return false;
    }
    return true;
}

inline std::string to_csv(const K0Matrix& k) {
    std::string out = "weight";
    for (const auto& w : k.weights) out += "," + w.str();
    out += "\n";
    for (std::size_t r = 0; r < k.weights.size(); ++r) {
        out += k.weights[r].str();
        for (auto e : k.entries[r]) out += "," + std::to_string(e);
        out += "\n";
    }
    return out;
}

}  // namespace springer
