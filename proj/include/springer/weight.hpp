#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace springer {

/// Thrown for malformed input (bad weight strings, shape mismatches, invalid orders).
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Two-row shape (n-k, k): n points, k down marks, 2k <= n.
struct Shape {
    int n = 0;
    int k = 0;

    void validate() const {
        if (n < 0 || k < 0 || 2 * k > n)
            throw validation_error("invalid shape (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
    }
    auto operator<=>(const Shape&) const = default;
};

/// A sequence of up (^) / down (v) marks on points 1..n.
class Weight {
public:
    Weight() = default;

    /// Accepts '^'/'v' and the Unicode wedges U+2227 / U+2228.
    explicit Weight(std::string_view text) {
        for (std::size_t i = 0; i < text.size();) {
            const unsigned char c = static_cast<unsigned char>(text[i]);
            if (c == '^' || c == 'v') {
                marks_.push_back(c == 'v');
                ++i;
            } else if (c == 0xE2 && i + 2 < text.size() && static_cast<unsigned char>(text[i + 1]) == 0x88 &&
                       (static_cast<unsigned char>(text[i + 2]) == 0xA7 ||
                        static_cast<unsigned char>(text[i + 2]) == 0xA8)) {
                marks_.push_back(static_cast<unsigned char>(text[i + 2]) == 0xA8);
                i += 3;
            } else {
                throw validation_error("unparsable weight '" + std::string(text) + "'");
            }
        }
    }

    static Weight from_downs(int n, const std::vector<int>& downs) {
        Weight w;
        w.marks_.assign(static_cast<std::size_t>(n), false);
        for (int p : downs) w.marks_.at(static_cast<std::size_t>(p - 1)) = true;
        return w;
    }

    int size() const { return static_cast<int>(marks_.size()); }
    /// 1-based access.
    bool down(int p) const { return marks_.at(static_cast<std::size_t>(p - 1)); }
    bool up(int p) const { return !down(p); }
    void set_down(int p, bool d) { marks_.at(static_cast<std::size_t>(p - 1)) = d; }
    void flip(int p) { set_down(p, !down(p)); }

    int downs() const { return static_cast<int>(std::count(marks_.begin(), marks_.end(), true)); }
    Shape shape() const { return {size(), downs()}; }

    std::string str() const {
        std::string s;
        for (bool d : marks_) s.push_back(d ? 'v' : '^');
        return s;
    }

    auto operator<=>(const Weight&) const = default;
    bool operator==(const Weight&) const = default;

private:
    std::vector<bool> marks_;
};

namespace detail {
inline bool next_colex(std::vector<int>& c, int n) {
    // c holds increasing 1-based positions; advance to next subset in colex order
    const int k = static_cast<int>(c.size());
    for (int i = 0; i < k; ++i) {
        const int limit = (i + 1 < k) ? c[static_cast<std::size_t>(i + 1)] : n + 1;
        if (c[static_cast<std::size_t>(i)] + 1 < limit) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = j + 1;
            return true;
        }
    }
    return false;
}
}  // namespace detail

/// All weights of the shape, ordered colexicographically by the positions of their up marks.
/// For (4,2) this gives ^^vv, ^v^v, v^^v, ^vv^, v^v^, vv^^.
inline std::vector<Weight> enumerate_weights(Shape s) {
    s.validate();
    const int ups = s.n - s.k;
    std::vector<int> pos(static_cast<std::size_t>(ups));
    for (int i = 0; i < ups; ++i) pos[static_cast<std::size_t>(i)] = i + 1;
    std::vector<Weight> out;
    do {
        std::vector<int> downs;
        for (int p = 1, j = 0; p <= s.n; ++p) {
            if (j < ups && pos[static_cast<std::size_t>(j)] == p)
                ++j;
            else
                downs.push_back(p);
        }
        out.push_back(Weight::from_downs(s.n, downs));
    } while (detail::next_colex(pos, s.n));
    return out;
}

/// Number of inversions: pairs i < j with w_i = v and w_j = ^.
inline int length(const Weight& w) {
    int downs_seen = 0, inv = 0;
    for (int p = 1; p <= w.size(); ++p) {
        if (w.down(p))
            ++downs_seen;
        else
            inv += downs_seen;
    }
    return inv;
}

}  // namespace springer
