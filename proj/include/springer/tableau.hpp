#pragma once

#include <springer/cup_diagram.hpp>
#include <springer/weight.hpp>

#include <algorithm>
#include <string>
#include <vector>

namespace springer {

/// Two-row tableau with strictly decreasing rows; the bottom row lists the left cup ends.
struct StandardTableau {
    std::vector<int> top;
    std::vector<int> bottom;

    int n() const { return static_cast<int>(top.size() + bottom.size()); }
    Shape shape() const { return {n(), static_cast<int>(bottom.size())}; }

    void validate() const {
        const int n = this->n();
        std::vector<int> seen(static_cast<std::size_t>(n + 1), 0);
        for (const auto* row : {&top, &bottom}) {
            for (std::size_t i = 0; i < row->size(); ++i) {
                const int e = (*row)[i];
                if (e < 1 || e > n || seen[static_cast<std::size_t>(e)]++)
                    throw validation_error("tableau rows do not partition 1..n");
                if (i > 0 && (*row)[i - 1] <= e) throw validation_error("tableau row not strictly decreasing");
            }
        }
        if (bottom.size() > top.size()) throw validation_error("bottom row longer than top row");
        for (std::size_t c = 0; c < bottom.size(); ++c)
            if (top[c] <= bottom[c]) throw validation_error("tableau column not strictly decreasing");
    }

    /// Down marks on the bottom row.
    Weight weight() const {
        return Weight::from_downs(n(), bottom);
    }

    /// Rows as digit strings, e.g. "43/21"; entries are comma separated once n >= 10.
    std::string str() const {
        const char* sep = n() >= 10 ? "," : "";
        auto row = [&](const std::vector<int>& r) {
            std::string s;
            for (std::size_t i = 0; i < r.size(); ++i) s += (i ? sep : "") + std::to_string(r[i]);
            return s;
        };
        return row(top) + "/" + row(bottom);
    }

    bool operator==(const StandardTableau&) const = default;
};

inline StandardTableau tableau_from_weight(const Weight& w) {
    StandardTableau t;
    for (int p = w.size(); p >= 1; --p) (w.down(p) ? t.bottom : t.top).push_back(p);
    return t;
}

inline CupDiagram tableau_to_cup(const StandardTableau& s) {
    s.validate();
    return weight_to_m(s.weight());
}

inline StandardTableau cup_to_tableau(const CupDiagram& c) {
    StandardTableau t;
    for (int p = c.n(); p >= 1; --p) (c.is_left_end(p) ? t.bottom : t.top).push_back(p);
    return t;
}

/// Standard tableaux of the shape in weight enumeration order.
inline std::vector<StandardTableau> enumerate_standard(Shape s) {
    std::vector<StandardTableau> out;
    for (const auto& w : enumerate_weights(s))
        if (is_standard(w)) out.push_back(tableau_from_weight(w));
    return out;
}

}  // namespace springer
