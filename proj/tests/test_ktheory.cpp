#include <springer/ktheory.hpp>

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace springer;

namespace {

// Upward closure of w under the move "v^" -> "^v" on adjacent positions.
std::set<Weight> reachable(const Weight& w) {
    std::set<Weight> seen{w};
    std::vector<Weight> todo{w};
    while (!todo.empty()) {
        const Weight u = todo.back();
        todo.pop_back();
        for (int p = 1; p < u.size(); ++p) {
            if (!u.down(p) || u.down(p + 1)) continue;
            Weight v = u;
            v.flip(p);
            v.flip(p + 1);
            if (seen.insert(v).second) todo.push_back(v);
        }
    }
    return seen;
}

std::vector<Shape> balanced_up_to(int max_n) {
    std::vector<Shape> out;
    for (int k = 1; 2 * k <= max_n; ++k) out.push_back({2 * k, k});
    return out;
}

std::int64_t entry(const K0Matrix& k, const std::string& row, const std::string& col) {
    auto at = [&](const std::string& s) {
        return static_cast<std::size_t>(std::find(k.weights.begin(), k.weights.end(), Weight(s)) - k.weights.begin());
    };
    return k.entries.at(at(row)).at(at(col));
}

}  // namespace

TEST(Order, GeneratingMove) {
    EXPECT_TRUE(weight_leq(Weight("v^"), Weight("^v")));
    EXPECT_FALSE(weight_leq(Weight("^v"), Weight("v^")));
    EXPECT_TRUE(weight_leq(Weight("v^v^"), Weight("v^v^")));
    EXPECT_THROW(weight_leq(Weight("v^"), Weight("v^^")), validation_error);
}

TEST(Order, EqualsClosureOfMovesUpToEight) {
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; 2 * k <= n; ++k) {
            const auto ws = enumerate_weights({n, k});
            for (const auto& w : ws) {
                const auto up = reachable(w);
                for (const auto& v : ws) EXPECT_EQ(weight_leq(w, v), up.count(v) == 1) << w.str() << " " << v.str();
            }
        }
}

TEST(Order, IsAPartialOrder) {
    const auto ws = enumerate_weights({6, 3});
    for (const auto& a : ws)
        for (const auto& b : ws) {
            if (weight_leq(a, b) && weight_leq(b, a)) EXPECT_EQ(a, b);
            for (const auto& c : ws)
                if (weight_leq(a, b) && weight_leq(b, c)) EXPECT_TRUE(weight_leq(a, c));
        }
    EXPECT_TRUE(weight_leq(Weight("vv^^"), Weight("v^v^")));
    EXPECT_TRUE(weight_leq(Weight("v^v^"), Weight("^^vv")));
}

TEST(Length, Examples) {
    EXPECT_EQ(length(Weight("^^^vvv")), 0);
    EXPECT_EQ(length(Weight("v^")), 1);
    EXPECT_EQ(length(Weight("vv^^")), 4);
}

TEST(Length, CupInsertionRaisesLengthByOne) {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; 2 * k <= n; ++k)
            for (const auto& v : enumerate_weights({n, k}))
                for (int i = 0; i <= n; ++i) {
                    std::string s = v.str();
                    const Weight plus(s.substr(0, static_cast<std::size_t>(i)) + "v^" + s.substr(static_cast<std::size_t>(i)));
                    const Weight minus(s.substr(0, static_cast<std::size_t>(i)) + "^v" + s.substr(static_cast<std::size_t>(i)));
                    EXPECT_EQ(length(plus), length(minus) + 1) << s << " " << i;
                }
}

TEST(Theta, Examples) {
    const auto t = theta_set(Weight("v^"));
    EXPECT_EQ(std::set<Weight>(t.begin(), t.end()), (std::set<Weight>{Weight("v^"), Weight("^v")}));
    EXPECT_EQ(theta_set(Weight("v^v^")).size(), 4u);
    EXPECT_EQ(theta_set(Weight("^^vv")).size(), 1u);
    EXPECT_EQ(theta_set(Weight("^^vv"), CupSource::completed).size(), 4u);
}

TEST(Theta, SizeIsTwoToTheCups) {
    for (Shape s : balanced_up_to(10))
        for (const auto& w : enumerate_weights(s)) {
            const auto t = theta_set(w);
            EXPECT_EQ(t.size(), std::size_t{1} << weight_to_m(w).cup_count());
            EXPECT_EQ(std::set<Weight>(t.begin(), t.end()).size(), t.size());
        }
}

TEST(Matrix, SmallestCase) {
    const auto k = k0_matrix({2, 1});
    EXPECT_EQ(entry(k, "v^", "v^"), 1);
    EXPECT_EQ(entry(k, "v^", "^v"), -1);
    EXPECT_EQ(entry(k, "^v", "v^"), 0);
    EXPECT_EQ(entry(k, "^v", "^v"), 1);
}

TEST(Matrix, CompletedCupsGiveSingularSmallestCase) {
    const auto k = k0_matrix({2, 1}, CupSource::completed);
    EXPECT_EQ(determinant(k.entries), 0);
}

TEST(Matrix, UnimodularUpToEight) {
    for (Shape s : balanced_up_to(8)) {
        const auto d = determinant(k0_matrix(s).entries);
        EXPECT_TRUE(d == 1 || d == -1) << s.n;
    }
}

TEST(Matrix, DiagonalSupportAndSigns) {
    for (Shape s : balanced_up_to(8)) {
        const auto k = k0_matrix(s);
        for (std::size_t r = 0; r < k.weights.size(); ++r) {
            const Weight& w = k.weights[r];
            EXPECT_EQ(k.entries[r][r], 1);
            const auto theta = theta_set(w);
            for (std::size_t c = 0; c < k.weights.size(); ++c) {
                const Weight& v = k.weights[c];
                const bool in = std::binary_search(theta.begin(), theta.end(), v);
                EXPECT_EQ(k.entries[r][c] != 0, in) << w.str() << " " << v.str();
                if (!in) continue;
                const int flips = flipped_cups(w, v);
                ASSERT_GE(flips, 0);
                EXPECT_EQ(k.entries[r][c], flips % 2 == 0 ? 1 : -1) << w.str() << " " << v.str();
            }
        }
    }
}

TEST(Matrix, DirectionIsUniformAndUnitriangular) {
    for (Shape s : balanced_up_to(8)) {
        const auto k = k0_matrix(s);
        const auto d = support_direction(k);
        EXPECT_EQ(d, OrderDirection::stated) << s.n;
        EXPECT_TRUE(unitriangular(k, d)) << s.n;
        EXPECT_FALSE(unitriangular(k, OrderDirection::reversed)) << s.n;
    }
    EXPECT_EQ(to_string(OrderDirection::stated), "stated");
}

TEST(Matrix, Csv) {
    EXPECT_EQ(to_csv(k0_matrix({2, 1})), "weight,^v,v^\n^v,1,0\nv^,-1,1\n");
}
