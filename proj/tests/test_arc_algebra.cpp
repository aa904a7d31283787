#include "tqft_oracle.hpp"

#include <springer/cohomology.hpp>
#include <springer/io.hpp>
#include <springer/table.hpp>

#include <gtest/gtest.h>

using namespace springer;

namespace {

const Weight nested("vv^^"), nxt("v^v^");

BasisElement unit_between(const Weight& x, const Weight& y) {
    for (const auto& b : hom_basis(x, y))
        if (monomial(b) == "1") return b;
    throw std::logic_error("no unit");
}

std::vector<Shape> shapes_up_to(int max_n) {
    std::vector<Shape> out;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 0; 2 * k <= n; ++k) out.push_back({n, k});
    return out;
}

}  // namespace

TEST(Products, RunningExampleThroughNextToNested) {
    const auto a = unit_between(nested, nxt), b = unit_between(nxt, nested);
    EXPECT_EQ(format_element(multiply(a, b, 1)), "x1 + x2");
    EXPECT_EQ(format_element(multiply(a, b, -1)), "x1 - x2");
}

TEST(Products, RunningExampleThroughNested) {
    const auto a = unit_between(nxt, nested), b = unit_between(nested, nxt);
    EXPECT_EQ(format_element(multiply(a, b, 1)), "x1 + x3");
    EXPECT_EQ(format_element(multiply(a, b, -1)), "-x1 - x3");
}

TEST(Products, ElementOverloadIsBilinear) {
    const auto hs = hom_basis(nested, nxt);
    ASSERT_EQ(hs.size(), 2u);
    AlgebraElement a(hs[0], 2);
    a += AlgebraElement(hs[1], -1);
    const AlgebraElement u(unit_between(nxt, nested));
    for (int alpha : {1, -1}) {
        AlgebraElement expect = multiply(hs[0], u.basis_terms()[0].first, alpha);
        AlgebraElement twice = expect;
        twice += expect;
        AlgebraElement minus;
        for (auto& [b, c] : multiply(hs[1], u.basis_terms()[0].first, alpha).basis_terms()) minus += AlgebraElement(b, -c);
        twice += minus;
        EXPECT_EQ(multiply(a, u, alpha), twice);
    }
    EXPECT_TRUE(multiply(AlgebraElement{}, u, 1).empty());
}

TEST(Basis, DegreesOfTheNestedNextHom) {
    std::vector<int> degs;
    for (const auto& b : hom_basis(nested, nxt)) degs.push_back(degree(b));
    std::sort(degs.begin(), degs.end());
    EXPECT_EQ(degs, (std::vector<int>{1, 3}));
}

TEST(Basis, SizesOnRunningExample) {
    EXPECT_EQ(algebra_basis({4, 2}, BasisFilter::standard_only).size(), 12u);
    std::size_t total = 0;
    for (const auto& a : enumerate_weights({4, 2}))
        for (const auto& b : enumerate_weights({4, 2})) total += fixed_points(a, b).size();
    EXPECT_EQ(algebra_basis({4, 2}).size(), total);
}

TEST(Basis, LabelsRoundTrip) {
    for (const auto& b : algebra_basis({6, 3})) {
        std::set<int> xs;
        for (auto [p, x] : labels(b))
            if (x) xs.insert(p);
        EXPECT_EQ(orientation_from_labels(b.src, b.tgt, xs), b.orient);
        EXPECT_EQ(parse_basis_element(b.src.str() + "," + b.tgt.str() + "," + monomial(b)), b);
    }
}

TEST(Basis, ParseRejectsBadInput) {
    EXPECT_THROW(parse_basis_element("vv^^"), validation_error);
    EXPECT_THROW(parse_basis_element("vv^^,v^v"), validation_error);
    EXPECT_THROW(parse_basis_element("vv^^,v^v^,y1"), validation_error);
    EXPECT_THROW(parse_basis_element("vv^^,v^v^,x9"), validation_error);
    EXPECT_THROW(parse_basis_element("^^vv,v^^v"), validation_error);  // empty Hom
}

TEST(Grading, StandardPairsFollowCircleLaw) {
    for (int k : {2, 3, 4}) {
        const auto ws = enumerate_weights({2 * k, k});
        for (const auto& x : ws)
            for (const auto& y : ws) {
                if (!is_standard(x) || !is_standard(y)) continue;
                const auto hs = hom_basis(x, y);
                const CircleDiagram z = glue(weight_to_m(y), weight_to_m(x));
                std::vector<Weight> vs;
                for (const auto& b : hs) vs.push_back(b.orient);
                const int c = z.circle_count();
                EXPECT_EQ(degree_series(z, vs), circle_series(c, k - c)) << x.str() << " " << y.str();
            }
    }
}

TEST(Orders, CompatibilityRules) {
    const Weight y("vv^^");
    EXPECT_TRUE(order_compatible(y, {{1, 4}, {2, 3}}));
    EXPECT_FALSE(order_compatible(y, {{2, 3}, {1, 4}}));
    EXPECT_FALSE(order_compatible(y, {{1, 4}}));
    EXPECT_EQ(compatible_orders(Weight("v^v^")).size(), 2u);
    EXPECT_EQ(compatible_orders(y).size(), 1u);
    EXPECT_EQ(default_order(Weight("vv^v^^")), (CupOrder{{1, 6}, {2, 3}, {4, 5}}));
    const auto a = unit_between(nested, nested);
    EXPECT_THROW(multiply(a, a, 1, {{2, 3}, {1, 4}}), validation_error);
}

TEST(Errors, CompositionAndAlpha) {
    const auto a = unit_between(nested, nxt);
    EXPECT_THROW(multiply(a, a, 1), composition_error);
    EXPECT_THROW(multiply_nested(a, a), composition_error);
    EXPECT_THROW(multiply(a, unit_between(nxt, nested), 0), validation_error);
    AlgebraElement sum(a);
    EXPECT_THROW(sum += AlgebraElement(unit_between(nxt, nested)), composition_error);
}

TEST(Table, UnitAndIdempotents) {
    for (int alpha : {1, -1}) {
        const auto t = structure_table({4, 2}, alpha);
        EXPECT_FALSE(check_unit(t)) << alpha;
        // distinct idempotents are orthogonal
        for (const auto& x : enumerate_weights({4, 2}))
            for (const auto& y : enumerate_weights({4, 2})) {
                if (x == y) continue;
                const auto ix = t.index_of(idempotent(x)), iy = t.index_of(idempotent(y));
                EXPECT_TRUE(t.product({{ix, 1}}, {{iy, 1}}).empty());
            }
    }
}

TEST(Table, AgreesWithDirectTqftOracle) {
    for (Shape s : {Shape{2, 1}, Shape{4, 2}, Shape{5, 2}, Shape{6, 3}}) {
        const auto basis = algebra_basis(s);
        for (const auto& l : basis)
            for (const auto& r : basis) {
                if (l.tgt != r.src) continue;
                EXPECT_EQ(multiply(l, r, 1), oracle::product(l, r))
                    << l.src.str() << " " << l.tgt.str() << " " << r.tgt.str() << " " << monomial(l) << "*" << monomial(r);
            }
    }
}

TEST(Table, DegreeAdditivity) {
    for (Shape s : shapes_up_to(6))
        for (int alpha : {1, -1}) EXPECT_FALSE(check_degree_additivity(structure_table(s, alpha))) << s.n << s.k << alpha;
}

TEST(Associativity, PlusOneIsAssociative) {
    for (Shape s : {Shape{4, 2}, Shape{5, 2}, Shape{6, 3}}) EXPECT_FALSE(check_associativity(structure_table(s, 1))) << s.n;
}

TEST(Associativity, MinusOneHasWitness) {
    const auto t = structure_table({4, 2}, -1);
    const auto w = check_associativity(t);
    ASSERT_TRUE(w);
    auto element = [&](const std::map<std::size_t, std::int64_t>& m) {
        AlgebraElement e;
        for (auto [k, c] : m) e += AlgebraElement(t.basis[k], c);
        return e;
    };
    const AlgebraElement ab = multiply(w->a, w->b, -1), bc = multiply(w->b, w->c, -1);
    EXPECT_EQ(multiply(ab, AlgebraElement(w->c), -1), element(w->left));
    EXPECT_EQ(multiply(AlgebraElement(w->a), bc, -1), element(w->right));
    EXPECT_NE(w->left, w->right);
}

TEST(Orders, PlusOneIsOrderIndependent) {
    for (Shape s : shapes_up_to(6)) EXPECT_FALSE(check_order_independence(s, 1)) << s.n << s.k;
}

// Known finding: with alpha = -1 a few products at (6,3) depend on the cup order.
TEST(Orders, MinusOneOrderDependenceAtSixThree) {
    for (Shape s : shapes_up_to(5)) EXPECT_FALSE(check_order_independence(s, -1)) << s.n << s.k;
    EXPECT_EQ(count_order_dependent({6, 3}, -1), 4u);
    const auto w = check_order_independence({6, 3}, -1);
    ASSERT_TRUE(w);
    EXPECT_EQ(multiply(w->a, w->b, -1, w->first), w->first_product);
    EXPECT_EQ(multiply(w->a, w->b, -1, w->second), w->second_product);
    EXPECT_NE(w->first_product, w->second_product);
}

TEST(Nested, AgreesWithMinusOneUpToSix) {
    for (Shape s : shapes_up_to(6)) EXPECT_FALSE(check_nested_agreement(s)) << s.n << s.k;
    EXPECT_EQ(structure_table({4, 2}, -1, BasisFilter::all, Route::nested).products,
              structure_table({4, 2}, -1).products);
}

TEST(Table, JsonRoundTrip) {
    for (int alpha : {1, -1}) {
        const auto t = structure_table({5, 2}, alpha, BasisFilter::standard_only);
        const auto back = table_from_json(json::parse(to_json(t).dump()));
        EXPECT_EQ(back, t);
    }
}

TEST(Table, TextDumpMentionsEveryBasisElement) {
    const auto t = structure_table({2, 1}, 1);
    const std::string s = text_dump(t);
    EXPECT_NE(s.find("shape (2,1) alpha 1, 5 basis elements"), std::string::npos);
    EXPECT_NE(s.find("[2]*[1] = +1[3]"), std::string::npos);
}
