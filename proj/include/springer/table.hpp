#pragma once

#include <springer/arc_algebra.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace springer {

/// All products of composable basis pairs of one algebra.
struct StructureTable {
    Shape shape;
    int alpha = 1;
    Route route = Route::alpha;
    std::vector<BasisElement> basis;
    std::map<std::pair<std::size_t, std::size_t>, std::vector<std::pair<std::size_t, std::int64_t>>> products;

    std::size_t index_of(const BasisElement& b) const {
        const auto it = std::lower_bound(basis.begin(), basis.end(), b);
        if (it == basis.end() || !(*it == b)) throw validation_error("element not in the basis");
        return static_cast<std::size_t>(it - basis.begin());
    }

    /// Product of two elements written in basis indices, zero for non-composable pairs.
    std::map<std::size_t, std::int64_t> product(const std::map<std::size_t, std::int64_t>& a,
                                                const std::map<std::size_t, std::int64_t>& b) const {
        std::map<std::size_t, std::int64_t> out;
        for (auto [i, ca] : a)
            for (auto [j, cb] : b) {
                const auto it = products.find({i, j});
                if (it == products.end()) continue;
                for (auto [k, c] : it->second)
                    if ((out[k] += ca * cb * c) == 0) out.erase(k);
            }
        return out;
    }

    bool operator==(const StructureTable&) const = default;
};

namespace detail {
inline std::vector<BasisElement> sorted_basis(Shape s, BasisFilter f) {
    auto b = algebra_basis(s, f);
    std::sort(b.begin(), b.end());
    return b;
}

inline AlgebraElement basis_product(const BasisElement& l, const BasisElement& r, int alpha, Route route, const CupOrder& o) {
    return route == Route::nested ? multiply_nested(l, r, o) : multiply(l, r, alpha, o);
}
}  // namespace detail

inline StructureTable structure_table(Shape s, int alpha, BasisFilter f = BasisFilter::all, Route route = Route::alpha) {
    require_alpha(alpha);
    StructureTable t{s, alpha, route, detail::sorted_basis(s, f), {}};
    std::map<Weight, std::vector<std::size_t>> by_src;
    for (std::size_t k = 0; k < t.basis.size(); ++k) by_src[t.basis[k].src].push_back(k);
    for (std::size_t i = 0; i < t.basis.size(); ++i) {
        const BasisElement& l = t.basis[i];
        const CupOrder o = default_order(l.tgt);
        for (std::size_t j : by_src[l.tgt]) {
            std::vector<std::pair<std::size_t, std::int64_t>> row;
            for (auto& [b, c] : detail::basis_product(l, t.basis[j], alpha, route, o).basis_terms())
                row.push_back({t.index_of(b), c});
            t.products[{i, j}] = std::move(row);
        }
    }
    return t;
}

struct AssociativityWitness {
    BasisElement a, b, c;
    std::map<std::size_t, std::int64_t> left, right;  // (ab)c and a(bc) in basis indices
};

inline std::optional<AssociativityWitness> check_associativity(const StructureTable& t) {
    std::map<Weight, std::vector<std::size_t>> by_src;
    for (std::size_t k = 0; k < t.basis.size(); ++k) by_src[t.basis[k].src].push_back(k);
    for (std::size_t i = 0; i < t.basis.size(); ++i)
        for (std::size_t j : by_src[t.basis[i].tgt])
            for (std::size_t k : by_src[t.basis[j].tgt]) {
                const auto ab = t.product({{i, 1}}, {{j, 1}});
                const auto bc = t.product({{j, 1}}, {{k, 1}});
                auto left = t.product(ab, {{k, 1}});
                auto right = t.product({{i, 1}}, bc);
                if (left != right) return AssociativityWitness{t.basis[i], t.basis[j], t.basis[k], left, right};
            }
    return std::nullopt;
}

struct OrderWitness {
    BasisElement a, b;
    CupOrder first, second;
    AlgebraElement first_product, second_product;
};

/// Compares every composable basis pair under all nesting-compatible cup orders.
inline std::optional<OrderWitness> check_order_independence(Shape s, int alpha, BasisFilter f = BasisFilter::all,
                                                            Route route = Route::alpha) {
    const auto basis = detail::sorted_basis(s, f);
    std::map<Weight, std::vector<const BasisElement*>> by_src;
    for (const auto& b : basis) by_src[b.src].push_back(&b);
    std::map<Weight, std::vector<CupOrder>> orders;
    for (const auto& l : basis) {
        auto& os = orders[l.tgt];
        if (os.empty()) os = compatible_orders(l.tgt);
        for (const BasisElement* r : by_src[l.tgt]) {
            const AlgebraElement ref = detail::basis_product(l, *r, alpha, route, os.front());
            for (std::size_t k = 1; k < os.size(); ++k) {
                AlgebraElement p = detail::basis_product(l, *r, alpha, route, os[k]);
                if (!(p == ref)) return OrderWitness{l, *r, os.front(), os[k], ref, p};
            }
        }
    }
    return std::nullopt;
}

/// Counts composable pairs whose product depends on the cup order.
inline std::size_t count_order_dependent(Shape s, int alpha, BasisFilter f = BasisFilter::all, Route route = Route::alpha) {
    const auto basis = detail::sorted_basis(s, f);
    std::map<Weight, std::vector<const BasisElement*>> by_src;
    for (const auto& b : basis) by_src[b.src].push_back(&b);
    std::size_t bad = 0;
    for (const auto& l : basis) {
        const auto os = compatible_orders(l.tgt);
        for (const BasisElement* r : by_src[l.tgt]) {
            const AlgebraElement ref = detail::basis_product(l, *r, alpha, route, os.front());
            for (std::size_t k = 1; k < os.size(); ++k)
                if (!(detail::basis_product(l, *r, alpha, route, os[k]) == ref)) {
                    ++bad;
                    break;
                }
        }
    }
    return bad;
}

struct PairWitness {
    BasisElement a, b;
    AlgebraElement first, second;
};

/// multiply_nested against multiply with alpha = -1, under every compatible order.
inline std::optional<PairWitness> check_nested_agreement(Shape s, BasisFilter f = BasisFilter::all) {
    const auto basis = detail::sorted_basis(s, f);
    std::map<Weight, std::vector<const BasisElement*>> by_src;
    for (const auto& b : basis) by_src[b.src].push_back(&b);
    for (const auto& l : basis)
        for (const CupOrder& o : compatible_orders(l.tgt))
            for (const BasisElement* r : by_src[l.tgt]) {
                AlgebraElement p = multiply(l, *r, -1, o);
                AlgebraElement q = multiply_nested(l, *r, o);
                if (!(p == q)) return PairWitness{l, *r, p, q};
            }
    return std::nullopt;
}

/// Every term of a product has degree deg(a) + deg(b).
inline std::optional<PairWitness> check_degree_additivity(const StructureTable& t) {
    for (const auto& [ij, row] : t.products)
        for (auto [k, c] : row) {
            (void)c;
            const auto& a = t.basis[ij.first];
            const auto& b = t.basis[ij.second];
            if (degree(t.basis[k]) != degree(a) + degree(b)) {
                AlgebraElement p(a.src, b.tgt);
                for (auto [k2, c2] : row) p.add(t.basis[k2].orient, c2);
                return PairWitness{a, b, p, {}};
            }
        }
    return std::nullopt;
}

/// Idempotents are two-sided units on their Hom spaces and multiply to themselves.
inline std::optional<BasisElement> check_unit(const StructureTable& t) {
    for (std::size_t k = 0; k < t.basis.size(); ++k) {
        const auto& b = t.basis[k];
        const std::size_t ex = t.index_of(idempotent(b.src)), ey = t.index_of(idempotent(b.tgt));
        const std::map<std::size_t, std::int64_t> self{{k, 1}};
        if (t.product({{ex, 1}}, self) != self || t.product(self, {{ey, 1}}) != self) return b;
    }
    return std::nullopt;
}

}  // namespace springer
