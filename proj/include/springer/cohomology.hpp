#pragma once

#include <springer/circle_diagram.hpp>
#include <springer/equivalence.hpp>
#include <springer/linalg.hpp>
#include <springer/tableau.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace springer {

/// C[x_g : g in generators] / (x_g^2), with the pullback of x_1..x_n from the flag variety.
struct RingPresentation {
    int n = 0;
    std::vector<int> generators;                           // increasing point indices
    std::vector<std::vector<std::pair<int, int>>> pullback;  // pullback[i] = [(generator, sign)], i = 1..n

    std::size_t dimension() const { return std::size_t{1} << generators.size(); }

    /// n x |generators| matrix of the pullback on degree-two classes (rows: generators, columns: x_1..x_n).
    IntMatrix pullback_matrix() const {
        IntMatrix m(generators.size(), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
        for (int i = 1; i <= n; ++i)
            for (auto [g, s] : pullback[static_cast<std::size_t>(i)]) m[position(g)][static_cast<std::size_t>(i - 1)] += s;
        return m;
    }

    std::size_t position(int g) const {
        for (std::size_t k = 0; k < generators.size(); ++k)
            if (generators[k] == g) return k;
        throw validation_error("not a generator: x" + std::to_string(g));
    }

    bool operator==(const RingPresentation&) const = default;
};

/// Element of an exterior-style ring x^2 = 0: monomials are bitmasks over generator positions.
struct RingElement {
    std::map<std::uint32_t, std::int64_t> terms;

    RingElement& add(std::uint32_t mono, std::int64_t c) {
        if ((terms[mono] += c) == 0) terms.erase(mono);
        return *this;
    }
    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        RingElement r;
        for (auto [ma, ca] : a.terms)
            for (auto [mb, cb] : b.terms)
                if ((ma & mb) == 0) r.add(ma | mb, ca * cb);
        return r;
    }
    bool operator==(const RingElement&) const = default;
};

namespace detail {
inline RingPresentation presentation_from_cups(const CupDiagram& c) {
    RingPresentation r;
    r.n = c.n();
    r.pullback.assign(static_cast<std::size_t>(r.n + 1), {});
    for (auto [i, j] : c.cups()) {
        r.generators.push_back(i);
        r.pullback[static_cast<std::size_t>(i)].push_back({i, 1});
        r.pullback[static_cast<std::size_t>(j)].push_back({i, -1});
    }
    return r;
}
}  // namespace detail

/// Cohomology of the component Y_S: generators are the left cup ends of S.
inline RingPresentation component_cohomology(const StandardTableau& s) {
    return detail::presentation_from_cups(tableau_to_cup(s));
}

/// Cohomology of the stable manifold of w: generators are the left cup ends of m(w).
inline RingPresentation stable_cohomology(const Weight& w) { return detail::presentation_from_cups(weight_to_m(w)); }

/// Cohomology of the intersection of the stable manifolds of w and w2, or nothing when it is empty.
inline std::optional<RingPresentation> intersection_cohomology(const Weight& w, const Weight& w2) {
    if (w.size() != w2.size() || w.downs() != w2.downs()) throw validation_error("weights of different shapes");
    const CupDiagram c = weight_to_m(w), d = weight_to_m(w2);
    if (orientations(glue(d, c), w, w2).empty()) return std::nullopt;
    const EquivalenceData e = equivalence(c, d);
    const CircleDiagram z = glue(d, c);
    RingPresentation r;
    r.n = w.size();
    r.generators.assign(e.circle_reps.begin(), e.circle_reps.end());
    r.pullback.assign(static_cast<std::size_t>(r.n + 1), {});
    for (int i = 1; i <= r.n; ++i)
        for (int j : r.generators)
            if (int s = z.epsilon(i, j)) r.pullback[static_cast<std::size_t>(i)].push_back({j, s});
    return r;
}

/// Laurent polynomial in q: coeffs[k] is the coefficient of q^(offset + k).
struct GradedDim {
    int offset = 0;
    std::vector<std::int64_t> coeffs;

    std::int64_t total() const {
        std::int64_t t = 0;
        for (auto c : coeffs) t += c;
        return t;
    }
    std::int64_t at(int deg) const {
        const int k = deg - offset;
        return (k < 0 || k >= static_cast<int>(coeffs.size())) ? 0 : coeffs[static_cast<std::size_t>(k)];
    }
    bool operator==(const GradedDim&) const = default;
};

/// q^shift (1+q^2)^c.
inline GradedDim circle_series(int c, int shift) {
    GradedDim g{shift, {1}};
    for (int t = 0; t < c; ++t) {
        std::vector<std::int64_t> next(g.coeffs.size() + 2, 0);
        for (std::size_t k = 0; k < g.coeffs.size(); ++k) {
            next[k] += g.coeffs[k];
            next[k + 2] += g.coeffs[k];
        }
        g.coeffs = next;
    }
    return g;
}

/// Poincare polynomial of the intersection; when shifted, multiplied by q^(lowest basis degree).
inline GradedDim poincare(const Weight& w, const Weight& w2, bool shifted) {
    const CircleDiagram z = glue(weight_to_m(w2), weight_to_m(w));
    const auto vs = orientations(z, w, w2);
    if (vs.empty()) return {0, {}};
    int low = degree(z, vs.front());
    for (const auto& v : vs) low = std::min(low, degree(z, v));
    return circle_series(z.circle_count(), shifted ? low : 0);
}

/// Generating function of the degrees of a list of orientations.
inline GradedDim degree_series(const CircleDiagram& z, const std::vector<Weight>& vs) {
    if (vs.empty()) return {0, {}};
    int lo = degree(z, vs.front()), hi = lo;
    for (const auto& v : vs) {
        lo = std::min(lo, degree(z, v));
        hi = std::max(hi, degree(z, v));
    }
    GradedDim g{lo, std::vector<std::int64_t>(static_cast<std::size_t>(hi - lo + 1), 0)};
    for (const auto& v : vs) ++g.coeffs[static_cast<std::size_t>(degree(z, v) - lo)];
    return g;
}

/// ker(pullback to the intersection) contains the kernels of both stable pullbacks.
inline bool kernels_compatible(const Weight& w, const Weight& w2) {
    const auto inter = intersection_cohomology(w, w2);
    if (!inter) return true;
    const auto cols = static_cast<std::size_t>(w.size());
    const IntMatrix b = inter->pullback_matrix();
    return kernel_contained(stable_cohomology(w).pullback_matrix(), b, cols) &&
           kernel_contained(stable_cohomology(w2).pullback_matrix(), b, cols);
}

/// Every generator is hit by some x_i up to sign.
inline bool pullback_surjective(const RingPresentation& r) {
    for (int g : r.generators) {
        bool hit = false;
        for (int i = 1; i <= r.n && !hit; ++i) {
            const auto& img = r.pullback[static_cast<std::size_t>(i)];
            hit = img.size() == 1 && img.front().first == g;
        }
        if (!hit) return false;
    }
    return true;
}

/// Change of generators x_g -> sign * x_i with i an odd vertex on the circle through g.
struct OddVertexMap {
    std::vector<int> odd_generators;                  // increasing
    std::vector<std::pair<int, int>> image;           // per original generator: (odd vertex, sign)
};

/// Odd-vertex renormalization on glue(m(w2), m(w)); for w == w2 this is the stable-manifold case.
inline OddVertexMap odd_vertex_map(const RingPresentation& r, const CircleDiagram& z) {
    OddVertexMap m;
    for (int g : r.generators) {
        const auto& comp = z.components()[static_cast<std::size_t>(z.component_of(g))];
        int odd = 0;
        for (int p : comp.vertices)
            if (p % 2 == 1) {
                odd = p;
                break;
            }
        if (!comp.is_circle() || odd == 0) throw validation_error("generator not on a circle with an odd vertex");
        m.image.push_back({odd, z.epsilon(g, odd)});
        m.odd_generators.push_back(odd);
    }
    std::sort(m.odd_generators.begin(), m.odd_generators.end());
    return m;
}

/// Presentation rewritten in odd-vertex generators.
inline RingPresentation renormalize(const RingPresentation& r, const OddVertexMap& m) {
    RingPresentation out;
    out.n = r.n;
    out.generators = m.odd_generators;
    out.pullback.assign(r.pullback.size(), {});
    for (int i = 1; i <= r.n; ++i)
        for (auto [g, s] : r.pullback[static_cast<std::size_t>(i)]) {
            auto [odd, t] = m.image[r.position(g)];
            out.pullback[static_cast<std::size_t>(i)].push_back({odd, s * t});
        }
    return out;
}

/// Checks that the renormalization is a signed bijection on generators (hence a ring isomorphism
/// of the x^2 = 0 rings), that it is multiplicative on the monomial basis, and that the rewritten
/// pullback sends every x_j on a circle to (-1)^(j+1) x_i with i the chosen odd vertex.
inline bool verify_odd_vertex(const RingPresentation& r, const CircleDiagram& z) {
    const OddVertexMap m = odd_vertex_map(r, z);
    std::vector<int> targets = m.odd_generators;
    if (std::adjacent_find(targets.begin(), targets.end()) != targets.end()) return false;
    const RingPresentation out = renormalize(r, m);
    // induced map on monomials
    auto phi = [&](std::uint32_t mono) {
        RingElement e;
        e.add(0, 1);
        for (std::size_t k = 0; k < r.generators.size(); ++k)
            if (mono >> k & 1) {
                auto [odd, s] = m.image[k];
                RingElement x;
                x.add(std::uint32_t{1} << out.position(odd), s);
                e = e * x;
            }
        return e;
    };
    const std::uint32_t top = std::uint32_t{1} << r.generators.size();
    IntMatrix mat(top, std::vector<std::int64_t>(top, 0));
    for (std::uint32_t a = 0; a < top; ++a) {
        for (auto [mono, c] : phi(a).terms) mat[mono][a] = c;
        for (std::uint32_t b = 0; b < top; ++b) {
            RingElement ea, eb;
            ea.add(a, 1);
            eb.add(b, 1);
            RingElement lhs;
            for (auto [mono, c] : (ea * eb).terms)
                for (auto [m2, c2] : phi(mono).terms) lhs.add(m2, c * c2);
            if (!(lhs == phi(a) * phi(b))) return false;
        }
    }
    const auto det = determinant(mat);
    if (det != 1 && det != -1) return false;
    for (int j = 1; j <= r.n; ++j) {
        const auto& img = out.pullback[static_cast<std::size_t>(j)];
        const auto& comp = z.components()[static_cast<std::size_t>(z.component_of(j))];
        if (!comp.is_circle() || img.empty()) continue;
        const int expected_sign = j % 2 == 1 ? 1 : -1;
        if (img.size() != 1 || img.front().second != expected_sign) return false;
        const auto& odd_comp = z.components()[static_cast<std::size_t>(z.component_of(img.front().first))];
        if (&odd_comp != &comp) return false;
    }
    return true;
}

}  // namespace springer
