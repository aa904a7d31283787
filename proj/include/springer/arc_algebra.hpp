#pragma once

#include <springer/circle_diagram.hpp>
#include <springer/cup_diagram.hpp>
#include <springer/weight.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace springer {

struct composition_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Oriented circle diagram glue(m(tgt), m(src)) with orientation `orient`.
struct BasisElement {
    Weight src;
    Weight tgt;
    Weight orient;

    CircleDiagram diagram() const { return glue(weight_to_m(tgt), weight_to_m(src)); }
    auto operator<=>(const BasisElement&) const = default;
    bool operator==(const BasisElement&) const = default;
};

/// Degree of one component's arcs under v.
inline int component_degree(const Component& c, const Weight& v) {
    int d = 0;
    for (const Arc& a : c.arcs)
        if (v.up(a.left)) ++d;
    return d;
}

inline int degree(const BasisElement& b) { return degree(b.diagram(), b.orient); }

/// Circle labels keyed by the leftmost point of each circle: true = X (higher degree orientation), false = 1.
inline std::map<int, bool> labels(const BasisElement& b) {
    const CircleDiagram z = b.diagram();
    std::map<int, bool> out;
    for (const Component& c : z.components()) {
        if (!c.is_circle()) continue;
        Weight flipped = b.orient;
        for (int p : c.vertices) flipped.flip(p);
        out[c.leftmost()] = component_degree(c, b.orient) > component_degree(c, flipped);
    }
    return out;
}

inline std::string label_string(const BasisElement& b) {
    std::string s;
    for (auto [p, x] : labels(b)) s += (s.empty() ? "" : " ") + std::to_string(p) + (x ? ":X" : ":1");
    return s;
}

/// The orientation of glue(m(tgt), m(src)) whose circles through the points in `x_circles` are labelled X
/// and all other circles 1; nothing if the lines cannot be oriented.
inline std::optional<Weight> orientation_from_labels(const Weight& src, const Weight& tgt, const std::set<int>& x_circles) {
    const CircleDiagram z = glue(weight_to_m(tgt), weight_to_m(src));
    const auto vs = orientations(z, src, tgt);
    if (vs.empty()) return std::nullopt;
    Weight v = vs.front();
    for (const Component& c : z.components()) {
        if (!c.is_circle()) continue;
        Weight flipped = v;
        for (int p : c.vertices) flipped.flip(p);
        const bool is_x = component_degree(c, v) > component_degree(c, flipped);
        bool want_x = false;
        for (int p : x_circles)
            if (z.component_of(p) == z.component_of(c.leftmost())) want_x = true;
        if (is_x != want_x) v = flipped;
    }
    return v;
}

inline std::vector<BasisElement> hom_basis(const Weight& src, const Weight& tgt) {
    std::vector<BasisElement> out;
    for (const auto& v : orientations(glue(weight_to_m(tgt), weight_to_m(src)), src, tgt)) out.push_back({src, tgt, v});
    return out;
}

enum class BasisFilter { all, standard_only };

/// Basis of the whole algebra: sources, then targets, in weight order; orientations increasing.
inline std::vector<BasisElement> algebra_basis(Shape s, BasisFilter f = BasisFilter::all) {
    std::vector<Weight> ws;
    for (const auto& w : enumerate_weights(s))
        if (f == BasisFilter::all || is_standard(w)) ws.push_back(w);
    std::vector<BasisElement> out;
    for (const auto& x : ws)
        for (const auto& y : ws)
            for (auto& b : hom_basis(x, y)) out.push_back(std::move(b));
    return out;
}

/// The degree-zero basis element of Hom(x, x).
inline BasisElement idempotent(const Weight& x) {
    auto v = orientation_from_labels(x, x, {});
    return {x, x, *v};
}

/// Integer combination of basis elements of one Hom(src, tgt).
class AlgebraElement {
public:
    AlgebraElement() = default;
    AlgebraElement(Weight src, Weight tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {}
    AlgebraElement(const BasisElement& b, std::int64_t c = 1) : src_(b.src), tgt_(b.tgt) { add(b.orient, c); }

    const Weight& src() const { return src_; }
    const Weight& tgt() const { return tgt_; }
    const std::map<Weight, std::int64_t>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    AlgebraElement& add(const Weight& orient, std::int64_t c) {
        if (c == 0) return *this;
        if ((terms_[orient] += c) == 0) terms_.erase(orient);
        return *this;
    }
    AlgebraElement& operator+=(const AlgebraElement& o) {
        if (o.empty()) return *this;
        if (empty()) {
            src_ = o.src_;
            tgt_ = o.tgt_;
        } else if (src_ != o.src_ || tgt_ != o.tgt_) {
            throw composition_error("adding elements of different Hom spaces");
        }
        for (auto& [v, c] : o.terms_) add(v, c);
        return *this;
    }
    std::vector<std::pair<BasisElement, std::int64_t>> basis_terms() const {
        std::vector<std::pair<BasisElement, std::int64_t>> out;
        for (auto& [v, c] : terms_) out.push_back({{src_, tgt_, v}, c});
        return out;
    }

    bool operator==(const AlgebraElement& o) const {
        if (empty() || o.empty()) return empty() && o.empty();
        return src_ == o.src_ && tgt_ == o.tgt_ && terms_ == o.terms_;
    }

private:
    Weight src_, tgt_;
    std::map<Weight, std::int64_t> terms_;
};

/// Order in which the cups of the middle diagram are surgered.
using CupOrder = std::vector<Cup>;

/// Outer cups first, left to right within one nesting depth.
inline CupOrder default_order(const Weight& y) {
    const CupDiagram m = weight_to_m(y);
    CupOrder o = m.cups();
    std::stable_sort(o.begin(), o.end(), [&](const Cup& a, const Cup& b) { return m.depth(a.first) < m.depth(b.first); });
    return o;
}

/// A cup may only be surgered after every cup enclosing it.
inline bool order_compatible(const Weight& y, const CupOrder& o) {
    const CupDiagram m = weight_to_m(y);
    auto sorted = o;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != m.cups()) return false;
    for (std::size_t a = 0; a < o.size(); ++a)
        for (std::size_t b = a + 1; b < o.size(); ++b)
            if (o[b].first < o[a].first && o[a].second < o[b].second) return false;
    return true;
}

inline std::vector<CupOrder> compatible_orders(const Weight& y) {
    CupOrder o = weight_to_m(y).cups();
    std::vector<CupOrder> out;
    do {
        if (order_compatible(y, o)) out.push_back(o);
    } while (std::next_permutation(o.begin(), o.end()));
    return out;
}

enum class Route { alpha, nested };

namespace detail {

/// The stacked picture of a (bottom layer, row A) under b (top layer, row B) during surgery.
class Movie {
public:
    enum Kind : std::uint8_t { acup, acap, bcup, bcap, vert };
    struct Edge {
        Kind kind;
        int u, v;  // node ids: A_p = p - 1, B_p = n + p - 1
    };
    struct Comp {
        std::vector<int> nodes;  // sorted
        bool line;
        int key() const { return nodes.front(); }
    };

    Movie(const Weight& x, const Weight& y, const Weight& z)
        : n_(x.size()), x_(x), z_(z), mx_(weight_to_m(x)), my_(weight_to_m(y)), mz_(weight_to_m(z)) {
        for (auto [i, j] : mx_.cups()) edges_.push_back({acup, a(i), a(j)});
        for (auto [i, j] : my_.cups()) edges_.push_back({acap, a(i), a(j)});
        for (auto [i, j] : my_.cups()) edges_.push_back({bcup, b(i), b(j)});
        for (auto [i, j] : mz_.cups()) edges_.push_back({bcap, b(i), b(j)});
        recompute();
    }

    int a(int p) const { return p - 1; }
    int b(int p) const { return n_ + p - 1; }
    int point(int node) const { return node % n_ + 1; }
    bool row_b(int node) const { return node >= n_; }

    const std::vector<Comp>& comps() const { return comps_; }
    int comp_of(int node) const { return comp_of_[static_cast<std::size_t>(node)]; }
    const Comp& comp(int c) const { return comps_[static_cast<std::size_t>(c)]; }

    void join(int p) {
        edges_.push_back({vert, a(p), b(p)});
        recompute();
    }
    void surgery(Cup c) {
        std::erase_if(edges_, [&](const Edge& e) {
            return (e.kind == acap && e.u == a(c.first) && e.v == a(c.second)) ||
                   (e.kind == bcup && e.u == b(c.first) && e.v == b(c.second));
        });
        edges_.push_back({vert, a(c.first), b(c.first)});
        edges_.push_back({vert, a(c.second), b(c.second)});
        recompute();
    }

    /// Whether circle c1 lies inside circle c2 in the planar picture.
    bool inside(const Comp& c1, const Comp& c2) const {
        const Edge* e = nullptr;
        for (const Edge& f : edges_)
            if (f.kind != vert && std::binary_search(c1.nodes.begin(), c1.nodes.end(), f.u)) {
                e = &f;
                break;
            }
        const double x = std::min(point(e->u), point(e->v)) + 0.5;
        const double y = height(*e);
        int crossings = 0;
        for (const Edge& f : edges_) {
            if (f.kind == vert || !std::binary_search(c2.nodes.begin(), c2.nodes.end(), f.u)) continue;
            const int lo = std::min(point(f.u), point(f.v)), hi = std::max(point(f.u), point(f.v));
            if (lo < x && x < hi && height(f) > y) ++crossings;
        }
        return crossings % 2 == 1;
    }

    /// Ray end of a line: an A node on a ray of m(x) or a B node on a ray of m(z).
    bool is_end(int node) const {
        return row_b(node) ? mz_.is_ray(point(node)) : mx_.is_ray(point(node));
    }
    bool end_mark_down(int node) const { return row_b(node) ? z_.down(point(node)) : x_.down(point(node)); }

    enum class LineType { bottom, top, through };
    LineType line_type(const Comp& c) const {
        int a_ends = 0, b_ends = 0;
        for (int v : c.nodes)
            if (is_end(v)) (row_b(v) ? b_ends : a_ends)++;
        if (a_ends && b_ends) return LineType::through;
        return a_ends ? LineType::bottom : LineType::top;
    }

    /// The line's forced marks agree at both ray ends (marks flip along arcs, persist along strands).
    bool line_orientable(const Comp& c) const {
        int start = -1;
        for (int v : c.nodes)
            if (is_end(v)) {
                start = v;
                break;
            }
        std::vector<int> mark(static_cast<std::size_t>(2 * n_), -1);
        mark[static_cast<std::size_t>(start)] = end_mark_down(start);
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (const Edge& e : adj_[static_cast<std::size_t>(u)]) {
                const int w = e.u == u ? e.v : e.u;
                const int want = e.kind == vert ? mark[static_cast<std::size_t>(u)] : 1 - mark[static_cast<std::size_t>(u)];
                if (mark[static_cast<std::size_t>(w)] < 0) {
                    mark[static_cast<std::size_t>(w)] = want;
                    stack.push_back(w);
                } else if (mark[static_cast<std::size_t>(w)] != want) {
                    return false;
                }
            }
        }
        for (int v : c.nodes)
            if (is_end(v) && mark[static_cast<std::size_t>(v)] != static_cast<int>(end_mark_down(v))) return false;
        return true;
    }

private:
    double height(const Edge& e) const {
        const double f = 0.4 * std::abs(point(e.u) - point(e.v)) / (n_ + 1);
        switch (e.kind) {
            case acup: return -f;
            case acap: return f;
            case bcup: return 1 - f;
            case bcap: return 1 + f;
            default: return 0;
        }
    }

    void recompute() {
        const int total = 2 * n_;
        adj_.assign(static_cast<std::size_t>(total), {});
        for (const Edge& e : edges_) {
            adj_[static_cast<std::size_t>(e.u)].push_back(e);
            adj_[static_cast<std::size_t>(e.v)].push_back(e);
        }
        comps_.clear();
        comp_of_.assign(static_cast<std::size_t>(total), -1);
        for (int s = 0; s < total; ++s) {
            if (comp_of_[static_cast<std::size_t>(s)] >= 0) continue;
            Comp c{{}, false};
            std::vector<int> stack{s};
            comp_of_[static_cast<std::size_t>(s)] = static_cast<int>(comps_.size());
            while (!stack.empty()) {
                const int u = stack.back();
                stack.pop_back();
                c.nodes.push_back(u);
                if (adj_[static_cast<std::size_t>(u)].size() < 2) c.line = true;
                for (const Edge& e : adj_[static_cast<std::size_t>(u)]) {
                    const int w = e.u == u ? e.v : e.u;
                    if (comp_of_[static_cast<std::size_t>(w)] < 0) {
                        comp_of_[static_cast<std::size_t>(w)] = static_cast<int>(comps_.size());
                        stack.push_back(w);
                    }
                }
            }
            std::sort(c.nodes.begin(), c.nodes.end());
            comps_.push_back(std::move(c));
        }
    }

    int n_;
    Weight x_, z_;
    CupDiagram mx_, my_, mz_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Edge>> adj_;
    std::vector<Comp> comps_;
    std::vector<int> comp_of_;
};

/// A term assigns X to the circles whose key node is set; other circles carry 1.
using Terms = std::map<std::uint32_t, std::int64_t>;

inline std::uint32_t bit(int node) { return std::uint32_t{1} << node; }

inline void add_term(Terms& t, std::uint32_t mask, std::int64_t c) {
    if (c != 0 && (t[mask] += c) == 0) t.erase(mask);
}

inline AlgebraElement multiply_basis(const BasisElement& l, const BasisElement& r, int alpha, Route route, const CupOrder& order) {
    const Weight& x = l.src;
    const Weight& y = l.tgt;
    const Weight& z = r.tgt;
    const int n = x.size();
    Movie mv(x, y, z);
    const std::int64_t sign_birth = route == Route::nested ? -1 : alpha;  // factor on a circle born from a line

    // initial labels: each circle of the stacked picture lies in one row
    std::uint32_t start = 0;
    const auto ll = labels(l), rl = labels(r);
    for (const auto& c : mv.comps()) {
        if (c.line) continue;
        const int node = c.key();
        const int p = mv.point(node);
        const bool is_x = mv.row_b(node) ? rl.at(p) : ll.at(p);
        if (is_x) start |= bit(node);
    }
    Terms terms{{start, 1}};

    // middle rays are joined at stacking
    for (int p : weight_to_m(y).rays()) {
        const int c1 = mv.comp_of(mv.a(p)), c2 = mv.comp_of(mv.b(p));
        const bool closes = c1 == c2;
        mv.join(p);
        if (!closes) continue;
        const int nc = mv.comp_of(mv.a(p));
        Terms next;
        for (auto [mask, coef] : terms) add_term(next, mask | bit(mv.comp(nc).key()), coef * sign_birth);
        terms = std::move(next);
    }

    for (const Cup& cup : order) {
        const int i = cup.first, j = cup.second;
        const Movie::Comp c1 = mv.comp(mv.comp_of(mv.a(i)));
        const Movie::Comp c2 = mv.comp(mv.comp_of(mv.b(i)));
        const bool same = c1.nodes == c2.nodes;
        bool merge_nested = false, c1_outer = false;
        if (!same && !c1.line && !c2.line) {
            c1_outer = mv.inside(c2, c1);
            merge_nested = c1_outer || mv.inside(c1, c2);
        }
        mv.surgery(cup);
        Terms next;

        if (!same && !c1.line && !c2.line) {
            // two circles merge
            const int nc_key = mv.comp(mv.comp_of(mv.a(i))).key();
            const std::uint32_t old = bit(c1.key()) | bit(c2.key());
            for (auto [mask, coef] : terms) {
                const bool x1 = mask & bit(c1.key()), x2 = mask & bit(c2.key());
                if (x1 && x2) continue;
                std::int64_t s = 1;
                const bool inner_x = c1_outer ? x2 : x1;
                if (merge_nested && inner_x) s = route == Route::nested ? -1 : alpha;
                add_term(next, (mask & ~old) | ((x1 || x2) ? bit(nc_key) : 0), coef * s);
            }
        } else if (!same && c1.line && c2.line) {
            // two lines reconnect
            const auto t1 = mv.line_type(c1), t2 = mv.line_type(c2);
            const auto& n1 = mv.comp(mv.comp_of(mv.a(i)));
            const auto& n2 = mv.comp(mv.comp_of(mv.a(j)));
            bool zero = !mv.line_orientable(n1) || !mv.line_orientable(n2);
            const bool was_split = (t1 == Movie::LineType::bottom && t2 == Movie::LineType::top) ||
                                   (t1 == Movie::LineType::top && t2 == Movie::LineType::bottom);
            if (was_split && mv.line_type(n1) == Movie::LineType::through && mv.line_type(n2) == Movie::LineType::through)
                zero = true;
            if (!zero) next = terms;
        } else if (!same) {
            // a circle merges into a line
            const auto& circle = c1.line ? c2 : c1;
            for (auto [mask, coef] : terms)
                if (!(mask & bit(circle.key()))) add_term(next, mask, coef);
        } else if (!c1.line) {
            // a circle splits in two
            const auto& gi = mv.comp(mv.comp_of(mv.a(i)));
            const auto& gj = mv.comp(mv.comp_of(mv.a(j)));
            const bool i_in_j = mv.inside(gi, gj), j_in_i = mv.inside(gj, gi);
            std::int64_t ci, cj, cx;
            if (route == Route::alpha) {
                ci = i_in_j ? alpha : j_in_i ? 1 : alpha;
                cj = i_in_j ? 1 : j_in_i ? alpha : alpha;
                cx = alpha;
            } else if (i_in_j || j_in_i) {
                ci = i_in_j ? -1 : 1;
                cj = i_in_j ? 1 : -1;
                cx = -1;
            } else {
                ci = cj = cx = -1;
            }
            const std::uint32_t bi = bit(gi.key()), bj = bit(gj.key());
            for (auto [mask, coef] : terms) {
                const std::uint32_t rest = mask & ~bit(c1.key());
                if (mask & bit(c1.key())) {
                    add_term(next, rest | bi | bj, coef * cx);
                } else {
                    add_term(next, rest | bi, coef * ci);
                    add_term(next, rest | bj, coef * cj);
                }
            }
        } else {
            // a line splits off a circle
            const auto& ni = mv.comp(mv.comp_of(mv.a(i)));
            const auto& nj = mv.comp(mv.comp_of(mv.a(j)));
            const auto& circle = ni.line ? nj : ni;
            for (auto [mask, coef] : terms) add_term(next, mask | bit(circle.key()), coef * sign_birth);
        }
        terms = std::move(next);
    }

    // read off the labels on glue(m(z), m(x))
    AlgebraElement out(x, z);
    for (auto [mask, coef] : terms) {
        std::set<int> xs;
        for (int node = 0; node < 2 * n; ++node)
            if (mask & bit(node)) xs.insert(mv.point(node));
        if (auto v = orientation_from_labels(x, z, xs)) out.add(*v, coef);
    }
    return out;
}

}  // namespace detail

inline void require_alpha(int alpha) {
    if (alpha != 1 && alpha != -1) throw validation_error("alpha must be +1 or -1");
}

/// Product of basis elements l in Hom(x,y) and r in Hom(y,z), surgering the cups of m(y) in `order`.
inline AlgebraElement multiply(const BasisElement& l, const BasisElement& r, int alpha, const CupOrder& order) {
    require_alpha(alpha);
    if (l.tgt != r.src) throw composition_error("target " + l.tgt.str() + " differs from source " + r.src.str());
    if (!order_compatible(l.tgt, order)) throw validation_error("cup order is not compatible with the nesting");
    return detail::multiply_basis(l, r, alpha, Route::alpha, order);
}

inline AlgebraElement multiply(const BasisElement& l, const BasisElement& r, int alpha) {
    return multiply(l, r, alpha, default_order(l.tgt));
}

/// Embedded TQFT product: merges and splits dispatched on whether the circles involved are nested.
inline AlgebraElement multiply_nested(const BasisElement& l, const BasisElement& r, const CupOrder& order) {
    if (l.tgt != r.src) throw composition_error("target " + l.tgt.str() + " differs from source " + r.src.str());
    if (!order_compatible(l.tgt, order)) throw validation_error("cup order is not compatible with the nesting");
    return detail::multiply_basis(l, r, -1, Route::nested, order);
}

inline AlgebraElement multiply_nested(const BasisElement& l, const BasisElement& r) {
    return multiply_nested(l, r, default_order(l.tgt));
}

namespace detail {
template <class F>
AlgebraElement bilinear(const AlgebraElement& a, const AlgebraElement& b, F&& basis_product) {
    if (a.empty() || b.empty()) return {};
    if (a.tgt() != b.src()) throw composition_error("target " + a.tgt().str() + " differs from source " + b.src().str());
    AlgebraElement out(a.src(), b.tgt());
    for (auto& [ba, ca] : a.basis_terms())
        for (auto& [bb, cb] : b.basis_terms()) {
            const AlgebraElement p = basis_product(ba, bb);
            for (auto& [v, c] : p.terms()) out.add(v, ca * cb * c);
        }
    return out;
}
}  // namespace detail

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, int alpha, const CupOrder& order) {
    return detail::bilinear(a, b, [&](const BasisElement& l, const BasisElement& r) { return multiply(l, r, alpha, order); });
}

inline AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, int alpha) {
    return detail::bilinear(a, b, [&](const BasisElement& l, const BasisElement& r) { return multiply(l, r, alpha); });
}

inline AlgebraElement multiply_nested(const AlgebraElement& a, const AlgebraElement& b) {
    return detail::bilinear(a, b, [](const BasisElement& l, const BasisElement& r) { return multiply_nested(l, r); });
}

}  // namespace springer
