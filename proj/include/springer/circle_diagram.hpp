#pragma once

#include <springer/cup_diagram.hpp>
#include <springer/weight.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

namespace springer {

enum class ComponentKind { circle, line };

struct Arc {
    int left;
    int right;
    bool top;  // a cap of the upper diagram
};

struct Component {
    ComponentKind kind;
    std::vector<int> vertices;  // sorted
    std::vector<Arc> arcs;
    int leftmost() const { return vertices.front(); }
    bool is_circle() const { return kind == ComponentKind::circle; }
};

/// The upper diagram reflected over the lower one: caps of `top`, cups of `bottom`.
class CircleDiagram {
public:
    CircleDiagram(CupDiagram top, CupDiagram bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {
        if (top_.n() != bottom_.n()) throw validation_error("glued diagrams have different point counts");
        const int n = top_.n();
        comp_of_.assign(static_cast<std::size_t>(n + 1), -1);
        for (int s = 1; s <= n; ++s) {
            if (comp_of_[static_cast<std::size_t>(s)] >= 0) continue;
            Component c{ComponentKind::circle, {}, {}};
            std::vector<int> stack{s};
            comp_of_[static_cast<std::size_t>(s)] = static_cast<int>(comps_.size());
            while (!stack.empty()) {
                const int p = stack.back();
                stack.pop_back();
                c.vertices.push_back(p);
                for (int q : {top_.partner(p), bottom_.partner(p)}) {
                    if (q == 0) {
                        c.kind = ComponentKind::line;
                    } else if (comp_of_[static_cast<std::size_t>(q)] < 0) {
                        comp_of_[static_cast<std::size_t>(q)] = static_cast<int>(comps_.size());
                        stack.push_back(q);
                    }
                }
            }
            std::sort(c.vertices.begin(), c.vertices.end());
            for (int p : c.vertices) {
                if (top_.is_left_end(p)) c.arcs.push_back({p, top_.partner(p), true});
                if (bottom_.is_left_end(p)) c.arcs.push_back({p, bottom_.partner(p), false});
            }
            comps_.push_back(std::move(c));
        }
        // components are discovered from their leftmost vertex, so they are ordered by it
        parent_.assign(comps_.size(), -1);
        for (std::size_t a = 0; a < comps_.size(); ++a) {
            if (!comps_[a].is_circle()) continue;
            int best = -1, best_left = 0;
            for (std::size_t b = 0; b < comps_.size(); ++b)
                if (b != a && comps_[b].is_circle() && inside(static_cast<int>(a), static_cast<int>(b)) &&
                    comps_[b].leftmost() > best_left) {
                    best = static_cast<int>(b);
                    best_left = comps_[b].leftmost();
                }
            parent_[a] = best;
        }
    }

    int n() const { return top_.n(); }
    const CupDiagram& top() const { return top_; }
    const CupDiagram& bottom() const { return bottom_; }
    const std::vector<Component>& components() const { return comps_; }
    int component_of(int p) const { return comp_of_.at(static_cast<std::size_t>(p)); }

    int circle_count() const {
        return static_cast<int>(std::count_if(comps_.begin(), comps_.end(), [](const Component& c) { return c.is_circle(); }));
    }
    int line_count() const { return static_cast<int>(comps_.size()) - circle_count(); }

    /// Whether circle a lies inside circle b (vertical ray from a's leftmost point crosses b's cups an odd number of times).
    bool inside(int a, int b) const {
        if (a == b || !comps_[static_cast<std::size_t>(b)].is_circle()) return false;
        const int p = comps_[static_cast<std::size_t>(a)].leftmost();
        int crossings = 0;
        for (const Arc& arc : comps_[static_cast<std::size_t>(b)].arcs)
            if (!arc.top && arc.left < p && p < arc.right) ++crossings;
        return crossings % 2 == 1;
    }

    /// Immediately enclosing circle, or -1.
    int parent(int c) const { return parent_.at(static_cast<std::size_t>(c)); }

    /// Number of circles enclosing circle c, plus one.
    int nesting_depth(int c) const {
        int d = 1;
        for (int p = parent(c); p >= 0; p = parent(p)) ++d;
        return d;
    }

    /// (-1)^(arcs on a path from i to j) when i and j share a circle, else 0.
    int epsilon(int i, int j) const {
        const int c = component_of(i);
        if (c != component_of(j) || !comps_[static_cast<std::size_t>(c)].is_circle()) return 0;
        return (i + j) % 2 == 0 ? 1 : -1;  // every arc joins points of opposite parity
    }

    /// Path length parity from i to j computed by walking the circle; used to cross-check epsilon.
    std::vector<int> walk_signs(int i, int j) const {
        std::vector<int> out;
        if (component_of(i) != component_of(j)) return out;
        for (bool start_top : {true, false}) {
            int p = i, steps = 0;
            bool use_top = start_top;
            do {
                const int q = use_top ? top_.partner(p) : bottom_.partner(p);
                if (q == 0) break;
                p = q;
                ++steps;
                use_top = !use_top;
                if (p == j) {
                    out.push_back(steps % 2 == 0 ? 1 : -1);
                    break;
                }
            } while (p != i);
            if (i == j) out.push_back(1);
        }
        return out;
    }

private:
    CupDiagram top_;
    CupDiagram bottom_;
    std::vector<Component> comps_;
    std::vector<int> comp_of_;
    std::vector<int> parent_;
};

inline CircleDiagram glue(const CupDiagram& top, const CupDiagram& bottom) { return {top, bottom}; }

/// Orientations of glue(top, bottom) with ray marks taken from w_bottom / w_top.
/// Empty when some line cannot be oriented; otherwise 2^(circle count) weights in increasing order.
inline std::vector<Weight> orientations(const CircleDiagram& z, const Weight& w_bottom, const Weight& w_top) {
    const int n = z.n();
    if (w_bottom.size() != n || w_top.size() != n) throw validation_error("weight length does not match diagram");
    Weight base = w_bottom;
    std::vector<int> circle_starts;
    for (const Component& c : z.components()) {
        // propagate from the leftmost vertex with a provisional mark
        std::vector<int> mark(static_cast<std::size_t>(n + 1), -1);
        std::vector<int> stack{c.leftmost()};
        mark[static_cast<std::size_t>(c.leftmost())] = 0;
        while (!stack.empty()) {
            const int p = stack.back();
            stack.pop_back();
            for (int q : {z.top().partner(p), z.bottom().partner(p)}) {
                if (q == 0 || mark[static_cast<std::size_t>(q)] >= 0) continue;
                mark[static_cast<std::size_t>(q)] = 1 - mark[static_cast<std::size_t>(p)];
                stack.push_back(q);
            }
        }
        if (c.is_circle()) {
            circle_starts.push_back(c.leftmost());
            for (int p : c.vertices) base.set_down(p, mark[static_cast<std::size_t>(p)] == 1);
            continue;
        }
        std::optional<bool> flip;
        for (int p : c.vertices) {
            for (int which = 0; which < 2; ++which) {
                const bool is_ray = which == 0 ? z.bottom().is_ray(p) : z.top().is_ray(p);
                if (!is_ray) continue;
                const bool want = which == 0 ? w_bottom.down(p) : w_top.down(p);
                const bool f = want != (mark[static_cast<std::size_t>(p)] == 1);
                if (flip && *flip != f) return {};
                flip = f;
            }
        }
        for (int p : c.vertices) base.set_down(p, (mark[static_cast<std::size_t>(p)] == 1) != *flip);
    }
    std::vector<Weight> out;
    const std::size_t c = circle_starts.size();
    for (std::size_t bits = 0; bits < (std::size_t{1} << c); ++bits) {
        Weight v = base;
        for (std::size_t i = 0; i < c; ++i)
            if (bits >> i & 1)
                for (int p : z.components()[static_cast<std::size_t>(z.component_of(circle_starts[i]))].vertices) v.flip(p);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Orientations of glue(m(w_top), m(w_bottom)): the fixed points of the intersection of the two stable manifolds.
inline std::vector<Weight> fixed_points(const Weight& w_bottom, const Weight& w_top) {
    return orientations(glue(weight_to_m(w_top), weight_to_m(w_bottom)), w_bottom, w_top);
}

/// Number of arcs whose left endpoint is marked ^.
inline int degree(const CircleDiagram& z, const Weight& v) {
    int d = 0;
    for (const Component& c : z.components())
        for (const Arc& a : c.arcs)
            if (v.up(a.left)) ++d;
    return d;
}

}  // namespace springer
