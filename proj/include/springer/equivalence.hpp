#pragma once

#include <springer/circle_diagram.hpp>

#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace springer {

/// Classes of the relation generated by a-1 ~ sigma(a) over one or more cup diagrams, on {0..n}.
struct EquivalenceData {
    std::vector<std::vector<int>> classes;  // each sorted, ordered by minimum
    std::vector<int> rep;                   // rep[a] = minimum of the class of a
    std::set<int> min_reps;
    std::set<int> circle_reps;
    std::map<int, int> rank;
};

namespace detail {
inline int find(std::vector<int>& par, int a) {
    while (par[static_cast<std::size_t>(a)] != a) a = par[static_cast<std::size_t>(a)] = par[static_cast<std::size_t>(par[static_cast<std::size_t>(a)])];
    return a;
}
}  // namespace detail

/// Classes of a family of diagrams. `line_reps` marks classes of rank 0, `circle_reps` those living on circles.
inline EquivalenceData equivalence_classes(const std::vector<CupDiagram>& ds, const std::set<int>& line_reps,
                                           const std::set<int>& circle_reps) {
    const int n = ds.front().n();
    std::vector<int> par(static_cast<std::size_t>(n + 1));
    std::iota(par.begin(), par.end(), 0);
    for (const auto& d : ds) {
        if (d.n() != n) throw validation_error("diagrams have different point counts");
        for (auto [i, j] : d.cups()) {
            par[static_cast<std::size_t>(detail::find(par, i - 1))] = detail::find(par, j);
            par[static_cast<std::size_t>(detail::find(par, j - 1))] = detail::find(par, i);
        }
    }
    EquivalenceData e;
    e.rep.assign(static_cast<std::size_t>(n + 1), 0);
    std::map<int, std::vector<int>> by_root;
    for (int a = 0; a <= n; ++a) by_root[detail::find(par, a)].push_back(a);
    for (auto& [root, members] : by_root) {
        (void)root;
        for (int a : members) e.rep[static_cast<std::size_t>(a)] = members.front();
        e.min_reps.insert(members.front());
        e.classes.push_back(members);
    }
    std::sort(e.classes.begin(), e.classes.end());
    for (int r : circle_reps)
        if (e.min_reps.count(r)) e.circle_reps.insert(r);
    for (int i : e.min_reps) {
        if (i == 0 || line_reps.count(i)) {
            e.rank[i] = 0;
            continue;
        }
        const int j = e.rep[static_cast<std::size_t>(i - 1)];
        const auto it = e.rank.find(j);
        if (it == e.rank.end()) throw validation_error("rank recursion reached an unranked class");
        e.rank[i] = it->second + ((i - 1 - j) % 2 == 0 ? 1 : 0);
    }
    return e;
}

/// Classes of the pair; circle and line representatives come from glue(d, c).
inline EquivalenceData equivalence(const CupDiagram& c, const CupDiagram& d) {
    const CircleDiagram z = glue(d, c);
    std::set<int> circles, lines;
    for (const auto& comp : z.components()) (comp.is_circle() ? circles : lines).insert(comp.leftmost());
    return equivalence_classes({c, d}, lines, circles);
}

/// Classes of a single diagram, i.e. of the diagram glued to itself.
inline EquivalenceData equivalence(const CupDiagram& c) { return equivalence(c, c); }

}  // namespace springer
