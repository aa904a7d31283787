#pragma once

#include <springer/cohomology.hpp>
#include <springer/ktheory.hpp>
#include <springer/table.hpp>

#include <json.hpp>

#include <cctype>
#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace springer {

using json = nlohmann::ordered_json;

inline json to_json(const CupDiagram& c) {
    json cups = json::array();
    for (auto [i, j] : c.cups()) cups.push_back({i, j});
    return {{"n", c.n()}, {"cups", cups}, {"rays", c.rays()}};
}

inline json to_json(const RingPresentation& r) {
    json pull = json::object();
    for (int i = 1; i <= r.n; ++i) {
        json img = json::array();
        for (auto [g, s] : r.pullback[static_cast<std::size_t>(i)]) img.push_back({g, s});
        pull[std::to_string(i)] = img;
    }
    return {{"generators", r.generators}, {"pullback", pull}};
}

inline json to_json(const GradedDim& g) { return {{"offset", g.offset}, {"coeffs", g.coeffs}}; }

/// "1 + q^2", "q + q^3"; "0" when empty.
inline std::string to_string(const GradedDim& g) {
    std::string s;
    for (std::size_t k = 0; k < g.coeffs.size(); ++k) {
        const auto c = g.coeffs[k];
        if (c == 0) continue;
        const int d = g.offset + static_cast<int>(k);
        std::string mono = d == 0 ? "" : d == 1 ? "q" : "q^" + std::to_string(d);
        std::string term = (c == 1 && !mono.empty()) ? mono : std::to_string(c) + mono;
        s += (s.empty() ? "" : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

/// Monomial of the X-labelled circles of b, named by their leftmost points: "x1x3", or "1".
inline std::string monomial(const BasisElement& b) {
    std::string s;
    for (auto [p, x] : labels(b))
        if (x) s += "x" + std::to_string(p);
    return s.empty() ? "1" : s;
}

/// Integer combination in monomial form, e.g. "x1 - x2"; "0" for the zero element.
inline std::string format_element(const AlgebraElement& a) {
    std::string s;
    for (auto& [b, c] : a.basis_terms()) {
        const std::string m = monomial(b);
        const auto mag = c < 0 ? -c : c;
        std::string term = mag == 1 ? m : (m == "1" ? std::to_string(mag) : std::to_string(mag) + m);
        if (s.empty())
            s = (c < 0 ? "-" : "") + term;
        else
            s += (c < 0 ? " - " : " + ") + term;
    }
    return s.empty() ? "0" : s;
}

/// Parses "SRC,TGT" or "SRC,TGT,MONOMIAL" where MONOMIAL is "1" or a product like "x1x3"
/// naming X-labelled circles by any point on them.
inline BasisElement parse_basis_element(const std::string& text) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    for (std::string part; std::getline(ss, part, ',');) parts.push_back(part);
    if (parts.size() < 2 || parts.size() > 3) throw validation_error("basis element '" + text + "' is not SRC,TGT[,MONOMIAL]");
    const Weight src(parts[0]), tgt(parts[1]);
    if (src.shape() != tgt.shape()) throw validation_error("basis element '" + text + "' mixes shapes");
    std::set<int> xs;
    if (parts.size() == 3 && parts[2] != "1") {
        const std::string& m = parts[2];
        for (std::size_t i = 0; i < m.size();) {
            if (m[i] != 'x') throw validation_error("bad monomial '" + m + "'");
            std::size_t j = i + 1;
            while (j < m.size() && std::isdigit(static_cast<unsigned char>(m[j]))) ++j;
            if (j == i + 1) throw validation_error("bad monomial '" + m + "'");
            const int p = std::stoi(m.substr(i + 1, j - i - 1));
            if (p < 1 || p > src.size()) throw validation_error("monomial point out of range in '" + m + "'");
            xs.insert(p);
            i = j;
        }
    }
    const CircleDiagram z = glue(weight_to_m(tgt), weight_to_m(src));
    for (int p : xs)
        if (!z.components()[static_cast<std::size_t>(z.component_of(p))].is_circle())
            throw validation_error("point " + std::to_string(p) + " of '" + text + "' is not on a circle");
    const auto v = orientation_from_labels(src, tgt, xs);
    if (!v) throw validation_error("Hom(" + src.str() + ", " + tgt.str() + ") is zero");
    return {src, tgt, *v};
}

inline json to_json(const BasisElement& b) {
    json lab = json::object();
    for (auto [p, x] : labels(b)) lab[std::to_string(p)] = x ? "X" : "1";
    return {{"src", b.src.str()}, {"tgt", b.tgt.str()}, {"orient", b.orient.str()}, {"labels", lab}, {"degree", degree(b)}};
}

inline json to_json(const AlgebraElement& a) {
    json terms = json::array();
    for (auto& [b, c] : a.basis_terms()) terms.push_back({{"orient", b.orient.str()}, {"labels", monomial(b)}, {"coeff", c}});
    return {{"src", a.empty() ? "" : a.src().str()}, {"tgt", a.empty() ? "" : a.tgt().str()}, {"terms", terms}, {"text", format_element(a)}};
}

inline json to_json(const StructureTable& t) {
    json basis = json::array();
    for (const auto& b : t.basis) basis.push_back(to_json(b));
    json products = json::object();
    for (auto& [ij, row] : t.products) {
        json r = json::array();
        for (auto [k, c] : row) r.push_back({k, c});
        products[std::to_string(ij.first) + "," + std::to_string(ij.second)] = r;
    }
    return {{"shape", {{"n", t.shape.n}, {"k", t.shape.k}}},
            {"alpha", t.alpha},
            {"route", t.route == Route::nested ? "nested" : "alpha"},
            {"basis", basis},
            {"products", products}};
}

inline StructureTable table_from_json(const json& j) {
    StructureTable t;
    t.shape = {j.at("shape").at("n").get<int>(), j.at("shape").at("k").get<int>()};
    t.alpha = j.at("alpha").get<int>();
    t.route = j.at("route").get<std::string>() == "nested" ? Route::nested : Route::alpha;
    for (const auto& b : j.at("basis"))
        t.basis.push_back({Weight(b.at("src").get<std::string>()), Weight(b.at("tgt").get<std::string>()),
                           Weight(b.at("orient").get<std::string>())});
    for (auto it = j.at("products").begin(); it != j.at("products").end(); ++it) {
        const std::string& key = it.key();
        const auto comma = key.find(',');
        if (comma == std::string::npos) throw validation_error("bad product key '" + key + "'");
        const std::size_t i = std::stoul(key.substr(0, comma)), k = std::stoul(key.substr(comma + 1));
        std::vector<std::pair<std::size_t, std::int64_t>> row;
        for (const auto& e : it.value()) row.push_back({e.at(0).get<std::size_t>(), e.at(1).get<std::int64_t>()});
        t.products[{i, k}] = std::move(row);
    }
    return t;
}

inline json to_json(const K0Matrix& k) {
    std::vector<std::string> ws;
    for (const auto& w : k.weights) ws.push_back(w.str());
    return {{"weights", ws}, {"entries", k.entries}};
}

/// The glued picture: `top` mirrored as caps above the point row, `bottom` as cups below.
inline std::string render_glued(const CupDiagram& top, const CupDiagram& bottom, const Weight* marks = nullptr) {
    std::vector<std::string> up;
    std::stringstream ss(render(top));
    for (std::string line; std::getline(ss, line);) up.push_back(line);
    std::string out;
    for (std::size_t r = up.size(); r-- > 1;) {
        std::string line = up[r];
        for (char& ch : line) ch = ch == '\\' ? '/' : ch == '/' ? '\\' : ch == '_' ? '-' : ch;
        out += line + "\n";
    }
    return out + render(bottom, marks);
}

/// Plain-text table dump: one block per basis element with its picture, then the nonzero products.
inline std::string text_dump(const StructureTable& t) {
    std::ostringstream out;
    out << "shape (" << t.shape.n << "," << t.shape.k << ") alpha " << t.alpha
        << (t.route == Route::nested ? " nested" : "") << ", " << t.basis.size() << " basis elements\n\n";
    for (std::size_t i = 0; i < t.basis.size(); ++i) {
        const auto& b = t.basis[i];
        out << "[" << i << "] " << b.src.str() << " -> " << b.tgt.str() << "  " << monomial(b) << "  deg " << degree(b)
            << "\n";
        out << render_glued(weight_to_m(b.tgt), weight_to_m(b.src), &b.orient) << "\n";
    }
    out << "products\n";
    for (auto& [ij, row] : t.products) {
        if (row.empty()) continue;
        out << "  [" << ij.first << "]*[" << ij.second << "] =";
        for (auto [k, c] : row) out << " " << (c < 0 ? "-" : "+") << (c < 0 ? -c : c) << "[" << k << "]";
        out << "\n";
    }
    return out.str();
}

}  // namespace springer
