#pragma once

#include <springer/equivalence.hpp>
#include <springer/io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace springer::cli {

enum exit_code : int { ok = 0, invalid = 1, check_failed = 2 };

namespace detail {

struct Common {
    std::string format = "text";
    std::string out;
};

/// Weight flag value; failures name the flag.
inline Weight weight_arg(const std::string& flag, const std::string& text) {
    try {
        return Weight(text);
    } catch (const validation_error&) {
        throw validation_error("--" + flag + ": unparsable weight '" + text + "'");
    }
}

inline Shape shape_arg(int n, int k) {
    const Shape s{n, k};
    try {
        s.validate();
    } catch (const validation_error& e) {
        throw validation_error(std::string("--k: ") + e.what());
    }
    return s;
}

inline BasisElement basis_arg(const std::string& flag, const std::string& text) {
    try {
        return parse_basis_element(text);
    } catch (const validation_error& e) {
        throw validation_error("--" + flag + ": " + e.what());
    }
}

inline int int_arg(const std::string& flag, const std::string& text) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(text, &used);
        if (used == text.size()) return v;
    } catch (const std::logic_error&) {
    }
    throw validation_error("--" + flag + ": '" + text + "' is not an integer");
}

inline void expect_shape(const std::string& flag, const Weight& w, std::optional<int> n, std::optional<int> k) {
    if ((n && w.size() != *n) || (k && w.downs() != *k))
        throw validation_error("--" + flag + ": weight " + w.str() + " does not have the requested shape");
}

/// "43/21" or "4,3/2,1".
inline StandardTableau tableau_arg(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) throw validation_error("--tableau: expected TOP/BOTTOM, got '" + text + "'");
    auto row = [&](const std::string& r) {
        std::vector<int> out;
        if (r.find(',') != std::string::npos) {
            std::stringstream ss(r);
            for (std::string e; std::getline(ss, e, ',');) out.push_back(int_arg("tableau", e));
        } else {
            for (char c : r) {
                if (c < '1' || c > '9') throw validation_error("--tableau: bad entry in '" + text + "'");
                out.push_back(c - '0');
            }
        }
        return out;
    };
    StandardTableau t{row(text.substr(0, slash)), row(text.substr(slash + 1))};
    try {
        t.validate();
    } catch (const validation_error& e) {
        throw validation_error(std::string("--tableau: ") + e.what());
    }
    return t;
}

inline CupOrder order_arg(const std::string& text) {
    CupOrder o;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw validation_error("--order: expected I-J pairs, got '" + item + "'");
        o.push_back({int_arg("order", item.substr(0, dash)), int_arg("order", item.substr(dash + 1))});
    }
    return o;
}

inline std::string join(const std::vector<int>& v, const char* sep = ",") {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

inline std::string presentation_text(const RingPresentation& r) {
    std::ostringstream o;
    o << "generators:";
    if (r.generators.empty()) o << " none";
    for (int g : r.generators) o << " x" << g;
    o << "\ndimension: " << r.dimension() << "\npullback:\n";
    for (int i = 1; i <= r.n; ++i) {
        o << "  x" << i << " -> ";
        const auto& img = r.pullback[static_cast<std::size_t>(i)];
        if (img.empty()) o << "0";
        for (std::size_t t = 0; t < img.size(); ++t) {
            const auto [g, s] = img[t];
            if (t == 0)
                o << (s < 0 ? "-" : "");
            else
                o << (s < 0 ? " - " : " + ");
            o << "x" << g;
        }
        o << "\n";
    }
    return o.str();
}

inline std::string witness_text(const BasisElement& b) {
    return b.src.str() + "," + b.tgt.str() + "," + monomial(b);
}

}  // namespace detail

/// Runs one CLI invocation, writing results to `out` (or --out FILE) and diagnostics to `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    using namespace detail;
    CLI::App app{"Two-row Springer fiber combinatorics and arc algebra products"};
    app.require_subcommand(1);
    Common common;
    std::optional<int> n, k;
    int alpha = 1;
    bool standard = false, nested = false, list = false;
    std::string a_text, b_text, weight_text, tableau_text, left_text, right_text, order_text, what = "all";

    auto add_common = [&](CLI::App* sub, std::vector<std::string> formats) {
        sub->add_option("--format", common.format, "output format")->check(CLI::IsMember(formats));
        sub->add_option("--out", common.out, "write output to this file instead of standard output");
    };
    auto add_shape = [&](CLI::App* sub, bool required) {
        auto* on = sub->add_option("--n", n, "number of points");
        auto* ok = sub->add_option("--k", k, "number of down marks");
        if (required) {
            on->required();
            ok->required();
        }
    };

    auto* enumerate = app.add_subcommand("enumerate", "list weights or standard tableaux of a shape");
    add_shape(enumerate, true);
    enumerate->add_flag("--standard", standard, "only standard weights, shown with their tableaux");
    add_common(enumerate, {"text", "json"});

    auto* cup = app.add_subcommand("cup", "draw m(w) and C(w)");
    cup->add_option("--weight", weight_text, "weight as a ^/v string")->required();
    add_common(cup, {"text", "json"});

    auto* gluecmd = app.add_subcommand("glue", "components of glue(m(b), m(a))");
    gluecmd->add_option("--a", a_text, "bottom weight")->required();
    gluecmd->add_option("--b", b_text, "top weight")->required();
    add_common(gluecmd, {"text", "json"});

    auto* fixed = app.add_subcommand("fixedpoints", "orientations of glue(m(b), m(a)) matching a and b on rays");
    add_shape(fixed, false);
    fixed->add_option("--a", a_text, "bottom weight")->required();
    fixed->add_option("--b", b_text, "top weight")->required();
    fixed->add_flag("--list", list, "print the orientations");
    add_common(fixed, {"text", "json"});

    auto* cohom = app.add_subcommand("cohomology", "ring presentations and Poincare polynomials");
    cohom->add_option("--a", a_text, "weight (stable manifold)");
    cohom->add_option("--b", b_text, "second weight (intersection with the first)");
    cohom->add_option("--tableau", tableau_text, "standard tableau TOP/BOTTOM (component)");
    add_common(cohom, {"text", "json"});

    auto* mult = app.add_subcommand("multiply", "product of two basis elements");
    mult->add_option("--left", left_text, "SRC,TGT[,MONOMIAL]")->required();
    mult->add_option("--right", right_text, "SRC,TGT[,MONOMIAL]")->required();
    mult->add_option("--alpha", alpha, "sign parameter, 1 or -1");
    mult->add_flag("--nested", nested, "use the embedded nested TQFT rules");
    mult->add_option("--order", order_text, "cup order of the middle diagram, e.g. 1-4,2-3");
    add_common(mult, {"text", "json"});

    auto* table = app.add_subcommand("table", "full structure constants");
    add_shape(table, true);
    table->add_option("--alpha", alpha, "sign parameter, 1 or -1");
    table->add_flag("--standard", standard, "restrict to standard weights");
    table->add_flag("--nested", nested, "use the embedded nested TQFT rules");
    add_common(table, {"text", "json"});

    auto* check = app.add_subcommand("check", "exhaustive property checks");
    add_shape(check, true);
    check->add_option("--alpha", alpha, "sign parameter, 1 or -1");
    check->add_flag("--standard", standard, "restrict to standard weights");
    check->add_option("--what", what, "which check")
        ->check(CLI::IsMember({"associativity", "order", "nested", "degree", "unit", "all"}));
    add_common(check, {"text", "json"});

    auto* k0 = app.add_subcommand("k0", "transformation matrix between standard and simple classes");
    add_shape(k0, false);
    add_common(k0, {"text", "json", "csv"});

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return invalid;
    }

    std::ostringstream buf;
    const bool as_json = common.format == "json";
    int code = ok;
    try {
        if (n && *n < 0) throw validation_error("--n must be non-negative");
        if (alpha != 1 && alpha != -1) throw validation_error("--alpha must be 1 or -1");
        if (enumerate->parsed()) {
            const Shape s = shape_arg(*n, *k);
            json rows = json::array();
            for (const auto& w : enumerate_weights(s)) {
                if (standard && !is_standard(w)) continue;
                if (as_json) {
                    json row{{"weight", w.str()}, {"standard", is_standard(w)}};
                    if (is_standard(w)) row["tableau"] = tableau_from_weight(w).str();
                    rows.push_back(row);
                } else {
                    buf << w.str();
                    if (is_standard(w)) buf << "  " << tableau_from_weight(w).str();
                    buf << "\n";
                }
            }
            if (as_json) buf << rows.dump(2) << "\n";
        } else if (cup->parsed()) {
            const Weight w = weight_arg("weight", weight_text);
            if (as_json) {
                buf << json{{"weight", w.str()}, {"m", to_json(weight_to_m(w))}, {"C", to_json(weight_to_C(w))}}.dump(2) << "\n";
            } else {
                buf << "m(" << w.str() << ")\n" << render(weight_to_m(w), &w) << "C(" << w.str() << ")\n"
                    << render(weight_to_C(w), &w);
            }
        } else if (gluecmd->parsed()) {
            const Weight a = weight_arg("a", a_text), b = weight_arg("b", b_text);
            if (a.size() != b.size()) throw validation_error("--b: length differs from --a");
            const CircleDiagram z = glue(weight_to_m(b), weight_to_m(a));
            json comps = json::array();
            for (std::size_t c = 0; c < z.components().size(); ++c) {
                const auto& comp = z.components()[c];
                json j{{"kind", comp.is_circle() ? "circle" : "line"}, {"vertices", comp.vertices}};
                if (comp.is_circle()) j["depth"] = z.nesting_depth(static_cast<int>(c));
                comps.push_back(j);
            }
            if (as_json) {
                buf << json{{"circles", z.circle_count()}, {"lines", z.line_count()}, {"components", comps}}.dump(2) << "\n";
            } else {
                buf << render_glued(z.top(), z.bottom()) << "circles: " << z.circle_count() << "\nlines: " << z.line_count()
                    << "\n";
                for (const auto& j : comps) {
                    buf << "  " << j["kind"].get<std::string>() << " {" << join(j["vertices"].get<std::vector<int>>()) << "}";
                    if (j.contains("depth")) buf << " depth " << j["depth"].get<int>();
                    buf << "\n";
                }
            }
        } else if (fixed->parsed()) {
            const Weight a = weight_arg("a", a_text), b = weight_arg("b", b_text);
            expect_shape("a", a, n, k);
            expect_shape("b", b, n, k);
            if (a.shape() != b.shape()) throw validation_error("--b: shape differs from --a");
            const auto vs = fixed_points(a, b);
            if (as_json) {
                std::vector<std::string> ss;
                for (const auto& v : vs) ss.push_back(v.str());
                buf << json{{"count", vs.size()}, {"orientations", ss}}.dump(2) << "\n";
            } else {
                buf << "count " << vs.size() << "\n";
                if (list)
                    for (const auto& v : vs) buf << v.str() << "\n";
            }
        } else if (cohom->parsed()) {
            if (!tableau_text.empty()) {
                const RingPresentation r = component_cohomology(tableau_arg(tableau_text));
                const GradedDim p = circle_series(static_cast<int>(r.generators.size()), 0);
                if (as_json)
                    buf << json{{"presentation", to_json(r)}, {"poincare", to_json(p)}}.dump(2) << "\n";
                else
                    buf << presentation_text(r) << "poincare: " << to_string(p) << "\n";
            } else if (a_text.empty()) {
                throw validation_error("--a or --tableau is required");
            } else if (b_text.empty()) {
                const Weight a = weight_arg("a", a_text);
                const RingPresentation r = stable_cohomology(a);
                const GradedDim p = circle_series(static_cast<int>(r.generators.size()), 0);
                if (as_json)
                    buf << json{{"presentation", to_json(r)}, {"poincare", to_json(p)}}.dump(2) << "\n";
                else
                    buf << presentation_text(r) << "poincare: " << to_string(p) << "\n";
            } else {
                const Weight a = weight_arg("a", a_text), b = weight_arg("b", b_text);
                if (a.shape() != b.shape()) throw validation_error("--b: shape differs from --a");
                const auto r = intersection_cohomology(a, b);
                const GradedDim p = poincare(a, b, false), ps = poincare(a, b, true);
                if (as_json) {
                    buf << json{{"empty", !r},
                                {"presentation", r ? to_json(*r) : json(nullptr)},
                                {"poincare", to_json(p)},
                                {"poincare_shifted", to_json(ps)}}
                               .dump(2)
                        << "\n";
                } else if (!r) {
                    buf << "empty\n";
                } else {
                    buf << presentation_text(*r) << "poincare: " << to_string(p) << "\nshifted: " << to_string(ps) << "\n";
                }
            }
        } else if (mult->parsed()) {
            const BasisElement l = basis_arg("left", left_text), r = basis_arg("right", right_text);
            if (l.tgt != r.src)
                throw validation_error("--right: source " + r.src.str() + " differs from the target " + l.tgt.str() +
                                       " of --left");
            const CupOrder o = order_text.empty() ? default_order(l.tgt) : order_arg(order_text);
            if (!order_compatible(l.tgt, o)) throw validation_error("--order: not a nesting-compatible order of the cups of m(" + l.tgt.str() + ")");
            const AlgebraElement p = nested ? multiply_nested(l, r, o) : multiply(l, r, alpha, o);
            if (as_json)
                buf << to_json(p).dump(2) << "\n";
            else
                buf << format_element(p) << "\n";
        } else if (table->parsed()) {
            const StructureTable t =
                structure_table(shape_arg(*n, *k), alpha, standard ? BasisFilter::standard_only : BasisFilter::all,
                                nested ? Route::nested : Route::alpha);
            if (as_json)
                buf << to_json(t).dump(1) << "\n";
            else
                buf << text_dump(t);
        } else if (check->parsed()) {
            const Shape s = shape_arg(*n, *k);
            const BasisFilter f = standard ? BasisFilter::standard_only : BasisFilter::all;
            json report = json::object();
            auto record = [&](const std::string& name, std::optional<std::string> witness) {
                if (witness) code = check_failed;
                if (as_json) {
                    report[name] = witness ? json{{"pass", false}, {"witness", *witness}} : json{{"pass", true}};
                } else {
                    buf << name << ": " << (witness ? "FAIL" : "PASS") << "\n";
                    if (witness) buf << *witness;
                }
            };
            const bool all = what == "all";
            std::optional<StructureTable> t;
            if (all || what == "associativity" || what == "degree" || what == "unit") t = structure_table(s, alpha, f);
            if (all || what == "associativity") {
                std::optional<std::string> w;
                if (auto a = check_associativity(*t)) {
                    std::ostringstream o;
                    o << "  a = " << witness_text(a->a) << "\n  b = " << witness_text(a->b) << "\n  c = " << witness_text(a->c)
                      << "\n";
                    auto show = [&](const std::map<std::size_t, std::int64_t>& m) {
                        AlgebraElement e(a->a.src, a->c.tgt);
                        for (auto [i, c] : m) e.add(t->basis[i].orient, c);
                        return format_element(e);
                    };
                    o << "  (ab)c = " << show(a->left) << "\n  a(bc) = " << show(a->right) << "\n";
                    w = o.str();
                }
                record("associativity", w);
            }
            if (all || what == "order") {
                std::optional<std::string> w;
                if (auto o = check_order_independence(s, alpha, f)) {
                    std::ostringstream m;
                    auto ord = [](const CupOrder& c) {
                        std::string s;
                        for (auto [i, j] : c) s += (s.empty() ? "" : ",") + std::to_string(i) + "-" + std::to_string(j);
                        return s;
                    };
                    m << "  a = " << witness_text(o->a) << "\n  b = " << witness_text(o->b) << "\n  order " << ord(o->first)
                      << ": " << format_element(o->first_product) << "\n  order " << ord(o->second) << ": "
                      << format_element(o->second_product) << "\n";
                    w = m.str();
                }
                record("order", w);
            }
            if (all || what == "nested") {
                std::optional<std::string> w;
                if (auto p = check_nested_agreement(s, f))
                    w = "  a = " + witness_text(p->a) + "\n  b = " + witness_text(p->b) + "\n  alpha -1: " +
                        format_element(p->first) + "\n  nested: " + format_element(p->second) + "\n";
                record("nested", w);
            }
            if (all || what == "degree") {
                std::optional<std::string> w;
                if (auto p = check_degree_additivity(*t))
                    w = "  a = " + witness_text(p->a) + "\n  b = " + witness_text(p->b) + "\n  ab = " + format_element(p->first) +
                        "\n";
                record("degree", w);
            }
            if (all || what == "unit") {
                std::optional<std::string> w;
                if (auto b = check_unit(*t)) w = "  element " + witness_text(*b) + "\n";
                record("unit", w);
            }
            if (as_json) buf << report.dump(2) << "\n";
        } else if (k0->parsed()) {
            const int nn = n.value_or(2);
            const Shape s = shape_arg(nn, k.value_or(nn / 2));
            const K0Matrix m = k0_matrix(s);
            const OrderDirection d = support_direction(m);
            const auto det = determinant(m.entries);
            if (common.format == "csv") {
                buf << to_csv(m);
            } else if (as_json) {
                json j = to_json(m);
                j["determinant"] = det.str();
                j["direction"] = to_string(d);
                j["unitriangular"] = unitriangular(m, d);
                buf << j.dump(2) << "\n";
            } else {
                buf << to_csv(m) << "determinant " << det << "\ndirection " << to_string(d) << "\nunitriangular "
                    << (unitriangular(m, d) ? "yes" : "no") << "\n";
            }
        }
    } catch (const validation_error& e) {
        err << "error: " << e.what() << "\n";
        return invalid;
    } catch (const composition_error& e) {
        err << "error: " << e.what() << "\n";
        return invalid;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return invalid;
    }

    if (common.out.empty()) {
        out << buf.str();
    } else {
        std::ofstream f(common.out, std::ios::binary);
        if (!f) {
            err << "error: --out: cannot write '" << common.out << "'\n";
            return invalid;
        }
        f << buf.str();
    }
    return code;
}

}  // namespace springer::cli
