// The n = 4, k = 2 running example: fixed points, attracting cells, intersections and one product.
#include <springer/io.hpp>

#include <iostream>

using namespace springer;

int main() {
    const auto ws = enumerate_weights({4, 2});
    for (std::size_t i = 0; i < ws.size(); ++i) {
        const auto r = stable_cohomology(ws[i]);
        std::cout << "w" << i + 1 << " = " << ws[i].str() << "  dim H = " << r.dimension() << "\n"
                  << render(weight_to_m(ws[i]), &ws[i]);
    }

    std::cout << "\nfixed points of pairwise intersections\n    ";
    for (std::size_t j = 0; j < ws.size(); ++j) std::cout << " w" << j + 1;
    std::cout << "\n";
    for (std::size_t i = 0; i < ws.size(); ++i) {
        std::cout << "w" << i + 1 << "  ";
        for (const auto& b : ws) std::cout << "  " << fixed_points(ws[i], b).size();
        std::cout << "\n";
    }

    const Weight nested("vv^^"), nxt("v^v^");
    const BasisElement a = parse_basis_element(nested.str() + "," + nxt.str()), b = parse_basis_element(nxt.str() + "," + nested.str());
    for (int alpha : {1, -1})
        std::cout << "\nalpha " << alpha << ": 1 * 1 through " << nxt.str() << " = " << format_element(multiply(a, b, alpha));
    std::cout << "\n";
}
