#include "ncores/render.hpp"

#include <algorithm>
#include <sstream>

namespace ncores {

std::string render_abacus_ascii(const AbacusFunction& f) {
    const auto& v = f.values();
    const int cols = *std::max_element(v.begin(), v.end()) + 2;
    std::string out;
    for (std::size_t row = 0; row < v.size(); ++row) {
        for (int col = 0; col < cols; ++col) {
            if (col > 0) out += ' ';
            out += (v[row] <= col) ? "●" : "○";
        }
        out += '\n';
    }
    return out;
}

std::string render_abacus_svg(const AbacusFunction& f) {
    const auto& v = f.values();
    const int cols = *std::max_element(v.begin(), v.end()) + 2;
    const int unit = 28, radius = 10, margin = 20;
    const int width = margin * 2 + (cols - 1) * unit;
    const int height = margin * 2 + (f.n() - 1) * unit;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    for (std::size_t row = 0; row < v.size(); ++row) {
        for (int col = 0; col < cols; ++col) {
            const bool black = v[row] <= col;
            svg << "  <circle cx=\"" << margin + col * unit << "\" cy=\""
                << margin + static_cast<int>(row) * unit << "\" r=\"" << radius << "\" fill=\""
                << (black ? "black" : "white") << "\" stroke=\"black\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace ncores
