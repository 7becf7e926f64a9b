#include "torusknot/render.hpp"

#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>

namespace torusknot {

namespace {

std::string header(const MountainRange& r) {
    std::ostringstream out;
    const Window& w = r.window;
    out << "mountain range of T(" << r.knot.p << "," << r.knot.q << ") in d3=" << r.d3 << "\n";
    out << "window tb " << w.tb_min << ".." << w.tb_max << ", rot " << w.rot_min << ".." << w.rot_max << "\n";
    for (const auto& n : r.notes) out << "note: " << n << "\n";
    return out.str();
}

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

const char* fill_for(char g) {
    switch (g) {
    case 'E': return "#d62728";
    case '*': return "#9467bd";
    case '2': return "#1f77b4";
    default: return "#222222";
    }
}

}  // namespace

Int max_render_cells() {
    if (const char* env = std::getenv("ATLAS_MAX_CELLS")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return kDefaultMaxCells;
}

void check_window(const Window& w, Int limit) {
    if (w.cells() > limit) {
        throw std::length_error("window has " + std::to_string(w.cells()) + " cells, more than the limit of " +
                                std::to_string(limit) +
                                "; narrow it with --tb-min/--tb-max/--rot-min/--rot-max or raise ATLAS_MAX_CELLS");
    }
}

char glyph(const LatticePoint& p) {
    if (p.extra) return 'E';
    if (p.towers) return '*';
    if (p.multiplicity >= 2) return '2';
    return p.multiplicity == 1 ? 'o' : '.';
}

std::string render_ascii(const MountainRange& range) {
    check_window(range.window);
    std::string out = header(range);
    if (range.points.empty()) return out;
    const Window& w = range.window;
    std::map<std::pair<Int, Int>, char> at;
    for (const auto& p : range.points) at[{p.tb, p.rot}] = glyph(p);

    std::size_t label_width = std::max(std::to_string(w.tb_min).size(), std::to_string(w.tb_max).size());
    std::ostringstream grid;
    for (Int tb = w.tb_max; tb >= w.tb_min; --tb) {
        std::string label = std::to_string(tb);
        grid << std::string(label_width - label.size(), ' ') << label << " |";
        for (Int rot = w.rot_min; rot <= w.rot_max; ++rot) {
            auto it = at.find({tb, rot});
            grid << ' ' << (it == at.end() ? '.' : it->second);
        }
        grid << "\n";
    }
    grid << std::string(label_width, ' ') << " +" << std::string(2 * static_cast<std::size_t>(w.rot_max - w.rot_min + 1), '-')
         << "\n";
    grid << std::string(label_width, ' ') << "  rot " << w.rot_min << " .. " << w.rot_max << " (column " << -w.rot_min + 1
         << " is rot 0)\n";
    return out + grid.str();
}

std::string render_svg(const MountainRange& range) {
    check_window(range.window);
    const Window& w = range.window;
    const Int cell = 14, margin = 40;
    const Int width = (w.rot_max - w.rot_min + 1) * cell + 2 * margin;
    const Int height = (w.tb_max - w.tb_min + 1) * cell + 2 * margin;
    auto x_of = [&](Int rot) { return margin + (rot - w.rot_min) * cell + cell / 2; };
    auto y_of = [&](Int tb) { return margin + (w.tb_max - tb) * cell + cell / 2; };

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
    out << "  <title>" << escape_xml("T(" + std::to_string(range.knot.p) + "," + std::to_string(range.knot.q) +
                                     ") d3=" + std::to_string(range.d3))
        << "</title>\n";
    if (w.rot_min <= 0 && 0 <= w.rot_max) {
        out << "  <line x1=\"" << x_of(0) << "\" y1=\"" << margin << "\" x2=\"" << x_of(0) << "\" y2=\""
            << height - margin << "\" stroke=\"#cccccc\"/>\n";
    }
    out << "  <text x=\"" << margin << "\" y=\"" << margin / 2 << "\" font-size=\"12\">tb " << w.tb_max << " (top) to "
        << w.tb_min << ", rot " << w.rot_min << " to " << w.rot_max << "</text>\n";
    for (const auto& p : range.points) {
        char g = glyph(p);
        std::ostringstream tip;
        tip << "tb=" << p.tb << " rot=" << p.rot << " multiplicity=" << p.multiplicity;
        if (p.towers) tip << " torsion tower";
        if (p.extra) tip << " extra knot";
        for (std::size_t i = 0; i < p.refs.size(); ++i) tip << (i == 0 ? " families: " : ", ") << p.refs[i];
        out << "  <circle cx=\"" << x_of(p.rot) << "\" cy=\"" << y_of(p.tb) << "\" r=\"" << (g == 'o' ? 3 : 5)
            << "\" fill=\"" << fill_for(g) << "\"><title>" << escape_xml(tip.str()) << "</title></circle>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace torusknot
