#include "skewtab/svg.hpp"

#include <sstream>

namespace skewtab {

namespace {

// Lattice points carried as doubled integers so midpoints stay exact; the
// vertical scale is the rational 866/1000 of the 10px half-unit.
struct SvgCanvas {
    std::ostringstream body;
    int off_x = 0;   // doubled-lattice offset
    int top_y2 = 0;  // doubled y of the top

    std::string pt(int x2, int y2) const {
        long px = 5L * (x2 + off_x) + 10;
        long py_c = 866L * (top_y2 - y2) / 2 + 1000;  // hundredths of px
        std::ostringstream os;
        os << px << "," << py_c / 100 << "." << (py_c % 100) / 10 << (py_c % 10);
        return os.str();
    }

    void polygon(std::initializer_list<std::pair<int, int>> pts, const char* fill) {
        body << "<polygon points=\"";
        bool first = true;
        for (auto [x2, y2] : pts) {
            if (!first) body << " ";
            body << pt(x2, y2);
            first = false;
        }
        body << "\" fill=\"" << fill << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }

    void polyline(const std::vector<std::pair<int, int>>& pts, const char* color) {
        body << "<polyline points=\"";
        for (size_t i = 0; i < pts.size(); ++i) {
            if (i) body << " ";
            body << pt(pts[i].first, pts[i].second);
        }
        body << "\" fill=\"none\" stroke=\"" << color
             << "\" stroke-width=\"3\" stroke-linecap=\"round\"/>\n";
    }

    std::string finish(int width2) const {
        long w = 5L * (width2 + 2 * off_x) + 400;
        long h = 866L * top_y2 / 200 + 40;
        std::ostringstream os;
        os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
           << "\" height=\"" << h << "\">\n"
           << body.str() << "</svg>\n";
        return os.str();
    }
};

}  // namespace

std::string svg_tiling(const LozengeTiling& t, bool with_paths) {
    const SkewShape& s = t.shape();
    int d = s.num_rows();
    SvgCanvas canvas;
    canvas.off_x = 2 * d + 2;
    canvas.top_y2 = 2 * d;
    for (const Lozenge& l : t.lozenges()) {
        int x = 2 * l.x, b = 2 * l.band;
        switch (l.type) {
            case LozengeType::Vertical:
                canvas.polygon({{x, b}, {x + 2, b + 2}, {x + 4, b}, {x + 2, b - 2}},
                               "#f2f2f2");
                break;
            case LozengeType::NWSE:
                canvas.polygon({{x, b - 2}, {x + 4, b - 2}, {x + 2, b}, {x - 2, b}},
                               "#f6c8c8");
                break;
            case LozengeType::NESW:
                canvas.polygon({{x, b - 2}, {x + 4, b - 2}, {x + 6, b}, {x + 2, b}},
                               "#ffffff");
                break;
        }
    }
    if (with_paths) {
        PathSystems ps = path_systems(t);
        for (const auto& steps : ps.green) {
            std::vector<std::pair<int, int>> pts;
            for (const PathStep& st : steps)
                pts.push_back({2 * st.x_in + 2, 2 * (st.band - 1)});
            if (!steps.empty()) {
                const PathStep& last = steps.back();
                int x_out = last.x_in + (last.kind == LozengeType::NWSE ? -1 : 1);
                pts.push_back({2 * x_out + 2, 2 * last.band});
            }
            canvas.polyline(pts, "green");
        }
        for (const auto& path : ps.red) {
            std::vector<std::pair<int, int>> pts;
            for (auto [p, y] : path) pts.push_back({2 * p - 1, 2 * y + 1});
            canvas.polyline(pts, "red");
        }
        for (const auto& path : ps.blue) {
            std::vector<std::pair<int, int>> pts;
            for (auto [p, y] : path) pts.push_back({2 * p + 1, 2 * y + 1});
            canvas.polyline(pts, "blue");
        }
    }
    return canvas.finish(4 * s.outer().part(1) + 2 * d + 4);
}

std::string svg_puzzle(const KTPuzzle& p) {
    int n = p.side();
    SvgCanvas canvas;
    canvas.off_x = 2;
    canvas.top_y2 = 2 * n;
    auto fill_for = [](int nw, int ne, int sdown) -> const char* {
        if (nw == LGN || ne == LGW || sdown == LGV) return "#dcdcf6";
        if (sdown == LGE) return "#8c8c8c";
        if (nw == L1 && ne == L1 && sdown == L1) return "#f2e4c8";
        return "#ffffff";
    };
    for (int r = 1; r <= n; ++r) {
        for (int c = 1; c <= r; ++c) {
            int x = 2 * ((n - r) + 2 * (c - 1)), y = 2 * (n - r);
            canvas.polygon({{x, y}, {x + 4, y}, {x + 2, y + 2}},
                           fill_for(p.up_nw(r, c), p.up_ne(r, c), p.up_s(r, c)));
        }
        for (int c = 1; c < r; ++c) {
            int x = 2 * ((n - r) + 2 * c - 1), y = 2 * (n - r + 1);
            const char* fill = "#ffffff";
            if (p.down_n(r, c) == LGE) fill = "#8c8c8c";
            else if (p.down_se(r, c) == LGN || p.down_sw(r, c) == LGW ||
                     p.down_n(r, c) == LGV)
                fill = "#dcdcf6";
            else if (p.down_n(r, c) == L1 && p.down_sw(r, c) == L1 &&
                     p.down_se(r, c) == L1)
                fill = "#f2e4c8";
            canvas.polygon({{x, y}, {x + 4, y}, {x + 2, y - 2}}, fill);
        }
    }
    return canvas.finish(4 * n + 4);
}

}  // namespace skewtab
