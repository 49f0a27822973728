#include "skein/render.hpp"

#include <sstream>

namespace skein {

namespace {

void drawLine(std::ostringstream& os, double x0, double y0, double x1, double y1) {
    os << "  \\draw (" << x0 << "," << y0 << ") -- (" << x1 << "," << y1 << ");\n";
}

}  // namespace

std::string tikzDiagram(const SlicedDiagram& d) {
    d.validate();
    std::ostringstream os;
    os << "\\begin{tikzpicture}[scale=0.7]\n";
    std::vector<Ori> w = d.bottom.letters;
    for (size_t i = 0; i < w.size(); ++i) {
        os << "  \\node[below] at (" << i << ",0) {\\tiny $"
           << (w[i] == Ori::Up ? "\\uparrow" : "\\downarrow") << "$};\n";
    }
    double h = 0;
    for (const auto& l : d.layers) {
        const int k = l.offset;
        const int width = static_cast<int>(w.size());
        switch (l.gen.kind) {
            case Generator::Kind::Cross: {
                for (int j = 0; j < width; ++j)
                    if (j != k && j != k + 1) drawLine(os, j, h, j, h + 1);
                bool parallel = l.gen.o1 == l.gen.o2;
                bool slashOver = parallel == (l.gen.sign > 0);
                if (slashOver) {
                    // backslash broken, slash on top
                    drawLine(os, k + 1, h, k + 0.62, h + 0.38);
                    drawLine(os, k + 0.38, h + 0.62, k, h + 1);
                    drawLine(os, k, h, k + 1, h + 1);
                } else {
                    drawLine(os, k, h, k + 0.38, h + 0.38);
                    drawLine(os, k + 0.62, h + 0.62, k + 1, h + 1);
                    drawLine(os, k + 1, h, k, h + 1);
                }
                std::swap(w[k], w[k + 1]);
                break;
            }
            case Generator::Kind::Cap: {
                for (int j = 0; j < width; ++j) {
                    if (j < k)
                        drawLine(os, j, h, j, h + 1);
                    else if (j > k + 1)
                        drawLine(os, j, h, j - 2, h + 1);
                }
                os << "  \\draw (" << k << "," << h << ") .. controls (" << k << "," << h + 0.75
                   << ") and (" << k + 1 << "," << h + 0.75 << ") .. (" << k + 1 << "," << h
                   << ");\n";
                w.erase(w.begin() + k, w.begin() + k + 2);
                break;
            }
            case Generator::Kind::Cup: {
                for (int j = 0; j < width; ++j) {
                    if (j < k)
                        drawLine(os, j, h, j, h + 1);
                    else
                        drawLine(os, j, h, j + 2, h + 1);
                }
                os << "  \\draw (" << k << "," << h + 1 << ") .. controls (" << k << "," << h + 0.25
                   << ") and (" << k + 1 << "," << h + 0.25 << ") .. (" << k + 1 << "," << h + 1
                   << ");\n";
                w.insert(w.begin() + k, {l.gen.o1, l.gen.o2});
                break;
            }
        }
        h += 1;
    }
    if (d.layers.empty()) {
        for (size_t j = 0; j < w.size(); ++j) drawLine(os, static_cast<double>(j), 0, j, 1);
        h = 1;
    }
    for (size_t i = 0; i < w.size(); ++i) {
        os << "  \\node[above] at (" << i << "," << h << ") {\\tiny $"
           << (w[i] == Ori::Up ? "\\uparrow" : "\\downarrow") << "$};\n";
    }
    os << "\\end{tikzpicture}\n";
    return os.str();
}

std::string tikzMatching(const Matching& m) { return tikzDiagram(positiveLift(m)); }

}  // namespace skein
