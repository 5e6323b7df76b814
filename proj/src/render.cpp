#include "springer/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace springer {

std::string render_ascii(const LinkPattern& pi) {
    const int n = pi.n();
    if (n == 0) return "(empty)\n";
    const int width = 4;
    auto col = [&](int i) { return (i - 1) * width; };

    int maxh = 1;
    for (int i = 1; i <= n; ++i)
        if (pi.pred(i)) maxh = std::max(maxh, i - pi.pred(i));
    std::vector<std::string> canvas(static_cast<size_t>(maxh),
                                    std::string(static_cast<size_t>(col(n)) + 3, ' '));

    // square arc: corners at height span, verticals down to the baseline
    for (int i = 1; i <= n; ++i) {
        int p = pi.pred(i);
        if (!p) continue;
        int h = i - p;
        size_t row = static_cast<size_t>(maxh - h);
        size_t a = static_cast<size_t>(col(p)), b = static_cast<size_t>(col(i));
        canvas[row][a] = '.';
        canvas[row][b] = '.';
        for (size_t x = a + 1; x < b; ++x)
            if (canvas[row][x] == ' ') canvas[row][x] = '-';
        for (size_t y = row + 1; y < static_cast<size_t>(maxh); ++y) {
            if (canvas[y][a] == ' ') canvas[y][a] = '|';
            if (canvas[y][b] == ' ') canvas[y][b] = '|';
        }
    }

    std::ostringstream out;
    for (const auto& line : canvas) {
        size_t end = line.find_last_not_of(' ');
        out << (end == std::string::npos ? "" : line.substr(0, end + 1)) << '\n';
    }
    for (int i = 1; i <= n; ++i) {
        std::string label = std::to_string(i);
        out << label << std::string(static_cast<size_t>(width) - label.size(), ' ');
    }
    out << '\n';
    return out.str();
}

std::string render_svg(const LinkPattern& pi) {
    const int n = pi.n();
    const int unit = 40, margin = 30;
    int maxspan = 0;
    for (int i = 1; i <= n; ++i)
        if (pi.pred(i)) maxspan = std::max(maxspan, i - pi.pred(i));
    const int top = margin + (maxspan * unit) / 2;
    const int width = 2 * margin + (n > 1 ? (n - 1) * unit : 0);
    const int height = top + margin;
    auto x = [&](int i) { return margin + (i - 1) * unit; };

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    for (int i = 1; i <= n; ++i) {
        int p = pi.pred(i);
        if (!p) continue;
        double r = (i - p) * unit / 2.0;
        out << "  <path d=\"M " << x(p) << ' ' << top << " A " << r << ' ' << r
            << " 0 0 1 " << x(i) << ' ' << top
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
    }
    for (int i = 1; i <= n; ++i) {
        out << "  <circle cx=\"" << x(i) << "\" cy=\"" << top
            << "\" r=\"3\" fill=\"black\"/>\n";
        out << "  <text x=\"" << x(i) << "\" y=\"" << top + 18
            << "\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">" << i
            << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace springer
