#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "partitions.hpp"

namespace cycpart {

/// Bottom-justified column chart of n ↦ Q_{m,t}(n); one box per subset.
struct WallDiagram {
    std::int64_t m = 1;
    std::int64_t t = 0;
    std::vector<std::int64_t> heights;

    static constexpr std::int64_t kMaxHeight = 1 << 16;
    static constexpr int kSvgScale = 4;

    std::int64_t box_count() const {
        std::int64_t s = 0;
        for (auto h : heights) s += h;
        return s;
    }

    std::int64_t max_height() const {
        return heights.empty() ? 0 : *std::max_element(heights.begin(), heights.end());
    }

    /// Rows top-down, '#' for a box and '.' for empty space.
    std::string ascii() const {
        std::ostringstream os;
        for (std::int64_t row = max_height(); row >= 1; --row) {
            for (auto h : heights) os << (h >= row ? '#' : '.');
            os << '\n';
        }
        return os.str();
    }

    std::string svg() const {
        const std::int64_t w = static_cast<std::int64_t>(heights.size()) * kSvgScale;
        const std::int64_t h = std::max<std::int64_t>(max_height(), 1) * kSvgScale;
        std::ostringstream os;
        os << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"yes\"?>\n"
           << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w
           << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n"
           << "<title>Q_{" << m << "," << t << "}(n)</title>\n";
        for (std::size_t col = 0; col < heights.size(); ++col) {
            for (std::int64_t k = 0; k < heights[col]; ++k) {
                os << "<rect x=\"" << static_cast<std::int64_t>(col) * kSvgScale << "\" y=\""
                   << h - (k + 1) * kSvgScale << "\" width=\"" << kSvgScale << "\" height=\""
                   << kSvgScale << "\" fill=\"black\" stroke=\"white\" stroke-width=\"0.5\"/>\n";
            }
        }
        os << "</svg>\n";
        return os.str();
    }
};

inline WallDiagram diagram(std::int64_t m, std::int64_t t) {
    const CountTable table = q_table(m, t);
    WallDiagram out{m, t, {}};
    for (const auto& v : table.values) {
        if (v > WallDiagram::kMaxHeight) {
            throw std::domain_error("column height " + v.str() + " is too tall to draw");
        }
        out.heights.push_back(v.convert_to<std::int64_t>());
    }
    return out;
}

}  // namespace cycpart
