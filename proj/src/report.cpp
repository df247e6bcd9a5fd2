// Copyright 2026 The stalab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stalab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>

#include "stalab/errors.hpp"

namespace stalab::report {

std::string format_number(double value) {
    if (std::isnan(value)) {
        return "nan";
    }
    if (std::isinf(value)) {
        return value > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", kSignificantDigits, value);
    return buf;
}

double round_significant(double value) {
    if (!std::isfinite(value)) {
        return value;
    }
    return std::strtod(format_number(value).c_str(), nullptr);
}

CsvTable::CsvTable(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header_.size()) {
        throw InvalidData("CSV row width does not match header");
    }
    rows_.push_back(std::move(cells));
}

void CsvTable::add_numeric_row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) {
        cells.push_back(format_number(v));
    }
    add_row(std::move(cells));
}

std::string csv_escape(std::string_view cell) {
    if (cell.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(cell);
    }
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

std::string CsvTable::str() const {
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += csv_escape(cells[i]);
        }
        out += '\n';
    };
    line(header_);
    for (const auto& r : rows_) {
        line(r);
    }
    return out;
}

void write_atomic(const std::string& path, std::string_view contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw InvalidData("cannot open '" + tmp.string() + "' for writing");
        }
        out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
        out.flush();
        if (!out) {
            throw InvalidData("failed writing '" + tmp.string() + "'");
        }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw InvalidData("cannot rename into '" + path + "'");
    }
}

namespace {

constexpr double kPanelW = 420.0;
constexpr double kPanelH = 320.0;
constexpr double kMarginL = 64.0;
constexpr double kMarginR = 16.0;
constexpr double kMarginT = 32.0;
constexpr double kMarginB = 48.0;

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e"};

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '&': out += "&amp;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

std::string fmt(double v, int digits = 4) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    void pad() {
        if (!std::isfinite(lo)) {
            lo = 0.0;
            hi = 1.0;
        }
        if (hi - lo < 1e-12 * std::max(1.0, std::abs(hi))) {
            lo -= 0.5;
            hi += 0.5;
        }
        const double m = 0.05 * (hi - lo);
        lo -= m;
        hi += m;
    }
};

void draw_panel(std::ostringstream& os, const Panel& p, double x0) {
    Range xr, yr;
    for (const auto& s : p.series) {
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (p.log_x && !(s.x[i] > 0.0)) {
                continue;
            }
            xr.add(p.log_x ? std::log10(s.x[i]) : s.x[i]);
            yr.add(s.y[i]);
        }
    }
    if (p.log_x && std::isfinite(xr.lo)) {
        xr.lo = std::floor(xr.lo);
        xr.hi = std::ceil(xr.hi);
        if (xr.hi == xr.lo) {
            xr.hi += 1.0;
        }
    } else {
        xr.pad();
    }
    yr.pad();

    const double left = x0 + kMarginL;
    const double right = x0 + kPanelW - kMarginR;
    const double top = kMarginT;
    const double bottom = kPanelH - kMarginB;
    auto px = [&](double x) {
        const double v = p.log_x ? std::log10(x) : x;
        return left + (v - xr.lo) / (xr.hi - xr.lo) * (right - left);
    };
    auto py = [&](double y) { return bottom - (y - yr.lo) / (yr.hi - yr.lo) * (bottom - top); };

    os << "<rect x=\"" << fmt(left) << "\" y=\"" << fmt(top) << "\" width=\"" << fmt(right - left)
       << "\" height=\"" << fmt(bottom - top) << "\" fill=\"none\" stroke=\"#000\"/>\n";
    os << "<text x=\"" << fmt((left + right) / 2) << "\" y=\"20\" text-anchor=\"middle\">"
       << xml_escape(p.title) << "</text>\n";
    os << "<text x=\"" << fmt((left + right) / 2) << "\" y=\"" << fmt(kPanelH - 8)
       << "\" text-anchor=\"middle\">" << xml_escape(p.x_label) << "</text>\n";
    os << "<text x=\"" << fmt(x0 + 14) << "\" y=\"" << fmt((top + bottom) / 2)
       << "\" text-anchor=\"middle\" transform=\"rotate(-90 " << fmt(x0 + 14) << ' '
       << fmt((top + bottom) / 2) << ")\">" << xml_escape(p.y_label) << "</text>\n";

    if (p.log_x) {
        for (double e = xr.lo; e <= xr.hi + 1e-9; e += 1.0) {
            const double x = left + (e - xr.lo) / (xr.hi - xr.lo) * (right - left);
            os << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(bottom) << "\" x2=\"" << fmt(x)
               << "\" y2=\"" << fmt(bottom + 5) << "\" stroke=\"#000\"/>\n";
            os << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(bottom + 18)
               << "\" text-anchor=\"middle\" font-size=\"11\">1e" << fmt(e, 3) << "</text>\n";
        }
    } else {
        for (int k = 0; k <= 4; ++k) {
            const double v = xr.lo + (xr.hi - xr.lo) * k / 4.0;
            const double x = left + (right - left) * k / 4.0;
            os << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(bottom) << "\" x2=\"" << fmt(x)
               << "\" y2=\"" << fmt(bottom + 5) << "\" stroke=\"#000\"/>\n";
            os << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(bottom + 18)
               << "\" text-anchor=\"middle\" font-size=\"11\">" << fmt(v) << "</text>\n";
        }
    }
    for (int k = 0; k <= 4; ++k) {
        const double v = yr.lo + (yr.hi - yr.lo) * k / 4.0;
        const double y = py(v);
        os << "<line x1=\"" << fmt(left - 5) << "\" y1=\"" << fmt(y) << "\" x2=\"" << fmt(left)
           << "\" y2=\"" << fmt(y) << "\" stroke=\"#000\"/>\n";
        os << "<text x=\"" << fmt(left - 8) << "\" y=\"" << fmt(y + 4)
           << "\" text-anchor=\"end\" font-size=\"11\">" << fmt(v) << "</text>\n";
    }

    for (std::size_t k = 0; k < p.series.size(); ++k) {
        const Series& s = p.series[k];
        const char* color = kColors[k % (sizeof kColors / sizeof *kColors)];
        std::string points;
        for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
            if (!std::isfinite(s.y[i]) || (p.log_x && !(s.x[i] > 0.0))) {
                continue;
            }
            points += fmt(px(s.x[i]), 7) + "," + fmt(py(s.y[i]), 7) + " ";
            os << "<circle cx=\"" << fmt(px(s.x[i]), 7) << "\" cy=\"" << fmt(py(s.y[i]), 7)
               << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
        }
        os << "<polyline points=\"" << points << "\" fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"1\"/>\n";
        if (!s.label.empty()) {
            os << "<text x=\"" << fmt(right - 6) << "\" y=\"" << fmt(top + 16 + 14 * k)
               << "\" text-anchor=\"end\" font-size=\"11\" fill=\"" << color << "\">"
               << xml_escape(s.label) << "</text>\n";
        }
    }
}

} // namespace

std::string svg_plot(const std::vector<Panel>& panels) {
    std::ostringstream os;
    const double width = kPanelW * static_cast<double>(std::max<std::size_t>(1, panels.size()));
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width) << "\" height=\""
       << fmt(kPanelH) << "\" font-family=\"sans-serif\" font-size=\"13\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
    for (std::size_t i = 0; i < panels.size(); ++i) {
        draw_panel(os, panels[i], kPanelW * static_cast<double>(i));
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace stalab::report
