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

/**
 * @file
 * Report emission: fixed-precision number formatting, RFC-4180 CSV tables,
 * atomic file writes and a small SVG scatter/line plot writer.
 */

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace stalab::report {

inline constexpr int kSignificantDigits = 12;

/// "%.12g" rendering; non-finite values become "inf", "-inf" or "nan".
std::string format_number(double value);

/// The double nearest to format_number(value), so JSON dumps carry 12 digits.
double round_significant(double value);

class CsvTable {
public:
    explicit CsvTable(std::vector<std::string> header);

    void add_row(std::vector<std::string> cells);
    void add_numeric_row(const std::vector<double>& values);

    std::size_t rows() const { return rows_.size(); }
    std::string str() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<std::string>> rows_;
};

std::string csv_escape(std::string_view cell);

/// Writes to a sibling temporary file and renames it over @p path.
/// Throws InvalidData when the file cannot be written.
void write_atomic(const std::string& path, std::string_view contents);

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct Panel {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    std::vector<Series> series;
};

/// Panels laid out side by side; points joined by a polyline with markers.
std::string svg_plot(const std::vector<Panel>& panels);

} // namespace stalab::report
