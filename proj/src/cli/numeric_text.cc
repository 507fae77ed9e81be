// Copyright 2026 The demonwork Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "demonwork/cli/numeric_text.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <numbers>

namespace demonwork::cli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    return s;
}

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        parts.push_back(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) {
            return parts;
        }
        start = comma + 1;
    }
}

}  // namespace

double parse_number(std::string_view text) {
    std::string_view s = trim(text);
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    double value = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || end != s.data() + s.size() || !std::isfinite(value)) {
        throw ParseError("not a number: '" + std::string(text) + "'");
    }
    return value;
}

double parse_angle(std::string_view text) {
    std::string_view s = trim(text);
    std::size_t pi_at = s.find("pi");
    if (pi_at == std::string_view::npos) {
        return parse_number(s);
    }
    std::string_view coefficient = trim(s.substr(0, pi_at));
    std::string_view rest = trim(s.substr(pi_at + 2));
    if (!coefficient.empty() && coefficient.back() == '*') {
        coefficient = trim(coefficient.substr(0, coefficient.size() - 1));
    }
    double factor = 1.0;
    if (coefficient == "-") {
        factor = -1.0;
    } else if (!coefficient.empty() && coefficient != "+") {
        factor = parse_number(coefficient);
    }
    double divisor = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') {
            throw ParseError("bad angle: '" + std::string(text) + "'");
        }
        divisor = parse_number(rest.substr(1));
        if (divisor == 0) {
            throw ParseError("division by zero in angle: '" + std::string(text) + "'");
        }
    }
    return factor * std::numbers::pi / divisor;
}

std::vector<double> parse_angle_list(std::string_view text) {
    std::vector<double> out;
    for (auto part : split_commas(text)) {
        out.push_back(parse_angle(part));
    }
    return out;
}

std::vector<double> parse_number_list(std::string_view text) {
    std::vector<double> out;
    for (auto part : split_commas(text)) {
        out.push_back(parse_number(part));
    }
    return out;
}

std::string format_fixed6(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.6f", value);
    std::string s(buffer);
    if (s == "-0.000000") {
        s = "0.000000";
    }
    return s;
}

}  // namespace demonwork::cli
