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

#ifndef DEMONWORK_CLI_NUMERIC_TEXT_H
#define DEMONWORK_CLI_NUMERIC_TEXT_H

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace demonwork::cli {

class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Plain decimal number. Throws ParseError on trailing garbage.
double parse_number(std::string_view text);

/// Radians, with pi shorthand: "1.3", "pi", "0.2pi", "0.2*pi", "-pi/2".
double parse_angle(std::string_view text);

/// Comma-separated list of angles (pi shorthand allowed).
std::vector<double> parse_angle_list(std::string_view text);
/// Comma-separated list of plain numbers.
std::vector<double> parse_number_list(std::string_view text);

/// Fixed notation with 6 decimals; negative zero prints as 0.000000.
std::string format_fixed6(double value);

}  // namespace demonwork::cli

#endif
