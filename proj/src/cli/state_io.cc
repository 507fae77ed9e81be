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

#include "demonwork/cli/state_io.h"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>

#include "demonwork/cli/numeric_text.h"

namespace demonwork::cli {

using nlohmann::json;

namespace {

void require_keys(const json &doc, const std::set<std::string> &allowed) {
    for (const auto &item : doc.items()) {
        if (!allowed.contains(item.key())) {
            throw StateFileError("/" + item.key(), "unexpected key for this family");
        }
    }
}

double number_at(const json &doc, const std::string &key) {
    if (!doc.contains(key)) {
        throw StateFileError("/" + key, "missing required number");
    }
    const json &v = doc.at(key);
    if (!v.is_number()) {
        throw StateFileError("/" + key, "expected a number");
    }
    return v.get<double>();
}

double angle_at(const json &doc, const std::string &key) {
    if (!doc.contains(key)) {
        throw StateFileError("/" + key, "missing required angle");
    }
    const json &v = doc.at(key);
    if (v.is_number()) {
        return v.get<double>();
    }
    if (v.is_string()) {
        try {
            return parse_angle(v.get<std::string>());
        } catch (const ParseError &e) {
            throw StateFileError("/" + key, e.what());
        }
    }
    throw StateFileError("/" + key, "expected a number or an angle string such as \"0.6pi\"");
}

Matrix4 matrix_at(const json &doc) {
    if (!doc.contains("matrix")) {
        throw StateFileError("/matrix", "missing required 4x4 matrix");
    }
    const json &rows = doc.at("matrix");
    if (!rows.is_array() || rows.size() != 4) {
        throw StateFileError("/matrix", "expected an array of 4 rows");
    }
    Matrix4 m;
    for (int i = 0; i < 4; ++i) {
        const json &row = rows[i];
        std::string row_path = "/matrix/" + std::to_string(i);
        if (!row.is_array() || row.size() != 4) {
            throw StateFileError(row_path, "expected an array of 4 entries");
        }
        for (int j = 0; j < 4; ++j) {
            const json &entry = row[j];
            std::string path = row_path + "/" + std::to_string(j);
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
                throw StateFileError(path, "expected [re, im] pair");
            }
            m(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
        }
    }
    return m;
}

}  // namespace

StateSpec parse_state(const json &doc) {
    if (!doc.is_object()) {
        throw StateFileError("", "state file must be a JSON object");
    }
    if (!doc.contains("family") || !doc.at("family").is_string()) {
        throw StateFileError("/family", "missing or non-string family");
    }
    const std::string family = doc.at("family").get<std::string>();
    if (family == "werner") {
        require_keys(doc, {"family", "p"});
        return Werner{number_at(doc, "p")};
    }
    if (family == "pure_schmidt") {
        require_keys(doc, {"family", "alpha", "alpha_sq"});
        bool has_alpha = doc.contains("alpha");
        bool has_sq = doc.contains("alpha_sq");
        if (has_alpha == has_sq) {
            throw StateFileError("/alpha", "give exactly one of alpha or alpha_sq");
        }
        if (has_alpha) {
            return PureSchmidt{number_at(doc, "alpha")};
        }
        double sq = number_at(doc, "alpha_sq");
        if (!(sq >= 0 && sq <= 1)) {
            throw StateFileError("/alpha_sq", "must lie in [0, 1]");
        }
        return PureSchmidt{std::sqrt(sq)};
    }
    if (family == "classical_mix") {
        require_keys(doc, {"family", "c0", "phi"});
        return ClassicalMix{number_at(doc, "c0"), angle_at(doc, "phi")};
    }
    if (family == "dense") {
        require_keys(doc, {"family", "matrix"});
        return Dense{matrix_at(doc)};
    }
    throw StateFileError("/family", "unknown family '" + family + "'");
}

namespace {

struct ToJson {
    json operator()(const Werner &s) const {
        return json{{"family", "werner"}, {"p", s.p}};
    }
    json operator()(const PureSchmidt &s) const {
        return json{{"family", "pure_schmidt"}, {"alpha", s.alpha}};
    }
    json operator()(const ClassicalMix &s) const {
        return json{{"family", "classical_mix"}, {"c0", s.c0}, {"phi", s.phi}};
    }
    json operator()(const Dense &s) const {
        json rows = json::array();
        for (int i = 0; i < 4; ++i) {
            json row = json::array();
            for (int j = 0; j < 4; ++j) {
                row.push_back(json::array({s.matrix(i, j).real(), s.matrix(i, j).imag()}));
            }
            rows.push_back(row);
        }
        return json{{"family", "dense"}, {"matrix", rows}};
    }
};

}  // namespace

json state_to_json(const StateSpec &spec) {
    return std::visit(ToJson{}, spec);
}

json dense_state_json(const StateSpec &spec) {
    return ToJson{}(Dense{build_state(spec).matrix()});
}

StateSpec load_state_argument(const std::string &argument) {
    if (argument == "phi_plus") {
        return PureSchmidt{std::sqrt(0.5)};
    }
    if (argument == "singlet") {
        return Werner{1.0};
    }
    if (argument == "zero_zero") {
        return PureSchmidt{1.0};
    }
    if (argument == "maximally_mixed") {
        return Werner{0.0};
    }
    std::string text;
    if (!argument.empty() && argument.front() == '{') {
        text = argument;
    } else if (argument == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(argument);
        if (!in) {
            throw StateFileError("", "cannot open state file '" + argument + "'");
        }
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        throw StateFileError("", std::string("malformed JSON: ") + e.what());
    }
    return parse_state(doc);
}

}  // namespace demonwork::cli
