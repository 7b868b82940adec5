// Copyright 2026 The Guesswork Authors
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

#include "guesswork/channels.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "guesswork/error.hpp"

namespace guesswork {

namespace {

const double kPhi = (1.0 + std::sqrt(5.0)) / 2.0;

BlochVector unit(BlochVector v) { return (1.0 / v.norm()) * v; }

std::vector<BlochVector> cyclic(const BlochVector &v) {
    return {v, {v.y, v.z, v.x}, {v.z, v.x, v.y}};
}

std::vector<BlochVector> signs(double a, double b, double c) {
    std::vector<BlochVector> out;
    for (double sa : {1.0, -1.0}) {
        for (double sb : {1.0, -1.0}) {
            for (double sc : {1.0, -1.0}) {
                BlochVector v{sa * a, sb * b, sc * c};
                if (std::find(out.begin(), out.end(), v) == out.end()) {
                    out.push_back(v);
                }
            }
        }
    }
    return out;
}

std::vector<BlochVector> cyclic_signs(double a, double b, double c) {
    std::vector<BlochVector> out;
    for (const auto &s : signs(a, b, c)) {
        for (const auto &v : cyclic(s)) {
            out.push_back(v);
        }
    }
    return out;
}

std::vector<BlochVector> icosahedron() { return cyclic_signs(0.0, 1.0, kPhi); }

std::vector<BlochVector> vertices(HsicFamily family) {
    std::vector<BlochVector> v;
    switch (family) {
    case HsicFamily::Tetrahedron:
        v = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
        break;
    case HsicFamily::Octahedron:
        v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
        break;
    case HsicFamily::Cube:
        v = signs(1.0, 1.0, 1.0);
        break;
    case HsicFamily::Icosahedron:
        v = icosahedron();
        break;
    case HsicFamily::Dodecahedron:
        v = signs(1.0, 1.0, 1.0);
        for (const auto &w : cyclic_signs(0.0, 1.0 / kPhi, kPhi)) {
            v.push_back(w);
        }
        break;
    case HsicFamily::Cuboctahedron:
        v = cyclic_signs(1.0, 1.0, 0.0);
        break;
    case HsicFamily::Icosidodecahedron: {
        // Edge midpoints of the icosahedron: pairs at minimal distance.
        const auto ico = icosahedron();
        const double edge2 = 4.0;
        for (std::size_t i = 0; i < ico.size(); ++i) {
            for (std::size_t j = i + 1; j < ico.size(); ++j) {
                if (std::abs((ico[i] - ico[j]).norm_squared() - edge2) < 1e-9) {
                    v.push_back(0.5 * (ico[i] + ico[j]));
                }
            }
        }
        break;
    }
    }
    for (auto &w : v) {
        w = unit(w);
    }
    return v;
}

using nlohmann::json;

} // namespace

std::string_view family_name(HsicFamily family) noexcept {
    switch (family) {
    case HsicFamily::Tetrahedron: return "tetrahedron";
    case HsicFamily::Octahedron: return "octahedron";
    case HsicFamily::Cube: return "cube";
    case HsicFamily::Icosahedron: return "icosahedron";
    case HsicFamily::Dodecahedron: return "dodecahedron";
    case HsicFamily::Cuboctahedron: return "cuboctahedron";
    case HsicFamily::Icosidodecahedron: return "icosidodecahedron";
    }
    return "";
}

std::size_t vertex_count(HsicFamily family) noexcept {
    switch (family) {
    case HsicFamily::Tetrahedron: return 4;
    case HsicFamily::Octahedron: return 6;
    case HsicFamily::Cube: return 8;
    case HsicFamily::Icosahedron: return 12;
    case HsicFamily::Dodecahedron: return 20;
    case HsicFamily::Cuboctahedron: return 12;
    case HsicFamily::Icosidodecahedron: return 30;
    }
    return 0;
}

std::optional<HsicFamily> parse_family(std::string_view name) noexcept {
    for (HsicFamily f : kAllHsicFamilies) {
        if (family_name(f) == name) {
            return f;
        }
    }
    return std::nullopt;
}

QubitCqChannel generate_hsic(HsicFamily family) {
    auto v = vertices(family);
    std::vector<std::string> labels(v.size());
    for (std::size_t m = 0; m < v.size(); ++m) {
        labels[m] = "v" + std::to_string(m);
    }
    return validate_channel(std::move(labels), std::move(v), std::string(family_name(family)));
}

ChannelDocument parse_channel_document(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception &e) {
        throw Error(ErrorCode::ParseError, std::string("malformed channel JSON: ") + e.what());
    }
    std::vector<std::string> labels;
    std::vector<BlochVector> bloch;
    std::optional<std::vector<double>> prior_weights;
    std::string name;
    try {
        if (!doc.is_object()) {
            throw Error(ErrorCode::ParseError, "channel JSON must be an object");
        }
        labels = doc.at("labels").get<std::vector<std::string>>();
        for (const auto &row : doc.at("bloch")) {
            const auto xyz = row.get<std::vector<double>>();
            if (xyz.size() != 3) {
                throw Error(ErrorCode::ParseError, "Bloch vectors need three coordinates");
            }
            bloch.push_back({xyz[0], xyz[1], xyz[2]});
        }
        if (doc.contains("prior") && !doc["prior"].is_null()) {
            prior_weights = doc["prior"].get<std::vector<double>>();
        }
        if (doc.contains("name") && !doc["name"].is_null()) {
            name = doc["name"].get<std::string>();
        }
    } catch (const json::exception &e) {
        throw Error(ErrorCode::ParseError, std::string("invalid channel JSON: ") + e.what());
    }
    try {
        auto channel = validate_channel(std::move(labels), std::move(bloch), std::move(name));
        std::optional<Prior> prior;
        if (prior_weights) {
            if (prior_weights->size() != channel.size()) {
                throw Error(ErrorCode::LengthMismatch, "prior length differs from alphabet size");
            }
            prior.emplace(std::move(*prior_weights));
        }
        return ChannelDocument{std::move(channel), std::move(prior)};
    } catch (const Error &e) {
        throw Error(ErrorCode::ValidationError, e.what(), e.code());
    }
}

std::string serialize_channel(const QubitCqChannel &channel, const std::optional<Prior> &prior) {
    json doc;
    doc["labels"] = channel.labels();
    json rows = json::array();
    for (const auto &r : channel.bloch()) {
        rows.push_back({r.x, r.y, r.z});
    }
    doc["bloch"] = std::move(rows);
    if (prior) {
        doc["prior"] = prior->weights();
    }
    if (!channel.name().empty()) {
        doc["name"] = channel.name();
    }
    return doc.dump(2);
}

ChannelDocument load_channel_document(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot open " + path.string());
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_channel_document(buf.str());
}

QubitCqChannel load_channel(const std::filesystem::path &path) {
    return load_channel_document(path).channel;
}

void save_channel(const QubitCqChannel &channel, const std::filesystem::path &path,
                  const std::optional<Prior> &prior) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot write " + path.string());
    }
    out << serialize_channel(channel, prior) << '\n';
}

} // namespace guesswork
