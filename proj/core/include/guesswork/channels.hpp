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

#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "guesswork/model.hpp"

namespace guesswork {

/// The seven highly symmetric informationally complete qubit channels.
enum class HsicFamily {
    Tetrahedron,
    Octahedron,
    Cube,
    Icosahedron,
    Dodecahedron,
    Cuboctahedron,
    Icosidodecahedron,
};

inline constexpr std::array<HsicFamily, 7> kAllHsicFamilies{
    HsicFamily::Tetrahedron,  HsicFamily::Octahedron,    HsicFamily::Cube,
    HsicFamily::Icosahedron,  HsicFamily::Dodecahedron,  HsicFamily::Cuboctahedron,
    HsicFamily::Icosidodecahedron,
};

[[nodiscard]] std::string_view family_name(HsicFamily family) noexcept;
[[nodiscard]] std::size_t vertex_count(HsicFamily family) noexcept;
[[nodiscard]] std::optional<HsicFamily> parse_family(std::string_view name) noexcept;

/// Unit-norm polyhedron vertices in standard coordinates, labels v0, v1, ...
[[nodiscard]] QubitCqChannel generate_hsic(HsicFamily family);

/// Contents of a channel JSON document:
/// {"labels": [...], "bloch": [[x,y,z], ...], "prior": [...]?, "name": "..."?}
struct ChannelDocument {
    QubitCqChannel channel;
    std::optional<Prior> prior;
};

/// Throws ParseError for malformed JSON and ValidationError (with the model
/// error as cause) for rejected contents.
[[nodiscard]] ChannelDocument parse_channel_document(std::string_view json_text);
[[nodiscard]] std::string serialize_channel(const QubitCqChannel &channel,
                                            const std::optional<Prior> &prior = std::nullopt);

[[nodiscard]] ChannelDocument load_channel_document(const std::filesystem::path &path);
[[nodiscard]] QubitCqChannel load_channel(const std::filesystem::path &path);
void save_channel(const QubitCqChannel &channel, const std::filesystem::path &path,
                  const std::optional<Prior> &prior = std::nullopt);

} // namespace guesswork
