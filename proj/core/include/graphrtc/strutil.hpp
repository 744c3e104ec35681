// Copyright 2026 The graphrtc Authors
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

#ifndef GRAPHRTC_STRUTIL_HPP_
#define GRAPHRTC_STRUTIL_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grtc {

std::string_view trim(std::string_view s);
std::string to_lower_ascii(std::string_view s);

// Splits on '\n', dropping one trailing '\r' per line so CRLF text reads
// like LF; a trailing newline does not produce an empty last line.
std::vector<std::string_view> split_lines(std::string_view s);
std::vector<std::string_view> split_ws(std::string_view s);

// Trims, then parses a decimal integer; an optional leading '+' before a
// digit is accepted. nullopt on anything else.
std::optional<long long> parse_int(std::string_view token);

std::string replace_all(std::string_view s, std::string_view from,
                        std::string_view to);

// Whole-file text helpers; both throw grtc::Error on I/O failure.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path,
                     std::string_view content);

}  // namespace grtc

#endif  // GRAPHRTC_STRUTIL_HPP_
