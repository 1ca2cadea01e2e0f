// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace changeprism {

/// Replaces every CRLF pair with LF.
std::string normalize_line_endings(std::string_view text);

/// Splits LF-separated text into lines. A trailing newline terminates the
/// last line rather than starting an empty one, so "a\n" has one line and
/// "" has none.
std::vector<std::string_view> split_lines(std::string_view text);

int line_count(std::string_view text);

std::string percent_decode(std::string_view text);
/// Percent-encodes every byte outside the unreserved set except '/'.
std::string percent_encode_path(std::string_view path);

}  // namespace changeprism
