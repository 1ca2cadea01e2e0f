// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

#include "json.hpp"

#include "changeprism/record.hpp"

namespace changeprism {

using Json = nlohmann::json;

Json to_json(const CommitMeta& meta);
Json to_json(const ChangeRegion& region);
Json to_json(const SpectrumLayer& layer);
Json to_json(const Spectrum& spectrum);
Json to_json(const FileRecord& file);
Json to_json(const CommitRecord& record);

/// Inverse conversions; throw std::invalid_argument on shape errors.
CommitMeta commit_meta_from_json(const Json& json);
ChangeRegion region_from_json(const Json& json);
FileRecord file_from_json(const Json& json);
CommitRecord commit_record_from_json(const Json& json);

/// Canonical text: two-space indentation, sorted keys, UTF-8 (invalid
/// sequences replaced), LF, trailing newline.
std::string canonical_dump(const Json& json);

}  // namespace changeprism
