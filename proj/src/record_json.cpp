// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include "changeprism/record_json.hpp"

#include <limits>
#include <stdexcept>

namespace changeprism {

namespace {

[[noreturn]] void shape_error(const std::string& what) { throw std::invalid_argument(what); }

const Json& member(const Json& object, const char* key) {
  if (!object.is_object()) shape_error(std::string("expected an object holding '") + key + "'");
  auto it = object.find(key);
  if (it == object.end()) shape_error(std::string("missing field '") + key + "'");
  return *it;
}

std::string string_member(const Json& object, const char* key) {
  const auto& value = member(object, key);
  if (!value.is_string()) shape_error(std::string("field '") + key + "' is not a string");
  return value.get<std::string>();
}

std::int64_t integer_member(const Json& object, const char* key) {
  const auto& value = member(object, key);
  if (!value.is_number_integer()) shape_error(std::string("field '") + key + "' is not an integer");
  return value.get<std::int64_t>();
}

int line_member(const Json& object, const char* key) {
  const auto value = integer_member(object, key);
  if (value < 0 || value > std::numeric_limits<int>::max()) {
    shape_error(std::string("field '") + key + "' is out of range");
  }
  return static_cast<int>(value);
}

double number_member(const Json& object, const char* key) {
  const auto& value = member(object, key);
  if (!value.is_number()) shape_error(std::string("field '") + key + "' is not a number");
  return value.get<double>();
}

const Json& array_member(const Json& object, const char* key) {
  const auto& value = member(object, key);
  if (!value.is_array()) shape_error(std::string("field '") + key + "' is not an array");
  return value;
}

std::vector<std::string> string_list(const Json& object, const char* key) {
  std::vector<std::string> out;
  for (const auto& item : array_member(object, key)) {
    if (!item.is_string()) shape_error(std::string("field '") + key + "' holds a non-string");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::optional<std::string> optional_string(const Json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end() || it->is_null()) return std::nullopt;
  if (!it->is_string()) shape_error(std::string("field '") + key + "' is not a string");
  return it->get<std::string>();
}

ChangeType change_type_member(const Json& object) {
  auto key = string_member(object, "change_type");
  auto type = parse_type_key(key);
  if (!type) shape_error("unknown change_type '" + key + "'");
  return *type;
}

Json layers_json(const std::vector<SpectrumLayer>& layers) {
  Json out = Json::array();
  for (const auto& layer : layers) out.push_back(to_json(layer));
  return out;
}

std::vector<SpectrumLayer> layers_from_json(const Json& array, const std::vector<ChangeRegion>& regions,
                                            Side side) {
  std::vector<SpectrumLayer> layers;
  for (const auto& item : array) {
    SpectrumLayer layer;
    layer.change_type = change_type_member(item);
    layer.offset = number_member(item, "offset");
    layer.height = number_member(item, "height");
    const auto index = integer_member(item, "region_index");
    if (index < 0 || static_cast<std::size_t>(index) >= regions.size() ||
        regions[static_cast<std::size_t>(index)].side != side) {
      shape_error("layer region_index " + std::to_string(index) + " does not name a region of its side");
    }
    layer.region_index = static_cast<std::size_t>(index);
    layer.start_line = regions[layer.region_index].start_line;
    layer.end_line = regions[layer.region_index].end_line;
    layers.push_back(layer);
  }
  return layers;
}

}  // namespace

Json to_json(const CommitMeta& meta) {
  return Json{{"sha", meta.sha},         {"short_sha", meta.short_sha}, {"author", meta.author},
              {"timestamp", meta.timestamp}, {"message", meta.message},     {"parents", meta.parent_shas}};
}

Json to_json(const ChangeRegion& region) {
  return Json{{"side", side_name(region.side)},
              {"start_line", region.start_line},
              {"end_line", region.end_line},
              {"change_type", type_key(region.change_type)},
              {"labels", region.labels}};
}

Json to_json(const SpectrumLayer& layer) {
  return Json{{"change_type", type_key(layer.change_type)},
              {"offset", layer.offset},
              {"height", layer.height},
              {"region_index", layer.region_index}};
}

Json to_json(const Spectrum& spectrum) {
  return Json{{"pre_layers", layers_json(spectrum.pre_layers)},
              {"post_layers", layers_json(spectrum.post_layers)}};
}

Json to_json(const FileRecord& file) {
  Json regions = Json::array();
  for (const auto& region : file.regions) regions.push_back(to_json(region));
  Json out{{"status", status_name(file.status)},
           {"pre_line_count", file.pre_line_count},
           {"post_line_count", file.post_line_count},
           {"regions", std::move(regions)},
           {"spectrum", to_json(file.spectrum)},
           {"warnings", file.warnings}};
  if (file.path_pre) out["path_pre"] = *file.path_pre;
  if (file.path_post) out["path_post"] = *file.path_post;
  return out;
}

Json to_json(const CommitRecord& record) {
  Json out = to_json(record.meta);
  Json files = Json::array();
  for (const auto& file : record.files) files.push_back(to_json(file));
  out["files"] = std::move(files);
  return out;
}

CommitMeta commit_meta_from_json(const Json& json) {
  CommitMeta meta;
  meta.sha = string_member(json, "sha");
  meta.short_sha = string_member(json, "short_sha");
  meta.author = string_member(json, "author");
  meta.timestamp = integer_member(json, "timestamp");
  meta.message = string_member(json, "message");
  meta.parent_shas = string_list(json, "parents");
  return meta;
}

ChangeRegion region_from_json(const Json& json) {
  ChangeRegion region;
  auto side = parse_side(string_member(json, "side"));
  if (!side) shape_error("unknown side");
  region.side = *side;
  region.start_line = line_member(json, "start_line");
  region.end_line = line_member(json, "end_line");
  if (region.start_line < 1 || region.end_line < region.start_line) shape_error("region has an empty line range");
  region.change_type = change_type_member(json);
  region.labels = string_list(json, "labels");
  return region;
}

FileRecord file_from_json(const Json& json) {
  FileRecord file;
  file.path_pre = optional_string(json, "path_pre");
  file.path_post = optional_string(json, "path_post");
  if (!file.path_pre && !file.path_post) shape_error("file has neither path_pre nor path_post");
  auto status = parse_status(string_member(json, "status"));
  if (!status) shape_error("unknown file status");
  file.status = *status;
  file.pre_line_count = line_member(json, "pre_line_count");
  file.post_line_count = line_member(json, "post_line_count");
  for (const auto& item : array_member(json, "regions")) {
    auto region = region_from_json(item);
    const int n = region.side == Side::Pre ? file.pre_line_count : file.post_line_count;
    if (region.end_line > n) shape_error("region ends past the last line");
    file.regions.push_back(std::move(region));
  }
  const auto& spectrum = member(json, "spectrum");
  file.spectrum.pre_line_count = file.pre_line_count;
  file.spectrum.post_line_count = file.post_line_count;
  file.spectrum.pre_layers = layers_from_json(array_member(spectrum, "pre_layers"), file.regions, Side::Pre);
  file.spectrum.post_layers =
      layers_from_json(array_member(spectrum, "post_layers"), file.regions, Side::Post);
  file.warnings = string_list(json, "warnings");
  return file;
}

CommitRecord commit_record_from_json(const Json& json) {
  CommitRecord record;
  record.meta = commit_meta_from_json(json);
  for (const auto& item : array_member(json, "files")) record.files.push_back(file_from_json(item));
  return record;
}

std::string canonical_dump(const Json& json) {
  return json.dump(2, ' ', false, Json::error_handler_t::replace) + "\n";
}

}  // namespace changeprism
