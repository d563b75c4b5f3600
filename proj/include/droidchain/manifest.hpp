/*
 * Copyright (C) 2026 The droidchain Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "droidchain/error.hpp"
#include "droidchain/util.hpp"

namespace droidchain {

enum class SampleLabel { Benign, Malware };

inline std::string_view sample_label_name(SampleLabel l) {
  return l == SampleLabel::Benign ? "benign" : "malware";
}

inline SampleLabel parse_sample_label(std::string_view s, std::size_t line = 0) {
  if (s == "benign") return SampleLabel::Benign;
  if (s == "malware") return SampleLabel::Malware;
  throw Error(Errc::UnknownLabel, "'" + std::string(s) + "'", line);
}

struct ManifestRecord {
  std::string app_id;
  SampleLabel label = SampleLabel::Benign;
  std::string declared_package;
  std::optional<std::filesystem::path> static_graph_path;
  std::optional<std::filesystem::path> static_method_set_path;
  std::vector<std::filesystem::path> trace_paths;
};

struct DatasetManifest {
  std::filesystem::path dir;  // all relative paths were resolved against this
  std::vector<ManifestRecord> records;
};

inline constexpr std::string_view kManifestHeader =
    "app_id,label,declared_package,static_graph,static_methods,traces";

/// Loads a dataset manifest CSV. Fields must not contain commas; the traces
/// field is a ';'-separated list of paths; empty path fields mean "absent".
/// Relative paths are resolved against the manifest's directory.
inline DatasetManifest load_manifest(const std::filesystem::path& path) {
  std::string text = read_file(path);
  DatasetManifest manifest;
  manifest.dir = path.has_parent_path() ? path.parent_path()
                                        : std::filesystem::path(".");
  std::set<std::string> seen_ids;
  std::size_t line_no = 0;
  bool header_seen = false;
  auto resolve = [&](std::string_view field) {
    std::filesystem::path p{std::string(field)};
    return p.is_absolute() ? p : manifest.dir / p;
  };
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != kManifestHeader) {
        throw Error(Errc::MalformedLine,
                    "manifest header must be '" + std::string(kManifestHeader) +
                        "'",
                    line_no);
      }
      header_seen = true;
      continue;
    }
    auto fields = split(line, ',');
    if (fields.size() != 6) {
      throw Error(Errc::MalformedLine, "expected 6 comma-separated fields",
                  line_no);
    }
    ManifestRecord rec;
    rec.app_id = std::string(fields[0]);
    if (rec.app_id.empty()) {
      throw Error(Errc::MalformedLine, "empty app_id", line_no);
    }
    if (!seen_ids.insert(rec.app_id).second) {
      throw Error(Errc::DuplicateAppId, rec.app_id, line_no);
    }
    rec.label = parse_sample_label(fields[1], line_no);
    rec.declared_package = std::string(fields[2]);
    if (!fields[3].empty()) rec.static_graph_path = resolve(fields[3]);
    if (!fields[4].empty()) rec.static_method_set_path = resolve(fields[4]);
    for (std::string_view t : split(fields[5], ';')) {
      if (!t.empty()) rec.trace_paths.push_back(resolve(t));
    }
    if (!rec.static_graph_path && rec.trace_paths.empty()) {
      throw Error(Errc::MissingArtifacts,
                  rec.app_id + " has neither a static graph nor traces",
                  line_no);
    }
    manifest.records.push_back(std::move(rec));
  }
  if (!header_seen) {
    throw Error(Errc::MalformedLine, "manifest is missing its header row");
  }
  return manifest;
}

}  // namespace droidchain
