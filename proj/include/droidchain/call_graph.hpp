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

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include "droidchain/error.hpp"
#include "droidchain/method_sig.hpp"
#include "droidchain/util.hpp"

namespace droidchain {

enum class Origin { Static, Dynamic, Hybrid };

inline std::string_view origin_name(Origin o) {
  switch (o) {
    case Origin::Static: return "static";
    case Origin::Dynamic: return "dynamic";
    case Origin::Hybrid: return "hybrid";
  }
  return "?";
}

/// Weighted directed call multigraph. Counts are invocation multipliers and
/// always >= 1; self-loops are allowed.
struct CallGraph {
  std::string app_id;
  Origin origin = Origin::Static;
  std::map<std::pair<MethodSig, MethodSig>, std::uint64_t> edges;

  std::uint64_t total_count() const {
    std::uint64_t sum = 0;
    for (const auto& [edge, count] : edges) sum += count;
    return sum;
  }

  std::set<MethodSig> nodes() const {
    std::set<MethodSig> out;
    for (const auto& [edge, count] : edges) {
      out.insert(edge.first);
      out.insert(edge.second);
    }
    return out;
  }
};

/// Parses a static call-graph edge list. One edge per line,
/// `<caller>\t<callee>\t<count>`; blank lines and lines starting with '#' are
/// ignored; duplicate edges have their counts summed.
inline CallGraph parse_edge_list(std::string_view text, std::string app_id,
                                 Origin origin) {
  CallGraph g;
  g.app_id = std::move(app_id);
  g.origin = origin;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 3) {
      throw Error(Errc::MalformedLine, "expected caller\\tcallee\\tcount",
                  line_no);
    }
    MethodSig caller, callee;
    try {
      caller = MethodSig::parse(fields[0]);
      callee = MethodSig::parse(fields[1]);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), line_no);
    }
    auto count = parse_int<std::int64_t>(fields[2]);
    if (!count) throw Error(Errc::MalformedLine, "bad count field", line_no);
    if (*count <= 0) {
      throw Error(Errc::NonPositiveCount,
                  "count must be positive, got " + std::string(fields[2]),
                  line_no);
    }
    g.edges[{std::move(caller), std::move(callee)}] +=
        static_cast<std::uint64_t>(*count);
  }
  return g;
}

/// Inverse of parse_edge_list; edges come out sorted by (caller, callee) so
/// serialization is deterministic.
inline std::string serialize_edge_list(const CallGraph& g) {
  std::string out;
  for (const auto& [edge, count] : g.edges) {
    out += edge.first.raw;
    out += '\t';
    out += edge.second.raw;
    out += '\t';
    out += std::to_string(count);
    out += '\n';
  }
  return out;
}

}  // namespace droidchain
