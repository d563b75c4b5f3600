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

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "droidchain/call_graph.hpp"
#include "droidchain/default_packages.hpp"
#include "droidchain/error.hpp"
#include "droidchain/method_sig.hpp"
#include "droidchain/util.hpp"

namespace droidchain {

enum class AbstractionMode { Family, Package };

inline std::string_view mode_name(AbstractionMode m) {
  return m == AbstractionMode::Family ? "family" : "package";
}

inline AbstractionMode parse_mode(std::string_view s) {
  if (s == "family") return AbstractionMode::Family;
  if (s == "package") return AbstractionMode::Package;
  throw Error(Errc::InvalidSpec, "unknown abstraction mode '" + std::string(s) + "'");
}

enum class LabelKind { Family, Package, Obfuscated, SelfDefined };

inline constexpr std::string_view kObfuscatedName = "obfuscated";
inline constexpr std::string_view kSelfDefinedName = "self-defined";

/// API families, in the fixed order used by the family-mode state space.
inline constexpr std::array<std::string_view, 9> kFamilyNames = {
    "google", "java", "javax", "android", "xml",
    "apache", "junit", "json",  "dom"};

// Family prefixes matched against whitelist entries on dot boundaries.
inline constexpr std::array<std::pair<std::string_view, std::string_view>, 9>
    kFamilyPrefixes = {{{"com.google", "google"},
                        {"java", "java"},
                        {"javax", "javax"},
                        {"android", "android"},
                        {"org.xml", "xml"},
                        {"org.apache", "apache"},
                        {"junit", "junit"},
                        {"org.json", "json"},
                        {"org.w3c.dom", "dom"}}};

/// Abstracted API-call state: a family name, a package name, or one of the
/// two catch-alls.
struct Label {
  std::string name;
  LabelKind kind = LabelKind::SelfDefined;

  static Label family(std::string_view name) {
    return Label{std::string(name), LabelKind::Family};
  }
  static Label package(std::string_view name) {
    return Label{std::string(name), LabelKind::Package};
  }
  static Label obfuscated() {
    return Label{std::string(kObfuscatedName), LabelKind::Obfuscated};
  }
  static Label self_defined() {
    return Label{std::string(kSelfDefinedName), LabelKind::SelfDefined};
  }

  friend bool operator==(const Label& a, const Label& b) {
    return a.kind == b.kind && a.name == b.name;
  }
  friend std::strong_ordering operator<=>(const Label& a, const Label& b) {
    if (auto c = a.name <=> b.name; c != 0) return c;
    return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
  }
};

/// Ordered package-prefix whitelist (Android + Google APIs). Entries are kept
/// sorted by descending segment count so the first match is the longest one;
/// lookup itself walks dot-boundary prefixes of the query against a hash set.
class PackageList {
 public:
  static PackageList from_lines(std::string_view text) {
    PackageList list;
    for (std::string_view line : split(text, '\n')) {
      line = trim(line);
      if (line.empty() || line.front() == '#') continue;
      list.add(line);
    }
    list.finalize();
    return list;
  }

  static PackageList load(const std::filesystem::path& path) {
    return from_lines(read_file(path));
  }

  /// The list bundled with the library (see default_packages.hpp).
  static const PackageList& bundled() {
    static const PackageList list = from_lines(kDefaultPackageList);
    return list;
  }

  /// Entries sorted by descending segment count, then lexicographically.
  const std::vector<std::string>& entries() const { return entries_; }

  /// Entries in ascending lexicographic order (the package-mode state order).
  std::vector<std::string> lexicographic() const {
    std::vector<std::string> out = entries_;
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Longest entry that is a dot-boundary prefix of (or equal to) `fqn`.
  std::optional<std::string_view> match(std::string_view fqn) const {
    std::string_view prefix = fqn;
    while (!prefix.empty()) {
      auto it = index_.find(std::string(prefix));
      if (it != index_.end()) return std::string_view(*it);
      std::size_t dot = prefix.rfind('.');
      if (dot == std::string_view::npos) break;
      prefix = prefix.substr(0, dot);
    }
    return std::nullopt;
  }

  std::size_t size() const { return entries_.size(); }

 private:
  void add(std::string_view entry) {
    auto [it, inserted] = index_.insert(std::string(entry));
    if (inserted) entries_.emplace_back(entry);
  }

  void finalize() {
    auto segment_count = [](const std::string& s) {
      return std::count(s.begin(), s.end(), '.');
    };
    std::sort(entries_.begin(), entries_.end(),
              [&](const std::string& a, const std::string& b) {
                auto sa = segment_count(a), sb = segment_count(b);
                if (sa != sb) return sa > sb;
                return a < b;
              });
  }

  std::vector<std::string> entries_;
  std::unordered_set<std::string> index_;
};

/// Obfuscation heuristic for classes outside the API whitelist: machine-
/// mangled names have short identifiers, so a class is judged obfuscated iff
/// the median dot-separated segment length of its class name is <= 2.
inline bool is_obfuscated(std::string_view class_fqn) {
  std::vector<std::size_t> lengths;
  for (std::string_view seg : split(class_fqn, '.')) {
    lengths.push_back(seg.size());
  }
  if (lengths.empty()) return true;
  std::sort(lengths.begin(), lengths.end());
  std::size_t n = lengths.size();
  double median = (n % 2 == 1)
                      ? static_cast<double>(lengths[n / 2])
                      : (static_cast<double>(lengths[n / 2 - 1]) +
                         static_cast<double>(lengths[n / 2])) /
                            2.0;
  return median <= 2.0;
}

/// Maps a whitelist entry to its API family, or nullopt for whitelist entries
/// outside every family prefix (e.g. dalvik.*), which family mode lumps into
/// self-defined.
inline std::optional<std::string_view> family_of_entry(
    std::string_view entry) {
  for (const auto& [prefix, family] : kFamilyPrefixes) {
    if (has_segment_prefix(entry, prefix)) return family;
  }
  return std::nullopt;
}

/// Abstracts one API call to its state. The call is reduced to its class
/// first and the class is matched against the whitelist, so a developer
/// package that merely shadows an API prefix cannot claim a deeper API
/// package than the whitelist grants it.
inline Label abstract_call(const MethodSig& sig, AbstractionMode mode,
                           const PackageList& pkgs) {
  if (auto entry = pkgs.match(sig.class_fqn)) {
    if (mode == AbstractionMode::Package) return Label::package(*entry);
    if (auto family = family_of_entry(*entry)) return Label::family(*family);
    return Label::self_defined();
  }
  return is_obfuscated(sig.class_fqn) ? Label::obfuscated()
                                      : Label::self_defined();
}

struct AbstractedGraph {
  std::string app_id;
  Origin origin = Origin::Static;
  AbstractionMode mode = AbstractionMode::Family;
  std::set<Label> states;
  std::map<std::pair<Label, Label>, std::uint64_t> edges;

  std::uint64_t total_count() const {
    std::uint64_t sum = 0;
    for (const auto& [edge, count] : edges) sum += count;
    return sum;
  }
};

/// Relabels every node of `g` through abstract_call; edges whose endpoints
/// collapse to the same label pair have their counts summed, so the total
/// count is preserved exactly.
inline AbstractedGraph abstract_graph(const CallGraph& g, AbstractionMode mode,
                                      const PackageList& pkgs) {
  AbstractedGraph out;
  out.app_id = g.app_id;
  out.origin = g.origin;
  out.mode = mode;
  std::map<std::string, Label> cache;
  auto abstract_cached = [&](const MethodSig& sig) -> const Label& {
    auto it = cache.find(sig.class_fqn);
    if (it == cache.end()) {
      it = cache.emplace(sig.class_fqn, abstract_call(sig, mode, pkgs)).first;
    }
    return it->second;
  };
  for (const auto& [edge, count] : g.edges) {
    const Label& from = abstract_cached(edge.first);
    const Label& to = abstract_cached(edge.second);
    out.states.insert(from);
    out.states.insert(to);
    out.edges[{from, to}] += count;
  }
  return out;
}

/// The fixed, ordered state space for a mode. Every feature vector in a run
/// is laid out against this order. Family mode: the 9 families followed by
/// obfuscated and self-defined. Package mode: whitelist entries in ascending
/// lexicographic order, then obfuscated and self-defined.
inline std::vector<Label> state_space(AbstractionMode mode,
                                      const PackageList& pkgs) {
  std::vector<Label> space;
  if (mode == AbstractionMode::Family) {
    space.reserve(kFamilyNames.size() + 2);
    for (std::string_view f : kFamilyNames) space.push_back(Label::family(f));
  } else {
    space.reserve(pkgs.size() + 2);
    for (const std::string& e : pkgs.lexicographic()) {
      space.push_back(Label::package(e));
    }
  }
  space.push_back(Label::obfuscated());
  space.push_back(Label::self_defined());
  return space;
}

}  // namespace droidchain
