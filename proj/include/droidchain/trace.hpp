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
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "droidchain/call_graph.hpp"
#include "droidchain/error.hpp"
#include "droidchain/method_sig.hpp"
#include "droidchain/util.hpp"

namespace droidchain {

enum class TraceAction { Enter, Exit };

struct TraceEvent {
  std::int64_t thread_id = 0;
  TraceAction action = TraceAction::Enter;
  MethodSig method;
  std::uint64_t seq_no = 0;  // strictly increasing within a parsed file
};

/// Parses one dynamic method-trace log. Format, one event per line:
/// `<thread_id>\t<enter|exit>\t<signature>`. Blank lines and lines starting
/// with '#' are ignored; a trailing '\r' is tolerated.
inline std::vector<TraceEvent> parse_trace_log(std::string_view text) {
  std::vector<TraceEvent> events;
  std::size_t line_no = 0;
  std::uint64_t seq = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    auto fields = split(line, '\t');
    if (fields.size() != 3) {
      throw Error(Errc::MalformedLine, "expected thread\\taction\\tsignature",
                  line_no);
    }
    auto tid = parse_int<std::int64_t>(fields[0]);
    if (!tid) throw Error(Errc::MalformedLine, "bad thread id", line_no);
    TraceAction action;
    if (fields[1] == "enter") {
      action = TraceAction::Enter;
    } else if (fields[1] == "exit") {
      action = TraceAction::Exit;
    } else {
      throw Error(Errc::MalformedLine,
                  "unknown action '" + std::string(fields[1]) + "'", line_no);
    }
    if (fields[2].empty()) throw Error(Errc::EmptySignature, "", line_no);
    MethodSig sig;
    try {
      sig = MethodSig::parse(fields[2]);
    } catch (const Error& e) {
      throw Error(e.code(), e.what(), line_no);
    }
    events.push_back(TraceEvent{*tid, action, std::move(sig), seq++});
  }
  return events;
}

struct TraceGraphBuild {
  CallGraph graph;
  // Exit events that matched no open frame on their thread. Truncated buffer
  // dumps start mid-call, so these are tolerated and tallied, not fatal.
  std::uint64_t orphan_exits = 0;
};

/// Replays enter/exit events against per-thread call stacks and records one
/// caller->callee edge per Enter that finds a frame on top of its thread's
/// stack. An Exit pops the nearest frame for its method, discarding frames
/// above it; frames still open at end of input are discarded the same way.
/// Edges recorded under discarded frames persist.
inline TraceGraphBuild build_call_graph(std::span<const TraceEvent> events,
                                        std::string app_id) {
  TraceGraphBuild result;
  result.graph.app_id = std::move(app_id);
  result.graph.origin = Origin::Dynamic;
  std::map<std::int64_t, std::vector<const MethodSig*>> stacks;
  for (const TraceEvent& ev : events) {
    auto& stack = stacks[ev.thread_id];
    if (ev.action == TraceAction::Enter) {
      if (!stack.empty()) {
        result.graph.edges[{*stack.back(), ev.method}] += 1;
      }
      stack.push_back(&ev.method);
    } else {
      std::size_t i = stack.size();
      while (i > 0 && !(*stack[i - 1] == ev.method)) --i;
      if (i == 0) {
        ++result.orphan_exits;
      } else {
        stack.resize(i - 1);
      }
    }
  }
  return result;
}

}  // namespace droidchain
