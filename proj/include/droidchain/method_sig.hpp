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

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "droidchain/error.hpp"
#include "droidchain/util.hpp"

namespace droidchain {

/// Fully qualified method identifier, `pkg.segments.Class.method`. The method
/// part may carry a parameter list (`m(int)`); the split between class and
/// method happens at the last dot before the first '(' so dots inside the
/// parameter list never leak into the class name.
struct MethodSig {
  std::string raw;
  std::string class_fqn;  // raw minus the final method segment
  std::string method;

  static MethodSig parse(std::string_view text) {
    if (text.empty()) throw Error(Errc::EmptySignature, "empty signature");
    std::size_t paren = text.find('(');
    std::string_view head =
        paren == std::string_view::npos ? text : text.substr(0, paren);
    std::size_t dot = head.rfind('.');
    if (dot == std::string_view::npos || dot == 0 || dot + 1 == text.size()) {
      throw Error(Errc::MalformedLine,
                  "signature needs a class and a method: '" +
                      std::string(text) + "'");
    }
    MethodSig sig;
    sig.raw = std::string(text);
    sig.class_fqn = std::string(text.substr(0, dot));
    sig.method = std::string(text.substr(dot + 1));
    return sig;
  }

  std::vector<std::string_view> class_segments() const {
    return split(class_fqn, '.');
  }

  friend bool operator==(const MethodSig& a, const MethodSig& b) {
    return a.raw == b.raw;
  }
  friend std::strong_ordering operator<=>(const MethodSig& a,
                                          const MethodSig& b) {
    return a.raw <=> b.raw;
  }
};

}  // namespace droidchain
