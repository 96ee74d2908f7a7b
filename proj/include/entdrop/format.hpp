// Copyright 2026 The entdrop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <charconv>
#include <string>
#include <system_error>

namespace entdrop {

/// Shortest decimal form that parses back to exactly the same double.
/// Keeps emitted CSV and config files byte-stable, diffable, and lossless.
inline std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// Exact inverse of format_double; returns false on trailing garbage.
inline bool parse_double(const std::string &text, double &out) {
    const char *first = text.data();
    const char *last = text.data() + text.size();
    const auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last;
}

} // namespace entdrop
