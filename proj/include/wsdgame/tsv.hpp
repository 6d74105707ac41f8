// Copyright 2026 The wsdgame Authors.
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

#ifndef WSDGAME_TSV_HPP_
#define WSDGAME_TSV_HPP_

#include <charconv>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "wsdgame/error.hpp"

namespace wsdgame {
namespace tsv {

inline std::vector<std::string> split(std::string_view line, char sep = '\t') {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return fields;
}

inline std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\n";
  const std::size_t b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const std::size_t e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

// Shortest decimal form that reads back to the same double.
inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

// Cursor over a line-oriented text file. Every error it raises names the
// file and the current line.
class Reader {
 public:
  explicit Reader(std::string path) : path_(std::move(path)), in_(path_) {
    if (!in_) throw IoError("cannot open " + path_);
  }

  // Advances to the next line that is neither blank nor a "#" comment.
  // Comment lines are offered to `on_comment` first when set.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (trim(line).empty()) continue;
      if (line.front() == '#') {
        if (on_comment) on_comment(line);
        continue;
      }
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(path_, line_no_, what);
  }

  std::vector<std::string> fields(const std::string& line, std::size_t expected) const {
    auto f = split(line);
    if (f.size() != expected) {
      fail("expected " + std::to_string(expected) + " tab-separated fields, got " +
           std::to_string(f.size()));
    }
    return f;
  }

  template <class Int>
  Int to_int(std::string_view s, const char* what) const {
    s = trim(s);
    Int v{};
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      fail(std::string("bad ") + what + " '" + std::string(s) + "'");
    }
    return v;
  }

  double to_real(std::string_view s, const char* what) const {
    const std::string str(trim(s));
    std::istringstream is(str);
    is.imbue(std::locale::classic());
    double v = 0.0;
    if (str.empty() || !(is >> v) || !is.eof()) {
      fail(std::string("bad ") + what + " '" + str + "'");
    }
    return v;
  }

  const std::string& path() const { return path_; }
  std::size_t line_no() const { return line_no_; }

  std::function<void(const std::string&)> on_comment;

 private:
  std::string path_;
  std::ifstream in_;
  std::size_t line_no_ = 0;
};

}  // namespace tsv
}  // namespace wsdgame

#endif  // WSDGAME_TSV_HPP_
