// Copyright 2026 The Authors.
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

#ifndef DPPC_CSV_HPP_
#define DPPC_CSV_HPP_

#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace dppc {

// Minimal RFC-4180 writer: fields holding commas, quotes, or newlines are
// quoted, embedded quotes doubled, rows end in CRLF.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}

  void write_row(const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i > 0) out_ << ',';
      out_ << escape(fields[i]);
    }
    out_ << "\r\n";
  }

  void write_row(std::initializer_list<std::string> fields) {
    write_row(std::vector<std::string>(fields));
  }

  static std::string escape(const std::string& field) {
    bool needs_quotes = false;
    for (char c : field)
      if (c == ',' || c == '"' || c == '\n' || c == '\r') needs_quotes = true;
    if (!needs_quotes) return field;
    std::string quoted = "\"";
    for (char c : field) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    quoted += '"';
    return quoted;
  }

 private:
  std::ostream& out_;
};

// Compact numeric formatting for CSV cells: full round-trip precision
// without trailing zero spray.
inline std::string csv_num(double v) {
  std::ostringstream s;
  s.precision(17);
  s << v;
  return s.str();
}

}  // namespace dppc

#endif  // DPPC_CSV_HPP_
