// Copyright 2026 The qdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Matrix file format: a JSON object
//
//   {
//     "dim": 2,
//     "rows": [
//       [[re, im], [re, im]],
//       [[re, im], [re, im]]
//     ]
//   }
//
// Numbers are written with 17 significant digits (%.17g), which round-trips
// every finite double.

#ifndef QDIST_MATRIX_IO_HPP
#define QDIST_MATRIX_IO_HPP

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qdist/errors.hpp"
#include "qdist/spectral.hpp"

namespace qdist {

namespace detail {

inline std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace detail

/// Parses the text of a matrix file. `source` names the input in messages.
inline HermitianMatrix parse_matrix(std::string_view text, const std::string& source = "<string>") {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, source + ": " + detail::line_col(text, e.byte) + ": malformed JSON");
  }
  auto fail = [&](const std::string& where, const std::string& what) {
    throw Error(Errc::ParseError, source + ": " + where + ": " + what);
  };
  if (!doc.is_object()) fail("top level", "expected an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer()) fail("dim", "expected an integer");
  if (!doc.contains("rows") || !doc["rows"].is_array()) fail("rows", "expected an array");

  const auto dim = doc["dim"].get<long long>();
  if (dim < 1) fail("dim", "must be >= 1");
  const json& rows = doc["rows"];
  if (static_cast<long long>(rows.size()) != dim) {
    throw Error(Errc::NonSquare, source + ": dim is " + std::to_string(dim) + " but there are " +
                                     std::to_string(rows.size()) + " rows");
  }

  ComplexMatrix m(dim, dim);
  for (long long i = 0; i < dim; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    const std::string row_at = "rows[" + std::to_string(i) + "]";
    if (!row.is_array()) fail(row_at, "expected an array");
    if (static_cast<long long>(row.size()) != dim) {
      throw Error(Errc::NonSquare, source + ": " + row_at + " has " + std::to_string(row.size()) +
                                       " entries, expected " + std::to_string(dim));
    }
    for (long long j = 0; j < dim; ++j) {
      const json& entry = row[static_cast<std::size_t>(j)];
      const std::string at = row_at + "[" + std::to_string(j) + "]";
      if (!entry.is_array() || entry.size() != 2) fail(at, "expected a [re, im] pair");
      if (!entry[0].is_number() || !entry[1].is_number()) fail(at, "components must be numbers");
      m(i, j) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
  }
  try {
    return HermitianMatrix(std::move(m));
  } catch (const Error& e) {
    throw Error(e.code(), source + ": " + e.message());
  }
}

inline std::string format_matrix(const HermitianMatrix& h) {
  if (!h.matrix().allFinite()) throw Error(Errc::IoError, "cannot serialize non-finite entries");
  std::string out = "{\n  \"dim\": " + std::to_string(h.dim()) + ",\n  \"rows\": [\n";
  for (Index i = 0; i < h.dim(); ++i) {
    out += "    [";
    for (Index j = 0; j < h.dim(); ++j) {
      if (j) out += ", ";
      out += "[" + detail::format_double(h(i, j).real()) + ", " + detail::format_double(h(i, j).imag()) + "]";
    }
    out += i + 1 < h.dim() ? "],\n" : "]\n";
  }
  out += "  ]\n}\n";
  return out;
}

inline HermitianMatrix read_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::IoError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str(), path);
}

inline void write_matrix(const std::string& path, const HermitianMatrix& h) {
  const std::string text = format_matrix(h);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::IoError, "cannot open " + path + " for writing");
  out << text;
  if (!out) throw Error(Errc::IoError, "write to " + path + " failed");
}

}  // namespace qdist

#endif  // QDIST_MATRIX_IO_HPP
