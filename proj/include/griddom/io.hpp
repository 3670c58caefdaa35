// Copyright 2026 The griddom Authors.
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

// JSON documents for vertex sets and JSON-lines simulator traces.
//
//   {"m":10,"n":15,"k":1,"vertices":[[1,2],[1,7]],"meta":{...}}

#ifndef GRIDDOM_IO_HPP_
#define GRIDDOM_IO_HPP_

#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "griddom/grid.hpp"
#include "griddom/sim.hpp"

namespace griddom {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SetDocument {
  int m = 1;
  int n = 1;
  int k = 1;
  VertexSet vertices;
  nlohmann::ordered_json meta = nlohmann::ordered_json::object();

  GridSpec grid() const { return GridSpec(m, n); }

  friend bool operator==(const SetDocument&, const SetDocument&) = default;
};

// Compact, single line, keys in schema order.
std::string to_json(const SetDocument& doc);

// Throws ParseError for malformed JSON, missing or mistyped fields,
// non-positive dimensions or k, and out-of-grid vertices. Duplicate vertices
// are merged.
SetDocument parse_set_document(std::string_view text);

// Orphan-marked members recorded in meta.orphans, if any.
VertexSet meta_orphans(const SetDocument& doc);
nlohmann::ordered_json vertices_json(const VertexSet& s);

nlohmann::ordered_json event_to_json(const SimEvent& e);
// One event per line, each line terminated by '\n'.
std::string trace_to_jsonl(std::span<const SimEvent> events);

// Throws std::runtime_error when the file cannot be opened.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace griddom

#endif  // GRIDDOM_IO_HPP_
