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

#include "griddom/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace griddom {

using Json = nlohmann::ordered_json;

namespace {

Json pair_json(Vertex v) { return Json::array({v.x, v.y}); }

int require_int(const Json& obj, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw ParseError(std::string("missing field '") + key + "'");
  }
  if (!it->is_number_integer()) {
    throw ParseError(std::string("field '") + key + "' must be an integer");
  }
  const auto value = it->get<std::int64_t>();
  if (value < 1 || value > 1'000'000) {
    throw ParseError(std::string("field '") + key + "' out of range");
  }
  return static_cast<int>(value);
}

Vertex parse_pair(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    throw ParseError("vertex must be an [x, y] integer pair, got " + j.dump());
  }
  return {j[0].get<int>(), j[1].get<int>()};
}

}  // namespace

Json vertices_json(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(pair_json(v));
  return out;
}

std::string to_json(const SetDocument& doc) {
  Json j;
  j["m"] = doc.m;
  j["n"] = doc.n;
  j["k"] = doc.k;
  j["vertices"] = vertices_json(doc.vertices);
  j["meta"] = doc.meta.is_null() ? Json::object() : doc.meta;
  return j.dump();
}

SetDocument parse_set_document(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");

  SetDocument doc;
  doc.m = require_int(j, "m");
  doc.n = require_int(j, "n");
  doc.k = require_int(j, "k");
  auto vs = j.find("vertices");
  if (vs == j.end() || !vs->is_array()) {
    throw ParseError("field 'vertices' must be an array");
  }
  const GridSpec g = doc.grid();
  std::vector<Vertex> points;
  for (const Json& p : *vs) {
    const Vertex v = parse_pair(p);
    if (!g.contains(v)) {
      std::ostringstream msg;
      msg << "vertex " << v << " outside the " << doc.m << "x" << doc.n
          << " grid";
      throw ParseError(msg.str());
    }
    points.push_back(v);
  }
  doc.vertices = VertexSet(std::move(points));
  if (auto meta = j.find("meta"); meta != j.end()) {
    if (!meta->is_object()) throw ParseError("field 'meta' must be an object");
    doc.meta = *meta;
  }
  return doc;
}

VertexSet meta_orphans(const SetDocument& doc) {
  std::vector<Vertex> out;
  if (!doc.meta.is_object()) return {};
  auto it = doc.meta.find("orphans");
  if (it == doc.meta.end()) return {};
  if (!it->is_array()) throw ParseError("meta.orphans must be an array");
  for (const Json& p : *it) out.push_back(parse_pair(p));
  return VertexSet(std::move(out));
}

Json event_to_json(const SimEvent& e) {
  Json j;
  j["epoch"] = e.epoch;
  j["kind"] = std::string(to_string(e.kind));
  j["agent"] = e.agent;
  if (e.pos) j["pos"] = pair_json(*e.pos);
  if (e.path_len) j["path_len"] = *e.path_len;
  Json detail = Json::object();
  if (e.host) detail["host"] = *e.host;
  if (e.from) detail["from"] = pair_json(*e.from);
  if (e.kind == EventKind::kVslotsUpdated) {
    detail["vslots"] = vertices_json(VertexSet(e.slots));
  }
  if (!e.reason.empty()) detail["reason"] = e.reason;
  if (!detail.empty()) j["detail"] = std::move(detail);
  return j;
}

std::string trace_to_jsonl(std::span<const SimEvent> events) {
  std::string out;
  for (const SimEvent& e : events) {
    out += event_to_json(e).dump();
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out << text;
  if (!out) throw std::runtime_error("write to '" + path.string() + "' failed");
}

}  // namespace griddom
