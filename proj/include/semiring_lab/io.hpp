//  Copyright 2026 The semiring-lab Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

// JSON documents for structures and morphisms.
//
//   {"kind": "semiring",   "order": n, "add": [[..]], "mul": [[..]], "one": i}
//   {"kind": "semimodule", "order": n, "add": [[..]], "act": [[..]],
//    "semiring": {...} | "builtin:NAME"}
//   {"kind": "lattice",    "order": n, "add": [[..]] (join), "mul": [[..]] (meet)}
//
// A document may also be the bare string "builtin:NAME".

#ifndef SEMIRING_LAB_IO_HPP_
#define SEMIRING_LAB_IO_HPP_

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "semiring_lab/constructors.hpp"
#include "semiring_lab/core.hpp"
#include "semiring_lab/validate.hpp"

namespace semiring_lab {

using Json = nlohmann::json;

namespace detail {

inline Json table_to_json(std::vector<Index> const& t, std::size_t rows,
                          std::size_t cols) {
  Json out = Json::array();
  for (std::size_t r = 0; r < rows; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < cols; ++c) {
      row.push_back(t[r * cols + c]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

inline std::vector<Index> table_from_json(Json const& j, std::size_t rows,
                                          std::size_t cols, char const* what) {
  if (!j.is_array() || j.size() != rows) {
    throw ShapeError(std::string(what) + ": expected " + std::to_string(rows) +
                     " rows");
  }
  std::vector<Index> out;
  out.reserve(rows * cols);
  for (auto const& row : j) {
    if (!row.is_array() || row.size() != cols) {
      throw ShapeError(std::string(what) + ": expected rows of length " +
                       std::to_string(cols));
    }
    for (auto const& v : row) {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        throw ShapeError(std::string(what) + ": entries must be indices");
      }
      out.push_back(v.get<Index>());
    }
  }
  return out;
}

inline std::size_t order_of(Json const& j) {
  if (!j.contains("order") || !j["order"].is_number_integer() ||
      j["order"].get<long long>() < 1) {
    throw ShapeError("missing or invalid \"order\"");
  }
  return j["order"].get<std::size_t>();
}

inline std::string builtin_suffix(std::string const& s) {
  static constexpr char kPrefix[] = "builtin:";
  if (s.rfind(kPrefix, 0) != 0) {
    throw FormatError("expected builtin:NAME, got \"" + s + "\"");
  }
  return s.substr(sizeof(kPrefix) - 1);
}

}  // namespace detail

inline Json to_json(Semiring const& s) {
  return {{"kind", "semiring"},
          {"name", s.name},
          {"order", s.order},
          {"add", detail::table_to_json(s.add, s.order, s.order)},
          {"mul", detail::table_to_json(s.mul, s.order, s.order)},
          {"one", s.one}};
}

inline Json to_json(Semimodule const& m, bool inline_semiring = true) {
  Json j = {{"kind", "semimodule"},
            {"name", m.name},
            {"order", m.order},
            {"add", detail::table_to_json(m.add, m.order, m.order)},
            {"act", detail::table_to_json(m.act, m.scalars(), m.order)}};
  if (inline_semiring) {
    j["semiring"] = to_json(*m.semiring);
  }
  return j;
}

inline Json to_json(Lattice const& l) {
  return {{"kind", "lattice"},
          {"name", l.name},
          {"order", l.order},
          {"add", detail::table_to_json(l.join, l.order, l.order)},
          {"mul", detail::table_to_json(l.meet, l.order, l.order)}};
}

inline Json to_json(Structure const& s) {
  return std::visit([](auto const& x) { return to_json(x); }, s);
}

inline Semiring semiring_from_json(Json const& j) {
  if (j.is_string()) {
    return builtin_semiring(detail::builtin_suffix(j.get<std::string>()));
  }
  if (!j.is_object()) {
    throw FormatError("semiring must be an object or builtin:NAME");
  }
  if (j.value("kind", "semiring") == "lattice") {
    throw FormatError("a lattice document was given where a semiring is needed");
  }
  Semiring s;
  s.order = detail::order_of(j);
  s.add = detail::table_from_json(j.at("add"), s.order, s.order, "add");
  s.mul = detail::table_from_json(j.at("mul"), s.order, s.order, "mul");
  if (!j.contains("one") || !j["one"].is_number_integer()) {
    throw ShapeError("missing or invalid \"one\"");
  }
  s.one = j["one"].get<Index>();
  s.name = j.value("name", std::string("S"));
  check_shape(s);
  return s;
}

/// `base` is used when the document carries no semiring of its own.
inline Semimodule semimodule_from_json(Json const& j,
                                       SemiringPtr base = nullptr) {
  if (j.is_string()) {
    return builtin_module(detail::builtin_suffix(j.get<std::string>()));
  }
  if (!j.is_object()) {
    throw FormatError("semimodule must be an object or builtin:NAME");
  }
  Semimodule m;
  if (j.contains("semiring")) {
    m.semiring = share(semiring_from_json(j["semiring"]));
  } else if (base) {
    m.semiring = std::move(base);
  } else {
    throw FormatError("semimodule document has no \"semiring\"");
  }
  m.order = detail::order_of(j);
  m.add = detail::table_from_json(j.at("add"), m.order, m.order, "add");
  m.act = detail::table_from_json(j.at("act"), m.semiring->order, m.order, "act");
  m.name = j.value("name", std::string("M"));
  check_shape(m);
  return m;
}

inline Lattice lattice_from_json(Json const& j) {
  Lattice l;
  l.order = detail::order_of(j);
  Json const& join = j.contains("join") ? j["join"] : j.at("add");
  Json const& meet = j.contains("meet") ? j["meet"] : j.at("mul");
  l.join = detail::table_from_json(join, l.order, l.order, "join");
  l.meet = detail::table_from_json(meet, l.order, l.order, "meet");
  // bottom and top are read off the join table
  l.bot = l.top = 0;
  for (Index a = 0; a < l.order; ++a) {
    l.top = l.vee(l.top, a);
  }
  for (Index a = 0; a < l.order; ++a) {
    bool bottom = true;
    for (Index b = 0; b < l.order && bottom; ++b) {
      bottom = l.vee(a, b) == b;
    }
    if (bottom) {
      l.bot = a;
      break;
    }
  }
  l.name = j.value("name", std::string("L"));
  check_shape(l);
  return l;
}

inline Structure structure_from_json(Json const& j) {
  try {
    if (j.is_string()) {
      return builtin(detail::builtin_suffix(j.get<std::string>()));
    }
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
      throw FormatError("structure document needs a \"kind\"");
    }
    std::string kind = j["kind"];
    if (kind == "semiring") {
      return semiring_from_json(j);
    }
    if (kind == "semimodule") {
      return semimodule_from_json(j);
    }
    if (kind == "lattice") {
      return lattice_from_json(j);
    }
    throw FormatError("unknown kind \"" + kind + "\"");
  } catch (Json::exception const& e) {
    throw FormatError(std::string("malformed structure document: ") + e.what());
  }
}

inline Json read_json_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw FormatError("cannot open " + path);
  }
  try {
    return Json::parse(in);
  } catch (Json::exception const& e) {
    throw FormatError("malformed JSON in " + path + ": " + e.what());
  }
}

/// A file path or a builtin:NAME reference.
inline Structure load_structure(std::string const& ref) {
  if (ref.rfind("builtin:", 0) == 0) {
    return builtin(detail::builtin_suffix(ref));
  }
  return structure_from_json(read_json_file(ref));
}

inline Semiring load_semiring(std::string const& ref) {
  Structure s = load_structure(ref);
  if (auto* r = std::get_if<Semiring>(&s)) {
    return *r;
  }
  if (auto* l = std::get_if<Lattice>(&s)) {
    return lattice_semiring(*l);
  }
  throw FormatError(ref + " is a semimodule, not a semiring");
}

/// Semirings load as their regular module and lattices as B-semimodules.
inline Semimodule load_semimodule(std::string const& ref) {
  if (ref.rfind("builtin:", 0) == 0) {
    return builtin_module(detail::builtin_suffix(ref));
  }
  Structure s = load_structure(ref);
  if (auto* m = std::get_if<Semimodule>(&s)) {
    return *m;
  }
  if (auto* r = std::get_if<Semiring>(&s)) {
    return regular_module(share(*r));
  }
  return lattice_module(std::get<Lattice>(s), share(boolean_semiring()));
}

inline Json map_to_json(Map const& m) { return Json(m); }

inline void write_json_file(std::string const& path, Json const& j) {
  std::ofstream out(path);
  if (!out) {
    throw FormatError("cannot write " + path);
  }
  out << j.dump(2) << '\n';
}

}  // namespace semiring_lab

#endif  // SEMIRING_LAB_IO_HPP_
