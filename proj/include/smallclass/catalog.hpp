#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "smallclass/group_table.hpp"

namespace smallclass {

namespace detail {

[[noreturn]] inline void format_fail(const std::string& what) {
  throw Error(ErrorKind::FormatError, what);
}

}  // namespace detail

/// Cayley-table record: {"name", "order", "table": row-major 0-based rows}.
inline nlohmann::ordered_json group_to_json(const GroupTable& g) {
  nlohmann::ordered_json j;
  j["name"] = g.name();
  j["order"] = g.order();
  auto rows = nlohmann::ordered_json::array();
  for (ElementId a = 0; a < g.order(); ++a) {
    auto r = g.row(a);
    rows.push_back(std::vector<ElementId>(r.begin(), r.end()));
  }
  j["table"] = std::move(rows);
  return j;
}

/// Accepts either record shape: a Cayley table ({"name","order","table"}) or
/// permutation generators ({"name","degree","generators"}). Shape problems
/// throw FormatError; group-axiom failures propagate from the builders.
inline GroupTable group_from_json(const nlohmann::json& j, const BuildOptions& options = {}) {
  if (!j.is_object()) detail::format_fail("record is not an object");
  std::string name = "unnamed";
  if (j.contains("name")) {
    if (!j["name"].is_string()) detail::format_fail("\"name\" must be a string");
    name = j["name"].get<std::string>();
  }

  if (j.contains("table")) {
    if (!j.contains("order") || !j["order"].is_number_unsigned()) {
      detail::format_fail("\"order\" must be a non-negative integer");
    }
    auto order = j["order"].get<std::size_t>();
    if (order > options.max_order) {
      throw Error(ErrorKind::OrderCapExceeded, "order " + std::to_string(order) +
                                                   " exceeds cap " +
                                                   std::to_string(options.max_order));
    }
    const auto& rows = j["table"];
    if (!rows.is_array() || rows.size() != order) detail::format_fail("\"table\" must have \"order\" rows");
    std::vector<ElementId> flat;
    flat.reserve(order * order);
    for (const auto& row : rows) {
      if (!row.is_array() || row.size() != order) detail::format_fail("every table row must have \"order\" entries");
      for (const auto& v : row) {
        if (!v.is_number_unsigned()) detail::format_fail("table entries must be non-negative integers");
        flat.push_back(v.get<ElementId>());
      }
    }
    return build_from_cayley(order, std::span<const ElementId>(flat), std::move(name));
  }

  if (j.contains("generators")) {
    if (!j.contains("degree") || !j["degree"].is_number_unsigned()) {
      detail::format_fail("\"degree\" must be a non-negative integer");
    }
    auto degree = j["degree"].get<std::size_t>();
    if (!j["generators"].is_array()) detail::format_fail("\"generators\" must be an array");
    std::vector<Perm> perms;
    for (const auto& g : j["generators"]) {
      if (!g.is_array() || g.size() != degree) detail::format_fail("each generator must list \"degree\" images");
      std::vector<std::uint32_t> images;
      for (const auto& v : g) {
        if (!v.is_number_unsigned()) detail::format_fail("generator images must be non-negative integers");
        images.push_back(v.get<std::uint32_t>());
      }
      try {
        perms.emplace_back(std::move(images));
      } catch (const Error& e) {
        detail::format_fail(e.what());
      }
    }
    return build_from_generators(perms, std::move(name), options);
  }

  detail::format_fail("record has neither \"table\" nor \"generators\"");
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return nlohmann::json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::FormatError, path + ": " + e.what());
  }
}

/// Loads a catalog file: a JSON array of records (a single record object is
/// also accepted). Tables identical to an earlier record are dropped and
/// reported through `warnings`.
inline std::vector<GroupTable> load_catalog(const std::string& path,
                                            const BuildOptions& options = {},
                                            std::vector<std::string>* warnings = nullptr) {
  auto doc = read_json_file(path);
  if (doc.is_object()) doc = nlohmann::json::array({doc});
  if (!doc.is_array()) throw Error(ErrorKind::FormatError, path + ": expected an array of records");

  std::vector<GroupTable> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    auto where = path + " record " + std::to_string(i);
    try {
      auto g = group_from_json(doc[i], options);
      bool duplicate = false;
      for (const auto& prev : out) {
        if (prev.same_table(g)) {
          duplicate = true;
          if (warnings) {
            warnings->push_back(where + " (" + g.name() + ") duplicates " + prev.name() +
                                "; skipped");
          }
          break;
        }
      }
      if (!duplicate) out.push_back(std::move(g));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::FormatError) throw Error(ErrorKind::FormatError, where + ": " + e.what());
      throw Error(ErrorKind::ValidationError, where + ": " + e.what());
    }
  }
  return out;
}

inline void write_catalog(const std::string& path, const std::vector<GroupTable>& groups) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& g : groups) arr.push_back(group_to_json(g));
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << arr.dump() << '\n';
}

}  // namespace smallclass
