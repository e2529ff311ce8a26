#include "epg/io.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace epg {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

Coord coord(const json& obj, const char* key, std::size_t entry) {
  auto it = obj.find(key);
  if (it == obj.end() || !it->is_number_integer())
    throw ParseError(ParseError::Where::path_entry, entry,
                     std::string("missing or non-integer field \"") + key + "\"");
  return it->get<Coord>();
}

EpgPath parse_path(const json& obj, std::size_t entry) {
  if (!obj.is_object())
    throw ParseError(ParseError::Where::path_entry, entry, "path entry is not an object");
  auto id_it = obj.find("id");
  if (id_it == obj.end() || !id_it->is_number_integer())
    throw ParseError(ParseError::Where::path_entry, entry, "missing or non-integer \"id\"");
  const PathId id = id_it->get<PathId>();
  auto kind_it = obj.find("kind");
  if (kind_it == obj.end() || !kind_it->is_string())
    throw ParseError(ParseError::Where::path_entry, entry, "missing \"kind\"");
  const std::string kind = kind_it->get<std::string>();
  if (kind == "H") return EpgPath::horizontal(id, coord(obj, "row", entry), coord(obj, "c1", entry), coord(obj, "c2", entry));
  if (kind == "V") return EpgPath::vertical(id, coord(obj, "col", entry), coord(obj, "r1", entry), coord(obj, "r2", entry));
  if (kind == "bend") {
    auto c = obj.find("corner");
    if (c == obj.end() || !c->is_array() || c->size() != 2 || !(*c)[0].is_number_integer() ||
        !(*c)[1].is_number_integer())
      throw ParseError(ParseError::Where::path_entry, entry, "\"corner\" must be [col,row]");
    return EpgPath::bent(id, {(*c)[0].get<Coord>(), (*c)[1].get<Coord>()},
                         coord(obj, "h_end", entry), coord(obj, "v_end", entry));
  }
  throw ParseError(ParseError::Where::path_entry, entry, "unknown kind \"" + kind + "\"");
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseError::Where::byte, e.byte, std::string("syntax error: ") + e.what());
  }
}

}  // namespace

EpgRepresentation parse_representation(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError(ParseError::Where::document, 0, "document is not an object");
  EpgRepresentation repr;
  if (auto g = doc.find("grid"); g != doc.end()) {
    if (!g->is_object()) throw ParseError(ParseError::Where::document, 0, "\"grid\" is not an object");
    repr.grid = GridSize{coord(*g, "width", 0), coord(*g, "height", 0)};
  }
  auto paths = doc.find("paths");
  if (paths == doc.end() || !paths->is_array())
    throw ParseError(ParseError::Where::document, 0, "missing \"paths\" array");
  repr.paths.reserve(paths->size());
  for (std::size_t i = 0; i < paths->size(); ++i) repr.paths.push_back(parse_path((*paths)[i], i));
  try {
    validate(repr);
  } catch (const ValidationError& e) {
    throw ParseError(ParseError::Where::path_entry, e.path_index(), e.what());
  }
  return repr;
}

std::string serialize_representation(const EpgRepresentation& repr) {
  ordered_json doc = ordered_json::object();
  if (repr.grid) {
    ordered_json g = ordered_json::object();
    g["width"] = repr.grid->width;
    g["height"] = repr.grid->height;
    doc["grid"] = g;
  }
  ordered_json paths = ordered_json::array();
  for (const EpgPath& p : repr.paths) {
    ordered_json o = ordered_json::object();
    o["id"] = p.id();
    switch (p.kind()) {
      case PathKind::H: {
        const Segment s = *p.horizontal_segment();
        o["kind"] = "H";
        o["row"] = s.line;
        o["c1"] = s.lo;
        o["c2"] = s.hi;
        break;
      }
      case PathKind::V: {
        const Segment s = *p.vertical_segment();
        o["kind"] = "V";
        o["col"] = s.line;
        o["r1"] = s.lo;
        o["r2"] = s.hi;
        break;
      }
      case PathKind::Bend:
        o["kind"] = "bend";
        o["corner"] = {p.corner().col, p.corner().row};
        o["h_end"] = p.h_end();
        o["v_end"] = p.v_end();
        break;
    }
    paths.push_back(std::move(o));
  }
  doc["paths"] = std::move(paths);
  return doc.dump();
}

std::string read_file(const std::filesystem::path& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error(file.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& file, std::string_view content) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw std::runtime_error(file.string() + ": cannot write");
  out << content;
}

EpgRepresentation load_representation(const std::filesystem::path& file) {
  const std::string text = read_file(file);
  try {
    return parse_representation(text);
  } catch (const ParseError& e) {
    std::string where;
    switch (e.where()) {
      case ParseError::Where::byte: where = "byte " + std::to_string(e.position()); break;
      case ParseError::Where::path_entry: where = "paths[" + std::to_string(e.position()) + "]"; break;
      case ParseError::Where::document: where = "document"; break;
    }
    throw ParseError(e.where(), e.position(), file.string() + ": " + where + ": " + e.what());
  }
}

std::string serialize_coloring(const EpgRepresentation& repr, const CliqueColoring& coloring) {
  std::vector<std::size_t> order(repr.paths.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return repr.paths[a].id() < repr.paths[b].id(); });
  ordered_json colors = ordered_json::object();
  ordered_json pairs = ordered_json::object();
  for (std::size_t i : order) {
    const std::string key = std::to_string(repr.paths[i].id());
    colors[key] = coloring.colors[i];
    pairs[key] = to_string(coloring.pairs[i]);
  }
  std::vector<PathId> recolored;
  for (const Recoloring& r : coloring.plan) recolored.push_back(repr.paths[r.path].id());
  std::sort(recolored.begin(), recolored.end());
  ordered_json doc = ordered_json::object();
  doc["colors"] = std::move(colors);
  doc["pairs"] = std::move(pairs);
  doc["recolored"] = recolored;
  return doc.dump() + "\n";
}

std::map<PathId, int> parse_coloring_colors(std::string_view text) {
  const json doc = parse_json(text);
  auto colors = doc.is_object() ? doc.find("colors") : doc.end();
  if (colors == doc.end() || !colors->is_object())
    throw ParseError(ParseError::Where::document, 0, "missing \"colors\" object");
  std::map<PathId, int> out;
  for (const auto& [key, value] : colors->items()) {
    PathId id = 0;
    try {
      std::size_t used = 0;
      id = std::stoll(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw ParseError(ParseError::Where::document, 0, "color key \"" + key + "\" is not a path id");
    }
    if (!value.is_number_integer())
      throw ParseError(ParseError::Where::document, 0, "color of path " + key + " is not an integer");
    out[id] = value.get<int>();
  }
  return out;
}

}  // namespace epg
