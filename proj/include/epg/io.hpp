#pragma once

#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "epg/grid.hpp"
#include "epg/recolor.hpp"

namespace epg {

/// Malformed instance or coloring text. `position` is a byte offset for
/// syntax errors, or the index of the offending path entry otherwise.
class ParseError : public std::runtime_error {
 public:
  enum class Where { byte, path_entry, document };
  ParseError(Where where, std::size_t position, const std::string& what)
      : std::runtime_error(what), where_(where), position_(position) {}
  Where where() const noexcept { return where_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Where where_;
  std::size_t position_;
};

/// Parses and validates an instance file. Validation failures are rethrown
/// as ParseError naming the path entry.
EpgRepresentation parse_representation(std::string_view text);

/// Canonical compact form; key order id, kind, then the geometry fields.
std::string serialize_representation(const EpgRepresentation& repr);

std::string read_file(const std::filesystem::path& file);
void write_file(const std::filesystem::path& file, std::string_view content);

/// Loads an instance; errors carry the file name and position in the message.
EpgRepresentation load_representation(const std::filesystem::path& file);

/// {"colors": {"<id>": k}, "pairs": {"<id>": "ab"}, "recolored": [ids]}, ids ascending.
std::string serialize_coloring(const EpgRepresentation& repr, const CliqueColoring& coloring);

/// Reads the "colors" object of a coloring file: path id -> color.
std::map<PathId, int> parse_coloring_colors(std::string_view text);

}  // namespace epg
