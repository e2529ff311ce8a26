#pragma once

#include <cstdint>
#include <stdexcept>

#include "epg/grid.hpp"

namespace epg {

/// SplitMix64 (Steele, Lea, Flood). Fixed algorithm so that instances are
/// reproducible byte for byte across platforms and languages.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [0, bound) by plain modulo reduction; bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept { return next() % bound; }
  /// Uniform in [0, 1) from the top 53 bits.
  double unit() noexcept { return double(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

enum class Preset : std::uint8_t { uniform, clustered };

struct GenParams {
  std::size_t paths = 0;
  Coord width = 50;
  Coord height = 50;
  double p_horizontal = 0.3;
  double p_vertical = 0.3;
  double p_bend = 0.4;
  Coord max_length = 10;
  std::uint64_t seed = 0;
  Preset preset = Preset::uniform;

  // Clustered preset: a share of the paths is anchored at a few hotspot
  // points, bending there or running through them.
  std::size_t hotspots = 0;  // 0 picks one hotspot per 20 paths
  double p_hotspot = 0.9;
  int max_bends_per_point = 8;
};

class GeneratorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Throws GeneratorError for inconsistent parameters or a grid too small to
/// hold a path (every segment needs at least one edge).
EpgRepresentation random_instance(const GenParams& params);

/// Clustered instance on a grid whose area grows linearly with n, for
/// scaling measurements.
GenParams scaling_params(std::size_t n, std::uint64_t seed);

/// Six paths whose intersection graph is the 3-sun: inner triangle {2,3,5}
/// meeting at a claw centered at (2,2), outer vertices 1, 4, 6.
EpgRepresentation sun3_instance();

/// Paths with at most one bend whose intersection graph is the chordless cycle C_n,
/// n >= 3. For n >= 4 the paths are arcs around a rectangle, consecutive
/// arcs sharing exactly one grid edge.
EpgRepresentation cycle_instance(int n);

}  // namespace epg
