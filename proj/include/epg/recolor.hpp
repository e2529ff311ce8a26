#pragma once

// Per-point recoloring of monocolored (a,a) claw centers, and the full
// 4-clique coloring pipeline built on top of it.
//
// All predicates are evaluated against the base coloring only. A path is
// recolored only at its own bend point, so plans from distinct points touch
// disjoint paths and can be applied in any order.

#include <array>
#include <span>
#include <stdexcept>
#include <vector>

#include "epg/claw.hpp"
#include "epg/grid.hpp"
#include "epg/interval_coloring.hpp"

namespace epg {

using RecoloringPlan = std::vector<Recoloring>;

enum class RecolorCase : std::uint8_t {
  one,                 // two or more shapes missing: flip the shortest stem arm
  two_horizontal,      // one shape missing, a contained horizontal arm
  two_vertical,        // one shape missing, a contained vertical arm
  two_pair,            // one shape missing, flip the two flanking shapes
  three_contained,     // nothing missing, a contained arm plus the shortest-arm path
  three_pair,          // nothing missing, flip the two flanking shapes
};
inline constexpr std::size_t kRecolorCaseCount = 6;

const char* to_string(RecolorCase c) noexcept;

struct PointPlan {
  GridPoint center;
  RecolorCase rule_case = RecolorCase::one;
  std::vector<Recoloring> moves;
};

struct RecolorStats {
  std::array<std::size_t, kRecolorCaseCount> cases{};
  std::size_t hot_points = 0;
  std::size_t rule_checks = 0;
  std::array<std::size_t, 4> rule_violations{};  // rules I, II, III, IV

  /// Points handled by top-level case 1, 2 or 3.
  std::size_t case_total(int top_level) const noexcept;
  std::size_t violations() const noexcept;
  RecolorStats& operator+=(const RecolorStats& o) noexcept;
};

/// Raised when a computed plan breaks one of the recoloring rules. Never
/// expected on valid input; signals an implementation error.
class RuleViolation : public std::logic_error {
 public:
  RuleViolation(int rule, const std::string& what) : std::logic_error(what), rule_(rule) {}
  int rule() const noexcept { return rule_; }

 private:
  int rule_;
};

/// Recoloring for one point whose hot-stem set `hot` is non-empty. Every
/// move turns an (a,a) bend path at x into (a,b) or (b,a). Rules are checked
/// before returning; a failure is counted in `stats` and thrown.
PointPlan plan_point(const RepresentationIndex& index, GridPoint x, std::span<const PathColor> base,
                     DirectionSet hot, RecolorStats* stats = nullptr);

/// Concatenated plans of all points with hot stems, row-major point order.
RecoloringPlan plan_recolorings(const RepresentationIndex& index, std::span<const PathColor> base,
                                RecolorStats* stats = nullptr);

enum class ApplyOrder { forward, reverse };

std::vector<PathColor> apply_plan(std::span<const PathColor> base, const RecoloringPlan& plan,
                                  ApplyOrder order = ApplyOrder::forward);

std::vector<int> finalize(std::span<const PathColor> pairs);

struct CliqueColoring {
  std::vector<PathColor> base;   // parallel to repr.paths
  std::vector<PathColor> pairs;  // after recoloring
  std::vector<int> colors;       // 1..4
  RecoloringPlan plan;
  RecolorStats stats;
};

/// base_coloring, recoloring plan, apply, finalize. Throws ValidationError
/// for invalid representations.
CliqueColoring clique_color(const EpgRepresentation& repr);

}  // namespace epg
