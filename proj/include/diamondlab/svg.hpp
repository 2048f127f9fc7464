#pragma once

// Deterministic SVG figures: patterns, line diagrams, the structure plate,
// orbit sheets and the MOG split sheet. Coordinates are integers so output
// is byte-stable.

#include <span>
#include <string>
#include <string_view>

#include "diamondlab/geometry.hpp"
#include "diamondlab/golay.hpp"
#include "diamondlab/pattern.hpp"

namespace diamondlab {

enum class RenderSubject { Pattern, Diagram, StructurePlate, OrbitSheet, MogSheet };

[[nodiscard]] std::string_view render_subject_name(RenderSubject s) noexcept;
/// Accepts pattern, diagram, structure-plate, orbit-sheet, mog-sheet.
[[nodiscard]] RenderSubject parse_render_subject(std::string_view name);

struct RenderSpec {
  RenderSubject subject = RenderSubject::Pattern;
  int tile = 100;
  std::string dark = "#000000";
  std::string light = "#FFFFFF";
  int margin = 10;
};

[[nodiscard]] std::string render_pattern_svg(const Pattern& p, const RenderSpec& spec);
[[nodiscard]] std::string render_diagram_svg(ProjPoint f, std::uint8_t constant, const RenderSpec& spec);
/// The 15 points of PG(3,2) as diagrams, one per sub-figure.
[[nodiscard]] std::string render_point_sheet_svg(const RenderSpec& spec);
/// One row per structure: its three line diagrams (S, D, S+D order of the
/// first pattern in its class) next to that pattern.
[[nodiscard]] std::string render_structure_plate_svg(const RenderSpec& spec);
[[nodiscard]] std::string render_orbit_sheet_svg(std::span<const Pattern> patterns, const RenderSpec& spec,
                                                 int columns = 24);
/// One 4x6 MOG array per brick split: the chosen half is dark, square cells
/// are shaded by partition class.
[[nodiscard]] std::string render_mog_sheet_svg(std::span<const SplitRecord> splits, const RenderSpec& spec);

/// Dispatch on spec.subject. Inputs:
///   pattern:         16-digit codec string or "orbit:<n>" (n-th orbit pattern)
///   diagram:         "<functional 1..15>[:<constant>]" or "all" for the point sheet
///   structure-plate: "all"
///   orbit-sheet:     "all" or "structure:<n>" (n-th of the 35 lines)
///   mog-sheet:       "all"
/// Throws ParseError / Error on bad input.
[[nodiscard]] std::string render(const RenderSpec& spec, std::string_view input);

}  // namespace diamondlab
