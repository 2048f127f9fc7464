#include "diamondlab/svg.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "diamondlab/error.hpp"
#include "diamondlab/perm_group.hpp"

namespace diamondlab {

namespace {

class SvgWriter {
 public:
  SvgWriter(int width, int height) {
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
         << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  }

  void rect(int x, int y, int w, int h, std::string_view fill, std::string_view stroke = {}) {
    out_ << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h << "\" fill=\"" << fill
         << '"';
    if (!stroke.empty()) {
      out_ << " stroke=\"" << stroke << '"';
    }
    out_ << "/>\n";
  }

  void polygon(std::initializer_list<std::pair<int, int>> pts, std::string_view fill) {
    out_ << "<polygon points=\"";
    bool first = true;
    for (const auto& [x, y] : pts) {
      out_ << (first ? "" : " ") << x << ',' << y;
      first = false;
    }
    out_ << "\" fill=\"" << fill << "\"/>\n";
  }

  void text(int x, int y, int size, std::string_view s) {
    out_ << "<text x=\"" << x << "\" y=\"" << y << "\" font-family=\"monospace\" font-size=\"" << size << "\">" << s
         << "</text>\n";
  }

  void open_group(std::string_view id) { out_ << "<g id=\"" << id << "\">\n"; }
  void close_group() { out_ << "</g>\n"; }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  std::ostringstream out_;
};

// Dark triangle of one tile with its top-left corner at (x, y).
void draw_tile(SvgWriter& svg, TileType t, int x, int y, int size, std::string_view dark) {
  const std::pair<int, int> tl{x, y};
  const std::pair<int, int> tr{x + size, y};
  const std::pair<int, int> bl{x, y + size};
  const std::pair<int, int> br{x + size, y + size};
  if (t.d == 0) {
    if (t.s != 0) {
      svg.polygon({tl, br, bl}, dark);
    } else {
      svg.polygon({tl, tr, br}, dark);
    }
  } else {
    if (t.s != 0) {
      svg.polygon({tr, br, bl}, dark);
    } else {
      svg.polygon({tl, tr, bl}, dark);
    }
  }
}

void draw_pattern(SvgWriter& svg, const Pattern& p, int x, int y, int tile, const RenderSpec& spec) {
  svg.rect(x, y, 4 * tile, 4 * tile, spec.light, spec.dark);
  for (int cell = 0; cell < kCells; ++cell) {
    const auto c = CellCoord::from_index(cell);
    draw_tile(svg, p.at(cell), x + c.col * tile, y + c.row * tile, tile, spec.dark);
  }
}

void draw_grid(SvgWriter& svg, BitGrid16 grid, int x, int y, int tile, const RenderSpec& spec) {
  for (int cell = 0; cell < kCells; ++cell) {
    const auto c = CellCoord::from_index(cell);
    svg.rect(x + c.col * tile, y + c.row * tile, tile, tile, grid.at(cell) ? spec.dark : spec.light, spec.dark);
  }
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError("expected an integer for " + std::string(what) + ", got '" + std::string(text) + "'",
                     static_cast<std::size_t>(ptr - text.data()));
  }
  return value;
}

const std::array<const char*, 4> kClassShades{"#D0D0D0", "#A0A0A0", "#707070", "#404040"};

}  // namespace

std::string_view render_subject_name(RenderSubject s) noexcept {
  switch (s) {
    case RenderSubject::Pattern:
      return "pattern";
    case RenderSubject::Diagram:
      return "diagram";
    case RenderSubject::StructurePlate:
      return "structure-plate";
    case RenderSubject::OrbitSheet:
      return "orbit-sheet";
    case RenderSubject::MogSheet:
      return "mog-sheet";
  }
  return "?";
}

RenderSubject parse_render_subject(std::string_view name) {
  for (const auto s : {RenderSubject::Pattern, RenderSubject::Diagram, RenderSubject::StructurePlate,
                       RenderSubject::OrbitSheet, RenderSubject::MogSheet}) {
    if (render_subject_name(s) == name) {
      return s;
    }
  }
  throw Error("unknown render subject '" + std::string(name) + "'");
}

std::string render_pattern_svg(const Pattern& p, const RenderSpec& spec) {
  const int side = 4 * spec.tile + 2 * spec.margin;
  SvgWriter svg(side, side);
  draw_pattern(svg, p, spec.margin, spec.margin, spec.tile, spec);
  return svg.finish();
}

std::string render_diagram_svg(ProjPoint f, std::uint8_t constant, const RenderSpec& spec) {
  const int side = 4 * spec.tile + 2 * spec.margin;
  SvgWriter svg(side, side);
  draw_grid(svg, diagram_grid(f, constant), spec.margin, spec.margin, spec.tile, spec);
  return svg.finish();
}

std::string render_point_sheet_svg(const RenderSpec& spec) {
  const int cell = 4 * spec.tile + spec.margin;
  const int label = spec.tile / 2;
  const int cols = 5;
  SvgWriter svg(cols * cell + spec.margin, 3 * (cell + label) + spec.margin);
  int k = 0;
  for (const auto p : points()) {
    const int x = spec.margin + (k % cols) * cell;
    const int y = spec.margin + (k / cols) * (cell + label);
    svg.open_group("point-" + std::to_string(p.mask));
    draw_grid(svg, diagram_grid(p, 0), x, y + label, spec.tile, spec);
    svg.text(x, y + label - 4, label / 2 + 1, p.name());
    svg.close_group();
    ++k;
  }
  return svg.finish();
}

std::string render_structure_plate_svg(const RenderSpec& spec) {
  const auto classes = classify(orbit(make_diamond_figure(), diamond_generators()));
  const int block = 4 * spec.tile + spec.margin;
  const int per_row = 5;
  const int fig_w = 4 * block + 2 * spec.margin;
  const int rows = 7;
  SvgWriter svg(per_row * fig_w + spec.margin, rows * (block + spec.margin) + spec.margin);
  int k = 0;
  for (const auto& [line, members] : classes) {
    const auto s = structure_of(members.front());
    const int x0 = spec.margin + (k % per_row) * fig_w;
    const int y0 = spec.margin + (k / per_row) * (block + spec.margin);
    svg.open_group("structure-" + std::to_string(k));
    for (std::size_t i = 0; i < s.diagrams.size(); ++i) {
      draw_grid(svg, s.diagrams[i].grid, x0 + static_cast<int>(i) * block, y0, spec.tile, spec);
    }
    draw_pattern(svg, members.front(), x0 + 3 * block, y0, spec.tile, spec);
    svg.close_group();
    ++k;
  }
  return svg.finish();
}

std::string render_orbit_sheet_svg(std::span<const Pattern> patterns, const RenderSpec& spec, int columns) {
  const int block = 4 * spec.tile + spec.margin;
  const int n = static_cast<int>(patterns.size());
  const int rows = (n + columns - 1) / columns;
  SvgWriter svg(std::min(n, columns) * block + spec.margin, rows * block + spec.margin);
  for (int k = 0; k < n; ++k) {
    draw_pattern(svg, patterns[static_cast<std::size_t>(k)], spec.margin + (k % columns) * block,
                 spec.margin + (k / columns) * block, spec.tile, spec);
  }
  return svg.finish();
}

std::string render_mog_sheet_svg(std::span<const SplitRecord> splits, const RenderSpec& spec) {
  const int fig_w = 6 * spec.tile + 2 * spec.margin;
  const int fig_h = 4 * spec.tile + 2 * spec.margin;
  const int per_row = 5;
  const int rows = (static_cast<int>(splits.size()) + per_row - 1) / per_row;
  SvgWriter svg(per_row * fig_w + spec.margin, rows * fig_h + spec.margin);
  int k = 0;
  for (const auto& rec : splits) {
    const int x0 = spec.margin + (k % per_row) * fig_w;
    const int y0 = spec.margin + (k / per_row) * fig_h;
    svg.open_group("split-" + std::to_string(k));
    for (int p = 0; p < mog::kPoints; ++p) {
      const int x = x0 + (p % 6) * spec.tile;
      const int y = y0 + (p / 6) * spec.tile;
      std::string fill = spec.light;
      if (const auto cell = mog::point_to_cell(p)) {
        for (std::size_t c = 0; c < rec.partition.size(); ++c) {
          for (const auto member : rec.partition[c]) {
            if (member == *cell) {
              fill = kClassShades[c];
            }
          }
        }
      } else if ((rec.half >> p) & 1U) {
        fill = spec.dark;
      }
      svg.rect(x, y, spec.tile, spec.tile, fill, spec.dark);
    }
    svg.close_group();
    ++k;
  }
  return svg.finish();
}

std::string render(const RenderSpec& spec, std::string_view input) {
  if (spec.tile <= 0 || spec.margin < 0) {
    throw Error("tile size must be positive and margin non-negative");
  }
  switch (spec.subject) {
    case RenderSubject::Pattern: {
      if (input.starts_with("orbit:")) {
        const auto all = orbit(make_diamond_figure(), diamond_generators());
        const int n = parse_int(input.substr(6), "orbit index");
        if (n < 0 || n >= static_cast<int>(all.size())) {
          throw Error("orbit index out of range 0.." + std::to_string(all.size() - 1));
        }
        return render_pattern_svg(all[static_cast<std::size_t>(n)], spec);
      }
      return render_pattern_svg(Pattern::decode(input), spec);
    }
    case RenderSubject::Diagram: {
      if (input == "all") {
        return render_point_sheet_svg(spec);
      }
      const auto colon = input.find(':');
      const int mask = parse_int(input.substr(0, colon), "functional");
      const int constant = colon == std::string_view::npos ? 0 : parse_int(input.substr(colon + 1), "constant");
      if (mask < 1 || mask > 15 || constant < 0 || constant > 1) {
        throw Error("diagram input needs a functional in 1..15 and a constant in 0..1");
      }
      return render_diagram_svg(ProjPoint{static_cast<std::uint8_t>(mask)}, static_cast<std::uint8_t>(constant),
                                spec);
    }
    case RenderSubject::StructurePlate:
      if (input != "all") {
        throw Error("structure-plate input must be 'all'");
      }
      return render_structure_plate_svg(spec);
    case RenderSubject::OrbitSheet: {
      const auto all = orbit(make_diamond_figure(), diamond_generators());
      if (input == "all") {
        return render_orbit_sheet_svg(all, spec);
      }
      if (input.starts_with("structure:")) {
        const int n = parse_int(input.substr(10), "structure index");
        const auto all_lines = lines();
        if (n < 0 || n >= static_cast<int>(all_lines.size())) {
          throw Error("structure index out of range 0..34");
        }
        const auto classes = classify(all);
        return render_orbit_sheet_svg(classes.at(all_lines[static_cast<std::size_t>(n)]), spec, 6);
      }
      throw Error("orbit-sheet input must be 'all' or 'structure:<n>'");
    }
    case RenderSubject::MogSheet: {
      if (input != "all") {
        throw Error("mog-sheet input must be 'all'");
      }
      const auto code = build_golay();
      const auto splits = brick_split_correspondence(enumerate_octads(code));
      return render_mog_sheet_svg(splits, spec);
    }
  }
  return {};
}

}  // namespace diamondlab
