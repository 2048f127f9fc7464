#include "diamondlab/geometry.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "diamondlab/error.hpp"

namespace diamondlab {

namespace {

constexpr std::array<const char*, 4> kCoordNames{"c0", "c1", "r0", "r1"};

std::uint16_t partition_class_mask(const std::array<std::uint8_t, 4>& cls) {
  std::uint16_t m = 0;
  for (const auto c : cls) {
    m = static_cast<std::uint16_t>(m | (1U << c));
  }
  return m;
}

}  // namespace

std::string ProjPoint::name() const {
  std::string out;
  for (int k = 3; k >= 0; --k) {
    if ((mask >> k) & 1U) {
      if (!out.empty()) {
        out += '+';
      }
      out += kCoordNames[static_cast<std::size_t>(k)];
    }
  }
  return out;
}

ProjLine ProjLine::through(ProjPoint a, ProjPoint b) {
  if (a == b) {
    throw Error("a line needs two distinct points");
  }
  ProjLine line;
  line.points = {a, b, ProjPoint{static_cast<std::uint8_t>(a.mask ^ b.mask)}};
  std::sort(line.points.begin(), line.points.end());
  return line;
}

bool ProjLine::contains(ProjPoint p) const noexcept {
  return std::find(points.begin(), points.end(), p) != points.end();
}

std::string ProjLine::name() const {
  return "{" + points[0].name() + ", " + points[1].name() + ", " + points[2].name() + "}";
}

std::vector<ProjPoint> points() {
  std::vector<ProjPoint> out;
  for (std::uint8_t m = 1; m < 16; ++m) {
    out.push_back(ProjPoint{m});
  }
  return out;
}

std::vector<ProjLine> lines() {
  std::set<ProjLine> all;
  for (std::uint8_t a = 1; a < 16; ++a) {
    for (std::uint8_t b = static_cast<std::uint8_t>(a + 1); b < 16; ++b) {
      all.insert(ProjLine::through(ProjPoint{a}, ProjPoint{b}));
    }
  }
  return {all.begin(), all.end()};
}

std::optional<AffineForm> fit_affine_form(BitGrid16 grid) noexcept {
  AffineForm form;
  form.constant = grid.at(0) ? 1 : 0;
  for (int k = 0; k < 4; ++k) {
    if (grid.at(1 << k) != (form.constant != 0)) {
      form.linear = static_cast<std::uint8_t>(form.linear | (1U << k));
    }
  }
  for (std::uint8_t x = 0; x < 16; ++x) {
    if (grid.at(x) != ((dot(form.linear, x) ^ form.constant) != 0)) {
      return std::nullopt;
    }
  }
  return form;
}

std::optional<LineDiagram> fit_affine_functional(BitGrid16 grid) noexcept {
  const auto form = fit_affine_form(grid);
  if (!form || form->linear == 0) {
    return std::nullopt;
  }
  return LineDiagram{grid, ProjPoint{form->linear}, form->constant};
}

BitGrid16 diagram_grid(ProjPoint f, std::uint8_t constant) noexcept {
  BitGrid16 g;
  for (std::uint8_t x = 0; x < 16; ++x) {
    g.set(x, (f.eval(x) ^ constant) != 0);
  }
  return g;
}

Structure structure_of(const Pattern& p) {
  Structure s;
  for (std::size_t i = 0; i < kComponents.size(); ++i) {
    const auto component = kComponents[i];
    const auto fit = fit_affine_functional(component_map(p, component));
    if (!fit) {
      throw StructureError("component " + std::string(component_name(component)) + " of " + p.encode() +
                               " is not an affine functional with nonzero linear part",
                           component);
    }
    s.diagrams[i] = *fit;
  }
  const auto a = s.diagrams[0].linear;
  const auto b = s.diagrams[1].linear;
  if (a == b) {
    throw StructureError("components S and D of " + p.encode() + " share a linear part", Component::D);
  }
  // The S+D grid is the XOR of the other two, so its linear part is a + b.
  s.line = ProjLine::through(a, b);
  return s;
}

std::map<ProjLine, std::vector<Pattern>> classify(std::span<const Pattern> orbit_patterns) {
  std::map<ProjLine, std::vector<Pattern>> classes;
  std::set<ProjPoint> seen_points;
  for (const auto& p : orbit_patterns) {
    const auto s = structure_of(p);
    classes[s.line].push_back(p);
    for (const auto& d : s.diagrams) {
      seen_points.insert(d.linear);
    }
  }
  for (auto& [line, members] : classes) {
    std::sort(members.begin(), members.end());
  }

  std::vector<std::string> problems;
  const auto all_lines = lines();
  if (classes.size() != all_lines.size()) {
    problems.push_back("class count " + std::to_string(classes.size()) + " != 35");
  }
  for (const auto& line : all_lines) {
    const auto it = classes.find(line);
    if (it == classes.end()) {
      problems.push_back("no class for line " + line.name());
    } else if (it->second.size() != 24) {
      problems.push_back("class " + line.name() + " has " + std::to_string(it->second.size()) + " patterns");
    }
  }
  if (seen_points.size() != 15) {
    problems.push_back("only " + std::to_string(seen_points.size()) + " points appear");
  }
  if (!problems.empty()) {
    throw VerificationError("structure classification failed", problems);
  }
  return classes;
}

ProjLine transform_line(const AffineMap& g, const ProjLine& line) {
  const auto inv = g.linear_inverse();
  auto image = [&](ProjPoint f) {
    std::uint8_t mask = 0;
    for (int k = 0; k < 4; ++k) {
      if (f.eval(inv.columns[static_cast<std::size_t>(k)]) != 0) {
        mask = static_cast<std::uint8_t>(mask | (1U << k));
      }
    }
    return ProjPoint{mask};
  };
  return ProjLine::through(image(line.points[0]), image(line.points[1]));
}

bool skew(const ProjLine& a, const ProjLine& b) {
  if (a == b) {
    throw Error("skew() needs two distinct lines");
  }
  for (const auto p : a.points) {
    if (b.contains(p)) {
      return false;
    }
  }
  return true;
}

FourPartition four_partition(const ProjLine& line, int first, int second) {
  const auto f1 = line.points.at(static_cast<std::size_t>(first));
  const auto f2 = line.points.at(static_cast<std::size_t>(second));
  if (f1 == f2) {
    throw Error("four_partition needs two distinct points of the line");
  }
  std::array<std::vector<std::uint8_t>, 4> fibers;
  for (std::uint8_t x = 0; x < 16; ++x) {
    fibers[static_cast<std::size_t>(2 * f1.eval(x) + f2.eval(x))].push_back(x);
  }
  std::vector<std::array<std::uint8_t, 4>> classes;
  for (const auto& fiber : fibers) {
    std::array<std::uint8_t, 4> cls{};
    std::copy(fiber.begin(), fiber.end(), cls.begin());
    classes.push_back(cls);
  }
  std::sort(classes.begin(), classes.end());
  FourPartition out{};
  std::copy(classes.begin(), classes.end(), out.begin());
  return out;
}

FourPartition four_partition(const Structure& s) { return four_partition(s.line); }

bool orthogonal(const ProjLine& a, const ProjLine& b) {
  if (a == b) {
    throw Error("orthogonal() needs two distinct structures");
  }
  const auto pa = four_partition(a);
  const auto pb = four_partition(b);
  for (const auto& ca : pa) {
    for (const auto& cb : pb) {
      if (std::popcount(static_cast<unsigned>(partition_class_mask(ca) & partition_class_mask(cb))) != 1) {
        return false;
      }
    }
  }
  return true;
}

bool orthogonal(const Structure& a, const Structure& b) { return orthogonal(a.line, b.line); }

OrthogonalityReport verify_orthogonality_skewness(std::span<const ProjLine> structures) {
  OrthogonalityReport report;
  std::vector<std::string> violations;
  for (std::size_t i = 0; i < structures.size(); ++i) {
    for (std::size_t j = i + 1; j < structures.size(); ++j) {
      const bool o = orthogonal(structures[i], structures[j]);
      const bool s = skew(structures[i], structures[j]);
      ++report.pairs;
      report.orthogonal_count += o ? 1 : 0;
      report.skew_count += s ? 1 : 0;
      report.both += (o && s) ? 1 : 0;
      if (o != s) {
        violations.push_back(structures[i].name() + " vs " + structures[j].name());
      }
    }
  }
  if (!violations.empty()) {
    throw VerificationError("orthogonality and skewness disagree on " + std::to_string(violations.size()) + " pair(s)",
                            violations);
  }
  return report;
}

std::vector<std::uint16_t> hyperplane_sets() {
  std::vector<std::uint16_t> out;
  for (const auto p : points()) {
    for (std::uint8_t c = 0; c < 2; ++c) {
      out.push_back(diagram_grid(p, c).bits);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace diamondlab
