#include "diamondlab/golay.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_set>

#include "diamondlab/error.hpp"

namespace diamondlab {

namespace {

constexpr std::uint32_t kAllPoints = (1U << mog::kPoints) - 1;

std::string mask_to_string(std::uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int p = 0; p < mog::kPoints; ++p) {
    if ((mask >> p) & 1U) {
      if (!first) {
        out += ',';
      }
      out += std::to_string(p);
      first = false;
    }
  }
  return out + "}";
}

// Next larger integer with the same popcount.
std::uint32_t next_combination(std::uint32_t v) noexcept {
  const std::uint32_t t = v | (v - 1);
  return (t + 1) | (((~t & -~t) - 1) >> (std::countr_zero(v) + 1));
}

std::vector<std::string_view> data_lines(std::string_view text) {
  std::vector<std::string_view> out;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (!line.empty()) {
      out.push_back(line);
    }
  }
  return out;
}

}  // namespace

std::uint16_t mog::square_cells(std::uint32_t word) noexcept {
  std::uint16_t cells = 0;
  for (int cell = 0; cell < kCells; ++cell) {
    if ((word >> square_point(cell)) & 1U) {
      cells = static_cast<std::uint16_t>(cells | (1U << cell));
    }
  }
  return cells;
}

std::vector<std::uint32_t> parse_generator_matrix(std::string_view text) {
  std::vector<std::uint32_t> rows;
  for (const auto line : data_lines(text)) {
    if (line.size() != mog::kPoints) {
      throw ParseError("generator row " + std::to_string(rows.size()) + " must have 24 bits", line.size());
    }
    std::uint32_t row = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] != '0' && line[i] != '1') {
        throw ParseError("generator row " + std::to_string(rows.size()) + " has a non-binary character", i);
      }
      row |= static_cast<std::uint32_t>(line[i] - '0') << i;
    }
    rows.push_back(row);
  }
  return rows;
}

std::vector<Perm> parse_m24_generators(std::string_view text) {
  std::vector<Perm> gens;
  for (const auto line : data_lines(text)) {
    std::istringstream in{std::string(line)};
    std::vector<int> images;
    int v = 0;
    while (in >> v) {
      images.push_back(v);
    }
    if (!in.eof() || images.size() != mog::kPoints) {
      throw ParseError("M24 generator " + std::to_string(gens.size()) + " must list 24 integer images",
                       images.size());
    }
    gens.push_back(Perm::from_images(images));
  }
  return gens;
}

bool GolayCode::contains(std::uint32_t word) const noexcept {
  return std::binary_search(codewords.begin(), codewords.end(), word);
}

GolayCode build_golay(std::string_view matrix_text) {
  GolayCode code;
  code.rows = parse_generator_matrix(matrix_text);
  std::vector<std::string> problems;

  if (code.rows.size() != 12) {
    problems.push_back("expected 12 generator rows, got " + std::to_string(code.rows.size()));
  }
  for (std::size_t i = 0; i < code.rows.size(); ++i) {
    for (std::size_t j = i; j < code.rows.size(); ++j) {
      if (dot(code.rows[i], code.rows[j]) != 0) {
        problems.push_back("rows " + std::to_string(i) + " and " + std::to_string(j) + " are not orthogonal");
      }
    }
  }

  code.codewords.push_back(0);
  for (const auto row : code.rows) {
    const std::size_t n = code.codewords.size();
    if (std::find(code.codewords.begin(), code.codewords.end(), row) != code.codewords.end()) {
      problems.push_back("generator rows are linearly dependent");
      continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      code.codewords.push_back(code.codewords[i] ^ row);
    }
  }
  std::sort(code.codewords.begin(), code.codewords.end());
  for (const auto w : code.codewords) {
    ++code.weight_distribution[std::popcount(w)];
  }
  const std::map<int, std::size_t> expected{{0, 1}, {8, 759}, {12, 2576}, {16, 759}, {24, 1}};
  if (code.weight_distribution != expected) {
    std::string got;
    for (const auto& [w, n] : code.weight_distribution) {
      got += " " + std::to_string(w) + ":" + std::to_string(n);
    }
    problems.push_back("weight distribution is" + got);
  }
  if (!code.contains(mog::brick_mask())) {
    problems.push_back("the brick is not a codeword");
  }
  if (problems.empty()) {
    const auto octads = enumerate_octads(code);
    if (brick_disjoint_square_sets(octads) != hyperplane_sets()) {
      problems.push_back("brick-disjoint octads are not the affine hyperplanes of the square");
    }
  }
  if (!problems.empty()) {
    throw VerificationError("Golay generator matrix failed validation", problems);
  }
  return code;
}

std::vector<std::uint32_t> enumerate_octads(const GolayCode& code) {
  std::vector<std::uint32_t> out;
  for (const auto w : code.codewords) {
    if (std::popcount(w) == 8) {
      out.push_back(w);
    }
  }
  return out;
}

SteinerReport verify_steiner(std::span<const std::uint32_t> octads) {
  std::vector<std::uint8_t> cover(std::size_t{1} << mog::kPoints, 0);
  for (const auto octad : octads) {
    // 5-subsets of the octad: drop 3 of its 8 points.
    std::array<std::uint32_t, 8> bits{};
    std::uint32_t rest = octad;
    for (auto& b : bits) {
      b = rest & -rest;
      rest &= rest - 1;
    }
    for (std::uint32_t choose = 0b00011111; choose < 256; choose = next_combination(choose)) {
      std::uint32_t sub = 0;
      for (std::size_t i = 0; i < 8; ++i) {
        if ((choose >> i) & 1U) {
          sub |= bits[i];
        }
      }
      if (cover[sub] < 255) {
        ++cover[sub];
      }
    }
  }

  SteinerReport report;
  std::vector<std::string> witnesses;
  for (std::uint32_t s = 0b11111;; s = next_combination(s)) {
    ++report.five_sets;
    ++report.coverage_histogram[cover[s]];
    if (cover[s] != 1 && witnesses.size() < 20) {
      witnesses.push_back(mask_to_string(s) + " covered " + std::to_string(cover[s]) + " times");
    }
    if (s == (kAllPoints ^ ((1U << 19) - 1))) {
      break;  // last 5-subset
    }
  }
  if (report.coverage_histogram.size() != 1 || report.coverage_histogram.begin()->first != 1) {
    throw VerificationError("octads do not form a Steiner system S(5,8,24)", witnesses);
  }
  return report;
}

std::map<int, std::size_t> intersection_profile(std::span<const std::uint32_t> octads, std::uint32_t set) {
  std::map<int, std::size_t> out;
  for (const auto o : octads) {
    ++out[std::popcount(o & set)];
  }
  return out;
}

StabilizerChain m24_group(std::span<const Perm> gens, std::span<const std::uint32_t> octads) {
  std::vector<std::uint32_t> sorted(octads.begin(), octads.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::string> problems;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].degree() != mog::kPoints) {
      problems.push_back("generator " + std::to_string(i) + " has degree " + std::to_string(gens[i].degree()));
      continue;
    }
    for (const auto o : sorted) {
      if (!std::binary_search(sorted.begin(), sorted.end(), gens[i].apply_to_mask(o))) {
        problems.push_back("generator " + std::to_string(i) + " sends octad " + mask_to_string(o) + " outside the octads");
        break;
      }
    }
  }
  if (!problems.empty()) {
    throw VerificationError("M24 generators do not preserve the octads", problems);
  }
  auto chain = StabilizerChain::build(gens, mog::kPoints);
  if (chain.order() != kM24Order) {
    throw VerificationError("M24 generators give a group of order " + std::to_string(chain.order()),
                            {"expected " + std::to_string(kM24Order)});
  }
  return chain;
}

OctadStabilizer octad_stabilizer(const StabilizerChain& group, std::uint32_t octad) {
  std::vector<std::uint8_t> prefix;
  for (std::size_t p = 0; p < group.degree(); ++p) {
    if ((octad >> p) & 1U) {
      prefix.push_back(static_cast<std::uint8_t>(p));
    }
  }
  const auto chain = group.with_base_prefix(prefix);

  OctadStabilizer result;
  const std::size_t set_levels = prefix.size();
  chain.enumerate(
      [&](std::size_t level, std::uint8_t image) { return level < set_levels && ((octad >> image) & 1U) == 0; },
      [&](const Perm& g) { result.elements.push_back(g); });

  // A generating set grows only when an element falls outside the current
  // subgroup, so at most log2(|stabilizer|) rebuilds happen.
  std::vector<Perm> gens;
  result.chain = StabilizerChain::build(gens, group.degree());
  for (const auto& g : result.elements) {
    if (!result.chain.contains(g)) {
      gens.push_back(g);
      result.chain = StabilizerChain::build(gens, group.degree());
    }
  }
  return result;
}

CellPerm restrict_to_square(const Perm& g) {
  std::array<int, kCells> images{};
  for (int cell = 0; cell < kCells; ++cell) {
    const auto target = mog::point_to_cell(g(static_cast<std::size_t>(mog::square_point(cell))));
    if (!target) {
      throw Error("permutation moves square point " + std::to_string(mog::square_point(cell)) + " into the brick");
    }
    images[static_cast<std::size_t>(cell)] = *target;
  }
  return CellPerm::from_images(images);
}

RestrictionReport restrict_to_square(std::span<const Perm> elements, const GroupSet& g) {
  RestrictionReport report;
  report.stabilizer_size = elements.size();
  std::vector<std::uint64_t> restricted;
  restricted.reserve(elements.size());
  std::vector<std::string> kernel_witnesses;
  for (const auto& e : elements) {
    const auto r = restrict_to_square(e);
    if (r.is_identity()) {
      ++report.kernel_size;
      if (!e.is_identity()) {
        kernel_witnesses.push_back(e.to_string());
      }
    }
    restricted.push_back(r.packed());
  }
  std::sort(restricted.begin(), restricted.end());
  restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());
  report.restricted_size = restricted.size();
  report.faithful = report.restricted_size == report.stabilizer_size && report.kernel_size == 1;

  std::vector<std::uint64_t> group_keys;
  group_keys.reserve(g.size());
  for (const auto& e : g.elements) {
    group_keys.push_back(e.packed());
  }
  report.equals_group = restricted == group_keys;

  if (!report.faithful) {
    throw VerificationError("restriction to the square is not faithful", kernel_witnesses);
  }
  if (!report.equals_group) {
    std::vector<std::string> witnesses;
    std::vector<std::uint64_t> diff;
    std::set_symmetric_difference(restricted.begin(), restricted.end(), group_keys.begin(), group_keys.end(),
                                  std::back_inserter(diff));
    for (std::size_t i = 0; i < diff.size() && i < 10; ++i) {
      witnesses.push_back(CellPerm::from_packed(diff[i]).to_string());
    }
    throw VerificationError("restricted octad stabilizer differs from G", witnesses);
  }
  return report;
}

std::vector<std::uint16_t> brick_disjoint_square_sets(std::span<const std::uint32_t> octads) {
  std::vector<std::uint16_t> out;
  for (const auto o : octads) {
    if ((o & mog::brick_mask()) == 0) {
      out.push_back(mog::square_cells(o));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SplitRecord> brick_split_correspondence(std::span<const std::uint32_t> octads) {
  const std::uint32_t brick = mog::brick_mask();
  const std::uint32_t lowest = brick & -brick;
  const auto all_lines = lines();
  std::map<FourPartition, ProjLine> line_of_partition;
  for (const auto& line : all_lines) {
    line_of_partition.emplace(four_partition(line), line);
  }

  auto square_parts = [&](std::uint32_t half) {
    std::vector<std::uint16_t> parts;
    for (const auto o : octads) {
      if ((o & brick) == half) {
        parts.push_back(mog::square_cells(o));
      }
    }
    std::sort(parts.begin(), parts.end());
    return parts;
  };

  std::vector<SplitRecord> records;
  std::vector<std::string> problems;
  std::map<ProjLine, int> hits;
  for (std::uint32_t half = 0; half <= brick; half = ((half | ~brick) + 1) & brick) {
    if (std::popcount(half) == 4 && (half & lowest) != 0) {
      SplitRecord rec;
      rec.half = half;
      rec.other = brick & ~half;
      const auto parts = square_parts(rec.half);
      const auto name = mask_to_string(rec.half) + "|" + mask_to_string(rec.other);

      std::uint16_t cover = 0;
      bool disjoint = true;
      for (const auto part : parts) {
        disjoint = disjoint && (cover & part) == 0 && std::popcount(part) == 4;
        cover = static_cast<std::uint16_t>(cover | part);
      }
      if (parts.size() != 4 || !disjoint || cover != 0xFFFF) {
        problems.push_back(name + ": square parts do not partition the square into four 4-sets");
      } else if (square_parts(rec.other) != parts) {
        problems.push_back(name + ": the two halves give different partitions");
      } else {
        std::vector<std::array<std::uint8_t, 4>> classes;
        for (const auto part : parts) {
          std::array<std::uint8_t, 4> cls{};
          std::size_t k = 0;
          for (int cell = 0; cell < kCells; ++cell) {
            if ((part >> cell) & 1U) {
              cls[k++] = static_cast<std::uint8_t>(cell);
            }
          }
          classes.push_back(cls);
        }
        std::sort(classes.begin(), classes.end());
        std::copy(classes.begin(), classes.end(), rec.partition.begin());
        const auto it = line_of_partition.find(rec.partition);
        if (it == line_of_partition.end()) {
          problems.push_back(name + ": partition is not the four_partition of any line");
        } else {
          rec.line = it->second;
          ++hits[rec.line];
        }
      }
      records.push_back(rec);
    }
    if (half == brick) {
      break;
    }
  }
  if (records.size() != 35) {
    problems.push_back(std::to_string(records.size()) + " splits instead of 35");
  }
  if (hits.size() != all_lines.size()) {
    problems.push_back("splits reach " + std::to_string(hits.size()) + " of 35 lines");
  }
  for (const auto& [line, n] : hits) {
    if (n != 1) {
      problems.push_back("line " + line.name() + " is hit by " + std::to_string(n) + " splits");
    }
  }
  if (!problems.empty()) {
    throw VerificationError("brick split correspondence failed", problems);
  }
  return records;
}

}  // namespace diamondlab
