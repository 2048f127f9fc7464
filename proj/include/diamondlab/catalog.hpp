#pragma once

// Verification orchestration and the JSON catalog. Everything here returns
// values; writing files is left to the caller.

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "diamondlab/diamond_ring.hpp"
#include "diamondlab/perm_group.hpp"
#include "diamondlab/symmetry.hpp"

namespace diamondlab {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class VerifyTarget { All, Theorem, Group, Geometry, Ring, Mog };

[[nodiscard]] std::string_view verify_target_name(VerifyTarget t) noexcept;
[[nodiscard]] VerifyTarget parse_verify_target(std::string_view name);

struct VerifyOptions {
  std::size_t cap = kDefaultClosureCap;
  /// Replace the embedded data (text, not paths).
  std::optional<std::string> golay_matrix;
  std::optional<std::string> m24_generators;
};

/// Runs the verifiers for `target`. The result carries one object per
/// section, "failures" (objects with section, message, witnesses) and
/// "passed".
[[nodiscard]] Json verify(VerifyTarget target, const VerifyOptions& options = {});

[[nodiscard]] Json theorem_report_json(const TheoremReport& report);
[[nodiscard]] Json cut_census_json(const CutCensus& census);

/// Relative path -> file content for `export`: orbit.json, structures.json
/// and reports/<section>.json. Throws VerificationError if any section
/// fails or a structure references a pattern missing from the orbit.
[[nodiscard]] std::map<std::string, std::string> export_catalog(const VerifyOptions& options = {});

}  // namespace diamondlab
