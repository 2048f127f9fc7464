#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "diamondlab/catalog.hpp"
#include "diamondlab/diamond_ring.hpp"
#include "diamondlab/error.hpp"
#include "diamondlab/svg.hpp"

namespace diamondlab::cli {

namespace {

namespace fs = std::filesystem;

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

class IoError : public Error {
 public:
  using Error::Error;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << content;
  out.close();
  if (!out) {
    throw IoError("error while writing " + path.string());
  }
}

std::size_t closure_cap_from_env() {
  const char* raw = std::getenv("DIAMONDLAB_CAP");
  if (raw == nullptr || *raw == '\0') {
    return kDefaultClosureCap;
  }
  char* end = nullptr;
  const auto value = std::strtoull(raw, &end, 10);
  if (*end != '\0' || value == 0) {
    throw UsageError(std::string("DIAMONDLAB_CAP must be a positive integer, got '") + raw + "'");
  }
  return static_cast<std::size_t>(value);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"diamondlab: exhaustive symmetry checks for four-diamond tile patterns and their finite geometry"};
  app.require_subcommand(1);

  std::string verify_target;
  std::string verify_out;
  std::string golay_path;
  std::string m24_path;
  auto* verify_cmd = app.add_subcommand("verify", "Run verifiers and print a JSON report");
  verify_cmd->add_option("target", verify_target, "all, theorem, group, geometry, ring or mog")->required();
  verify_cmd->add_option("--out", verify_out, "Write the report here instead of stdout");
  verify_cmd->add_option("--golay-data", golay_path, "Generator matrix file replacing the embedded one");
  verify_cmd->add_option("--m24-data", m24_path, "M24 generator file replacing the embedded one");

  std::string subject;
  std::string input;
  std::string render_out;
  RenderSpec spec;
  auto* render_cmd = app.add_subcommand("render", "Write an SVG figure");
  render_cmd->add_option("--subject", subject, "pattern, diagram, structure-plate, orbit-sheet or mog-sheet")
      ->required();
  render_cmd->add_option("--input", input, "Codec string or catalog reference")->required();
  render_cmd->add_option("--out", render_out, "Output SVG path")->required();
  render_cmd->add_option("--tile", spec.tile, "Tile size in user units");
  render_cmd->add_option("--margin", spec.margin, "Margin in user units");

  std::string export_dir;
  auto* export_cmd = app.add_subcommand("export", "Write the JSON catalog");
  export_cmd->add_option("--out", export_dir, "Output directory")->required();

  std::string definition;
  auto* census_cmd = app.add_subcommand("census", "Exact pattern censuses");
  census_cmd->require_subcommand(1);
  auto* cuts_cmd = census_cmd->add_subcommand("cuts", "Count patterns whose cuts are uninterrupted");
  cuts_cmd->add_option("--definition", definition, "ConstantRelation, AllContrast, AllMatch or all")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    VerifyOptions options;
    options.cap = closure_cap_from_env();

    if (*verify_cmd) {
      const auto target = [&] {
        try {
          return parse_verify_target(verify_target);
        } catch (const Error& e) {
          throw UsageError(e.what());
        }
      }();
      if (!golay_path.empty()) {
        options.golay_matrix = read_file(golay_path);
      }
      if (!m24_path.empty()) {
        options.m24_generators = read_file(m24_path);
      }
      const auto report = verify(target, options);
      emit(report.dump(2) + "\n", verify_out, out);
      if (!report["passed"].get<bool>()) {
        for (const auto& f : report["failures"]) {
          err << "FAIL [" << f["section"].get<std::string>() << "] " << f["message"].get<std::string>() << '\n';
        }
        return kExitFailed;
      }
      return kExitOk;
    }

    if (*render_cmd) {
      std::string svg;
      try {
        spec.subject = parse_render_subject(subject);
        svg = render(spec, input);
      } catch (const VerificationError&) {
        throw;
      } catch (const Error& e) {
        throw UsageError(e.what());
      }
      write_file(render_out, svg);
      return kExitOk;
    }

    if (*export_cmd) {
      const auto files = export_catalog(options);
      const fs::path root(export_dir);
      std::error_code ec;
      fs::create_directories(root / "reports", ec);
      if (ec) {
        throw IoError("cannot create " + (root / "reports").string() + ": " + ec.message());
      }
      for (const auto& [rel, content] : files) {
        write_file(root / rel, content);
      }
      return kExitOk;
    }

    if (*census_cmd) {
      Json result;
      if (definition == "all") {
        result = Json::array();
        for (const auto def : kCutDefinitions) {
          result.push_back(cut_census_json(cut_census(def)));
        }
      } else {
        CutDefinition def{};
        try {
          def = parse_cut_definition(definition);
        } catch (const Error& e) {
          throw UsageError(e.what());
        }
        result = cut_census_json(cut_census(def));
      }
      out << result.dump(2) << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const VerificationError& e) {
    Json failure{{"message", e.what()}, {"witnesses", e.witnesses()}};
    err << failure.dump(2) << '\n';
    return kExitFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}

}  // namespace diamondlab::cli
