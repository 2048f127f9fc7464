#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "diamondlab/catalog.hpp"
#include "diamondlab/diamond_ring.hpp"
#include "diamondlab/error.hpp"
#include "diamondlab/geometry.hpp"
#include "diamondlab/perm_group.hpp"
#include "diamondlab/svg.hpp"
#include "diamondlab/symmetry.hpp"

namespace py = pybind11;
using namespace diamondlab;

namespace {

std::vector<std::string> isometry_names(std::uint8_t mask) {
  std::vector<std::string> out;
  for (const auto iso : all_isometries()) {
    if ((mask >> iso.index()) & 1U) {
      out.push_back(iso.name());
    }
  }
  return out;
}

ProjLine line_from_masks(const std::vector<int>& masks) {
  if (masks.size() < 2) {
    throw Error("a line needs at least two point masks");
  }
  for (const int m : masks) {
    if (m < 1 || m > 15) {
      throw Error("point masks must be in 1..15");
    }
  }
  const auto line = ProjLine::through(ProjPoint{static_cast<std::uint8_t>(masks[0])},
                                      ProjPoint{static_cast<std::uint8_t>(masks[1])});
  for (const int m : masks) {
    if (!line.contains(ProjPoint{static_cast<std::uint8_t>(m)})) {
      throw Error("point masks are not collinear");
    }
  }
  return line;
}

std::vector<int> masks_of(const ProjLine& line) {
  return {line.points[0].mask, line.points[1].mask, line.points[2].mask};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exhaustive symmetry checks for tile patterns: patterns, the group G, PG(3,2), the GF(4) ring and the MOG.";

  static const py::handle verification_error =
      py::exception<VerificationError>(m, "VerificationError", PyExc_RuntimeError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) {
        std::rethrow_exception(p);
      }
    } catch (const VerificationError& e) {
      PyErr_SetObject(verification_error.ptr(), py::make_tuple(e.what(), e.witnesses()).ptr());
    } catch (const ParseError& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const CapExceeded& e) {
      PyErr_SetString(PyExc_OverflowError, e.what());
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.attr("SCHEMA_VERSION") = kSchemaVersion;

  m.def("diamond_figure", [] { return make_diamond_figure().encode(); }, "Codec string of the four-diamond figure.");
  m.def("normalize", [](const std::string& code) { return Pattern::decode(code).encode(); }, py::arg("code"),
        "Parse and re-encode a codec string; raises ValueError on bad input.");
  m.def("color_interchange", [](const std::string& code) { return color_interchange(Pattern::decode(code)).encode(); },
        py::arg("code"));

  m.def(
      "group_order",
      [](std::size_t cap) {
        const auto gens = diamond_generators();
        return generate_closure(gens, cap).size();
      },
      py::arg("cap") = kDefaultClosureCap, "Size of the closure of the row, column and quadrant generators.");
  m.def("affine_group_order", &affine_group_order, py::arg("n"));

  m.def(
      "orbit",
      [](const std::string& seed, std::size_t cap) {
        const auto gens = diamond_generators();
        std::vector<std::string> out;
        for (const auto& p : orbit(Pattern::decode(seed), gens, cap)) {
          out.push_back(p.encode());
        }
        return out;
      },
      py::arg("seed") = std::string("3131020231310202"), py::arg("cap") = kDefaultClosureCap,
      "Sorted codec strings of the G-orbit of `seed`.");

  m.def(
      "symmetry_profile",
      [](const std::string& code) {
        const auto prof = symmetry_profile(Pattern::decode(code));
        py::dict d;
        d["ordinary"] = isometry_names(prof.ordinary);
        d["interchange"] = isometry_names(prof.interchange);
        d["shape"] = prof.shape();
        return d;
      },
      py::arg("code"));
  m.def("center_lemma_check", [](const std::string& code) { return center_lemma_check(Pattern::decode(code)); },
        py::arg("code"));

  m.def("structure_line", [](const std::string& code) { return masks_of(structure_of(Pattern::decode(code)).line); },
        py::arg("code"), "Point masks of the pattern's structure line.");
  m.def(
      "four_partition",
      [](const std::vector<int>& line) {
        const auto fp = four_partition(line_from_masks(line));
        std::vector<std::vector<int>> out;
        for (const auto& cls : fp) {
          out.emplace_back(cls.begin(), cls.end());
        }
        return out;
      },
      py::arg("line"));
  m.def("orthogonal", [](const std::vector<int>& a, const std::vector<int>& b) {
    return orthogonal(line_from_masks(a), line_from_masks(b));
  });
  m.def("skew", [](const std::vector<int>& a, const std::vector<int>& b) {
    return skew(line_from_masks(a), line_from_masks(b));
  });
  m.def("lines", [] {
    std::vector<std::vector<int>> out;
    for (const auto& l : lines()) {
      out.push_back(masks_of(l));
    }
    return out;
  });

  m.def("pattern_add", [](const std::string& a, const std::string& b) {
    return (Gf4Pattern::from_pattern(Pattern::decode(a)) + Gf4Pattern::from_pattern(Pattern::decode(b))).to_pattern().encode();
  });
  m.def("is_affine_pattern",
        [](const std::string& code) { return is_affine_pattern(Gf4Pattern::from_pattern(Pattern::decode(code))); });

  m.def(
      "_cut_census",
      [](const std::string& definition) { return cut_census_json(cut_census(parse_cut_definition(definition))).dump(); },
      py::arg("definition"));
  m.def(
      "_verify",
      [](const std::string& target, std::size_t cap) {
        VerifyOptions options;
        options.cap = cap;
        const auto t = parse_verify_target(target);
        py::gil_scoped_release release;
        return verify(t, options).dump();
      },
      py::arg("target") = "all", py::arg("cap") = kDefaultClosureCap);
  m.def(
      "export_catalog",
      [](std::size_t cap) {
        VerifyOptions options;
        options.cap = cap;
        return export_catalog(options);
      },
      py::arg("cap") = kDefaultClosureCap, "Relative path -> file content of the JSON catalog.");
  m.def(
      "render",
      [](const std::string& subject, const std::string& input, int tile, int margin) {
        RenderSpec spec;
        spec.subject = parse_render_subject(subject);
        spec.tile = tile;
        spec.margin = margin;
        return render(spec, input);
      },
      py::arg("subject"), py::arg("input"), py::arg("tile") = 100, py::arg("margin") = 10, "SVG text.");
}
