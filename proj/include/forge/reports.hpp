#pragma once

#include <string>

#include "forge/baer.hpp"
#include "forge/fock.hpp"
#include "forge/gerbe.hpp"
#include "forge/io.hpp"
#include "forge/p1.hpp"

namespace forge {

// Deterministic run reports behind the command-line front end.  Each builder
// is a pure function of its inputs: fixed inputs and seed give byte-identical
// JSON (std::map-backed objects keep keys sorted), which is what the golden
// files pin down.  Wall-clock timing never enters a report; the CLI prints
// timings on stderr only.
//
// Report shape:
//
//   { "command": <echo of the invocation>,
//     "pass": bool,
//     "sections": [ { "name": "...", "report": {pass, lines}, ...payload }, ... ] }
//
// Section payloads carry the computed objects (cocycle forms, section bases,
// state strings) so a failing line always sits next to the data it judged.
// Builders throw std::invalid_argument / std::domain_error / ParseError for
// malformed inputs (the CLI maps those to exit code 2); a clean report with
// pass == false is a genuine check failure (exit code 1).

struct RunOptions {
  std::uint64_t seed = 0;
  int degree_bound = 6; // Laurent window for coboundary / global-section search
};

// Extract the overall verdict ("pass" field) of a built report.
bool report_pass(const Json& report);

// Render a report as the human-readable aligned table (derived from the same
// JSON the --json mode prints, so the two outputs cannot drift apart).
std::string run_report_table(const Json& report);

// Axiom suite for the chart's own flavour (vertex / courant / lie).
Json verify_report(const StructurePtr& chart, const Json& echo,
                   const RunOptions& opt);

// Baer arithmetic: op is "twist" (uses gamma, ignores second), "boxplus",
// "boxminus" (use second, ignore gamma), or "roundtrip" (both directions
// through second, which must be a kernel-free vertex chart).  The returned
// chart is the emitted result; the report includes the post-hoc axiom suite
// and the in-memory serialization round trip.
struct ArithOutcome {
  Json report;
  StructurePtr result;
};
ArithOutcome arith_report(const std::string& op, const StructurePtr& first,
                          const StructurePtr& second, const DiffForm* gamma,
                          const Json& echo, const RunOptions& opt);

// Cech pipeline on a cover file: gluing-data checks, the obstruction
// cocycles with their closure relations, transition-composition checks on
// every tracked triple, the vertex-extension cocycle sum when both a Courant
// and a CDO section are present, and a bounded coboundary search.
Json cech_report(const CoverFile& cf, const Json& echo, const RunOptions& opt);

// The projective-line family at deformation parameter k.  check selects
// "gluing", "sl2", "global", "sugawara", or "all".
Json p1_demo_report(const Rational& k, const std::string& check,
                    const Json& echo, const RunOptions& opt);

// Free-field side: affine sl2 current table, Sugawara image at the critical
// level, and the Borcherds grid over the weight <= 1 basis.  state_literal,
// when non-empty, is parsed and echoed in normal form ("state" check).
Json wick_report(const Rational& k, const std::string& check,
                 const std::string& state_literal, const Json& echo,
                 const RunOptions& opt);

} // namespace forge
