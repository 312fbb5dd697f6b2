#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"

#include "forge/gerbe.hpp"

namespace forge {

using Json = nlohmann::json; // std::map-backed: object keys always sorted

// Raised for malformed text: the exact-algebra grammar below, JSON syntax,
// and JSON schema violations.  line/col are 1-based positions into the text
// being parsed (for schema violations they are 0 and the message carries the
// field path instead).
struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line_ = 0, int col_ = 0)
      : std::runtime_error(line_ > 0 ? msg + " (line " + std::to_string(line_) +
                                           ", column " + std::to_string(col_) + ")"
                                     : msg),
        line(line_), col(col_) {}
  int line = 0;
  int col = 0;
};

// --- exact-algebra text grammar ---------------------------------------------
//
// The parsers accept exactly what the str() printers emit (plus redundant
// whitespace and explicit '+' signs):
//
//   rational := ['-'] digits ['/' digits]
//   varpow   := varname ['^' ['-'] digits]
//   term     := rational ('*' varpow)* | varpow ('*' varpow)*
//   poly     := ['-'] term ((' + '|' - ') term)*          e.g. 3/2*x^2*y^-1 - 1
//   basis    := 'd'varname ('^' 'd'varname)*              e.g. dx^dy
//   fterm    := coeff basis | coeff | basis               coeff := '(' poly ')' | term
//   form     := '0' | ['-'] fterm ((' + '|' - ') fterm)*  e.g. (x + 1) dx^dy
//
// Variable names must not collide with the 'd'-prefixed name of another
// variable (a ring with both "x" and "dx" would make the form grammar
// ambiguous); parse_form rejects such rings.  Negative exponents are only
// accepted on variables the ring has inverted.
LaurentPoly parse_poly(const RingPtr& ring, const std::string& text);
DiffForm parse_form(const RingPtr& ring, int degree, const std::string& text);

// --- chart and cover files ---------------------------------------------------
//
// Ring:       {"vars": ["x","y"], "inverted": ["x"]}
// Structure:  {"ring": ..., "kind": "vertex"|"courant"|"lie",
//              "frame": [["1","0"],["0","1"]],              (components per field)
//              "kernel": {"names": [...], "pairing": [[...]], "bracket": [[[...]]]},
//              "curvature": ["x dx^dy", ...],               (one per kernel gen)
//              "alpha": "..."}                               (3-form; "0" allowed)
//
// Loading goes through make_structure, so shape invariants (commuting frame,
// kernel consistency, form degrees) are enforced; the differential laws are
// NOT -- a loaded chart may fail its axiom suite, which is exactly what the
// verify pipeline is for.
Json ring_to_json(const RingPtr& ring);
RingPtr ring_from_json(const Json& j);
Json structure_to_json(const StructurePtr& s);
StructurePtr structure_from_json(const Json& j);

// Cover file: cover combinatorics plus optional Courant and chiral chart
// families with their gluing 1-form/2-form data.
//
//   {"charts": [ring, ...],
//    "overlaps": [{"pair": [0,1], "ring": ...,
//                  "from_first": ["x"], "from_second": ["x^-1"]}, ...],
//    "triples": [{"key": [0,1,2], "ring": ...,
//                 "from_01": [...], "from_02": [...], "from_12": [...]}, ...],
//    "courant": {"charts": [structure, ...],
//                "connection": [{"pair": [0,1], "forms": ["x dz", ...]}, ...]},
//    "cdo": {"charts": [structure, ...],
//            "gauge": [{"pair": [0,1], "form": "z^2 dx^dy"}, ...]}}
//
// "courant" and "cdo" are each optional; substitution images are polynomials
// in the overlap/triple ring, listed per source-ring variable.
struct CoverFile {
  Cover cover;
  std::vector<StructurePtr> courant_charts;            // empty when absent
  std::map<PairKey, std::vector<DiffForm>> connection; // Courant A_ij
  std::vector<StructurePtr> cdo_charts;                // empty when absent
  std::map<PairKey, DiffForm> gauge;                   // chiral b_ij
};

Json cover_to_json(const CoverFile& f);
CoverFile cover_from_json(const Json& j);

// File helpers.  load_json_file reports JSON syntax errors with line/column.
Json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const Json& j);
StructurePtr load_structure(const std::string& path);
void save_structure(const std::string& path, const StructurePtr& s);
CoverFile load_cover(const std::string& path);

// --- reports -----------------------------------------------------------------

// {"pass": ..., "lines": [{"name", "pass", "detail"}, ...]} -- line order is
// the suite's order; object keys are emitted sorted for byte-stable output.
Json report_to_json(const AxiomReport& rep);

// Aligned two-column text table, one line per check.
std::string report_table(const AxiomReport& rep);

// Serialized gerbe cocycle: {"alpha": [{"pair": [i,j], "form": ...}, ...],
//                            "beta": [{"triple": [i,j,k], "form": ...}, ...]}.
Json cocycle_to_json(const GerbeCocycle& c);

// Serialized coboundary search outcome (forms printed in the grammar above).
Json coboundary_to_json(const CoboundaryResult& r);

} // namespace forge
