#pragma once

// JSON encodings shared by the CLI and tests.
//
//   integer        decimal string or JSON integer
//   matrix         array of rows
//   form           {"d": 2, "e": 1, "c": [matrix, ...], "dext": [matrix, ...]?}
//                  (a single matrix is accepted for "c" when e = 1)
//   wreath         {"A": matrix, "m": matrix, "n": {"1,2": v} or [{...}, ...] per component}
//   complex        [re, im] or a bare real number
//   lattice        {"t1": complex, "t2": complex}
//   presentation   {"generators": [{"name", "degree"}], "relations": [{"t1*x1": "1/2", ...}]}

#include <string>
#include <vector>

#include "json.hpp"
#include "looijenga/cohomology.hpp"
#include "looijenga/moduli.hpp"
#include "looijenga/qform.hpp"
#include "looijenga/wreath.hpp"

namespace looijenga {

using Json = nlohmann::ordered_json;

/// Reads and parses a file; ParseError on any failure.
Json load_json_file(const std::string& path);
Json parse_json(const std::string& text);

Int int_from_json(const Json& j);
Rat rat_from_json(const Json& j);
Json to_json(const Int& v);
Json to_json(const Rat& v);

IntVector int_vector_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);
Json to_json(const IntMatrix& m);
Json to_json(const IntVector& v);
Json to_json(const RatVector& v);

QuadraticForm form_from_json(const Json& j);
Json to_json(const QuadraticForm& q);

AltForm alt_form_from_json(const Json& j, std::size_t r, std::size_t e);
Json to_json(const AltForm& n);
WreathElement wreath_from_json(const QuadraticForm& q, const Json& j);
Json to_json(const WreathElement& w);

Complex complex_from_json(const Json& j);
Json to_json(Complex z);
ComplexVector complex_vector_from_json(const Json& j);
Json to_json(const ComplexVector& v);

FramedLattice lattice_from_json(const Json& j);
Json to_json(const FramedLattice& lat);

Json to_json(const GradedPresentation& p);
GradedPresentation presentation_from_json(const Json& j);

/// "p/q", or "p" for integers.
std::string rat_string(const Rat& v);
/// 17 significant digits.
std::string double_string(double v);

}  // namespace looijenga
