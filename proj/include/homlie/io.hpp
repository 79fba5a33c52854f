#pragma once

#include <json.hpp>
#include <string>

#include "homlie/action.hpp"
#include "homlie/algebra.hpp"

namespace homlie {

using Json = nlohmann::json;

/// Algebra file:
///   {"alpha": [[...]], "basis": [...], "brackets": [{"i", "j", "value"}], "dim", "field": "Q", "name"}
/// `alpha` is row-major, so column j is the image of e_j. Brackets list i < j;
/// the skew half is filled in. Entries with i >= j are taken literally, which is
/// how files with broken skew-symmetry are represented. Throws ParseError.
HomLieAlgebra algebra_from_json(const Json& j);
HomLieAlgebra parse_algebra(const std::string& text);
HomLieAlgebra load_algebra_file(const std::string& path);

Json algebra_to_json(const HomLieAlgebra& L);
/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string export_algebra(const HomLieAlgebra& L);

Json to_json(const Scalar& x);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
/// List of canonical basis vectors.
Json to_json(const Subspace& s);

Vector vector_from_json(const Json& j, std::size_t expected_size);
/// Row-major matrix of rational strings.
Matrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols);

/// Action file: {"actee": algebra, "actor": algebra, "coeffs": t}, where t[i][j] is the
/// coordinate vector of ^{e_i} f_j. Axioms are not checked here.
HomAction action_from_json(const Json& j);
Json action_to_json(const HomAction& a);

/// Crossed module file: {"action": action, "mu": matrix}, mu row-major with dim L rows.
CrossedModule crossed_module_from_json(const Json& j);
Json crossed_module_to_json(const CrossedModule& x);

}  // namespace homlie
