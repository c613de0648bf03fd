#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "feec/form.hpp"

namespace feec {

/// "x", "y", "z" for n <= 3, otherwise "x1", "x2", ...
std::string variable_name(int axis, int n);
/// "dx", "dydz", ...; "1" for the empty alternator.
std::string alternator_name(const Alternator& sigma, int n);

/// Expanded polynomial, monomials in descending lexicographic order, '*'
/// between factors: "2*x*y*z + 2*x*y - 1/2".
std::string render_polynomial(const Polynomial& p);

/// Canonical one-line form rendering, components in alternator order.  A
/// single component prints bare ("x*y + 1 dx"); with several components each
/// multi-term coefficient is parenthesized ("-y dx + (x + 1) dy").
std::string render_text(const DifferentialForm& w);

/// Coefficient columns in the order used by the basis tables: alternators
/// ascending, except 2-forms in 3D which run dydz, dxdz, dxdy.
std::vector<Alternator> table_columns(int n, int k);
/// One LaTeX tabular row: "$...$ & $...$ & $...$ \\".
std::string render_latex_row(const DifferentialForm& w);
/// Comma-separated coefficients in table_columns order, each quoted.
std::string render_csv_row(const DifferentialForm& w);

/// Parses an expression such as "(x^2 - 1)y dz + 2(x + 1) dydz" in n
/// variables.  Juxtaposition multiplies; products of differentials wedge.  All
/// terms must share one form order; `order` is used when the result is zero
/// (and, if given, is enforced).  Throws std::invalid_argument on bad input.
DifferentialForm parse_form(const std::string& text, int n, std::optional<int> order = std::nullopt);

nlohmann::json form_to_json(const DifferentialForm& w);
/// Inverse of form_to_json; throws std::invalid_argument on malformed input.
DifferentialForm form_from_json(const nlohmann::json& j);

}  // namespace feec
