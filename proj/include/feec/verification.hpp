#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "feec/assembly.hpp"
#include "feec/matrix.hpp"
#include "feec/spaces.hpp"

namespace feec {

/// Coefficients of w against every monomial x^alpha dx_sigma with
/// 0 <= alpha_i <= deg.  Index = a * (deg+1)^n + sum_i alpha_i (deg+1)^(n-1-i),
/// where a is the position of sigma in Alternator::all(k, n); so x varies
/// slowest.  Throws std::domain_error if some exponent exceeds deg.
std::vector<ExactScalar> coefficient_row(const DifferentialForm& w, int deg);

/// Rows are coefficient_row(forms[i], deg); width is fixed by (n, k, deg).
RationalMatrix coefficient_matrix(const std::vector<DifferentialForm>& forms, int n, int k, int deg);

/// Inverse of coefficient_row.
DifferentialForm form_from_row(const std::vector<ExactScalar>& row, int n, int k, int deg);

struct VerificationReport {
  std::string family;  // "q-", "s", "s-" or empty for ad hoc checks
  int n = 0;
  int k = 0;
  int r = 0;
  std::size_t card_B = 0;
  std::size_t rank_A = 0;
  std::size_t rank_B = 0;
  std::size_t rank_C = 0;
  bool pass = false;
  double elapsed_ms = 0;
};

nlohmann::json to_json(const VerificationReport& report);

/// Stacks B under A and passes iff #B = rank B = rank [A; B] = rank A.
VerificationReport verify_basis(const SpanningSet& candidate, const SpanningSet& standard);

/// w reduced against span(s): the zero form iff w lies in the span.
DifferentialForm span_residual(const DifferentialForm& w, const SpanningSet& s);
bool in_span(const DifferentialForm& w, const SpanningSet& s);

SpanningSet to_spanning_set(const AssociatedBasis& basis);

struct BasisCheck {
  bool ok = false;
  VerificationReport report;
  /// Index of the first element whose face association fails, if any.
  std::optional<std::size_t> offending;
  std::string message;
};

/// Runs verify_basis against standard_span and checks that every element has
/// a unique supporting face of minimal dimension, equal to its recorded face.
BasisCheck check_computational_basis(const AssociatedBasis& basis);

}  // namespace feec
