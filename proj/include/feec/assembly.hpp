#pragma once

#include <string>
#include <vector>

#include "feec/face.hpp"
#include "feec/spaces.hpp"
#include "feec/subspaces.hpp"

namespace feec {

enum class Family { Q_minus, S, S_minus };

/// "q-", "s", "s-".
std::string to_string(Family family);
Family parse_family(const std::string& token);

struct FamilyId {
  Family family;
  int r;
  int k;
  int n;
};

std::string to_string(const FamilyId& id);
/// Throws std::invalid_argument unless n in {2,3}, 0 <= k <= n, r >= 1.
void validate(const FamilyId& id);

/// One direct summand of a basis table cell: grades lo..hi of one subspace
/// family, associated to faces of dimension m.
struct Summand {
  int m;
  SubspaceKind kind;
  int lo;
  int hi;
};

/// The table cell for the family, summands ordered by m and then as listed.
std::vector<Summand> table_cell(const FamilyId& id);

struct AssociatedBasis {
  FamilyId family;
  std::vector<BasisElement> elements;
};

/// Concatenates the summands of table_cell; within each m, elements are
/// ordered by summand, then face (faces_of_cube order), then construction
/// order.  Grades below a subspace's minimum are skipped.
AssociatedBasis assemble(const FamilyId& id);

/// The unique face of dimension min_trace_dim(w) with nonzero trace.  Throws
/// std::domain_error ("not a computational basis element") otherwise.
Face associate_face(const DifferentialForm& w);

/// The standard spanning set matching the family (q_minus_span, s_span, s_minus_span).
SpanningSet standard_span(const FamilyId& id);

}  // namespace feec
