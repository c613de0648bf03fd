#pragma once

#include <string>
#include <vector>

#include "feec/face.hpp"
#include "feec/form.hpp"

namespace feec {

enum class SubspaceKind { V, E, E_tilde, F, F_hat, F_tilde, F_tensor, I, I_tilde, I_tensor };

/// "V", "E", "E_tilde", ...
std::string to_string(SubspaceKind kind);
SubspaceKind parse_subspace_kind(const std::string& name);

struct SubspaceId {
  SubspaceKind kind;
  int grade;  // i; ignored for V
  int k;
  int n;

  bool operator==(const SubspaceId&) const = default;
};

std::string to_string(const SubspaceId& id);

/// Whether the (kind, k, n) family is defined at all.
bool subspace_exists(SubspaceKind kind, int k, int n);
/// Smallest admissible grade for the family (0 for V).
int min_grade(SubspaceKind kind, int k, int n);

/// A constructed function together with the face it was built for.
struct BasisElement {
  DifferentialForm form;
  Face face;
  SubspaceId source;
};

/// Every function of the subspace, fully expanded: rows in table order, index
/// tuples lexicographic, sign choices (+ first) innermost.  Terms whose
/// exponent would be negative vanish; rows that vanish entirely, and exact
/// repeats, are dropped.  Throws std::invalid_argument for an undefined
/// family or a grade below min_grade.
std::vector<BasisElement> subspace(const SubspaceId& id);

}  // namespace feec
