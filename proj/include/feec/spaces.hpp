#pragma once

#include <string>
#include <vector>

#include "feec/form.hpp"

namespace feec {

enum class SpaceTag { H, H_ldeg, J, P, P_minus, Q_minus, S, S_minus };

struct SpaceKind {
  SpaceTag tag;
  int r;
  int k;
  int n;
  int ldeg = 0;  // only meaningful for H_ldeg
};

std::string to_string(const SpaceKind& space);

/// An ordered generating list for a space; may be linearly dependent.  Each
/// element carries the name of the summand that produced it ("P", "J", "dJ",
/// "kappaH", ...).
struct SpanningSet {
  int n = 0;
  int k = 0;
  std::vector<DifferentialForm> elements;
  std::vector<std::string> provenance;

  std::size_t size() const { return elements.size(); }
  void push(DifferentialForm w, std::string tag);
  /// Appends every element of `other` (which must share n and k).
  void append(const SpanningSet& other);
};

/// Monomials x^alpha dx_sigma with |alpha| = r, |sigma| = k; alternators
/// outer, monomials in descending lexicographic order.
SpanningSet homogeneous_basis(int r, int k, int n);
/// The monomials of homogeneous_basis(r, k, n) with linear degree >= ldeg.
SpanningSet homogeneous_ldeg_basis(int r, int k, int n, int ldeg);
/// kappa of H_{r+l-1,l} Lambda^{k+1}, l = 1 .. n-k-1, exact duplicates removed.
SpanningSet j_span(int r, int k, int n);
SpanningSet p_span(int r, int k, int n);
SpanningSet p_minus_span(int r, int k, int n);
SpanningSet q_minus_span(int r, int k, int n);
SpanningSet s_span(int r, int k, int n);
SpanningSet s_minus_span(int r, int k, int n);

SpanningSet spanning_set(const SpaceKind& space);

}  // namespace feec
