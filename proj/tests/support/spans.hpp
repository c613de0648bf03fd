#pragma once

#include <algorithm>
#include <set>

#include "feec/spaces.hpp"
#include "feec/verification.hpp"

namespace feec::testing {

inline int max_exponent(const SpanningSet& s) {
  int m = 0;
  for (const auto& w : s.elements) m = std::max(m, w.max_exponent());
  return m;
}

inline std::size_t span_rank(const SpanningSet& s) {
  return rank_exact(coefficient_matrix(s.elements, s.n, s.k, max_exponent(s)));
}

inline SpanningSet concat(SpanningSet a, const SpanningSet& b) {
  a.append(b);
  return a;
}

inline bool same_span(const SpanningSet& a, const SpanningSet& b) {
  const auto ra = span_rank(a);
  return ra == span_rank(b) && span_rank(concat(a, b)) == ra;
}

// span(a) inside span(b)
inline bool spans_within(const SpanningSet& a, const SpanningSet& b) {
  return span_rank(concat(b, a)) == span_rank(b);
}

inline std::set<DifferentialForm> as_set(const std::vector<DifferentialForm>& forms) {
  return {forms.begin(), forms.end()};
}

inline SpanningSet make_set(int n, int k, const std::vector<DifferentialForm>& forms) {
  SpanningSet s{n, k, {}, {}};
  for (const auto& w : forms) s.push(w, "");
  return s;
}

}  // namespace feec::testing
