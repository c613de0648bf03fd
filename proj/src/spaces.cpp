#include "feec/spaces.hpp"

#include <set>
#include <stdexcept>

namespace feec {

namespace {

void check_range(int r, int k, int n) {
  if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
  if (k < 0 || k > n)
    throw std::invalid_argument("form order " + std::to_string(k) + " outside 0.." + std::to_string(n));
  if (r < 0) throw std::invalid_argument("negative polynomial degree");
}

// Drops zero forms and exact repeats, keeping first occurrences.
SpanningSet deduplicated(const SpanningSet& in) {
  SpanningSet out{in.n, in.k, {}, {}};
  std::set<DifferentialForm> seen;
  for (std::size_t i = 0; i < in.size(); ++i) {
    const auto& w = in.elements[i];
    if (w.is_zero() || !seen.insert(w).second) continue;
    out.push(w, in.provenance[i]);
  }
  return out;
}

}  // namespace

std::string to_string(const SpaceKind& space) {
  static const char* names[] = {"H", "H_ldeg", "J", "P", "P-", "Q-", "S", "S-"};
  std::string s = std::string(names[static_cast<int>(space.tag)]) + "_" + std::to_string(space.r);
  if (space.tag == SpaceTag::H_ldeg) s += "," + std::to_string(space.ldeg);
  return s + " Lambda^" + std::to_string(space.k) + "(R^" + std::to_string(space.n) + ")";
}

void SpanningSet::push(DifferentialForm w, std::string tag) {
  if (w.ambient_dim() != n || w.order() != k) throw std::invalid_argument("spanning set element has wrong (n, k)");
  elements.push_back(std::move(w));
  provenance.push_back(std::move(tag));
}

void SpanningSet::append(const SpanningSet& other) {
  if (other.n != n || other.k != k) throw std::invalid_argument("cannot join spanning sets of different (n, k)");
  elements.insert(elements.end(), other.elements.begin(), other.elements.end());
  provenance.insert(provenance.end(), other.provenance.begin(), other.provenance.end());
}

SpanningSet homogeneous_basis(int r, int k, int n) {
  check_range(r, k, n);
  SpanningSet out{n, k, {}, {}};
  auto exps = exponents_of_degree(r, n);
  for (const Alternator& sigma : Alternator::all(k, n))
    for (auto it = exps.rbegin(); it != exps.rend(); ++it) out.push(DifferentialForm::monomial(*it, sigma), "H");
  return out;
}

SpanningSet homogeneous_ldeg_basis(int r, int k, int n, int ldeg) {
  if (ldeg < 0) throw std::invalid_argument("negative linear degree bound");
  SpanningSet all = homogeneous_basis(r, k, n);
  SpanningSet out{n, k, {}, {}};
  for (auto& w : all.elements)
    if (linear_degree(w) >= ldeg) out.push(std::move(w), "H_ldeg");
  return out;
}

SpanningSet j_span(int r, int k, int n) {
  check_range(r, k, n);
  SpanningSet raw{n, k, {}, {}};
  for (int l = 1; l <= n - k - 1; ++l)
    for (const auto& w : homogeneous_ldeg_basis(r + l - 1, k + 1, n, l).elements) raw.push(koszul(w), "J");
  return deduplicated(raw);
}

SpanningSet p_span(int r, int k, int n) {
  check_range(r, k, n);
  SpanningSet out{n, k, {}, {}};
  for (int j = 0; j <= r; ++j) {
    SpanningSet h = homogeneous_basis(j, k, n);
    for (auto& w : h.elements) out.push(std::move(w), "P");
  }
  return out;
}

SpanningSet p_minus_span(int r, int k, int n) {
  check_range(r, k, n);
  if (r < 1) throw std::invalid_argument("trimmed space needs r >= 1");
  SpanningSet out = p_span(r - 1, k, n);
  if (k + 1 <= n)
    for (const auto& w : homogeneous_basis(r - 1, k + 1, n).elements) out.push(koszul(w), "kappaH");
  return out;
}

SpanningSet q_minus_span(int r, int k, int n) {
  check_range(r, k, n);
  if (r < 1) throw std::invalid_argument("tensor product space needs r >= 1");
  SpanningSet out{n, k, {}, {}};
  for (const Alternator& sigma : Alternator::all(k, n)) {
    std::vector<int> bound(n);
    for (int i = 0; i < n; ++i) bound[i] = sigma.contains(i) ? r - 1 : r;
    std::vector<int> e(n, 0);
    // Odometer, first variable slowest.
    while (true) {
      out.push(DifferentialForm::monomial(ExponentVector(e), sigma), "Q-");
      int i = n - 1;
      while (i >= 0 && e[i] == bound[i]) e[i--] = 0;
      if (i < 0) break;
      ++e[i];
    }
  }
  return out;
}

SpanningSet s_span(int r, int k, int n) {
  check_range(r, k, n);
  if (r < 1) throw std::invalid_argument("serendipity space needs r >= 1");
  SpanningSet out = p_span(r, k, n);
  out.append(j_span(r, k, n));
  if (k >= 1) {
    SpanningSet dj{n, k, {}, {}};
    for (const auto& w : j_span(r + 1, k - 1, n).elements) dj.push(exterior_derivative(w), "dJ");
    out.append(deduplicated(dj));
  }
  return out;
}

SpanningSet s_minus_span(int r, int k, int n) {
  check_range(r, k, n);
  if (r < 1) throw std::invalid_argument("serendipity space needs r >= 1");
  SpanningSet out = p_minus_span(r, k, n);
  out.append(j_span(r, k, n));
  if (k >= 1) {
    SpanningSet dj{n, k, {}, {}};
    for (const auto& w : j_span(r, k - 1, n).elements) dj.push(exterior_derivative(w), "dJ");
    out.append(deduplicated(dj));
  }
  return out;
}

SpanningSet spanning_set(const SpaceKind& space) {
  switch (space.tag) {
    case SpaceTag::H: return homogeneous_basis(space.r, space.k, space.n);
    case SpaceTag::H_ldeg: return homogeneous_ldeg_basis(space.r, space.k, space.n, space.ldeg);
    case SpaceTag::J: return j_span(space.r, space.k, space.n);
    case SpaceTag::P: return p_span(space.r, space.k, space.n);
    case SpaceTag::P_minus: return p_minus_span(space.r, space.k, space.n);
    case SpaceTag::Q_minus: return q_minus_span(space.r, space.k, space.n);
    case SpaceTag::S: return s_span(space.r, space.k, space.n);
    case SpaceTag::S_minus: return s_minus_span(space.r, space.k, space.n);
  }
  throw std::invalid_argument("unknown space tag");
}

}  // namespace feec
