#include "feec/verification.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "feec/form_io.hpp"

namespace feec {

namespace {

std::size_t ipow(std::size_t base, int e) {
  std::size_t v = 1;
  for (int i = 0; i < e; ++i) v *= base;
  return v;
}

int max_exponent(const std::vector<DifferentialForm>& forms) {
  int m = 0;
  for (const auto& w : forms) m = std::max(m, w.max_exponent());
  return m;
}

}  // namespace

std::vector<ExactScalar> coefficient_row(const DifferentialForm& w, int deg) {
  const int n = w.ambient_dim();
  const int k = w.order();
  if (deg < 0) throw std::invalid_argument("negative degree bound");
  const auto alternators = Alternator::all(k, n);
  const std::size_t block = ipow(static_cast<std::size_t>(deg) + 1, n);
  std::vector<ExactScalar> row(alternators.size() * block);
  for (const auto& [sigma, p] : w.components()) {
    const std::size_t a =
        static_cast<std::size_t>(std::lower_bound(alternators.begin(), alternators.end(), sigma) - alternators.begin());
    for (const auto& [alpha, c] : p.terms()) {
      std::size_t index = 0;
      for (int i = 0; i < n; ++i) {
        if (alpha[i] > deg)
          throw std::domain_error("exponent " + std::to_string(alpha[i]) + " exceeds degree bound " +
                                  std::to_string(deg));
        index = index * (deg + 1) + alpha[i];
      }
      row[a * block + index] = c;
    }
  }
  return row;
}

RationalMatrix coefficient_matrix(const std::vector<DifferentialForm>& forms, int n, int k, int deg) {
  const std::size_t width = static_cast<std::size_t>(binomial(n, k)) * ipow(static_cast<std::size_t>(deg) + 1, n);
  RationalMatrix m(0, width);
  for (const auto& w : forms) {
    if (w.ambient_dim() != n || w.order() != k) throw std::invalid_argument("coefficient_matrix: (n, k) mismatch");
    m.append_row(coefficient_row(w, deg));
  }
  return m;
}

DifferentialForm form_from_row(const std::vector<ExactScalar>& row, int n, int k, int deg) {
  const auto alternators = Alternator::all(k, n);
  const std::size_t block = ipow(static_cast<std::size_t>(deg) + 1, n);
  if (row.size() != alternators.size() * block) throw std::invalid_argument("row length does not match (n, k, deg)");
  DifferentialForm w(n, k);
  for (std::size_t idx = 0; idx < row.size(); ++idx) {
    if (sgn(row[idx]) == 0) continue;
    std::size_t rest = idx % block;
    std::vector<int> e(n);
    for (int i = n - 1; i >= 0; --i) {
      e[i] = static_cast<int>(rest % (deg + 1));
      rest /= deg + 1;
    }
    w.add_component(alternators[idx / block], Polynomial::monomial(ExponentVector(std::move(e)), row[idx]));
  }
  return w;
}

nlohmann::json to_json(const VerificationReport& report) {
  return {{"family", report.family},
          {"n", report.n},
          {"k", report.k},
          {"r", report.r},
          {"card_B", report.card_B},
          {"rank_A", report.rank_A},
          {"rank_B", report.rank_B},
          {"rank_C", report.rank_C},
          {"verdict", report.pass ? "pass" : "fail"},
          {"elapsed_ms", report.elapsed_ms}};
}

VerificationReport verify_basis(const SpanningSet& candidate, const SpanningSet& standard) {
  if (candidate.n != standard.n || candidate.k != standard.k)
    throw std::invalid_argument("candidate and standard spanning sets differ in (n, k)");
  const auto start = std::chrono::steady_clock::now();
  const int n = standard.n;
  const int k = standard.k;
  const int deg = std::max(max_exponent(candidate.elements), max_exponent(standard.elements));
  const RationalMatrix a = coefficient_matrix(standard.elements, n, k, deg);
  const RationalMatrix b = coefficient_matrix(candidate.elements, n, k, deg);
  VerificationReport report;
  report.n = n;
  report.k = k;
  report.card_B = candidate.size();
  report.rank_A = rank_exact(a);
  report.rank_B = rank_exact(b);
  report.rank_C = rank_exact(vstack(a, b));
  report.pass = report.card_B == report.rank_B && report.rank_B == report.rank_C && report.rank_C == report.rank_A;
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

DifferentialForm span_residual(const DifferentialForm& w, const SpanningSet& s) {
  if (w.ambient_dim() != s.n || w.order() != s.k) throw std::invalid_argument("form and spanning set differ in (n, k)");
  const int deg = std::max(w.max_exponent(), max_exponent(s.elements));
  const RationalMatrix m = coefficient_matrix(s.elements, s.n, s.k, deg);
  return form_from_row(residual(m, coefficient_row(w, deg)), s.n, s.k, deg);
}

bool in_span(const DifferentialForm& w, const SpanningSet& s) {
  if (w.ambient_dim() != s.n || w.order() != s.k) throw std::invalid_argument("form and spanning set differ in (n, k)");
  const int deg = std::max(w.max_exponent(), max_exponent(s.elements));
  const RationalMatrix m = coefficient_matrix(s.elements, s.n, s.k, deg);
  RationalMatrix extended = m;
  extended.append_row(coefficient_row(w, deg));
  return rank_exact(extended) == rank_exact(m);
}

SpanningSet to_spanning_set(const AssociatedBasis& basis) {
  SpanningSet s{basis.family.n, basis.family.k, {}, {}};
  for (const auto& e : basis.elements) s.push(e.form, to_string(e.source));
  return s;
}

BasisCheck check_computational_basis(const AssociatedBasis& basis) {
  BasisCheck check;
  check.report = verify_basis(to_spanning_set(basis), standard_span(basis.family));
  check.report.family = to_string(basis.family.family);
  check.report.r = basis.family.r;
  if (!check.report.pass) {
    check.message = "rank test failed: #B=" + std::to_string(check.report.card_B) +
                    " rank(B)=" + std::to_string(check.report.rank_B) +
                    " rank(C)=" + std::to_string(check.report.rank_C) +
                    " rank(A)=" + std::to_string(check.report.rank_A);
    return check;
  }
  for (std::size_t i = 0; i < basis.elements.size(); ++i) {
    const auto& e = basis.elements[i];
    try {
      const Face f = associate_face(e.form);
      if (f != e.face) {
        check.offending = i;
        check.message = "element " + std::to_string(i) + " (" + render_text(e.form) + ") built for face " +
                        e.face.to_string() + " but supported on " + f.to_string();
        return check;
      }
    } catch (const std::domain_error& err) {
      check.offending = i;
      check.message = "element " + std::to_string(i) + " (" + render_text(e.form) + "): " + err.what();
      return check;
    }
  }
  check.ok = true;
  return check;
}

}  // namespace feec
