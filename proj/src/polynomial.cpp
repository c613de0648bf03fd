#include "feec/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace feec {

ExponentVector::ExponentVector(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_)
    if (e < 0) throw std::invalid_argument("negative exponent in exponent vector");
}

ExponentVector ExponentVector::unit(int n, int axis) {
  std::vector<int> e(n, 0);
  e.at(axis) = 1;
  return ExponentVector(std::move(e));
}

int ExponentVector::total_degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

int ExponentVector::max_entry() const {
  return exponents_.empty() ? 0 : *std::max_element(exponents_.begin(), exponents_.end());
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("exponent vectors of different length");
  ExponentVector sum = *this;
  for (int i = 0; i < dim(); ++i) sum.exponents_[i] += other.exponents_[i];
  return sum;
}

ExponentVector ExponentVector::with(int axis, int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative exponent in exponent vector");
  ExponentVector copy = *this;
  copy.exponents_.at(axis) = exponent;
  return copy;
}

Polynomial Polynomial::constant(int n, const ExactScalar& c) {
  Polynomial p(n);
  p.add_term(ExponentVector::zero(n), c);
  return p;
}

Polynomial Polynomial::variable(int n, int axis) {
  Polynomial p(n);
  p.add_term(ExponentVector::unit(n, axis), 1);
  return p;
}

Polynomial Polynomial::monomial(const ExponentVector& alpha, const ExactScalar& c) {
  Polynomial p(alpha.dim());
  p.add_term(alpha, c);
  return p;
}

Polynomial Polynomial::power(int n, int axis, int e) {
  Polynomial p(n);
  if (e < 0) return p;
  p.add_term(ExponentVector::zero(n).with(axis, e), 1);
  return p;
}

void Polynomial::check_dim(int n) const {
  if (n != n_)
    throw std::invalid_argument("polynomial ambient dimension mismatch (" + std::to_string(n_) +
                                " vs " + std::to_string(n) + ")");
}

ExactScalar Polynomial::coefficient(const ExponentVector& alpha) const {
  auto it = terms_.find(alpha);
  return it == terms_.end() ? ExactScalar(0) : it->second;
}

void Polynomial::add_term(const ExponentVector& alpha, const ExactScalar& c) {
  check_dim(alpha.dim());
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(alpha, c);
  if (inserted) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_dim(other.n_);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_dim(other.n_);
  for (const auto& [alpha, c] : other.terms_) add_term(alpha, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  check_dim(other.n_);
  Polynomial product(n_);
  for (const auto& [a, ca] : terms_)
    for (const auto& [b, cb] : other.terms_) product.add_term(a + b, ca * cb);
  *this = std::move(product);
  return *this;
}

Polynomial& Polynomial::operator*=(const ExactScalar& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [alpha, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial neg = *this;
  for (auto& [alpha, coeff] : neg.terms_) coeff = -coeff;
  return neg;
}

Polynomial Polynomial::derivative(int axis) const {
  Polynomial result(n_);
  for (const auto& [alpha, c] : terms_) {
    const int e = alpha[axis];
    if (e == 0) continue;
    result.add_term(alpha.with(axis, e - 1), c * e);
  }
  return result;
}

Polynomial Polynomial::substitute(int axis, const ExactScalar& value) const {
  Polynomial result(n_);
  for (const auto& [alpha, c] : terms_) {
    ExactScalar factor = 1;
    for (int i = 0; i < alpha[axis]; ++i) factor *= value;
    result.add_term(alpha.with(axis, 0), c * factor);
  }
  return result;
}

Polynomial Polynomial::shifted(const ExponentVector& alpha) const {
  Polynomial result(n_);
  for (const auto& [beta, c] : terms_) result.terms_.emplace(beta + alpha, c);
  return result;
}

int Polynomial::total_degree() const {
  if (is_zero()) throw std::domain_error("degree undefined for the zero polynomial");
  int best = 0;
  for (const auto& [alpha, c] : terms_) best = std::max(best, alpha.total_degree());
  return best;
}

int Polynomial::max_exponent() const {
  int best = 0;
  for (const auto& [alpha, c] : terms_) best = std::max(best, alpha.max_entry());
  return best;
}

long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long result = 1;
  for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

long homogeneous_count(int r, int n) {
  if (r < 0) return 0;
  if (n == 0) return r == 0 ? 1 : 0;
  return binomial(n + r - 1, n - 1);
}

namespace {

void fill_exponents(int remaining, int axis, std::vector<int>& current,
                    std::vector<ExponentVector>& out) {
  const int n = static_cast<int>(current.size());
  if (axis == n - 1) {
    current[axis] = remaining;
    out.emplace_back(current);
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    current[axis] = e;
    fill_exponents(remaining - e, axis + 1, current, out);
  }
}

}  // namespace

std::vector<ExponentVector> exponents_of_degree(int r, int n) {
  std::vector<ExponentVector> out;
  if (r < 0) return out;
  if (n == 0) {
    if (r == 0) out.emplace_back();
    return out;
  }
  std::vector<int> current(n, 0);
  fill_exponents(r, 0, current, out);
  return out;
}

}  // namespace feec
