#pragma once

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "feec/scalar.hpp"

namespace feec {

/// Multi-index alpha of a monomial x^alpha in n variables.
class ExponentVector {
 public:
  ExponentVector() = default;
  explicit ExponentVector(std::vector<int> exponents);

  static ExponentVector zero(int n) { return ExponentVector(std::vector<int>(n, 0)); }
  static ExponentVector unit(int n, int axis);

  int dim() const { return static_cast<int>(exponents_.size()); }
  int operator[](int axis) const { return exponents_[axis]; }
  std::span<const int> entries() const { return exponents_; }

  int total_degree() const;
  int max_entry() const;

  /// Exponent-wise sum, i.e. the exponent vector of the product monomial.
  ExponentVector operator+(const ExponentVector& other) const;
  ExponentVector with(int axis, int exponent) const;

  auto operator<=>(const ExponentVector&) const = default;

 private:
  std::vector<int> exponents_;
};

/// Sparse polynomial with exact rational coefficients; zero coefficients are
/// never stored.
class Polynomial {
 public:
  using Terms = std::map<ExponentVector, ExactScalar>;

  explicit Polynomial(int n = 0) : n_(n) {}

  static Polynomial constant(int n, const ExactScalar& c);
  static Polynomial variable(int n, int axis);
  static Polynomial monomial(const ExponentVector& alpha, const ExactScalar& c = 1);
  /// x_axis^e; the zero polynomial when e < 0.
  static Polynomial power(int n, int axis, int e);

  int ambient_dim() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  ExactScalar coefficient(const ExponentVector& alpha) const;
  void add_term(const ExponentVector& alpha, const ExactScalar& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const ExactScalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const ExactScalar& c) { return a *= c; }
  friend Polynomial operator*(const ExactScalar& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  bool operator==(const Polynomial& other) const = default;

  Polynomial derivative(int axis) const;
  Polynomial substitute(int axis, const ExactScalar& value) const;
  /// Multiplies every term by x^alpha.
  Polynomial shifted(const ExponentVector& alpha) const;

  /// Max |alpha| over stored terms; throws std::domain_error for zero.
  int total_degree() const;
  /// Max single exponent over all terms and variables; 0 for zero.
  int max_exponent() const;

 private:
  void check_dim(int n) const;

  int n_;
  Terms terms_;
};

/// Number of monomials of total degree r in n variables: C(n+r-1, n-1).
long homogeneous_count(int r, int n);
long binomial(int n, int k);

/// All exponent vectors in n variables with |alpha| = r, lexicographically ascending.
std::vector<ExponentVector> exponents_of_degree(int r, int n);

}  // namespace feec
