#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "feec/polynomial.hpp"

namespace feec {

/// The alternator dx_sigma, stored as the strictly increasing 0-based axis set sigma.
class Alternator {
 public:
  Alternator() = default;
  Alternator(std::initializer_list<int> axes) : Alternator(std::vector<int>(axes)) {}
  explicit Alternator(std::vector<int> axes);

  int order() const { return static_cast<int>(axes_.size()); }
  std::span<const int> axes() const { return axes_; }
  bool contains(int axis) const;
  int max_axis() const { return axes_.empty() ? -1 : axes_.back(); }

  /// sigma with the axis at `position` removed.
  Alternator without_position(int position) const;

  /// All alternators of order k in n variables, lexicographic by axis list.
  static std::vector<Alternator> all(int k, int n);

  auto operator<=>(const Alternator&) const = default;

 private:
  std::vector<int> axes_;
};

/// dx_a ^ dx_b as a sorted alternator with the sign of the sorting permutation,
/// or nullopt when an axis repeats.
std::optional<std::pair<Alternator, int>> wedge_alternators(const Alternator& a, const Alternator& b);

/// A polynomial differential k-form on R^n: a sum of x^alpha dx_sigma.
///
/// Components with an identically zero coefficient are never stored, so two
/// forms are equal iff their expanded term sets coincide.  The only form whose
/// order may exceed n is the zero (n+1)-form returned by the exterior derivative
/// of an n-form.
class DifferentialForm {
 public:
  using Components = std::map<Alternator, Polynomial>;

  DifferentialForm(int n, int k);

  static DifferentialForm monomial(const ExponentVector& alpha, const Alternator& sigma,
                                   const ExactScalar& c = 1);
  /// Zero-form (function) with the given polynomial.
  static DifferentialForm function(const Polynomial& p);
  /// Builds a k-form from coefficients listed against Alternator::all(k, n).
  static DifferentialForm from_coefficients(int n, int k, std::span<const Polynomial> coefficients);
  static DifferentialForm from_coefficients(int n, int k, std::initializer_list<Polynomial> coefficients) {
    return from_coefficients(n, k, std::span<const Polynomial>(coefficients.begin(), coefficients.size()));
  }

  int ambient_dim() const { return n_; }
  int order() const { return k_; }
  const Components& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }
  std::size_t term_count() const;

  Polynomial component(const Alternator& sigma) const;
  void add_component(const Alternator& sigma, const Polynomial& p);

  DifferentialForm& operator+=(const DifferentialForm& other);
  DifferentialForm& operator-=(const DifferentialForm& other);
  DifferentialForm& operator*=(const ExactScalar& c);
  /// Multiplication by a 0-form coefficient.
  DifferentialForm& operator*=(const Polynomial& p);

  friend DifferentialForm operator+(DifferentialForm a, const DifferentialForm& b) { return a += b; }
  friend DifferentialForm operator-(DifferentialForm a, const DifferentialForm& b) { return a -= b; }
  friend DifferentialForm operator*(DifferentialForm a, const ExactScalar& c) { return a *= c; }
  friend DifferentialForm operator*(const ExactScalar& c, DifferentialForm a) { return a *= c; }
  friend DifferentialForm operator*(const Polynomial& p, DifferentialForm a) { return a *= p; }
  DifferentialForm operator-() const;

  bool operator==(const DifferentialForm& other) const = default;
  /// Canonical total order (ambient, order, then components); used for sets.
  bool operator<(const DifferentialForm& other) const;

  /// Max single exponent over every coefficient; 0 for the zero form.
  int max_exponent() const;

 private:
  void check_compatible(const DifferentialForm& other) const;

  int n_;
  int k_;
  Components components_;
};

/// Exterior product.  Throws std::domain_error ("order exceeds dimension") when
/// the orders sum past n.
DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b);

/// d, applied termwise.  d of an n-form is the zero form of order n+1.
DifferentialForm exterior_derivative(const DifferentialForm& w);

/// Koszul operator kappa.  kappa of a 0-form is the zero 0-form.
DifferentialForm koszul(const DifferentialForm& w);

/// max |alpha| over terms; throws std::domain_error for the zero form.
int total_degree(const DifferentialForm& w);

/// Number of axes outside sigma whose exponent is exactly 1.
int linear_degree(const ExponentVector& alpha, const Alternator& sigma);
/// Minimum monomial linear degree; throws std::domain_error for the zero form.
int linear_degree(const DifferentialForm& w);

/// Re-expresses a form on R^m in n >= m variables: variable i becomes
/// axis_map[i].  Alternators are re-sorted with the permutation sign.
DifferentialForm embed(const DifferentialForm& w, int n, std::span<const int> axis_map);

}  // namespace feec
