#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "feec/form.hpp"
#include "feec/matrix.hpp"

namespace feec::testing {

// Fixed seeds keep every property run reproducible.
inline std::mt19937& rng() {
  static std::mt19937 engine(20240611);
  return engine;
}

inline int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

inline ExactScalar random_scalar(int bound = 9) {
  int num = 0;
  while (num == 0) num = uniform_int(-bound, bound);
  return make_scalar(num, uniform_int(1, 4));
}

inline ExponentVector random_exponents(int n, int max_degree) {
  std::vector<int> e(n);
  for (auto& v : e) v = uniform_int(0, max_degree);
  return ExponentVector(std::move(e));
}

inline Alternator random_alternator(int k, int n) {
  const auto all = Alternator::all(k, n);
  return all[uniform_int(0, static_cast<int>(all.size()) - 1)];
}

inline DifferentialForm random_form(int n, int k, int max_terms = 6, int max_degree = 3) {
  DifferentialForm w(n, k);
  const int terms = uniform_int(1, max_terms);
  for (int t = 0; t < terms; ++t)
    w += DifferentialForm::monomial(random_exponents(n, max_degree), random_alternator(k, n), random_scalar());
  return w;
}

// Random (n, k) with 1 <= n <= 3.
inline DifferentialForm random_form_any(int max_terms = 6, int max_degree = 3) {
  const int n = uniform_int(1, 3);
  return random_form(n, uniform_int(0, n), max_terms, max_degree);
}

inline RationalMatrix random_matrix(std::size_t rows, std::size_t cols, int bound = 9) {
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform_int(-bound, bound);
  return m;
}

template <class T>
std::vector<T> shuffled(std::vector<T> v) {
  std::shuffle(v.begin(), v.end(), rng());
  return v;
}

}  // namespace feec::testing
