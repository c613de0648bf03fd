#include "feec/form.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace feec {

Alternator::Alternator(std::vector<int> axes) : axes_(std::move(axes)) {
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    if (axes_[i] < 0) throw std::invalid_argument("alternator axis must be non-negative");
    if (i > 0 && axes_[i] <= axes_[i - 1])
      throw std::invalid_argument("alternator axes must be strictly increasing");
  }
}

bool Alternator::contains(int axis) const {
  return std::binary_search(axes_.begin(), axes_.end(), axis);
}

Alternator Alternator::without_position(int position) const {
  std::vector<int> rest = axes_;
  rest.erase(rest.begin() + position);
  return Alternator(std::move(rest));
}

std::vector<Alternator> Alternator::all(int k, int n) {
  std::vector<Alternator> out;
  if (k < 0 || k > n) return out;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    out.emplace_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

std::optional<std::pair<Alternator, int>> wedge_alternators(const Alternator& a, const Alternator& b) {
  std::vector<int> merged;
  merged.reserve(a.order() + b.order());
  int inversions = 0;
  // Count pairs (i in a, j in b) with i > j: each is one transposition.
  for (int i : a.axes())
    for (int j : b.axes()) {
      if (i == j) return std::nullopt;
      if (i > j) ++inversions;
    }
  std::merge(a.axes().begin(), a.axes().end(), b.axes().begin(), b.axes().end(),
             std::back_inserter(merged));
  return std::make_pair(Alternator(std::move(merged)), inversions % 2 == 0 ? 1 : -1);
}

DifferentialForm::DifferentialForm(int n, int k) : n_(n), k_(k) {
  if (n < 0) throw std::invalid_argument("negative ambient dimension");
  if (k < 0 || k > n + 1)
    throw std::invalid_argument("form order " + std::to_string(k) + " out of range for n = " +
                                std::to_string(n));
}

DifferentialForm DifferentialForm::monomial(const ExponentVector& alpha, const Alternator& sigma,
                                            const ExactScalar& c) {
  DifferentialForm w(alpha.dim(), sigma.order());
  w.add_component(sigma, Polynomial::monomial(alpha, c));
  return w;
}

DifferentialForm DifferentialForm::function(const Polynomial& p) {
  DifferentialForm w(p.ambient_dim(), 0);
  w.add_component(Alternator(), p);
  return w;
}

DifferentialForm DifferentialForm::from_coefficients(int n, int k,
                                                     std::span<const Polynomial> coefficients) {
  const auto alternators = Alternator::all(k, n);
  if (coefficients.size() != alternators.size())
    throw std::invalid_argument("expected " + std::to_string(alternators.size()) +
                                " coefficients for a " + std::to_string(k) + "-form in " +
                                std::to_string(n) + " variables");
  DifferentialForm w(n, k);
  for (std::size_t i = 0; i < alternators.size(); ++i) w.add_component(alternators[i], coefficients[i]);
  return w;
}

std::size_t DifferentialForm::term_count() const {
  std::size_t count = 0;
  for (const auto& [sigma, p] : components_) count += p.size();
  return count;
}

Polynomial DifferentialForm::component(const Alternator& sigma) const {
  auto it = components_.find(sigma);
  return it == components_.end() ? Polynomial(n_) : it->second;
}

void DifferentialForm::add_component(const Alternator& sigma, const Polynomial& p) {
  if (sigma.order() != k_)
    throw std::invalid_argument("alternator of order " + std::to_string(sigma.order()) +
                                " in a " + std::to_string(k_) + "-form");
  if (sigma.max_axis() >= n_) throw std::invalid_argument("alternator axis exceeds ambient dimension");
  if (p.ambient_dim() != n_) throw std::invalid_argument("coefficient ambient dimension mismatch");
  if (p.is_zero()) return;
  auto [it, inserted] = components_.try_emplace(sigma, p);
  if (inserted) return;
  it->second += p;
  if (it->second.is_zero()) components_.erase(it);
}

void DifferentialForm::check_compatible(const DifferentialForm& other) const {
  if (n_ != other.n_ || k_ != other.k_)
    throw std::invalid_argument("form mismatch: (n=" + std::to_string(n_) + ", k=" +
                                std::to_string(k_) + ") vs (n=" + std::to_string(other.n_) +
                                ", k=" + std::to_string(other.k_) + ")");
}

DifferentialForm& DifferentialForm::operator+=(const DifferentialForm& other) {
  check_compatible(other);
  for (const auto& [sigma, p] : other.components_) add_component(sigma, p);
  return *this;
}

DifferentialForm& DifferentialForm::operator-=(const DifferentialForm& other) {
  check_compatible(other);
  for (const auto& [sigma, p] : other.components_) add_component(sigma, -p);
  return *this;
}

DifferentialForm& DifferentialForm::operator*=(const ExactScalar& c) {
  if (sgn(c) == 0) {
    components_.clear();
    return *this;
  }
  for (auto& [sigma, p] : components_) p *= c;
  return *this;
}

DifferentialForm& DifferentialForm::operator*=(const Polynomial& q) {
  if (q.ambient_dim() != n_) throw std::invalid_argument("coefficient ambient dimension mismatch");
  Components scaled;
  for (auto& [sigma, p] : components_) {
    Polynomial product = p * q;
    if (!product.is_zero()) scaled.emplace(sigma, std::move(product));
  }
  components_ = std::move(scaled);
  return *this;
}

DifferentialForm DifferentialForm::operator-() const {
  DifferentialForm neg = *this;
  for (auto& [sigma, p] : neg.components_) p = -p;
  return neg;
}

namespace {

int compare_polynomials(const Polynomial& a, const Polynomial& b) {
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
  }
  if (ia == a.terms().end() && ib == b.terms().end()) return 0;
  return ia == a.terms().end() ? -1 : 1;
}

}  // namespace

bool DifferentialForm::operator<(const DifferentialForm& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  if (k_ != other.k_) return k_ < other.k_;
  auto ia = components_.begin();
  auto ib = other.components_.begin();
  for (; ia != components_.end() && ib != other.components_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (int c = compare_polynomials(ia->second, ib->second); c != 0) return c < 0;
  }
  return ia == components_.end() && ib != other.components_.end();
}

int DifferentialForm::max_exponent() const {
  int best = 0;
  for (const auto& [sigma, p] : components_) best = std::max(best, p.max_exponent());
  return best;
}

DifferentialForm wedge(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("wedge of forms in different ambient dimensions");
  const int n = a.ambient_dim();
  const int k = a.order() + b.order();
  if (k > n)
    throw std::domain_error("order exceeds dimension: wedge of a " + std::to_string(a.order()) +
                            "-form and a " + std::to_string(b.order()) + "-form in " +
                            std::to_string(n) + " variables");
  DifferentialForm result(n, k);
  for (const auto& [sa, pa] : a.components())
    for (const auto& [sb, pb] : b.components()) {
      auto merged = wedge_alternators(sa, sb);
      if (!merged) continue;
      Polynomial product = pa * pb;
      if (merged->second < 0) product = -product;
      result.add_component(merged->first, product);
    }
  return result;
}

DifferentialForm exterior_derivative(const DifferentialForm& w) {
  const int n = w.ambient_dim();
  DifferentialForm result(n, w.order() + 1);
  if (w.order() >= n) return result;
  for (const auto& [sigma, p] : w.components()) {
    for (int i = 0; i < n; ++i) {
      if (sigma.contains(i)) continue;
      Polynomial partial = p.derivative(i);
      if (partial.is_zero()) continue;
      // dx_i ^ dx_sigma: moving dx_i past every sigma index below i.
      auto merged = wedge_alternators(Alternator{i}, sigma);
      if (merged->second < 0) partial = -partial;
      result.add_component(merged->first, partial);
    }
  }
  return result;
}

DifferentialForm koszul(const DifferentialForm& w) {
  const int n = w.ambient_dim();
  if (w.order() == 0) return DifferentialForm(n, 0);
  DifferentialForm result(n, w.order() - 1);
  for (const auto& [sigma, p] : w.components()) {
    for (int pos = 0; pos < sigma.order(); ++pos) {
      const int axis = sigma.axes()[pos];
      Polynomial term = p.shifted(ExponentVector::unit(n, axis));
      if (pos % 2 == 1) term = -term;
      result.add_component(sigma.without_position(pos), term);
    }
  }
  return result;
}

int total_degree(const DifferentialForm& w) {
  if (w.is_zero()) throw std::domain_error("degree undefined for the zero form");
  int best = 0;
  for (const auto& [sigma, p] : w.components()) best = std::max(best, p.total_degree());
  return best;
}

int linear_degree(const ExponentVector& alpha, const Alternator& sigma) {
  int count = 0;
  for (int i = 0; i < alpha.dim(); ++i)
    if (alpha[i] == 1 && !sigma.contains(i)) ++count;
  return count;
}

int linear_degree(const DifferentialForm& w) {
  if (w.is_zero()) throw std::domain_error("linear degree undefined for the zero form");
  int best = w.ambient_dim() + 1;
  for (const auto& [sigma, p] : w.components())
    for (const auto& [alpha, c] : p.terms()) best = std::min(best, linear_degree(alpha, sigma));
  return best;
}

DifferentialForm embed(const DifferentialForm& w, int n, std::span<const int> axis_map) {
  const int m = w.ambient_dim();
  if (static_cast<int>(axis_map.size()) != m) throw std::invalid_argument("axis map has wrong length");
  for (int a : axis_map)
    if (a < 0 || a >= n) throw std::invalid_argument("axis map target out of range");
  DifferentialForm result(n, w.order());
  for (const auto& [sigma, p] : w.components()) {
    Polynomial mapped(n);
    for (const auto& [alpha, c] : p.terms()) {
      std::vector<int> e(n, 0);
      for (int i = 0; i < m; ++i) e[axis_map[i]] += alpha[i];
      mapped.add_term(ExponentVector(std::move(e)), c);
    }
    // Rebuild the alternator as an ordered wedge of the mapped differentials.
    Alternator acc;
    int sign = 1;
    bool vanished = false;
    for (int axis : sigma.axes()) {
      auto merged = wedge_alternators(acc, Alternator{axis_map[axis]});
      if (!merged) {
        vanished = true;
        break;
      }
      acc = merged->first;
      sign *= merged->second;
    }
    if (vanished) continue;
    result.add_component(acc, sign > 0 ? mapped : -mapped);
  }
  return result;
}

}  // namespace feec
