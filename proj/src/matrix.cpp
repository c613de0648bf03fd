#include "feec/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace feec {

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<ExactScalar>>& rows) {
  RationalMatrix m(0, rows.empty() ? 0 : rows.front().size());
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void RationalMatrix::append_row(const std::vector<ExactScalar>& row) {
  if (rows_ == 0 && data_.empty()) cols_ = row.size();
  if (row.size() != cols_) throw std::invalid_argument("row length does not match matrix width");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<ExactScalar> RationalMatrix::row(std::size_t i) const {
  if (i >= rows_) throw std::out_of_range("row index out of range");
  return {data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vstack: column counts differ");
  RationalMatrix out(top.rows() + bottom.rows(), top.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
  for (std::size_t i = 0; i < bottom.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
  return out;
}

std::size_t rank_exact(const RationalMatrix& m) {
  // Integer image of m with all-zero rows and columns dropped.
  std::vector<std::size_t> live_cols;
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i)
      if (sgn(m(i, j)) != 0) {
        live_cols.push_back(j);
        break;
      }
  const std::size_t w = live_cols.size();
  std::vector<std::vector<mpz_class>> a;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    mpz_class scale = 1;
    bool nonzero = false;
    for (std::size_t j : live_cols) {
      const auto& q = m(i, j);
      if (sgn(q) == 0) continue;
      nonzero = true;
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
    }
    if (!nonzero) continue;
    std::vector<mpz_class> r(w);
    for (std::size_t c = 0; c < w; ++c) {
      const auto& q = m(i, live_cols[c]);
      if (sgn(q) == 0) continue;
      mpz_divexact(r[c].get_mpz_t(), scale.get_mpz_t(), q.get_den_mpz_t());
      r[c] *= q.get_num();
    }
    a.push_back(std::move(r));
  }

  const std::size_t h = a.size();
  std::size_t rank = 0;
  mpz_class prev = 1;
  mpz_class t;
  for (std::size_t c = 0; c < w && rank < h; ++c) {
    std::size_t p = rank;
    while (p < h && sgn(a[p][c]) == 0) ++p;
    if (p == h) continue;
    std::swap(a[p], a[rank]);
    const auto& pivot_row = a[rank];
    const mpz_class& pivot = pivot_row[c];
    for (std::size_t i = rank + 1; i < h; ++i) {
      auto& row = a[i];
      const bool lead_zero = sgn(row[c]) == 0;
      for (std::size_t j = c + 1; j < w; ++j) {
        if (lead_zero) {
          if (sgn(row[j]) == 0) continue;
          mpz_mul(row[j].get_mpz_t(), row[j].get_mpz_t(), pivot.get_mpz_t());
        } else {
          mpz_mul(t.get_mpz_t(), row[j].get_mpz_t(), pivot.get_mpz_t());
          mpz_submul(t.get_mpz_t(), row[c].get_mpz_t(), pivot_row[j].get_mpz_t());
          mpz_swap(row[j].get_mpz_t(), t.get_mpz_t());
        }
        mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

std::vector<ExactScalar> residual(const RationalMatrix& m, const std::vector<ExactScalar>& row) {
  if (m.rows() > 0 && row.size() != m.cols()) throw std::invalid_argument("residual: row length mismatch");
  // Plain rational echelon form of m; only used for diagnostics.
  std::vector<std::vector<ExactScalar>> e;
  for (std::size_t i = 0; i < m.rows(); ++i) e.push_back(m.row(i));
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::size_t r = 0;
  for (std::size_t c = 0; c < row.size() && r < e.size(); ++c) {
    std::size_t p = r;
    while (p < e.size() && sgn(e[p][c]) == 0) ++p;
    if (p == e.size()) continue;
    std::swap(e[p], e[r]);
    const ExactScalar inv = 1 / e[r][c];
    for (auto& v : e[r]) v *= inv;
    for (std::size_t i = r + 1; i < e.size(); ++i) {
      if (sgn(e[i][c]) == 0) continue;
      const ExactScalar f = e[i][c];
      for (std::size_t j = c; j < row.size(); ++j) e[i][j] -= f * e[r][j];
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  std::vector<ExactScalar> out = row;
  for (auto [pr, pc] : pivots) {
    if (sgn(out[pc]) == 0) continue;
    const ExactScalar f = out[pc];
    for (std::size_t j = pc; j < out.size(); ++j) out[j] -= f * e[pr][j];
  }
  return out;
}

}  // namespace feec
