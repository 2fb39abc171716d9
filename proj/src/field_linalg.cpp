#include "brauerlab/field_linalg.hpp"

#include <stdexcept>

namespace brauerlab {

FieldMatrix field_zero(const FieldPtr& ctx, std::size_t rows, std::size_t cols) {
  return FieldMatrix(rows, cols, FieldElement(ctx, Rat(0)));
}

FieldMatrix field_identity(const FieldPtr& ctx, std::size_t n) {
  return FieldMatrix::identity(n, FieldElement(ctx, Rat(0)), FieldElement(ctx, Rat(1)));
}

FieldMatrix operator*(const FieldMatrix& a, const FieldMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("FieldMatrix: shape mismatch");
  FieldMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

FieldVector operator*(const FieldMatrix& a, const FieldVector& v) {
  if (a.cols() != v.size()) throw std::invalid_argument("FieldMatrix: shape mismatch");
  FieldVector r(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k)
      if (!a(i, k).is_zero() && !v[k].is_zero()) r[i] += a(i, k) * v[k];
  return r;
}

Echelon echelon(FieldMatrix a) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t best = a.rows();
    for (std::size_t r = row; r < a.rows(); ++r)
      if (!a(r, col).is_zero() && (best == a.rows() || a(r, col).size() < a(best, col).size())) best = r;
    if (best == a.rows()) continue;
    a.swap_rows(row, best);
    FieldElement inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j)
      if (!a(row, j).is_zero()) a(row, j) = a(row, j) * inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      FieldElement k = a(r, col);
      for (std::size_t j = col; j < a.cols(); ++j)
        if (!a(row, j).is_zero()) a(r, j) = a(r, j) - k * a(row, j);
    }
    e.pivot_cols.push_back(col);
    ++row;
  }
  e.rref = std::move(a);
  return e;
}

std::size_t rank(const FieldMatrix& a) { return echelon(a).pivot_cols.size(); }

std::vector<FieldVector> kernel(const FieldMatrix& a) {
  auto e = echelon(a);
  std::vector<char> pivot(a.cols(), 0);
  for (auto c : e.pivot_cols) pivot[c] = 1;
  std::vector<FieldVector> out;
  const FieldPtr* ctx = nullptr;
  for (const auto& x : a.data())
    if (x.context()) {
      ctx = &x.context();
      break;
    }
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (pivot[f]) continue;
    FieldVector v(a.cols());
    if (ctx)
      for (auto& x : v) x = FieldElement(*ctx, Rat(0));
    v[f] = ctx ? FieldElement(*ctx, Rat(1)) : FieldElement();
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) v[e.pivot_cols[i]] = -e.rref(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::optional<FieldVector> solve(const FieldMatrix& a, const FieldVector& b) {
  FieldMatrix aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto e = echelon(aug);
  FieldVector x(a.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
    if (e.pivot_cols[i] == a.cols()) return std::nullopt;
    x[e.pivot_cols[i]] = e.rref(i, a.cols());
  }
  return x;
}

FieldElement determinant(FieldMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant: matrix not square");
  FieldElement det;
  const FieldPtr* ctx = nullptr;
  for (const auto& x : a.data())
    if (x.context()) {
      ctx = &x.context();
      break;
    }
  if (!ctx) return FieldElement();  // all entries are context-free zeros
  det = FieldElement(*ctx, Rat(1));
  const std::size_t n = a.rows();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t best = n;
    for (std::size_t r = c; r < n; ++r)
      if (!a(r, c).is_zero() && (best == n || a(r, c).size() < a(best, c).size())) best = r;
    if (best == n) return FieldElement(*ctx, Rat(0));
    if (best != c) {
      a.swap_rows(best, c);
      det = -det;
    }
    det = det * a(c, c);
    FieldElement inv = a(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a(r, c).is_zero()) continue;
      FieldElement k = a(r, c) * inv;
      for (std::size_t j = c + 1; j < n; ++j)
        if (!a(c, j).is_zero()) a(r, j) = a(r, j) - k * a(c, j);
    }
  }
  return det;
}

FieldMatrix inverse(const FieldMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("inverse: matrix not square");
  FieldMatrix aug(n, 2 * n);
  const FieldPtr* ctx = nullptr;
  for (const auto& x : a.data())
    if (x.context()) {
      ctx = &x.context();
      break;
    }
  if (!ctx) throw std::domain_error("singular matrix");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < n; ++j) aug(i, n + j) = FieldElement(*ctx, Rat(i == j ? 1 : 0));
  }
  auto e = echelon(aug);
  if (e.pivot_cols.size() < n || e.pivot_cols[n - 1] != n - 1) throw std::domain_error("singular matrix");
  FieldMatrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = e.rref(i, n + j);
  return r;
}

}  // namespace brauerlab
