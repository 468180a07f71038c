#include "ainf/linalg.hpp"

#include <stdexcept>

namespace ainf {

RatMat mat_zero(std::size_t rows, std::size_t cols) {
  return RatMat(rows, RatVec(cols, Rat(0)));
}

RatMat mat_identity(std::size_t n) {
  RatMat m = mat_zero(n, n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat mat_mul(const RatMat& a, const RatMat& b) {
  if (a.empty() || b.empty()) return {};
  std::size_t n = a.size(), k = b.size(), p = b[0].size();
  RatMat r = mat_zero(n, p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (is_zero(a[i][j])) continue;
      for (std::size_t l = 0; l < p; ++l) r[i][l] += a[i][j] * b[j][l];
    }
  return r;
}

RatVec mat_apply(const RatMat& a, const RatVec& x) {
  RatVec r(a.size(), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!is_zero(a[i][j])) r[i] += a[i][j] * x[j];
  return r;
}

std::vector<std::size_t> rref(RatMat& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t rows = m.size(), cols = m[0].size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rat inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m[i][c])) continue;
      Rat f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(RatMat m) { return rref(m).size(); }

std::optional<RatVec> solve(const RatMat& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("solve: shape mismatch");
  if (a.empty()) return RatVec{};
  std::size_t rows = a.size(), cols = a[0].size();
  RatMat aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  auto pivots = rref(aug);
  // Inconsistent iff a pivot lands in the augmented column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  RatVec x(cols, Rat(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

std::vector<RatVec> kernel(const RatMat& a) {
  if (a.empty()) return {};
  std::size_t cols = a[0].size();
  RatMat m = a;
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RatVec> basis;
  for (std::size_t c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(cols, Rat(0));
    v[c] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m[i][c];
    basis.push_back(std::move(v));
  }
  return basis;
}

bool in_span(const RatMat& a, const RatVec& v) { return solve(a, v).has_value(); }

}  // namespace ainf
