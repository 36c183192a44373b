#include "lpa/linalg.hpp"

#include "lpa/errors.hpp"

namespace lpa {

std::vector<std::size_t> rref(Matrix& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    Scalar inv = a[r][c].inverse();
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      Scalar f = a[i][c];
      for (std::size_t j = c; j < a[i].size(); ++j) a[i][j] -= f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(Matrix a, std::size_t cols) { return rref(a, cols).size(); }

std::vector<DenseVector> nullspace(Matrix a, std::size_t cols) {
  auto pivots = rref(a, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<DenseVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    DenseVector x(cols, Scalar(0));
    x[f] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -a[i][f];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<DenseVector> solve(const Matrix& a, const DenseVector& b, std::size_t cols) {
  Matrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b.at(i));
  auto pivots = rref(aug, cols + 1);
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  DenseVector x(cols, Scalar(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][cols];
  return x;
}

Matrix inverse(const Matrix& a) {
  std::size_t n = a.size();
  Matrix aug = a;
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw PreconditionError("inverse of a non-square matrix");
    for (std::size_t j = 0; j < n; ++j) aug[i].push_back(Scalar(i == j ? 1 : 0));
  }
  auto pivots = rref(aug, n);
  if (pivots.size() != n) throw PreconditionError("matrix is singular");
  Matrix out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(aug[i].begin() + static_cast<long>(n), aug[i].end());
  return out;
}

}  // namespace lpa
