#include "hominduce/linalg.hpp"

#include <algorithm>

namespace hominduce {

void axpy(SparseVec& y, const Scalar& a, const SparseVec& x) {
  if (is_zero(a) || x.empty()) return;
  SparseVec out;
  out.reserve(y.size() + x.size());
  auto iy = y.begin();
  auto ix = x.begin();
  while (iy != y.end() || ix != x.end()) {
    if (ix == x.end() || (iy != y.end() && iy->first < ix->first)) {
      out.push_back(std::move(*iy++));
    } else if (iy == y.end() || ix->first < iy->first) {
      out.emplace_back(ix->first, a * ix->second);
      ++ix;
    } else {
      Scalar v = iy->second + a * ix->second;
      if (!is_zero(v)) out.emplace_back(iy->first, std::move(v));
      ++iy;
      ++ix;
    }
  }
  y = std::move(out);
}

SparseVec scaled(const SparseVec& x, const Scalar& a) {
  SparseVec out;
  if (is_zero(a)) return out;
  out.reserve(x.size());
  for (const auto& [i, v] : x) out.emplace_back(i, a * v);
  return out;
}

SparseVec to_sparse(const DenseVec& v) {
  SparseVec out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!is_zero(v[i])) out.emplace_back(i, v[i]);
  return out;
}

DenseVec to_dense(const SparseVec& v, int n) {
  DenseVec out(n);
  for (const auto& [i, x] : v) out[i] = x;
  return out;
}

Scalar dot(const SparseVec& a, const SparseVec& b) {
  Scalar s = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first < ib->first) ++ia;
    else if (ib->first < ia->first) ++ib;
    else s += (ia++)->second * (ib++)->second;
  }
  return s;
}

Scalar coeff(const SparseVec& v, int i) {
  auto it = std::lower_bound(v.begin(), v.end(), i, [](const auto& p, int k) { return p.first < k; });
  if (it != v.end() && it->first == i) return it->second;
  return Scalar(0);
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data.begin(), data.end(), [](const Scalar& x) { return hominduce::is_zero(x); });
}

DenseVec Matrix::column(int c) const {
  DenseVec v(rows);
  for (int r = 0; r < rows; ++r) v[r] = at(r, c);
  return v;
}

SparseVec Matrix::sparse_column(int c) const {
  SparseVec v;
  for (int r = 0; r < rows; ++r)
    if (!hominduce::is_zero(at(r, c))) v.emplace_back(r, at(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) {
      const Scalar& x = a.at(i, k);
      if (is_zero(x)) continue;
      for (int j = 0; j < b.cols; ++j)
        if (!is_zero(b.at(k, j))) m.at(i, j) += x * b.at(k, j);
    }
  return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix m = a;
  for (std::size_t i = 0; i < m.data.size(); ++i) m.data[i] += b.data[i];
  return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  Matrix m = a;
  for (std::size_t i = 0; i < m.data.size(); ++i) m.data[i] -= b.data[i];
  return m;
}

Matrix operator*(const Scalar& s, const Matrix& a) {
  Matrix m = a;
  for (auto& x : m.data) x *= s;
  return m;
}

SparseMatrix to_sparse(const Matrix& m) {
  SparseMatrix s;
  s.cols = m.cols;
  s.rows.resize(m.rows);
  for (int r = 0; r < m.rows; ++r)
    for (int c = 0; c < m.cols; ++c)
      if (!is_zero(m.at(r, c))) s.rows[r].emplace_back(c, m.at(r, c));
  return s;
}

Echelon rref(std::vector<SparseVec> rows, int pivot_limit) {
  // Rows not yet used as pivots keep their leading column >= the current column,
  // so the pivot search only inspects each row's first entry.
  std::vector<char> used(rows.size(), 0);
  std::vector<std::size_t> order;
  std::vector<int> pivots;
  for (int c = 0; c < pivot_limit; ++c) {
    std::size_t pr = rows.size();
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (!used[r] && !rows[r].empty() && rows[r].front().first == c) {
        pr = r;
        break;
      }
    if (pr == rows.size()) continue;
    used[pr] = 1;
    Scalar inv = 1 / rows[pr].front().second;
    for (auto& e : rows[pr]) e.second *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pr) continue;
      Scalar f = coeff(rows[r], c);
      if (!is_zero(f)) axpy(rows[r], -f, rows[pr]);
    }
    order.push_back(pr);
    pivots.push_back(c);
  }
  Echelon e;
  for (std::size_t k = 0; k < order.size(); ++k) e.rows.push_back(std::move(rows[order[k]]));
  e.pivots = std::move(pivots);
  // Rows whose leading entry lies beyond pivot_limit (e.g. an inconsistent augmented row).
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!used[r] && !rows[r].empty()) {
      e.rows.push_back(std::move(rows[r]));
      e.pivots.push_back(-1);
    }
  return e;
}

int rank(const Matrix& m) {
  auto e = rref(to_sparse(m).rows, m.cols);
  return static_cast<int>(std::count_if(e.pivots.begin(), e.pivots.end(), [](int p) { return p >= 0; }));
}

std::vector<SparseVec> kernel_basis(const SparseMatrix& m) {
  auto e = rref(m.rows, m.cols);
  std::vector<char> is_pivot(m.cols, 0);
  for (int p : e.pivots)
    if (p >= 0) is_pivot[p] = 1;
  std::vector<SparseVec> basis;
  for (int f = 0; f < m.cols; ++f) {
    if (is_pivot[f]) continue;
    SparseVec v;
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
      if (e.pivots[k] < 0) continue;
      Scalar x = coeff(e.rows[k], f);
      if (!is_zero(x)) v.emplace_back(e.pivots[k], -x);
    }
    v.emplace_back(f, Scalar(1));
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<DenseVec> kernel_basis(const Matrix& m) {
  std::vector<DenseVec> out;
  for (auto& v : kernel_basis(to_sparse(m))) out.push_back(to_dense(v, m.cols));
  return out;
}

std::vector<DenseVec> image_basis(const Matrix& m) {
  auto e = rref(to_sparse(m).rows, m.cols);
  std::vector<DenseVec> out;
  for (int p : e.pivots)
    if (p >= 0) out.push_back(m.column(p));
  return out;
}

std::optional<DenseVec> solve(const SparseMatrix& a, const DenseVec& b) {
  std::vector<SparseVec> rows = a.rows;
  for (std::size_t r = 0; r < rows.size(); ++r)
    if (!is_zero(b[r])) rows[r].emplace_back(a.cols, b[r]);
  auto e = rref(std::move(rows), a.cols + 1);
  DenseVec x(a.cols);
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    int p = e.pivots[k];
    if (p == a.cols || p < 0) return std::nullopt;
    x[p] = coeff(e.rows[k], a.cols);
  }
  return x;
}

std::optional<DenseVec> inconsistency_witness(const SparseMatrix& a, const DenseVec& b) {
  const int m = static_cast<int>(a.rows.size());
  std::vector<SparseVec> rows = a.rows;
  for (int r = 0; r < m; ++r) {
    if (!is_zero(b[r])) rows[r].emplace_back(a.cols, b[r]);
    rows[r].emplace_back(a.cols + 1 + r, Scalar(1));
  }
  auto e = rref(std::move(rows), a.cols + 1);
  for (std::size_t k = 0; k < e.rows.size(); ++k) {
    if (e.pivots[k] != a.cols) continue;
    DenseVec y(m);
    for (const auto& [c, v] : e.rows[k])
      if (c > a.cols) y[c - a.cols - 1] = v;
    return y;
  }
  return std::nullopt;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const int n = m.rows;
  if (m.cols != n) return std::nullopt;
  std::vector<SparseVec> rows(n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c)
      if (!is_zero(m.at(r, c))) rows[r].emplace_back(c, m.at(r, c));
    rows[r].emplace_back(n + r, Scalar(1));
  }
  auto e = rref(std::move(rows), n);
  if (static_cast<int>(e.rows.size()) != n) return std::nullopt;
  Matrix inv(n, n);
  for (int k = 0; k < n; ++k) {
    if (e.pivots[k] != k) return std::nullopt;
    for (const auto& [c, v] : e.rows[k])
      if (c >= n) inv.at(k, c - n) = v;
  }
  return inv;
}

}  // namespace hominduce
